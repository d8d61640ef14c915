#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fatcat/context.hpp"

namespace fatcat::testing {

/// G = {g1, g2}, M = {m1, m2}, I = {(g1,m1), (g1,m2), (g2,m1)}
inline FormalContext k2() {
  return FormalContext({"g1", "g2"}, {"m1", "m2"}, {{true, true}, {true, false}});
}

/// g_i has every attribute except m_i.
inline FormalContext contranominal(std::size_t n) {
  std::vector<std::string> objects, attributes;
  std::vector<std::vector<bool>> rows(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back("g" + std::to_string(i + 1));
    attributes.push_back("m" + std::to_string(i + 1));
    rows[i][i] = false;
  }
  return FormalContext(objects, attributes, rows);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
  }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

private:
  std::mt19937_64 engine_;
};

inline FormalContext random_context(Rng& rng, std::size_t n_obj, std::size_t n_attr, double density) {
  std::vector<std::string> objects, attributes;
  for (std::size_t g = 0; g < n_obj; ++g) objects.push_back("g" + std::to_string(g));
  for (std::size_t m = 0; m < n_attr; ++m) attributes.push_back("m" + std::to_string(m));
  std::vector<std::vector<bool>> rows(n_obj, std::vector<bool>(n_attr));
  for (auto& row : rows)
    for (std::size_t m = 0; m < n_attr; ++m) row[m] = rng.chance(density);
  return FormalContext(objects, attributes, rows);
}

inline BitSet random_subset(Rng& rng, std::size_t size, double p = 0.4) {
  BitSet s(size);
  for (std::size_t i = 0; i < size; ++i)
    if (rng.chance(p)) s.set(i);
  return s;
}

} // namespace fatcat::testing
