#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "doctest.h"

#include "fatcat/error.hpp"
#include "fatcat/thresholding.hpp"
#include "support/fixtures.hpp"

using namespace fatcat;
using fatcat::testing::Rng;

namespace {

/// Dense matrix helper; zero cells become absent entries when `sparse`.
WeightedDocTopicMatrix matrix(const std::vector<std::vector<double>>& rows, bool sparse = false) {
  std::vector<Document> docs;
  std::vector<TopicId> topics;
  std::vector<WeightEntry> entries;
  for (std::size_t d = 0; d < rows.size(); ++d)
    docs.push_back({"d" + std::to_string(d + 1), "dir" + std::to_string(d % 2) + "/d" + std::to_string(d + 1)});
  for (std::size_t t = 0; t < (rows.empty() ? 0 : rows[0].size()); ++t) topics.push_back(t);
  for (std::size_t d = 0; d < rows.size(); ++d)
    for (std::size_t t = 0; t < rows[d].size(); ++t)
      if (!sparse || rows[d][t] != 0.0) entries.push_back({d, t, rows[d][t]});
  return WeightedDocTopicMatrix(docs, topics, entries);
}

std::vector<std::vector<double>> dense(const WeightedDocTopicMatrix& w) {
  std::vector<std::vector<double>> out(w.documents().size(), std::vector<double>(w.topics().size(), 0.0));
  for (const auto& e : w.entries()) out[e.document][e.topic] = e.weight;
  return out;
}

WeightedDocTopicMatrix random_matrix(Rng& rng) {
  const std::size_t docs = rng.between(1, 25);
  const std::size_t topics = rng.between(1, 12);
  std::vector<std::vector<double>> rows(docs, std::vector<double>(topics, 0.0));
  for (auto& r : rows)
    for (auto& w : r)
      if (rng.chance(0.5)) w = std::round(rng.unit() * 20.0) / 20.0;  // ties on purpose
  return matrix(rows, true);
}

std::vector<double> candidates(const WeightedDocTopicMatrix& w) {
  std::set<double> s;
  for (const auto& e : w.entries()) s.insert(e.weight);
  return {s.begin(), s.end()};
}

const std::vector<std::vector<double>> kWorked = {{0.7, 0.3}, {0.6, 0.4}};

} // namespace

TEST_CASE("WeightedDocTopicMatrix validation") {
  CHECK_THROWS_AS(matrix({{-1.0, 1.0}}), InputError);
  CHECK_THROWS_AS(matrix({{std::numeric_limits<double>::infinity()}}), InputError);
  CHECK_THROWS_AS(WeightedDocTopicMatrix({{"a", "x/a"}}, {0}, {{0, 0, 0.5}, {0, 0, 0.2}}), InputError);
  CHECK_THROWS_AS(WeightedDocTopicMatrix({{"a", "x/a"}}, {0}, {{1, 0, 0.5}}), InputError);
  CHECK_THROWS_AS(WeightedDocTopicMatrix({{"a", "x/a"}, {"a", "x/b"}}, {0}, {}), InputError);
  CHECK_THROWS_AS(WeightedDocTopicMatrix({{"a", "x/a"}}, {3, 3}, {}), InputError);
}

TEST_CASE("row_normalize examples") {
  CHECK(dense(row_normalize(matrix({{2.0, 2.0}}))) == std::vector<std::vector<double>>{{0.5, 0.5}});
  CHECK(dense(row_normalize(matrix({{0.0, 0.0}}))) == std::vector<std::vector<double>>{{0.0, 0.0}});
  CHECK(dense(row_normalize(matrix({{1.0, 3.0}}))) == std::vector<std::vector<double>>{{0.25, 0.75}});
  const auto sparse = matrix({{0.0, 3.0, 1.0}}, true);
  CHECK(row_normalize(sparse).entries().size() == 2);
}

TEST_CASE("density examples") {
  const auto w = matrix(kWorked);
  CHECK(density(w, 0.0) == 1.0);
  CHECK(density(w, 0.4) == 0.75);
  CHECK(density(w, 0.71) == 0.0);
  CHECK(density(matrix({{0.0, 0.5}}, true), 0.0) == 1.0);  // absent cells weigh 0
  CHECK_THROWS_AS(density(matrix({}), 0.1), DomainError);
  CHECK_THROWS_AS(density(WeightedDocTopicMatrix({{"a", "x/a"}}, {}, {}), 0.1), DomainError);
}

TEST_CASE("select_threshold examples") {
  const auto w = matrix(kWorked);
  const auto report = select_threshold(w, 0.25);
  CHECK(report.reached);
  CHECK(report.delta == 0.7);
  CHECK(report.achieved_density == 0.25);
  CHECK(report.candidates_examined == 4);

  const auto loose = select_threshold(w, 1.0);
  CHECK(loose.delta == 0.3);
  CHECK(loose.achieved_density == 1.0);

  // Every cell carries the same weight: no candidate gets below 0.4.
  const auto tied = select_threshold(matrix({{0.5, 0.5}, {0.5, 0.5}}), 0.4);
  CHECK_FALSE(tied.reached);
  CHECK(std::isinf(tied.delta));
  CHECK(tied.achieved_density == 0.0);

  CHECK_THROWS_AS(select_threshold(w, 0.0), InputError);
  CHECK_THROWS_AS(select_threshold(w, 1.5), InputError);
}

TEST_CASE("binarize examples") {
  const auto w = matrix(kWorked);
  auto at = binarize(w, 0.7);
  CHECK(at.incident(0, 0));
  CHECK_FALSE(at.incident(0, 1));
  CHECK_FALSE(at.incident(1, 0));
  CHECK_FALSE(at.incident(1, 1));
  CHECK(at.objects() == std::vector<std::string>{"d1", "d2"});
  CHECK(at.attributes() == std::vector<std::string>{"0", "1"});
  CHECK(at.object_paths() == std::vector<std::string>{"dir0/d1", "dir1/d2"});

  CHECK(binarize(w, 0.0).incidence_count() == 4);
  CHECK(binarize(matrix({{0.0, 0.5}}, true), 0.0).incidence_count() == 2);
  CHECK(binarize(w, std::nextafter(0.7, 1.0)).incidence_count() == 0);
  CHECK_THROWS_AS(binarize(w, -0.1), InputError);
  CHECK_THROWS_AS(binarize(w, 0.5, 0), InputError);
}

TEST_CASE("directory_of") {
  CHECK(directory_of("Military/a.pdf", 1) == "Military");
  CHECK(directory_of("A/B/x", 2) == "A/B");
  CHECK(directory_of("A/B/x", 1) == "A");
  CHECK(directory_of("A/x", 3) == "A");
  CHECK(directory_of("x.txt", 1) == ".");
  CHECK(directory_of("/A//B/x", 2) == "A/B");
  CHECK_THROWS_AS(directory_of("", 1), InputError);
  CHECK_THROWS_AS(directory_of("A/x", 0), InputError);
}

TEST_CASE("threshold properties on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = row_normalize(random_matrix(rng));
    const auto cand = candidates(w);
    for (std::size_t i = 1; i < cand.size(); ++i) CHECK(density(w, cand[i]) <= density(w, cand[i - 1]));

    const std::uint64_t target_tenths = rng.between(1, 10);
    const Rate target = Rate::ratio(target_tenths, 10);
    const auto report = select_threshold(w, target);
    const auto cells = w.cell_count();
    auto hits = [&](double delta) {
      return static_cast<std::uint64_t>(std::llround(density(w, delta) * static_cast<double>(cells)));
    };
    if (report.reached) {
      CHECK(std::find(cand.begin(), cand.end(), report.delta) != cand.end());
      CHECK(target.geq_fraction(hits(report.delta), cells));
      for (double smaller : cand)
        if (smaller < report.delta) CHECK_FALSE(target.geq_fraction(hits(smaller), cells));
      const auto ctx = binarize(w, report.delta);
      CHECK(target.geq_fraction(ctx.incidence_count(), cells));
      CHECK(report.achieved_density <= target.value());
    } else {
      for (double c : cand) CHECK_FALSE(target.geq_fraction(hits(c), cells));
    }
  }
}

TEST_CASE("row_normalize is idempotent and keeps each row's ranking") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_matrix(rng);
    const auto once = row_normalize(w);
    const auto twice = row_normalize(once);
    const auto a = dense(once), b = dense(twice), raw = dense(w);
    for (std::size_t d = 0; d < a.size(); ++d) {
      for (std::size_t t = 0; t < a[d].size(); ++t) CHECK(b[d][t] == doctest::Approx(a[d][t]).epsilon(1e-12));
      CHECK(std::max_element(raw[d].begin(), raw[d].end()) - raw[d].begin() ==
            std::max_element(a[d].begin(), a[d].end()) - a[d].begin());
    }
  }
}
