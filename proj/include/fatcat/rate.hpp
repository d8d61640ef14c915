#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace fatcat {

__extension__ using Wide = unsigned __int128;

/// A rate in [0, 1] held as an exact ratio of integers.
///
/// Support and density thresholds are compared against integer counts
/// (`count / total >= rate`). Doing that in floating point misjudges the
/// boundary, e.g. 0.1 * 30 evaluates to 3.0000000000000004. A Fraction is
/// built either from an exact ratio, from a decimal string, or from a
/// double via its shortest round-trip decimal representation ("0.1" stays
/// 1/10), and all comparisons are carried out in 128-bit integers.
///
/// Decimals with more than 18 fractional digits are rounded up to 18
/// digits, which keeps every strictly positive rate strictly positive.
class Rate {
public:
  constexpr Rate() = default;

  /// Exact numerator/denominator; requires 0 <= num <= den, den > 0.
  static Rate ratio(std::uint64_t num, std::uint64_t den);
  /// Parses a plain or scientific decimal literal, e.g. "0.1", "1", "5e-2".
  static Rate parse(std::string_view text);
  static Rate from_double(double value);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// this <= count / total
  bool leq_fraction(std::uint64_t count, std::uint64_t total) const noexcept {
    return static_cast<Wide>(count) * den_ >= static_cast<Wide>(num_) * total;
  }
  /// this >= count / total
  bool geq_fraction(std::uint64_t count, std::uint64_t total) const noexcept {
    return static_cast<Wide>(count) * den_ <= static_cast<Wide>(num_) * total;
  }
  /// Smallest count c with c / total >= this.
  std::uint64_t min_count(std::uint64_t total) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Rate& a, const Rate& b) noexcept {
    return static_cast<Wide>(a.num_) * b.den_ == static_cast<Wide>(b.num_) * a.den_;
  }
  friend bool operator<(const Rate& a, const Rate& b) noexcept {
    return static_cast<Wide>(a.num_) * b.den_ < static_cast<Wide>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rate& a, const Rate& b) noexcept { return !(b < a); }

private:
  constexpr Rate(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {}
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

} // namespace fatcat
