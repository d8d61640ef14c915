#include "fatcat/rate.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "fatcat/error.hpp"

namespace fatcat {

namespace {

constexpr int kMaxFractionDigits = 18;

std::uint64_t pow10(int e) {
  std::uint64_t p = 1;
  while (e-- > 0) p *= 10;
  return p;
}

} // namespace

Rate Rate::ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InputError("rate denominator must be positive");
  if (num > den) throw InputError("rate " + std::to_string(num) + "/" + std::to_string(den) + " exceeds 1");
  std::uint64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rate(num, den);
}

Rate Rate::parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&] { return InputError("invalid rate '" + original + "': expected a decimal in [0, 1]"); };
  if (text.empty()) throw fail();
  if (text.front() == '+') text.remove_prefix(1);

  std::string digits;
  int exponent = 0;  // value = digits * 10^exponent
  bool seen_point = false;
  bool any_digit = false;
  std::size_t i = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      any_digit = true;
      if (!(digits.empty() && c == '0')) digits.push_back(c);
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw fail();
    int e = 0;
    auto rest = text.substr(i + 1);
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) throw fail();
    exponent += e;
  }
  if (digits.empty()) return Rate(0, 1);
  while (digits.size() > 1 && digits.back() == '0') {
    digits.pop_back();
    ++exponent;
  }

  // Integral part (exponent >= 0) must be exactly 1 to stay within [0, 1].
  if (exponent >= 0) {
    if (digits == "1" && exponent == 0) return Rate(1, 1);
    throw fail();
  }
  int frac_digits = -exponent;
  if (static_cast<int>(digits.size()) > frac_digits) throw fail();  // >= 1 with nonzero fraction
  bool round_up = false;
  if (frac_digits > kMaxFractionDigits) {
    int drop = frac_digits - kMaxFractionDigits;
    if (drop >= static_cast<int>(digits.size())) {
      digits.clear();
      round_up = true;
    } else {
      round_up = digits.find_first_not_of('0', digits.size() - static_cast<std::size_t>(drop)) != std::string::npos;
      digits.resize(digits.size() - static_cast<std::size_t>(drop));
    }
    frac_digits = kMaxFractionDigits;
  }
  std::uint64_t num = 0;
  for (char c : digits) num = num * 10 + static_cast<std::uint64_t>(c - '0');
  if (round_up) ++num;
  return ratio(num, pow10(frac_digits));
}

Rate Rate::from_double(double value) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0)
    throw InputError("rate " + std::to_string(value) + " outside [0, 1]");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return parse(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

std::uint64_t Rate::min_count(std::uint64_t total) const noexcept {
  auto need = static_cast<Wide>(num_) * total;
  return static_cast<std::uint64_t>((need + den_ - 1) / den_);
}

std::string Rate::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace fatcat
