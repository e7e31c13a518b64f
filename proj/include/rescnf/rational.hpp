#pragma once

#include <charconv>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "rescnf/error.hpp"

namespace rescnf {

/// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  /// "3/2", "2" or a plain decimal such as "1.5".
  static Rational parse(std::string_view s) {
    auto parse_i64 = [&](std::string_view t) {
      std::int64_t v{};
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (t.empty() || ec != std::errc{} || p != t.data() + t.size())
        throw Error("not a rational: '" + std::string(s) + "'");
      return v;
    };
    if (auto slash = s.find('/'); slash != std::string_view::npos)
      return Rational(parse_i64(s.substr(0, slash)), parse_i64(s.substr(slash + 1)));
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      std::string_view frac = s.substr(dot + 1);
      if (frac.size() > 12) throw Error("too many decimal digits in '" + std::string(s) + "'");
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      std::string_view whole = s.substr(0, dot);
      const bool negative = !whole.empty() && whole.front() == '-';
      std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_i64(whole);
      std::int64_t f = frac.empty() ? 0 : parse_i64(frac);
      if (f < 0) throw Error("not a rational: '" + std::string(s) + "'");
      std::int64_t n = (w < 0 ? -w : w) * scale + f;
      return Rational(negative ? -n : n, scale);
    }
    return Rational(parse_i64(s));
  }

  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend Rational operator*(std::int64_t k, const Rational& r) { return Rational(k * r.num, r.den); }
};

/// Smallest integer >= r.
inline std::int64_t ceil(const Rational& r) {
  std::int64_t q = r.num / r.den;
  if (r.num % r.den != 0 && r.num > 0) ++q;
  return q;
}

}  // namespace rescnf
