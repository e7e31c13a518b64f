#pragma once

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <optional>
#include <string>

#include "rescnf/rational.hpp"

namespace rescnf {

/// Node count of a degree-3 Moore graph of girth 2k+1: 1 + 3(2^k - 1).
inline std::uint64_t moore_size(unsigned k) {
  if (k == 0 || k > 60) throw Error("moore_size: k must be in [1, 60]");
  return 1 + 3 * ((std::uint64_t{1} << k) - 1);
}

/// Predicted consequent-to-formula ratio 2^(k*c0) / (1 + 3(2^k - 1)).
struct PredictedRatio {
  /// Present when k*c0 is integral and 2^(k*c0) fits in 62 bits.
  std::optional<Rational> exact;
  long double value = 0;

  std::string to_string() const {
    if (exact) return exact->to_string();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", value);
    return buf;
  }
};

inline PredictedRatio closed_form_ratio(unsigned k, const Rational& c0) {
  if (!(c0 > Rational(1))) throw Error("c0 must exceed 1");
  const std::uint64_t denom = moore_size(k);
  const Rational exponent = static_cast<std::int64_t>(k) * c0;
  PredictedRatio r;
  r.value = std::pow(2.0L, static_cast<long double>(exponent.num) / exponent.den) / static_cast<long double>(denom);
  if (exponent.is_integer() && exponent.num <= 62)
    r.exact = Rational(std::int64_t{1} << exponent.num, static_cast<std::int64_t>(denom));
  return r;
}

}  // namespace rescnf
