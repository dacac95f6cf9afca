#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace citecurve {

/// Exact fraction used as the common value type for author metrics.
/// Integer metrics carry den == 1; C/p and m carry the true quotient so
/// rank comparisons never depend on floating-point rounding.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // always > 0, gcd(num, den) == 1

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)

  static Rational of(std::int64_t n, std::int64_t d) {
    Rational r;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    r.num = g ? n / g : n;
    r.den = g ? d / g : 1;
    return r;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

}  // namespace citecurve
