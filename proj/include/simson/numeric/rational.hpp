#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational numbers.
 *
 * Values are always kept in canonical form:
 * - denominator strictly positive (sign carried by the numerator)
 * - numerator and denominator coprime
 * - zero is 0/1
 *
 * Canonical form makes equality a field-wise comparison, which is what the
 * geometry layer relies on when it verifies incidences with zero tolerance.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace simson::num {

class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(mpz_class n) : q_(std::move(n)) {}

  /// Builds p/q in canonical form. Throws Errc::ZeroDenominator when q == 0.
  static Rational make(const mpz_class& p, const mpz_class& q);
  static Rational make(long p, long q) { return make(mpz_class(p), mpz_class(q)); }

  /// Accepts "p/q", "p" and plain decimal literals ("-0.25"); always exact.
  static Rational parse(std::string_view text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }

  /// Canonical text form "p/q", or "p" for integers.
  std::string to_string() const;

  Rational operator-() const;
  Rational abs() const;

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  /// Throws Errc::DivisionByZero.
  friend Rational operator/(const Rational& x, const Rational& y);

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const int c = cmp(x.q_, y.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

}  // namespace simson::num
