#pragma once

#include <concepts>
#include <string>
#include <string_view>
#include <variant>

#include "simson/numeric/rational.hpp"

namespace simson::num {

/// Default absolute tolerance for the approximate backend, in canonical-frame
/// units (circumradius 1).
inline constexpr double kDefaultEps = 1e-9;

enum class Backend { exact, approximate };

std::string_view backend_name(Backend b);
/// "exact" or "float". Throws Errc::ParseError otherwise.
Backend parse_backend(std::string_view text);

/// A binary float paired with the absolute tolerance used by its zero tests.
struct Approx {
  double value = 0.0;
  double eps = kDefaultEps;
};

/// One coordinate value, on either the exact or the approximate backend.
///
/// Binary operations require both operands on the same backend and throw
/// Errc::BackendMismatch otherwise. Integer operands are backend-neutral and
/// take the backend of the Scalar they are combined with. Approximate results
/// carry the larger of the two operand tolerances.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)

  static Scalar approximate(double value, double eps = kDefaultEps);

  /// Exact parse of "p/q", "p" or a decimal literal.
  static Scalar parse(std::string_view text) { return Scalar(Rational::parse(text)); }

  Backend backend() const {
    return std::holds_alternative<Rational>(v_) ? Backend::exact : Backend::approximate;
  }
  bool is_exact() const { return backend() == Backend::exact; }

  /// Throws Errc::BackendMismatch on the approximate backend.
  const Rational& exact() const;
  double to_double() const;
  /// Tolerance of the approximate backend; 0 on the exact backend.
  double eps() const;

  /// Lossy conversion; exact -> approximate -> exact is not a round trip.
  Scalar to_approximate(double eps = kDefaultEps) const;
  /// Same backend (and tolerance) as *this, holding the integer n.
  Scalar like(long n) const;

  bool is_zero() const;
  /// Zero test with the approximate tolerance multiplied by max(1, scale).
  bool is_zero_scaled(double scale) const;
  /// -1, 0 or +1; 0 whenever is_zero().
  int sign() const;
  Scalar abs() const;

  std::string to_string() const;

  Scalar operator-() const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  /// Throws Errc::DivisionByZero when y.is_zero().
  friend Scalar operator/(const Scalar& x, const Scalar& y);

  template <std::integral I>
  friend Scalar operator+(const Scalar& x, I n) { return x + x.like(static_cast<long>(n)); }
  template <std::integral I>
  friend Scalar operator+(I n, const Scalar& x) { return x.like(static_cast<long>(n)) + x; }
  template <std::integral I>
  friend Scalar operator-(const Scalar& x, I n) { return x - x.like(static_cast<long>(n)); }
  template <std::integral I>
  friend Scalar operator-(I n, const Scalar& x) { return x.like(static_cast<long>(n)) - x; }
  template <std::integral I>
  friend Scalar operator*(const Scalar& x, I n) { return x * x.like(static_cast<long>(n)); }
  template <std::integral I>
  friend Scalar operator*(I n, const Scalar& x) { return x.like(static_cast<long>(n)) * x; }
  template <std::integral I>
  friend Scalar operator/(const Scalar& x, I n) { return x / x.like(static_cast<long>(n)); }
  template <std::integral I>
  friend Scalar operator/(I n, const Scalar& x) { return x.like(static_cast<long>(n)) / x; }

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  /// Literal equality on the exact backend; |x - y| <= eps on the approximate one.
  friend bool operator==(const Scalar& x, const Scalar& y);
  template <std::integral I>
  friend bool operator==(const Scalar& x, I n) { return x == x.like(static_cast<long>(n)); }

 private:
  explicit Scalar(Approx a) : v_(a) {}

  std::variant<Rational, Approx> v_;
};

}  // namespace simson::num
