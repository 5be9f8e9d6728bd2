#include "simson/numeric/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "simson/error.hpp"

namespace simson::num {

namespace {

[[noreturn]] void mismatch() {
  throw Error(Errc::BackendMismatch, "operands on different scalar backends");
}

template <class ExactOp, class ApproxOp>
Scalar binary(const Scalar& x, const Scalar& y, ExactOp exact_op, ApproxOp approx_op) {
  if (x.backend() != y.backend()) mismatch();
  if (x.is_exact()) return Scalar(exact_op(x.exact(), y.exact()));
  return Scalar::approximate(approx_op(x.to_double(), y.to_double()), std::max(x.eps(), y.eps()));
}

}  // namespace

std::string_view backend_name(Backend b) {
  return b == Backend::exact ? "exact" : "float";
}

Backend parse_backend(std::string_view text) {
  if (text == "exact") return Backend::exact;
  if (text == "float") return Backend::approximate;
  throw Error(Errc::ParseError, "unknown backend '" + std::string(text) + "' (expected exact|float)");
}

Scalar Scalar::approximate(double value, double eps) {
  if (!(eps > 0.0)) throw Error(Errc::InvalidConfig, "approximate tolerance must be positive");
  return Scalar(Approx{value, eps});
}

const Rational& Scalar::exact() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  mismatch();
}

double Scalar::to_double() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->to_double();
  return std::get<Approx>(v_).value;
}

double Scalar::eps() const {
  if (const auto* a = std::get_if<Approx>(&v_)) return a->eps;
  return 0.0;
}

Scalar Scalar::to_approximate(double eps) const { return approximate(to_double(), eps); }

Scalar Scalar::like(long n) const {
  if (is_exact()) return Scalar(Rational(n));
  return Scalar(Approx{static_cast<double>(n), eps()});
}

bool Scalar::is_zero() const { return is_zero_scaled(1.0); }

bool Scalar::is_zero_scaled(double scale) const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->is_zero();
  const auto& a = std::get<Approx>(v_);
  return std::abs(a.value) <= a.eps * std::max(1.0, scale);
}

int Scalar::sign() const {
  if (is_zero()) return 0;
  if (const auto* r = std::get_if<Rational>(&v_)) return r->sign();
  return std::get<Approx>(v_).value < 0 ? -1 : 1;
}

Scalar Scalar::abs() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(r->abs());
  const auto& a = std::get<Approx>(v_);
  return Scalar(Approx{std::abs(a.value), a.eps});
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->to_string();
  // Shortest text that reads back to the same double.
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, std::get<Approx>(v_).value);
  return std::string(buf, res.ptr);
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return Scalar(-*r);
  const auto& a = std::get<Approx>(v_);
  return Scalar(Approx{-a.value, a.eps});
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  return binary(x, y, [](const Rational& p, const Rational& q) { return p + q; },
                [](double p, double q) { return p + q; });
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  return binary(x, y, [](const Rational& p, const Rational& q) { return p - q; },
                [](double p, double q) { return p - q; });
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  return binary(x, y, [](const Rational& p, const Rational& q) { return p * q; },
                [](double p, double q) { return p * q; });
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (x.backend() != y.backend()) mismatch();
  if (y.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  return binary(x, y, [](const Rational& p, const Rational& q) { return p / q; },
                [](double p, double q) { return p / q; });
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.backend() != y.backend()) mismatch();
  if (x.is_exact()) return x.exact() == y.exact();
  return (x - y).is_zero();
}

}  // namespace simson::num
