#pragma once

#include <optional>
#include <string>

#include "simson/numeric/scalar.hpp"

namespace simson::geom {

using num::Scalar;

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }

  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(const Scalar& s, const Point& p) { return {s * p.x, s * p.y}; }

  std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

inline Scalar dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Scalar cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Scalar squared_norm(const Point& u) { return dot(u, u); }
inline Scalar squared_distance(const Point& p, const Point& q) { return squared_norm(q - p); }
inline Point midpoint(const Point& p, const Point& q) { return {(p.x + q.x) / 2, (p.y + q.y) / 2}; }

/// The line a*x + b*y + c = 0.
///
/// Exact lines are stored with integer coefficients of content 1 whose first
/// nonzero coefficient is positive, so equal lines compare equal field by
/// field. Approximate lines are scaled to a unit normal with the same sign rule.
class Line {
 public:
  /// Throws Errc::InvalidLine when (a, b) = (0, 0).
  static Line make(const Scalar& a, const Scalar& b, const Scalar& c);
  /// Rebuilds a line from coefficients that make() produced earlier. Exact
  /// lines are canonicalized again; approximate ones are kept bit for bit,
  /// since renormalizing a unit normal can move the last digit.
  static Line restore(const Scalar& a, const Scalar& b, const Scalar& c);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }

  /// Normal vector (a, b).
  Point normal() const { return {a_, b_}; }
  /// Direction vector (-b, a).
  Point direction() const { return {-b_, a_}; }
  /// a*x + b*y + c at p.
  Scalar evaluate(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }

  friend bool operator==(const Line& l, const Line& m) {
    return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
  }

  std::string to_string() const;

 private:
  Line(Scalar a, Scalar b, Scalar c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  Scalar a_;
  Scalar b_;
  Scalar c_;
};

/// The circle x^2 + y^2 + d*x + e*y + f = 0, kept in general form so that no
/// construction ever needs a square root.
class Circle {
 public:
  /// Throws Errc::ZeroRadius unless d^2 + e^2 - 4f > 0.
  static Circle make(const Scalar& d, const Scalar& e, const Scalar& f);

  const Scalar& d() const { return d_; }
  const Scalar& e() const { return e_; }
  const Scalar& f() const { return f_; }

  Point center() const { return {-d_ / 2, -e_ / 2}; }
  Scalar squared_radius() const { return (d_ * d_ + e_ * e_) / 4 - f_; }
  /// Power of p; zero exactly when p is on the circle.
  Scalar power(const Point& p) const { return p.x * p.x + p.y * p.y + d_ * p.x + e_ * p.y + f_; }

  friend bool operator==(const Circle& c, const Circle& k) {
    return c.d_ == k.d_ && c.e_ == k.e_ && c.f_ == k.f_;
  }

  std::string to_string() const;

 private:
  Circle(Scalar d, Scalar e, Scalar f) : d_(std::move(d)), e_(std::move(e)), f_(std::move(f)) {}

  Scalar d_;
  Scalar e_;
  Scalar f_;
};

/// Tangent of the directed angle between two lines, taken mod pi. Perpendicular
/// lines have no finite tangent and carry the infinity marker instead.
struct DirectedTan {
  std::optional<Scalar> value;

  static DirectedTan infinity() { return {}; }
  bool is_infinite() const { return !value.has_value(); }

  friend bool operator==(const DirectedTan& x, const DirectedTan& y) {
    if (x.is_infinite() || y.is_infinite()) return x.is_infinite() && y.is_infinite();
    return *x.value == *y.value;
  }

  std::string to_string() const { return value ? value->to_string() : "inf"; }
};

}  // namespace simson::geom
