#include "simson/geom/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "simson/error.hpp"

namespace simson::geom {

namespace {

double max_abs(std::initializer_list<Scalar> entries) {
  double m = 0.0;
  for (const auto& s : entries) m = std::max(m, std::abs(s.to_double()));
  return m;
}

}  // namespace

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw Error(Errc::CoincidentPoints, "line through coincident points " + p.to_string());
  return Line::make(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y);
}

Line perpendicular_through(const Point& p, const Line& l) {
  return Line::make(-l.b(), l.a(), l.b() * p.x - l.a() * p.y);
}

Point intersect_lines(const Line& l, const Line& m) {
  const Scalar det = l.a() * m.b() - m.a() * l.b();
  if (det.is_zero_scaled(max_abs({l.a(), l.b(), m.a(), m.b()}))) {
    throw Error(Errc::ParallelLines, "lines do not meet in a single point");
  }
  return {(l.b() * m.c() - m.b() * l.c()) / det, (l.c() * m.a() - m.c() * l.a()) / det};
}

Point foot_perpendicular(const Point& p, const Line& l) {
  const Scalar k = l.evaluate(p) / squared_norm(l.normal());
  return p - k * l.normal();
}

Point reflect_in_line(const Point& p, const Line& l) {
  const Scalar k = 2 * l.evaluate(p) / squared_norm(l.normal());
  return p - k * l.normal();
}

Circle circle_through3(const Point& p, const Point& q, const Point& r) {
  if (collinear3(p, q, r)) {
    throw Error(Errc::CollinearPoints,
                "no circle through collinear points " + p.to_string() + ", " + q.to_string() + ", " +
                    r.to_string());
  }
  // Center relative to p solves 2u.c = |u|^2, 2v.c = |v|^2.
  const Point u = q - p;
  const Point v = r - p;
  const Scalar uu = squared_norm(u);
  const Scalar vv = squared_norm(v);
  const Scalar det = 2 * cross(u, v);
  const Point center = p + Point{(uu * v.y - vv * u.y) / det, (u.x * vv - v.x * uu) / det};
  return circle_center_through(center, p);
}

Circle circle_center_through(const Point& center, const Point& p) {
  if (center == p) throw Error(Errc::ZeroRadius, "circle of zero radius at " + p.to_string());
  const Scalar d = -2 * center.x;
  const Scalar e = -2 * center.y;
  const Scalar f = squared_norm(center) - squared_distance(center, p);
  return Circle::make(d, e, f);
}

Line radical_line(const Circle& c1, const Circle& c2) {
  if (c1 == c2) throw Error(Errc::IdenticalCircles, "radical line of identical circles");
  const Scalar a = c1.d() - c2.d();
  const Scalar b = c1.e() - c2.e();
  if (a.is_zero() && b.is_zero()) throw Error(Errc::NoRadicalLine, "concentric circles have no radical line");
  return Line::make(a, b, c1.f() - c2.f());
}

SecondIntersection second_line_circle(const Line& l, const Circle& c, const Point& known) {
  if (!on_line(known, l) || !on_circle(known, c)) {
    throw Error(Errc::KnownPointNotIncident, "known point " + known.to_string() + " is not on both curves");
  }
  // Points known + s*v; the power is s^2|v|^2 + s(2 known.v + d vx + e vy) with
  // one root at s = 0.
  const Point v = l.direction();
  const Scalar linear = 2 * dot(known, v) + c.d() * v.x + c.e() * v.y;
  const Scalar s = -linear / squared_norm(v);
  if (s.is_zero()) return {known, true};
  return {known + s * v, false};
}

SecondIntersection second_circle_circle(const Circle& c1, const Circle& c2, const Point& known) {
  if (!on_circle(known, c1) || !on_circle(known, c2)) {
    throw Error(Errc::KnownPointNotIncident, "known point " + known.to_string() + " is not on both circles");
  }
  return second_line_circle(radical_line(c1, c2), c1, known);
}

Point orthocenter3(const Point& p, const Point& q, const Point& r) {
  if (collinear3(p, q, r)) throw Error(Errc::CollinearPoints, "orthocenter of a degenerate triangle");
  const Line alt_p = perpendicular_through(p, line_through(q, r));
  const Line alt_q = perpendicular_through(q, line_through(r, p));
  return intersect_lines(alt_p, alt_q);
}

bool collinear3(const Point& p, const Point& q, const Point& r) {
  const Scalar det = cross(q - p, r - p);
  return det.is_zero_scaled(max_abs({p.x, p.y, q.x, q.y, r.x, r.y}));
}

bool concyclic4(const Point& p, const Point& q, const Point& r, const Point& s) {
  // Rows (x, y, x^2 + y^2) of q, r, s taken relative to p; equal to the 4x4
  // determinant with rows (x^2 + y^2, x, y, 1) up to sign.
  const Point u = q - p;
  const Point v = r - p;
  const Point w = s - p;
  const Scalar uu = squared_norm(u), vv = squared_norm(v), ww = squared_norm(w);
  const Scalar det = u.x * (v.y * ww - w.y * vv) - u.y * (v.x * ww - w.x * vv) + uu * (v.x * w.y - w.x * v.y);
  double scale = 1.0;
  for (const Point* pt : {&p, &q, &r, &s}) {
    scale = std::max({scale, std::abs(pt->x.to_double()), std::abs(pt->y.to_double()),
                      squared_norm(*pt).to_double()});
  }
  return det.is_zero_scaled(scale);
}

bool on_line(const Point& p, const Line& l) {
  return l.evaluate(p).is_zero_scaled(max_abs({l.a(), l.b(), l.c()}));
}

bool on_circle(const Point& p, const Circle& c) {
  return c.power(p).is_zero_scaled(max_abs({c.d(), c.e(), c.f(), squared_norm(p)}));
}

DirectedTan directed_tan(const Line& l1, const Line& l2) {
  const Scalar num = l1.a() * l2.b() - l2.a() * l1.b();
  const Scalar den = l1.a() * l2.a() + l1.b() * l2.b();
  if (den.is_zero_scaled(max_abs({l1.a(), l1.b(), l2.a(), l2.b()}))) return DirectedTan::infinity();
  return {num / den};
}

}  // namespace simson::geom
