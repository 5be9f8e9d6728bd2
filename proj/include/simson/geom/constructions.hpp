#pragma once

#include "simson/geom/primitives.hpp"

namespace simson::geom {

/// Result of intersecting a curve with another curve through a known common
/// point. `tangent` is set when the second intersection coincides with the
/// known point, in which case `point` is the known point itself.
struct SecondIntersection {
  Point point;
  bool tangent = false;
};

// Lines ---------------------------------------------------------------------

/// Throws Errc::CoincidentPoints when p == q.
Line line_through(const Point& p, const Point& q);
/// The line through p perpendicular to l.
Line perpendicular_through(const Point& p, const Line& l);
/// Throws Errc::ParallelLines when the lines do not meet in a single point.
Point intersect_lines(const Line& l, const Line& m);

Point foot_perpendicular(const Point& p, const Line& l);
Point reflect_in_line(const Point& p, const Line& l);

// Circles -------------------------------------------------------------------

/// Throws Errc::CollinearPoints when p, q, r are collinear (or not distinct).
Circle circle_through3(const Point& p, const Point& q, const Point& r);
/// Throws Errc::ZeroRadius when center == p.
Circle circle_center_through(const Point& center, const Point& p);

/// The radical axis (d1-d2)x + (e1-e2)y + (f1-f2) = 0.
/// Throws Errc::IdenticalCircles, or Errc::NoRadicalLine for distinct
/// concentric circles.
Line radical_line(const Circle& c1, const Circle& c2);

/// Second intersection of l with c, given one common point. Restricting the
/// circle equation to l gives a quadratic with one root at `known`; the other
/// root follows from Vieta's relation, so exact inputs give exact outputs.
/// Throws Errc::KnownPointNotIncident.
SecondIntersection second_line_circle(const Line& l, const Circle& c, const Point& known);

/// Second intersection of two circles through `known`, via their radical line.
SecondIntersection second_circle_circle(const Circle& c1, const Circle& c2, const Point& known);

// Triangles -----------------------------------------------------------------

/// Throws Errc::CollinearPoints.
Point orthocenter3(const Point& p, const Point& q, const Point& r);

// Predicates ----------------------------------------------------------------
//
// Exact backend: literal vanishing of the determinant or residual.
// Approximate backend: |value| <= eps * max(1, largest absolute entry).

bool collinear3(const Point& p, const Point& q, const Point& r);
bool concyclic4(const Point& p, const Point& q, const Point& r, const Point& s);
bool on_line(const Point& p, const Line& l);
bool on_circle(const Point& p, const Circle& c);

/// (a1*b2 - a2*b1) / (a1*a2 + b1*b2); infinity marker for perpendicular lines.
DirectedTan directed_tan(const Line& l1, const Line& l2);

}  // namespace simson::geom
