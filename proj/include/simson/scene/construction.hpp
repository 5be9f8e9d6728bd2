#pragma once

/**
 * @file construction.hpp
 * @brief Generalized (oblique) Wallace-Simson construction in the canonical frame.
 *
 * Frame: J = (0, 0) on the circumcircle, circumcenter O = (1, 0), so the
 * circumcircle is x^2 + y^2 - 2x = 0. A vertex with parameter p sits at
 * (2/(1+p^2), 2p/(1+p^2)); p = 0 is the antipode of J.
 *
 * The similarity parameter t picks Q on the perpendicular bisector of JH.
 * The direct similarity about J taking H to Q is
 *
 *     (x, y) -> (x/2 - t*y, t*x + y/2)
 *
 * and maps ABC onto the image triangle A0B0C0, whose orthocenter is Q.
 * t = 0 is the classical Wallace-Simson line (Q the midpoint of JH).
 *
 * Every object is reached with field operations only; second intersections
 * use the known common point, so exact parameters give an exact scene.
 */

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simson/geom/constructions.hpp"

namespace simson::scene {

using geom::Circle;
using geom::Line;
using geom::Point;
using geom::SecondIntersection;
using num::Scalar;

enum class Vertex { A, B, C };

struct Params {
  Scalar a;
  Scalar b;
  Scalar c;
  Scalar t;

  /// Throws Errc::DegenerateTriangle unless a, b, c are pairwise distinct,
  /// and Errc::BackendMismatch unless all four share a backend.
  static Params make(Scalar a, Scalar b, Scalar c, Scalar t);

  /// Parameter of the given vertex.
  const Scalar& of(Vertex v) const;
  /// The same parameters on the approximate backend.
  Params to_approximate(double eps = num::kDefaultEps) const;

  std::string to_string() const;
};

/// Rotation-dilation about J with matrix ((1/2, -t), (t, 1/2)).
class Similarity {
 public:
  explicit Similarity(Scalar t) : t_(std::move(t)) {}

  const Scalar& t() const { return t_; }
  Point apply(const Point& p) const;
  /// (1 + 4t^2) / 4, the factor applied to squared lengths.
  Scalar squared_scale() const;

 private:
  Scalar t_;
};

// Flags recorded on a scene. Tangency flags mean the second intersection
// fell back onto the known point.
inline constexpr std::string_view kFlagTangentAA0 = "tangent:AA0";
inline constexpr std::string_view kFlagTangentBB0 = "tangent:BB0";
inline constexpr std::string_view kFlagTangentCC0 = "tangent:CC0";
inline constexpr std::string_view kFlagTangentX = "tangent:X";
inline constexpr std::string_view kFlagTangentY = "tangent:Y";
inline constexpr std::string_view kFlagTangentZ = "tangent:Z";
inline constexpr std::string_view kFlagTangentL = "tangent:L";
inline constexpr std::string_view kFlagTangentM = "tangent:M";
inline constexpr std::string_view kFlagTangentN = "tangent:N";
inline constexpr std::string_view kFlagKEqualsJ = "K_equals_J";
inline constexpr std::string_view kFlagHaggeXyzCollinear = "hagge_xyz_collinear";

struct Scene {
  Params params;

  Point J, O, A, B, C, H, Q, K, A0, B0, C0, X, Y, Z, L, M, N;

  Line sideBC, sideCA, sideAB;
  Line altA, altB, altC;
  Line gwsLine;
  Line imageSideB0C0, imageSideC0A0, imageSideA0B0;

  Circle Sigma;   // circumcircle of ABC
  Circle Sigma0;  // circumcircle of A0B0C0
  Circle S;       // Hagge circle, center Q through J and H
  Circle cA, cB, cC;

  std::vector<std::string> flags;

  bool has_flag(std::string_view flag) const;

  std::vector<std::pair<std::string, const Point*>> named_points() const;
  std::vector<std::pair<std::string, const Line*>> named_lines() const;
  std::vector<std::pair<std::string, const Circle*>> named_circles() const;
};

// Single-object constructions ---------------------------------------------

/// (2/(1+p^2), 2p/(1+p^2)), on the circumcircle.
Point vertex_point(const Scalar& p);
Point apply_similarity(const Scalar& t, const Point& p);
/// Closed form ((1-2pt)/(1+p^2), (p+2t)/(1+p^2)) of the image of vertex_point(p).
Point image_vertex(const Scalar& p, const Scalar& t);
/// Closed form (8t^2/(1+4t^2), 4t/(1+4t^2)) of the perspector of ABC and A0B0C0.
Point perspector_k(const Scalar& t);
/// Orthocenter of ABC by intersecting altitudes. Throws Errc::DegenerateTriangle.
Point orthocenter_h(const Params& params);
/// Image of h under the similarity. Throws Errc::JEqualsH when h = J.
Point q_point(const Point& h, const Scalar& t);
/// Circle centred at image_vertex(p, t) through J; it also passes through vertex_point(p).
Circle vertex_circle(const Scalar& p, const Scalar& t);
/// Perpendicular from the vertex to the opposite side. Throws Errc::DegenerateTriangle.
Line altitude_line(Vertex v, const Params& params);
/// Second intersection of the vertex's altitude with its vertex circle (X, Y or Z).
SecondIntersection xyz_point(Vertex v, const Params& params);

// Later stages -------------------------------------------------------------

/// Circle through X, Y, Z. Throws Errc::CollinearPoints.
Circle hagge_circle(const Point& x, const Point& y, const Point& z);
/// L (resp. M, N): second intersection through j of the two vertex circles
/// other than the given vertex's own.
SecondIntersection lmn_point(Vertex v, const std::array<Circle, 3>& vertex_circles, const Point& j);
/// Line through the distinct ones of l, m, n.
/// Throws Errc::NotCollinear or Errc::AllCoincident.
Line gws_line(const Point& l, const Point& m, const Point& n);
/// Line through the reflections of j in the sides of pqr.
/// Throws Errc::NotOnCircumcircle, Errc::CollinearPoints or Errc::NotCollinear.
Line double_simson_line(const Point& j, const Point& p, const Point& q, const Point& r);

/// Runs the full construction. Throws Errc::DegenerateTriangle, Errc::JEqualsH,
/// or Errc::ConstructionInvariant if an inline incidence check fails.
Scene build_scene(const Params& params);

// Frame normalization -------------------------------------------------------

/// Similarity w -> (w - origin) / unit in complex form, taking an arbitrary
/// frame to the canonical one.
struct FrameTransform {
  Point origin;
  Point unit;

  Point to_canonical(const Point& w) const;
  Point from_canonical(const Point& z) const;
  bool is_identity() const;
};

struct NormalizedFrame {
  Scalar a;
  Scalar b;
  Scalar c;
  FrameTransform transform;
};

/// Recovers (a, b, c) for triangle pqr with j on its circumcircle.
/// Throws Errc::DegenerateTriangle (collinear, or j at a vertex) and
/// Errc::NotOnCircumcircle.
NormalizedFrame normalize_frame(const Point& p, const Point& q, const Point& r, const Point& j);

}  // namespace simson::scene
