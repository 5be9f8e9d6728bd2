#include "simson/scene/construction.hpp"

#include <algorithm>

#include "simson/error.hpp"

namespace simson::scene {

using geom::circle_center_through;
using geom::line_through;
using geom::on_circle;
using geom::perpendicular_through;
using geom::second_circle_circle;
using geom::second_line_circle;

namespace {

void require_distinct(const Params& p) {
  if (p.a == p.b) throw Error(Errc::DegenerateTriangle, "degenerate triangle: a = b");
  if (p.b == p.c) throw Error(Errc::DegenerateTriangle, "degenerate triangle: b = c");
  if (p.c == p.a) throw Error(Errc::DegenerateTriangle, "degenerate triangle: c = a");
}

Point origin_like(const Scalar& s) { return {s.like(0), s.like(0)}; }

// The two vertices other than v, in cyclic order.
std::pair<Vertex, Vertex> others(Vertex v) {
  switch (v) {
    case Vertex::A: return {Vertex::B, Vertex::C};
    case Vertex::B: return {Vertex::C, Vertex::A};
    case Vertex::C: return {Vertex::A, Vertex::B};
  }
  return {Vertex::B, Vertex::C};
}

std::size_t index_of(Vertex v) { return static_cast<std::size_t>(v); }

void check_inline(bool ok, const char* what) {
  if (!ok) throw Error(Errc::ConstructionInvariant, std::string("construction invariant violated: ") + what);
}

}  // namespace

Params Params::make(Scalar a, Scalar b, Scalar c, Scalar t) {
  if (a.backend() != b.backend() || b.backend() != c.backend() || c.backend() != t.backend()) {
    throw Error(Errc::BackendMismatch, "parameters on different scalar backends");
  }
  Params p{std::move(a), std::move(b), std::move(c), std::move(t)};
  require_distinct(p);
  return p;
}

const Scalar& Params::of(Vertex v) const {
  switch (v) {
    case Vertex::A: return a;
    case Vertex::B: return b;
    case Vertex::C: return c;
  }
  return a;
}

Params Params::to_approximate(double eps) const {
  return {a.to_approximate(eps), b.to_approximate(eps), c.to_approximate(eps), t.to_approximate(eps)};
}

std::string Params::to_string() const {
  return "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string() + " t=" + t.to_string();
}

Point Similarity::apply(const Point& p) const {
  return {p.x / 2 - t_ * p.y, t_ * p.x + p.y / 2};
}

Scalar Similarity::squared_scale() const { return (1 + 4 * t_ * t_) / 4; }

bool Scene::has_flag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

std::vector<std::pair<std::string, const Point*>> Scene::named_points() const {
  return {{"J", &J},   {"O", &O},   {"A", &A},   {"B", &B},   {"C", &C},  {"H", &H},
          {"Q", &Q},   {"K", &K},   {"A0", &A0}, {"B0", &B0}, {"C0", &C0}, {"X", &X},
          {"Y", &Y},   {"Z", &Z},   {"L", &L},   {"M", &M},   {"N", &N}};
}

std::vector<std::pair<std::string, const Line*>> Scene::named_lines() const {
  return {{"sideBC", &sideBC},
          {"sideCA", &sideCA},
          {"sideAB", &sideAB},
          {"altA", &altA},
          {"altB", &altB},
          {"altC", &altC},
          {"gwsLine", &gwsLine},
          {"imageSideB0C0", &imageSideB0C0},
          {"imageSideC0A0", &imageSideC0A0},
          {"imageSideA0B0", &imageSideA0B0}};
}

std::vector<std::pair<std::string, const Circle*>> Scene::named_circles() const {
  return {{"Sigma", &Sigma}, {"Sigma0", &Sigma0}, {"S", &S}, {"cA", &cA}, {"cB", &cB}, {"cC", &cC}};
}

Point vertex_point(const Scalar& p) {
  const Scalar den = 1 + p * p;
  return {2 / den, 2 * p / den};
}

Point apply_similarity(const Scalar& t, const Point& p) { return Similarity(t).apply(p); }

Point image_vertex(const Scalar& p, const Scalar& t) {
  const Scalar den = 1 + p * p;
  return {(1 - 2 * p * t) / den, (p + 2 * t) / den};
}

Point perspector_k(const Scalar& t) {
  const Scalar den = 1 + 4 * t * t;
  return {8 * t * t / den, 4 * t / den};
}

Point orthocenter_h(const Params& params) {
  require_distinct(params);
  try {
    return geom::orthocenter3(vertex_point(params.a), vertex_point(params.b), vertex_point(params.c));
  } catch (const Error& e) {
    if (e.code() != Errc::CollinearPoints) throw;
    throw Error(Errc::DegenerateTriangle, "degenerate triangle: vertices are collinear");
  }
}

Point q_point(const Point& h, const Scalar& t) {
  if (h == origin_like(t)) throw Error(Errc::JEqualsH, "degenerate configuration: H coincides with J");
  return apply_similarity(t, h);
}

Circle vertex_circle(const Scalar& p, const Scalar& t) {
  return circle_center_through(image_vertex(p, t), origin_like(p));
}

Line altitude_line(Vertex v, const Params& params) {
  require_distinct(params);
  const auto [u, w] = others(v);
  return perpendicular_through(vertex_point(params.of(v)),
                               line_through(vertex_point(params.of(u)), vertex_point(params.of(w))));
}

SecondIntersection xyz_point(Vertex v, const Params& params) {
  const Scalar& p = params.of(v);
  return second_line_circle(altitude_line(v, params), vertex_circle(p, params.t), vertex_point(p));
}

Circle hagge_circle(const Point& x, const Point& y, const Point& z) { return geom::circle_through3(x, y, z); }

SecondIntersection lmn_point(Vertex v, const std::array<Circle, 3>& vertex_circles, const Point& j) {
  const auto [u, w] = others(v);
  return second_circle_circle(vertex_circles[index_of(u)], vertex_circles[index_of(w)], j);
}

Line gws_line(const Point& l, const Point& m, const Point& n) {
  if (!geom::collinear3(l, m, n)) {
    throw Error(Errc::NotCollinear, "points " + l.to_string() + ", " + m.to_string() + ", " + n.to_string() +
                                        " are not collinear");
  }
  // The widest distinct pair; on the exact backend any distinct pair gives the
  // same canonical line.
  const std::array<std::pair<const Point*, const Point*>, 3> pairs{{{&l, &m}, {&m, &n}, {&l, &n}}};
  const std::pair<const Point*, const Point*>* best = nullptr;
  double widest = -1.0;
  for (const auto& pr : pairs) {
    if (*pr.first == *pr.second) continue;
    const double d = geom::squared_distance(*pr.first, *pr.second).to_double();
    if (d > widest) {
      widest = d;
      best = &pr;
    }
  }
  if (best == nullptr) throw Error(Errc::AllCoincident, "all three points coincide at " + l.to_string());
  return line_through(*best->first, *best->second);
}

Line double_simson_line(const Point& j, const Point& p, const Point& q, const Point& r) {
  const Circle circumcircle = geom::circle_through3(p, q, r);
  if (!on_circle(j, circumcircle)) {
    throw Error(Errc::NotOnCircumcircle, "point " + j.to_string() + " is not on the circumcircle");
  }
  return gws_line(geom::reflect_in_line(j, line_through(q, r)), geom::reflect_in_line(j, line_through(r, p)),
                  geom::reflect_in_line(j, line_through(p, q)));
}

Scene build_scene(const Params& params) {
  if (params.a.backend() != params.b.backend() || params.b.backend() != params.c.backend() ||
      params.c.backend() != params.t.backend()) {
    throw Error(Errc::BackendMismatch, "parameters on different scalar backends");
  }
  require_distinct(params);

  const Scalar& t = params.t;
  std::vector<std::string> flags;
  auto flag_if = [&flags](bool cond, std::string_view name) {
    if (cond) flags.emplace_back(name);
  };

  const Point J = origin_like(t);
  const Point O{t.like(1), t.like(0)};
  const Point A = vertex_point(params.a);
  const Point B = vertex_point(params.b);
  const Point C = vertex_point(params.c);

  const Line sideBC = line_through(B, C);
  const Line sideCA = line_through(C, A);
  const Line sideAB = line_through(A, B);
  const Line altA = perpendicular_through(A, sideBC);
  const Line altB = perpendicular_through(B, sideCA);
  const Line altC = perpendicular_through(C, sideAB);

  const Point H = orthocenter_h(params);
  const Point Q = q_point(H, t);

  const Similarity sim(t);
  const Point A0 = sim.apply(A);
  const Point B0 = sim.apply(B);
  const Point C0 = sim.apply(C);

  const Circle Sigma = circle_center_through(O, J);
  const auto kA = second_line_circle(line_through(A, A0), Sigma, A);
  const auto kB = second_line_circle(line_through(B, B0), Sigma, B);
  const auto kC = second_line_circle(line_through(C, C0), Sigma, C);
  flag_if(kA.tangent, kFlagTangentAA0);
  flag_if(kB.tangent, kFlagTangentBB0);
  flag_if(kC.tangent, kFlagTangentCC0);
  const Point K = kA.point;
  flag_if(K == J, kFlagKEqualsJ);

  const Circle Sigma0 = geom::circle_through3(A0, B0, C0);
  const std::array<Circle, 3> vertex_circles{circle_center_through(A0, J), circle_center_through(B0, J),
                                             circle_center_through(C0, J)};

  const auto x = second_line_circle(altA, vertex_circles[0], A);
  const auto y = second_line_circle(altB, vertex_circles[1], B);
  const auto z = second_line_circle(altC, vertex_circles[2], C);
  flag_if(x.tangent, kFlagTangentX);
  flag_if(y.tangent, kFlagTangentY);
  flag_if(z.tangent, kFlagTangentZ);

  const bool xyz_degenerate = geom::collinear3(x.point, y.point, z.point);
  flag_if(xyz_degenerate, kFlagHaggeXyzCollinear);
  const Circle S = xyz_degenerate ? circle_center_through(Q, J) : hagge_circle(x.point, y.point, z.point);

  const auto l = lmn_point(Vertex::A, vertex_circles, J);
  const auto m = lmn_point(Vertex::B, vertex_circles, J);
  const auto n = lmn_point(Vertex::C, vertex_circles, J);
  flag_if(l.tangent, kFlagTangentL);
  flag_if(m.tangent, kFlagTangentM);
  flag_if(n.tangent, kFlagTangentN);

  const Line gws = gws_line(l.point, m.point, n.point);

  check_inline(on_circle(A, Sigma) && on_circle(B, Sigma) && on_circle(C, Sigma) && on_circle(K, Sigma),
               "A, B, C, K on the circumcircle");
  check_inline(on_circle(J, Sigma0) && on_circle(K, Sigma0), "circumcircle of A0B0C0 through J and K");
  check_inline(S.center() == Q && on_circle(J, S) && on_circle(H, S), "Hagge circle centred at Q through J and H");

  return Scene{
      .params = params,
      .J = J, .O = O, .A = A, .B = B, .C = C, .H = H, .Q = Q, .K = K,
      .A0 = A0, .B0 = B0, .C0 = C0,
      .X = x.point, .Y = y.point, .Z = z.point,
      .L = l.point, .M = m.point, .N = n.point,
      .sideBC = sideBC, .sideCA = sideCA, .sideAB = sideAB,
      .altA = altA, .altB = altB, .altC = altC,
      .gwsLine = gws,
      .imageSideB0C0 = line_through(B0, C0),
      .imageSideC0A0 = line_through(C0, A0),
      .imageSideA0B0 = line_through(A0, B0),
      .Sigma = Sigma, .Sigma0 = Sigma0, .S = S,
      .cA = vertex_circles[0], .cB = vertex_circles[1], .cC = vertex_circles[2],
      .flags = std::move(flags),
  };
}

Point FrameTransform::to_canonical(const Point& w) const {
  const Point d = w - origin;
  const Scalar norm = geom::squared_norm(unit);
  return {geom::dot(d, unit) / norm, geom::cross(unit, d) / norm};
}

Point FrameTransform::from_canonical(const Point& z) const {
  return {origin.x + unit.x * z.x - unit.y * z.y, origin.y + unit.x * z.y + unit.y * z.x};
}

bool FrameTransform::is_identity() const {
  return origin == Point{origin.x.like(0), origin.x.like(0)} && unit == Point{unit.x.like(1), unit.x.like(0)};
}

NormalizedFrame normalize_frame(const Point& p, const Point& q, const Point& r, const Point& j) {
  Circle circumcircle = [&] {
    try {
      return geom::circle_through3(p, q, r);
    } catch (const Error& e) {
      if (e.code() != Errc::CollinearPoints) throw;
      throw Error(Errc::DegenerateTriangle, "degenerate triangle: vertices are collinear");
    }
  }();
  if (!on_circle(j, circumcircle)) {
    throw Error(Errc::NotOnCircumcircle, "point " + j.to_string() + " is not on the circumcircle");
  }
  const FrameTransform transform{j, circumcircle.center() - j};
  auto parameter = [&](const Point& v) {
    const Point z = transform.to_canonical(v);
    if (z.x.is_zero()) throw Error(Errc::DegenerateTriangle, "J coincides with a vertex");
    return z.y / z.x;
  };
  return {parameter(p), parameter(q), parameter(r), transform};
}

}  // namespace simson::scene
