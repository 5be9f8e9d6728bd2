#include "simson/verify/checks.hpp"

#include <functional>

#include "simson/error.hpp"

namespace simson::verify {

using geom::Circle;
using geom::Line;
using geom::Point;
using num::Scalar;
using scene::Scene;

namespace {

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string_view name) { result_.name = std::string(name); }

  void expect(bool ok, std::string key, std::string value) {
    if (ok) return;
    result_.pass = false;
    result_.witness.push_back({std::move(key), std::move(value)});
  }

  void on_line(const std::string& what, const Point& p, const Line& l) {
    expect(geom::on_line(p, l), what, "residual " + l.evaluate(p).to_string() + " at " + p.to_string());
  }

  void on_circle(const std::string& what, const Point& p, const Circle& c) {
    expect(geom::on_circle(p, c), what, "power " + c.power(p).to_string() + " at " + p.to_string());
  }

  void same(const std::string& what, const Point& actual, const Point& expected) {
    expect(actual == expected, what, "got " + actual.to_string() + ", expected " + expected.to_string());
  }

  void same(const std::string& what, const Line& actual, const Line& expected) {
    expect(actual == expected, what, "got " + actual.to_string() + ", expected " + expected.to_string());
  }

  void same(const std::string& what, const Circle& actual, const Circle& expected) {
    expect(actual == expected, what, "got " + actual.to_string() + ", expected " + expected.to_string());
  }

  void same(const std::string& what, const Scalar& actual, const Scalar& expected) {
    expect(actual == expected, what, "got " + actual.to_string() + ", expected " + expected.to_string());
  }

  void note(std::string text) { result_.note = std::move(text); }

  CheckResult finish() { return std::move(result_); }

  // Library errors raised while checking count as failures of this check.
  void guarded(const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      expect(false, "error", std::string(errc_name(e.code())) + ": " + e.what());
    }
  }

 private:
  CheckResult result_;
};

struct Corner {
  const char* name;
  const Point& vertex;
  const Point& image;
  const Scalar& param;
};

std::array<Corner, 3> corners(const Scene& s) {
  return {{{"A", s.A, s.A0, s.params.a}, {"B", s.B, s.B0, s.params.b}, {"C", s.C, s.C0, s.params.c}}};
}

CheckResult on_circumcircle(const Scene& s) {
  CheckBuilder b("on_circumcircle");
  b.guarded([&] {
    b.same("Sigma", s.Sigma, geom::circle_center_through(s.O, s.J));
    b.on_circle("A on Sigma", s.A, s.Sigma);
    b.on_circle("B on Sigma", s.B, s.Sigma);
    b.on_circle("C on Sigma", s.C, s.Sigma);
    b.on_circle("K on Sigma", s.K, s.Sigma);
  });
  return b.finish();
}

CheckResult sigma0_through_j_and_k(const Scene& s) {
  CheckBuilder b("sigma0_through_J_and_K");
  b.guarded([&] {
    b.on_circle("A0 on Sigma0", s.A0, s.Sigma0);
    b.on_circle("B0 on Sigma0", s.B0, s.Sigma0);
    b.on_circle("C0 on Sigma0", s.C0, s.Sigma0);
    b.on_circle("J on Sigma0", s.J, s.Sigma0);
    b.on_circle("K on Sigma0", s.K, s.Sigma0);
  });
  return b.finish();
}

CheckResult q_equidistant(const Scene& s) {
  CheckBuilder b("q_equidistant");
  b.guarded([&] { b.same("|QJ|^2 vs |QH|^2", geom::squared_distance(s.Q, s.J), geom::squared_distance(s.Q, s.H)); });
  return b.finish();
}

CheckResult q_is_image_of_h(const Scene& s) {
  CheckBuilder b("q_is_image_of_H");
  b.guarded([&] {
    b.same("similarity(H)", scene::apply_similarity(s.params.t, s.H), s.Q);
    b.same("orthocenter(A0B0C0)", geom::orthocenter3(s.A0, s.B0, s.C0), s.Q);
  });
  return b.finish();
}

// Triangles J-image-vertex are all similar: |J image|^2 = d^2 |J vertex|^2
// with d^2 = (1 + 4t^2)/4, and the turn from vertex to image has tangent 2t.
CheckResult similarity_ratio(const Scene& s) {
  CheckBuilder b("similarity_ratio");
  b.guarded([&] {
    const Scalar& t = s.params.t;
    const Scalar ratio = scene::Similarity(t).squared_scale();
    for (const auto& c : corners(s)) {
      const std::string n = c.name;
      b.same("|J" + n + "0|^2 vs d^2 |J" + n + "|^2", geom::squared_norm(c.image - s.J),
             ratio * geom::squared_norm(c.vertex - s.J));
      b.same("turn J" + n + " -> J" + n + "0", geom::cross(c.vertex - s.J, c.image - s.J),
             2 * t * geom::dot(c.vertex - s.J, c.image - s.J));
      b.same(n + "0 closed form", scene::image_vertex(c.param, t), c.image);
    }
  });
  return b.finish();
}

CheckResult perspector_common(const Scene& s) {
  CheckBuilder b("perspector_common");
  b.guarded([&] {
    for (const auto& c : corners(s)) {
      const std::string n = c.name;
      const auto hit = geom::second_line_circle(geom::line_through(c.vertex, c.image), s.Sigma, c.vertex);
      b.same(n + n + "0 meets Sigma again", hit.point, s.K);
    }
    b.same("K closed form", scene::perspector_k(s.params.t), s.K);
  });
  return b.finish();
}

CheckResult xyz_incidences(const Scene& s) {
  CheckBuilder b("xyz_incidences");
  b.guarded([&] {
    b.on_line("X on altA", s.X, s.altA);
    b.on_circle("X on cA", s.X, s.cA);
    b.on_circle("X on S", s.X, s.S);
    b.on_line("Y on altB", s.Y, s.altB);
    b.on_circle("Y on cB", s.Y, s.cB);
    b.on_circle("Y on S", s.Y, s.S);
    b.on_line("Z on altC", s.Z, s.altC);
    b.on_circle("Z on cC", s.Z, s.cC);
    b.on_circle("Z on S", s.Z, s.S);
  });
  return b.finish();
}

CheckResult hagge_center_and_members(const Scene& s) {
  CheckBuilder b("hagge_center_and_members");
  b.guarded([&] {
    b.same("center of S", s.S.center(), s.Q);
    b.on_circle("J on S", s.J, s.S);
    b.on_circle("H on S", s.H, s.S);
    b.same("constant term of S", s.S.f(), s.S.f().like(0));
  });
  return b.finish();
}

CheckResult point_on_side(std::string_view name, const char* what, const Point& p, const Line& side) {
  CheckBuilder b(name);
  b.guarded([&] { b.on_line(what, p, side); });
  return b.finish();
}

CheckResult lmn_collinear(const Scene& s) {
  CheckBuilder b("lmn_collinear");
  b.guarded([&] {
    b.expect(geom::collinear3(s.L, s.M, s.N), "det(L, M, N)",
             geom::cross(s.M - s.L, s.N - s.L).to_string());
  });
  return b.finish();
}

CheckResult q_on_line(const Scene& s) {
  CheckBuilder b("q_on_line");
  b.guarded([&] {
    b.on_line("Q on LMN", s.Q, s.gwsLine);
    b.on_line("L on LMN", s.L, s.gwsLine);
    b.on_line("M on LMN", s.M, s.gwsLine);
    b.on_line("N on LMN", s.N, s.gwsLine);
  });
  return b.finish();
}

CheckResult reflection_route(const Scene& s) {
  CheckBuilder b("reflection_route_equals_radical_route");
  b.guarded([&] {
    b.same("L = reflection of J in B0C0", geom::reflect_in_line(s.J, geom::line_through(s.B0, s.C0)), s.L);
    b.same("M = reflection of J in C0A0", geom::reflect_in_line(s.J, geom::line_through(s.C0, s.A0)), s.M);
    b.same("N = reflection of J in A0B0", geom::reflect_in_line(s.J, geom::line_through(s.A0, s.B0)), s.N);
  });
  return b.finish();
}

CheckResult line_equals_double_simson_of_image(const Scene& s) {
  CheckBuilder b("line_equals_double_simson_of_image");
  b.guarded([&] { b.same("double Simson line of J in A0B0C0", s.gwsLine, scene::double_simson_line(s.J, s.A0, s.B0, s.C0)); });
  return b.finish();
}

// Every line JL, JM, JN meets its side at the same directed angle, whose
// tangent is 1/(2t) (perpendicular when t = 0).
CheckResult equal_oblique_tangents(const Scene& s) {
  CheckBuilder b("equal_oblique_tangents");
  b.guarded([&] {
    const Scalar& t = s.params.t;
    const geom::DirectedTan expected = t.is_zero() ? geom::DirectedTan::infinity() : geom::DirectedTan{1 / (2 * t)};
    const std::array<std::tuple<const char*, const Point*, const Line*>, 3> feet{
        {{"JL vs BC", &s.L, &s.sideBC}, {"JM vs CA", &s.M, &s.sideCA}, {"JN vs AB", &s.N, &s.sideAB}}};
    int compared = 0;
    for (const auto& [what, p, side] : feet) {
      if (*p == s.J) continue;
      const auto tan = geom::directed_tan(geom::line_through(s.J, *p), *side);
      b.expect(tan == expected, what, "tan " + tan.to_string() + ", expected " + expected.to_string());
      ++compared;
    }
    if (compared < 3) b.note(std::to_string(3 - compared) + " of L, M, N at J skipped");
  });
  return b.finish();
}

CheckResult concyclic_chains(const Scene& s) {
  CheckBuilder b("concyclic_chains_thm41");
  b.guarded([&] {
    const std::array<std::tuple<const char*, const Point*, const Point*, const Point*>, 6> chains{{
        {"J L B Y", &s.L, &s.B, &s.Y},
        {"J L C Z", &s.L, &s.C, &s.Z},
        {"J M C Z", &s.M, &s.C, &s.Z},
        {"J M A X", &s.M, &s.A, &s.X},
        {"J N A X", &s.N, &s.A, &s.X},
        {"J N B Y", &s.N, &s.B, &s.Y},
    }};
    for (const auto& [what, p, q, r] : chains) {
      b.expect(geom::concyclic4(s.J, *p, *q, *r), what, "not concyclic");
    }
  });
  return b.finish();
}

CheckResult t_zero_reduction(const Scene& s) {
  CheckBuilder b("t_zero_reduction");
  if (!s.params.t.is_zero()) {
    b.note("not applicable, t != 0");
    return b.finish();
  }
  b.guarded([&] {
    const Point fl = geom::foot_perpendicular(s.J, s.sideBC);
    const Point fm = geom::foot_perpendicular(s.J, s.sideCA);
    const Point fn = geom::foot_perpendicular(s.J, s.sideAB);
    b.same("L = foot on BC", s.L, fl);
    b.same("M = foot on CA", s.M, fm);
    b.same("N = foot on AB", s.N, fn);
    b.same("Q = midpoint(J, H)", s.Q, geom::midpoint(s.J, s.H));
    b.same("classical Wallace-Simson line", s.gwsLine, scene::gws_line(fl, fm, fn));
  });
  return b.finish();
}

CheckResult double_simson_of_abc(const Scene& s) {
  CheckBuilder b("double_simson_of_ABC_through_H");
  b.guarded([&] { b.on_line("H on double Simson line of J", s.H, scene::double_simson_line(s.J, s.A, s.B, s.C)); });
  return b.finish();
}

}  // namespace

Report run_checks(const Scene& s) {
  Report report;
  report.params = s.params.to_string();
  report.flags = s.flags;
  report.checks = {
      on_circumcircle(s),
      sigma0_through_j_and_k(s),
      q_equidistant(s),
      q_is_image_of_h(s),
      similarity_ratio(s),
      perspector_common(s),
      xyz_incidences(s),
      hagge_center_and_members(s),
      point_on_side("L_on_BC", "L on BC", s.L, s.sideBC),
      point_on_side("M_on_CA", "M on CA", s.M, s.sideCA),
      point_on_side("N_on_AB", "N on AB", s.N, s.sideAB),
      lmn_collinear(s),
      q_on_line(s),
      reflection_route(s),
      line_equals_double_simson_of_image(s),
      equal_oblique_tangents(s),
      concyclic_chains(s),
      t_zero_reduction(s),
      double_simson_of_abc(s),
  };
  return report;
}

}  // namespace simson::verify
