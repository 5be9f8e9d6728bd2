#include "simson/verify/audit.hpp"

#include <algorithm>

#include "simson/error.hpp"

namespace simson::verify {

using geom::Point;
using num::Scalar;

namespace {

AuditComponent compare(std::string name, const Scalar& printed, const Scalar& constructive) {
  return {std::move(name), printed.to_string(), constructive.to_string(), printed == constructive};
}

// X as printed; Y and Z follow by cycling (a, b, c).
Point printed_xyz(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& t) {
  const Scalar den = (1 + a * a) * (1 + b * b) * (1 + c * c);
  const Scalar common = a * b * c - a + b + c;
  return {2 * (b + c + 2 * t - 2 * b * c * t) * common / den, 2 * common * (b * c + 2 * t * (b + c) - 1) / den};
}

AuditVerdict audit_line_aa0(const scene::Scene& s) {
  const Scalar& a = s.params.a;
  const Scalar& t = s.params.t;
  const auto printed = geom::Line::make(a - 2 * t, -(1 + 2 * a * t), 4 * t);
  const auto constructive = geom::line_through(s.A, s.A0);
  return {"Eq2.3", {{"line", printed.to_string(), constructive.to_string(), printed == constructive}}};
}

AuditVerdict audit_vertex_circle(const scene::Scene& s) {
  const Scalar& a = s.params.a;
  const Scalar& t = s.params.t;
  const Scalar lead = 1 + a * a;
  return {"Eq2.4",
          {compare("d", -2 * (1 - 2 * a * t) / lead, s.cA.d()), compare("e", -2 * (a + 2 * t) / lead, s.cA.e()),
           compare("f", a.like(0), s.cA.f())}};
}

AuditVerdict audit_orthocenter(const scene::Scene& s) {
  const Scalar& a = s.params.a;
  const Scalar& b = s.params.b;
  const Scalar& c = s.params.c;
  const Scalar a2 = a * a, b2 = b * b, c2 = c * c;
  const Scalar den = (1 + a2) * (1 + b2) * (1 + c2);
  const Scalar x = 2 * (2 + a2 + b2 + c2 - 2 * a2 * b2 * c2) / den;
  const Scalar y = 2 *
                   (a + b + c + a * b2 * c2 + b * c2 * a2 + c * a2 * b2 + a * b2 + a * c2 + b * c2 + b * a2 +
                    c * a2 + c * b2) /
                   den;
  return {"Eq2.5", {compare("x", x, s.H.x), compare("y", y, s.H.y)}};
}

AuditVerdict audit_altitude(const scene::Scene& s) {
  const Scalar& a = s.params.a;
  const Scalar& b = s.params.b;
  const Scalar& c = s.params.c;
  const Scalar px = (1 + a * a) * (b + c);
  const Scalar py = -((1 + a * a) * (1 - b * c));
  const Scalar pc = 2 * (a + b + c - a * b * c);
  // Rescale the constructive line so its normal lines up with the printed one.
  const auto& alt = s.altA;
  const Scalar scale = alt.a().is_zero() ? py / alt.b() : px / alt.a();
  return {"Eq2.6",
          {compare("x_coefficient", px, scale * alt.a()), compare("y_coefficient", py, scale * alt.b()),
           compare("constant", pc, scale * alt.c())}};
}

AuditVerdict audit_xyz(const scene::Scene& s) {
  const auto& [a, b, c, t] = s.params;
  const Point x = printed_xyz(a, b, c, t);
  const Point y = printed_xyz(b, c, a, t);
  const Point z = printed_xyz(c, a, b, t);
  return {"Eq2.7",
          {compare("X.x", x.x, s.X.x), compare("X.y", x.y, s.X.y), compare("Y.x", y.x, s.Y.x),
           compare("Y.y", y.y, s.Y.y), compare("Z.x", z.x, s.Z.x), compare("Z.y", z.y, s.Z.y)}};
}

AuditVerdict audit_hagge(const scene::Scene& s) {
  const auto& [a, b, c, t] = s.params;
  const Scalar a2 = a * a, b2 = b * b, c2 = c * c;
  const Scalar den = (1 + a2) * (1 + b2) * (1 + c2);
  const Scalar pairs = b * c + c * a + a * b;
  const Scalar mixed = a2 * b + a2 * c + b2 * c + b2 * a + c2 * a + c2 * b;
  const Scalar x_bracket =
      a2 * b2 * c2 + 2 * a * b * c * t * pairs + 2 * t * mixed + 2 * t * (a + b + c) - a2 - b2 - c2 - 2;
  const Scalar y_bracket =
      2 * a2 * b2 * c2 * t - a * b * c * pairs - 2 * t * (a2 + b2 + c2) - mixed - (a + b + c + 4 * t);
  return {"Eq2.8",
          {compare("d", 2 * x_bracket / den, s.S.d()), compare("e", 2 * y_bracket / den, s.S.e()),
           compare("f", a.like(0), s.S.f())}};
}

}  // namespace

bool AuditVerdict::match() const {
  return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.match; });
}

std::string AuditVerdict::summary() const {
  if (match()) return "MATCH";
  std::string names;
  for (const auto& c : components) {
    if (c.match) continue;
    if (!names.empty()) names += ",";
    names += c.name;
  }
  return "MISMATCH(" + names + ")";
}

const AuditComponent* AuditVerdict::component(std::string_view name) const {
  const auto it = std::find_if(components.begin(), components.end(), [&](const auto& c) { return c.name == name; });
  return it == components.end() ? nullptr : &*it;
}

const AuditVerdict* AuditReport::verdict(std::string_view equation) const {
  const auto it = std::find_if(verdicts.begin(), verdicts.end(), [&](const auto& v) { return v.equation == equation; });
  return it == verdicts.end() ? nullptr : &*it;
}

bool AuditReport::generic() const {
  const auto& [a, b, c, t] = params;
  return !(a * b * c).is_zero() && !(b + c).is_zero();
}

std::string AuditReport::pattern() const {
  std::string out;
  for (const auto& v : verdicts) {
    if (!out.empty()) out += ", ";
    out += v.equation + " " + v.summary();
  }
  return out;
}

std::string AuditReport::to_text() const {
  std::string out = "params: " + params.to_string() + (generic() ? "" : " (non-generic)") + "\n";
  for (const auto& v : verdicts) {
    out += v.equation + " " + v.summary() + "\n";
    for (const auto& c : v.components) {
      out += "    " + c.name + ": printed " + c.printed + ", constructive " + c.constructive +
             (c.match ? "" : "  <- differs") + "\n";
    }
  }
  return out;
}

AuditReport audit_printed_formulas(const scene::Params& params) {
  const scene::Scene s = scene::build_scene(params);
  return {params,
          {audit_line_aa0(s), audit_vertex_circle(s), audit_orthocenter(s), audit_altitude(s), audit_xyz(s),
           audit_hagge(s)}};
}

std::string AuditSample::to_text() const {
  std::string out;
  std::size_t generic = 0;
  for (const auto& r : reports) {
    out += r.params.to_string() + (r.generic() ? "" : " (non-generic)") + ": " + r.pattern() + "\n";
    if (r.generic()) ++generic;
  }
  out += "patterns, all instances:\n";
  for (const auto& [pattern, n] : pattern_counts) {
    out += "  " + std::to_string(n) + "/" + std::to_string(reports.size()) + "  " + pattern + "\n";
  }
  out += "patterns, generic instances (abc != 0, b + c != 0):\n";
  for (const auto& [pattern, n] : generic_pattern_counts) {
    out += "  " + std::to_string(n) + "/" + std::to_string(generic) + "  " + pattern + "\n";
  }
  out += "skipped " + std::to_string(skipped_h_equals_j) + " draws with H = J\n";
  return out;
}

AuditSample audit_sample(const FuzzConfig& config) {
  AuditSample sample;
  for (const auto& params : draw_params(config, sample.skipped_h_equals_j)) {
    sample.reports.push_back(audit_printed_formulas(params));
    const auto& report = sample.reports.back();
    ++sample.pattern_counts[report.pattern()];
    if (report.generic()) ++sample.generic_pattern_counts[report.pattern()];
  }
  return sample;
}

}  // namespace simson::verify
