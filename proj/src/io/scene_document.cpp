#include "simson/io/scene_document.hpp"

#include <charconv>
#include <json.hpp>

#include "simson/error.hpp"

namespace simson::io {

using nlohmann::json;
using num::Backend;
using num::Scalar;

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(Errc::ParseError, "malformed scene document: " + why);
}

Scalar parse_value(const json& j, Backend backend, double eps) {
  if (!j.is_string()) malformed("expected a string number, got " + j.dump());
  const auto& text = j.get_ref<const std::string&>();
  if (backend == Backend::exact) return Scalar::parse(text);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) malformed("bad float '" + text + "'");
  return Scalar::approximate(v, eps);
}

std::array<Scalar, 3> parse_triple(const json& j, Backend backend, double eps) {
  if (!j.is_array() || j.size() != 3) malformed("expected a 3-element array, got " + j.dump());
  return {parse_value(j[0], backend, eps), parse_value(j[1], backend, eps), parse_value(j[2], backend, eps)};
}

const json& member(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing '") + key + "'");
  return *it;
}

}  // namespace

SceneDocument SceneDocument::from_scene(const scene::Scene& scene) {
  SceneDocument doc;
  doc.backend = scene.params.t.backend();
  if (doc.backend == Backend::approximate) doc.eps = scene.params.t.eps();
  doc.params = {{"a", scene.params.a}, {"b", scene.params.b}, {"c", scene.params.c}, {"t", scene.params.t}};
  for (const auto& [name, p] : scene.named_points()) doc.points.emplace(name, *p);
  for (const auto& [name, l] : scene.named_lines()) doc.lines.emplace(name, *l);
  for (const auto& [name, c] : scene.named_circles()) doc.circles.emplace(name, *c);
  doc.flags = scene.flags;
  return doc;
}

bool operator==(const SceneDocument& x, const SceneDocument& y) {
  return x.version == y.version && x.backend == y.backend &&
         (x.backend == Backend::exact || x.eps == y.eps) && x.params == y.params && x.points == y.points &&
         x.lines == y.lines && x.circles == y.circles && x.flags == y.flags;
}

std::string to_json(const SceneDocument& doc) {
  json j;
  j["schema"] = kSceneSchema;
  j["version"] = doc.version;
  j["backend"] = num::backend_name(doc.backend);
  if (doc.backend == Backend::approximate) j["eps"] = doc.eps;
  j["params"] = json::object();
  for (const auto& [name, v] : doc.params) j["params"][name] = v.to_string();
  j["points"] = json::object();
  for (const auto& [name, p] : doc.points) j["points"][name] = {p.x.to_string(), p.y.to_string()};
  j["lines"] = json::object();
  for (const auto& [name, l] : doc.lines) j["lines"][name] = {l.a().to_string(), l.b().to_string(), l.c().to_string()};
  j["circles"] = json::object();
  for (const auto& [name, c] : doc.circles) j["circles"][name] = {c.d().to_string(), c.e().to_string(), c.f().to_string()};
  j["flags"] = doc.flags;
  return j.dump(2) + "\n";
}

SceneDocument parse_scene_document(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  if (!j.is_object()) malformed("top level is not an object");
  if (member(j, "schema") != kSceneSchema) malformed("unknown schema " + member(j, "schema").dump());

  SceneDocument doc;
  try {
    doc.version = member(j, "version").get<int>();
    if (doc.version != kSceneSchemaVersion) malformed("unsupported version " + std::to_string(doc.version));
    doc.backend = num::parse_backend(member(j, "backend").get<std::string>());
    if (doc.backend == Backend::approximate) doc.eps = member(j, "eps").get<double>();

    for (const auto& [name, v] : member(j, "params").items()) doc.params.emplace(name, parse_value(v, doc.backend, doc.eps));
    for (const auto& [name, v] : member(j, "points").items()) {
      if (!v.is_array() || v.size() != 2) malformed("point '" + name + "' is not a pair");
      doc.points.emplace(name, geom::Point{parse_value(v[0], doc.backend, doc.eps), parse_value(v[1], doc.backend, doc.eps)});
    }
    for (const auto& [name, v] : member(j, "lines").items()) {
      const auto [a, b, c] = parse_triple(v, doc.backend, doc.eps);
      doc.lines.emplace(name, geom::Line::restore(a, b, c));
    }
    for (const auto& [name, v] : member(j, "circles").items()) {
      const auto [d, e, f] = parse_triple(v, doc.backend, doc.eps);
      doc.circles.emplace(name, geom::Circle::make(d, e, f));
    }
    doc.flags = member(j, "flags").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    malformed(e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    malformed(e.what());
  }
  return doc;
}

}  // namespace simson::io
