#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "simson/scene/construction.hpp"

namespace simson::io {

inline constexpr std::string_view kSceneSchema = "simson-scene";
inline constexpr int kSceneSchemaVersion = 1;

/// Serializable form of a Scene.
///
/// JSON layout (keys sorted):
///
///     {
///       "schema": "simson-scene", "version": 1,
///       "backend": "exact" | "float", "eps": <number, float backend only>,
///       "params":  {"a": "1", "b": "2", "c": "3", "t": "1/2"},
///       "points":  {"A": ["1", "1"], ...},
///       "lines":   {"gwsLine": ["5", "5", "2"], ...},      // a x + b y + c = 0
///       "circles": {"S": ["14/5", "-2", "0"], ...},         // x^2 + y^2 + d x + e y + f = 0
///       "flags":   ["tangent:AA0", ...]
///     }
///
/// Every number is a string: canonical "p/q" on the exact backend, the
/// shortest round-tripping decimal on the float backend.
struct SceneDocument {
  int version = kSceneSchemaVersion;
  num::Backend backend = num::Backend::exact;
  double eps = num::kDefaultEps;
  std::map<std::string, num::Scalar> params;
  std::map<std::string, geom::Point> points;
  std::map<std::string, geom::Line> lines;
  std::map<std::string, geom::Circle> circles;
  std::vector<std::string> flags;

  static SceneDocument from_scene(const scene::Scene& scene);

  friend bool operator==(const SceneDocument& x, const SceneDocument& y);
};

std::string to_json(const SceneDocument& doc);
/// Throws Errc::ParseError on malformed documents.
SceneDocument parse_scene_document(std::string_view json_text);

}  // namespace simson::io
