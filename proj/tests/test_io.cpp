#include <doctest.h>

#include <json.hpp>
#include <regex>
#include <string>

#include "simson/error.hpp"
#include "simson/io/scene_document.hpp"
#include "simson/io/svg.hpp"
#include "support.hpp"

using namespace simson;
using namespace simson::io;
using testing::code_of;
using testing::q;

namespace {

scene::Scene worked(const char* t = "1/2") {
  return scene::build_scene(scene::Params::make(q("1"), q("2"), q("3"), q(t)));
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("scene document layout") {
  const std::string text = to_json(SceneDocument::from_scene(worked()));
  const auto j = nlohmann::json::parse(text);
  CHECK(j["schema"] == "simson-scene");
  CHECK(j["version"] == 1);
  CHECK(j["backend"] == "exact");
  CHECK_FALSE(j.contains("eps"));
  CHECK(j["points"]["Q"] == nlohmann::json::array({"-7/5", "1"}));
  CHECK(j["lines"]["gwsLine"] == nlohmann::json::array({"5", "5", "2"}));
  CHECK(j["circles"]["S"] == nlohmann::json::array({"14/5", "-2", "0"}));
  CHECK(j["params"]["t"] == "1/2");
  CHECK(j["points"].size() == 17);
  CHECK(j["lines"].size() == 10);
  CHECK(j["circles"].size() == 6);
  CHECK(j["flags"] == nlohmann::json::array({"tangent:AA0"}));
}

TEST_CASE("scene document round trip is exact") {
  for (const char* t : {"1/2", "0", "-7/3"}) {
    const SceneDocument doc = SceneDocument::from_scene(worked(t));
    const std::string text = to_json(doc);
    const SceneDocument back = parse_scene_document(text);
    CHECK(back == doc);
    CHECK(to_json(back) == text);
  }
}

TEST_CASE("float scene document round trip") {
  const auto params = scene::Params::make(q("1"), q("2"), q("3"), q("1/2")).to_approximate(1e-8);
  const SceneDocument doc = SceneDocument::from_scene(scene::build_scene(params));
  const std::string text = to_json(doc);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["backend"] == "float");
  CHECK(j["eps"] == 1e-8);
  const SceneDocument back = parse_scene_document(text);
  CHECK(back.backend == num::Backend::approximate);
  CHECK(to_json(back) == text);
}

TEST_CASE("malformed scene documents are rejected") {
  const std::string good = to_json(SceneDocument::from_scene(worked()));
  auto broken = [&](auto&& edit) {
    auto j = nlohmann::json::parse(good);
    edit(j);
    return j.dump();
  };
  const std::string cases[] = {
      "not json",
      "[]",
      broken([](auto& j) { j["schema"] = "other"; }),
      broken([](auto& j) { j["version"] = 2; }),
      broken([](auto& j) { j["backend"] = "quantum"; }),
      broken([](auto& j) { j["points"]["Q"] = nlohmann::json::array({"1"}); }),
      broken([](auto& j) { j["points"]["Q"] = nlohmann::json::array({1, 2}); }),
      broken([](auto& j) { j["lines"]["gwsLine"] = nlohmann::json::array({"0", "0", "1"}); }),
      broken([](auto& j) { j["circles"]["S"] = nlohmann::json::array({"0", "0", "1"}); }),
      broken([](auto& j) { j["params"]["a"] = "x/y"; }),
      broken([](auto& j) { j.erase("flags"); }),
  };
  for (const auto& text : cases) {
    CAPTURE(text.substr(0, 60));
    CHECK(code_of([&] { (void)parse_scene_document(text); }) == Errc::ParseError);
  }
}

TEST_CASE("svg has every point and a fixed element order") {
  const std::string svg = render_svg(worked("0"));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "<circle id=\"pt-") == 17);
  CHECK(count(svg, "<line ") >= 3);
  CHECK(count(svg, "<line ") <= 10);
  CHECK(count(svg, "<svg") == 1);
  CHECK(count(svg, "</svg>") == 1);
  CHECK(svg.find("viewBox=") != std::string::npos);
  const auto first_line = svg.find("<line ");
  const auto last_point = svg.rfind("id=\"pt-");
  const auto first_circle = svg.find("id=\"cr-");
  CHECK(last_point < first_line);
  CHECK(first_line < first_circle);
  CHECK(svg.find("id=\"pt-A\"") < svg.find("id=\"pt-B\""));
}

TEST_CASE("svg is well formed") {
  // Every opened tag closes in order; self-closing tags balance themselves.
  const std::string svg = render_svg(worked());
  const std::regex tag(R"(<(/?)([A-Za-z]+)[^>]*?(/?)>)");
  std::vector<std::string> stack;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[3] == "/") continue;
    if (m[1] == "/") {
      REQUIRE_FALSE(stack.empty());
      CHECK(stack.back() == m[2].str());
      stack.pop_back();
    } else {
      stack.push_back(m[2]);
    }
  }
  CHECK(stack.empty());
  CHECK(svg.find("nan") == std::string::npos);
  CHECK(svg.find("inf") == std::string::npos);
}

TEST_CASE("svg output is byte deterministic") {
  CHECK(render_svg(worked()) == render_svg(worked()));
  const auto params = scene::Params::make(q("1"), q("2"), q("3"), q("1/2")).to_approximate();
  CHECK(render_svg(scene::build_scene(params)) == render_svg(scene::build_scene(params)));
}
