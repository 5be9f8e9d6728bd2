#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "simson/cli/app.hpp"
#include "simson/io/scene_document.hpp"

using simson::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "simson_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

const std::vector<std::string> kWorked{"--a", "1", "--b", "2", "--c", "3", "--t", "1/2"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

TEST_CASE("construct prints the scene and writes files") {
  const auto json = scratch("out.json");
  const auto svg = scratch("fig.svg");
  const Outcome o = call(with({"construct"}, with(kWorked, {"--json", json.string(), "--svg", svg.string()})));
  CHECK(o.code == 0);
  CHECK(o.out.find("Q = (-7/5, 1)") != std::string::npos);
  CHECK(o.out.find("tangent:AA0") != std::string::npos);
  const auto doc = simson::io::parse_scene_document(slurp(json));
  CHECK(doc.points.at("Q").x.to_string() == "-7/5");
  CHECK(doc.points.at("Q").y.to_string() == "1");
  CHECK(slurp(svg).find("</svg>") != std::string::npos);
}

TEST_CASE("construct rejects a degenerate triangle") {
  const Outcome o = call({"construct", "--a", "1", "--b", "1", "--c", "3", "--t", "0"});
  CHECK(o.code == 2);
  CHECK(o.err == "error: degenerate triangle: a = b\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"construct", "--a", "1"}).code == 2);
  CHECK(call(with({"construct"}, {"--a", "x", "--b", "2", "--c", "3", "--t", "0"})).code == 2);
  CHECK(call(with({"verify"}, {"--a", "1/0", "--b", "2", "--c", "3", "--t", "0"})).code == 2);
  CHECK(call(with({"verify", "--backend", "decimal"}, kWorked)).code == 2);
  CHECK(call(with({"verify", "--backend", "float", "--eps", "0"}, kWorked)).code == 2);
  CHECK(call({"fuzz", "--count", "0"}).code == 2);
  CHECK(call({"fuzz", "--max-den", "0"}).code == 2);
  CHECK(call({"audit", "--a", "1"}).code == 2);
  CHECK(call(with({"construct", "--json", "/nonexistent-dir/x.json"}, kWorked)).code == 2);
}

TEST_CASE("help exits 0") {
  const Outcome o = call({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("construct") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  const Outcome pass = call(with({"verify"}, kWorked));
  CHECK(pass.code == 0);
  CHECK(pass.out.find("19/19 checks pass") != std::string::npos);
  const Outcome classical = call({"verify", "--a", "1", "--b", "2", "--c", "3", "--t", "0"});
  CHECK(classical.code == 0);
  CHECK(classical.out.find("PASS t_zero_reduction\n") != std::string::npos);
  CHECK(call(with({"verify", "--backend", "float"}, kWorked)).code == 0);
  const Outcome tight = call(with({"verify", "--backend", "float", "--eps", "1e-300"}, kWorked));
  CHECK(tight.code == 1);
  CHECK(tight.out.find("FAIL") != std::string::npos);
}

TEST_CASE("fuzz and audit are deterministic") {
  const Outcome first = call({"fuzz", "--seed", "5", "--count", "50"});
  CHECK(first.code == 0);
  CHECK(first.out.find("50/50 pass") != std::string::npos);
  CHECK(call({"fuzz", "--seed", "5", "--count", "50"}).out == first.out);
  const Outcome audit = call({"audit", "--seed", "7", "--count", "20"});
  CHECK(audit.code == 0);
  CHECK(call({"audit", "--seed", "7", "--count", "20"}).out == audit.out);
  const Outcome one = call(with({"audit"}, kWorked));
  CHECK(one.code == 0);
  CHECK(one.out.find("Eq2.5 MISMATCH(x)") != std::string::npos);
  CHECK(one.out.find("Eq2.6 MISMATCH(constant)") != std::string::npos);
}

TEST_CASE("repeated svg runs are byte identical") {
  const auto a = scratch("a.svg"), b = scratch("b.svg");
  CHECK(call(with({"construct", "--svg", a.string()}, kWorked)).code == 0);
  CHECK(call(with({"construct", "--svg", b.string()}, kWorked)).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
}
