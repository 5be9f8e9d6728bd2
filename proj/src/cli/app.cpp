#include "simson/cli/app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "simson/error.hpp"
#include "simson/io/scene_document.hpp"
#include "simson/io/svg.hpp"
#include "simson/verify/audit.hpp"
#include "simson/verify/checks.hpp"
#include "simson/verify/fuzz.hpp"

namespace simson::cli {

namespace {

struct SceneFlags {
  std::string a, b, c, t;
  std::string backend = "exact";
  double eps = num::kDefaultEps;

  void attach(CLI::App& cmd, bool required) {
    auto* oa = cmd.add_option("--a", a, "vertex parameter of A (p/q, integer or decimal)");
    auto* ob = cmd.add_option("--b", b, "vertex parameter of B");
    auto* oc = cmd.add_option("--c", c, "vertex parameter of C");
    auto* ot = cmd.add_option("--t", t, "similarity parameter");
    if (required) {
      for (auto* o : {oa, ob, oc, ot}) o->required();
    }
    cmd.add_option("--backend", backend, "exact|float")->capture_default_str();
    cmd.add_option("--eps", eps, "absolute tolerance of the float backend")->capture_default_str();
  }

  bool given() const { return !a.empty() || !b.empty() || !c.empty() || !t.empty(); }

  scene::Params params() const {
    if (a.empty() || b.empty() || c.empty() || t.empty()) {
      throw Error(Errc::InvalidConfig, "--a, --b, --c and --t are all required");
    }
    const num::Backend chosen = num::parse_backend(backend);
    if (!(eps > 0.0)) throw Error(Errc::InvalidConfig, "--eps must be positive");
    scene::Params p = scene::Params::make(num::Scalar::parse(a), num::Scalar::parse(b), num::Scalar::parse(c),
                                          num::Scalar::parse(t));
    return chosen == num::Backend::exact ? p : p.to_approximate(eps);
  }
};

struct SampleFlags {
  std::uint64_t seed = 42;
  std::size_t count = 1000;
  long max_mag = 20;
  long max_den = 10;
  bool no_t_zero = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("--seed", seed, "generator seed")->capture_default_str();
    cmd.add_option("--count", count, "number of instances")->capture_default_str();
    cmd.add_option("--max-mag", max_mag, "numerators drawn from [-max-mag, max-mag]")->capture_default_str();
    cmd.add_option("--max-den", max_den, "denominators drawn from [1, max-den]")->capture_default_str();
    cmd.add_flag("--no-t-zero", no_t_zero, "do not force t = 0 on every tenth instance");
  }

  verify::FuzzConfig config() const {
    verify::FuzzConfig cfg{seed, count, max_mag, max_den, !no_t_zero};
    cfg.validate();
    return cfg;
  }
};

// Errors caused by the flags themselves, as opposed to a construction step
// breaking down (which only a failing identity or a too-tight tolerance can do).
bool is_input_error(Errc code) {
  switch (code) {
    case Errc::ZeroDenominator:
    case Errc::ParseError:
    case Errc::BackendMismatch:
    case Errc::DegenerateTriangle:
    case Errc::JEqualsH:
    case Errc::InvalidConfig:
      return true;
    default:
      return false;
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::InvalidConfig, "cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw Error(Errc::InvalidConfig, "failed writing '" + path + "'");
}

void print_summary(const scene::Scene& s, std::ostream& out) {
  out << "params: " << s.params.to_string() << " backend: " << num::backend_name(s.params.t.backend()) << "\n";
  for (const auto& [name, p] : s.named_points()) out << "  " << name << " = " << p->to_string() << "\n";
  out << "  gwsLine = " << s.gwsLine.to_string() << "\n";
  out << "  S = " << s.S.to_string() << "\n";
  out << "flags:";
  if (s.flags.empty()) out << " none";
  for (const auto& f : s.flags) out << " " << f;
  out << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of generalized Wallace-Simson lines", "simson"};
  app.require_subcommand(1);

  SceneFlags construct_flags;
  std::string json_path, svg_path;
  auto* construct = app.add_subcommand("construct", "build one scene, optionally writing JSON and SVG");
  construct_flags.attach(*construct, true);
  construct->add_option("--json", json_path, "write the scene document here");
  construct->add_option("--svg", svg_path, "write the figure here");

  SceneFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "run the named checks on one scene");
  verify_flags.attach(*verify_cmd, true);

  SampleFlags fuzz_flags;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "run the checks on seeded random exact instances");
  fuzz_flags.attach(*fuzz_cmd);

  SceneFlags audit_scene;
  SampleFlags audit_sample_flags;
  audit_sample_flags.seed = 7;
  audit_sample_flags.count = 100;
  auto* audit_cmd = app.add_subcommand("audit", "compare closed-form formulas with the construction");
  audit_scene.attach(*audit_cmd, false);
  audit_sample_flags.attach(*audit_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (construct->parsed()) {
      const scene::Scene s = scene::build_scene(construct_flags.params());
      if (!json_path.empty()) write_file(json_path, io::to_json(io::SceneDocument::from_scene(s)));
      if (!svg_path.empty()) write_file(svg_path, io::render_svg(s));
      print_summary(s, out);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const scene::Params params = verify_flags.params();
      std::optional<scene::Scene> built;
      try {
        built = scene::build_scene(params);
      } catch (const Error& e) {
        if (is_input_error(e.code())) throw;
        out << "params: " << params.to_string() << "\n";
        out << "FAIL construction\n    " << errc_name(e.code()) << ": " << e.what() << "\n";
        return kExitCheckFailure;
      }
      const verify::Report report = verify::run_checks(*built);
      out << report.to_text();
      return report.all_pass() ? kExitOk : kExitCheckFailure;
    }
    if (fuzz_cmd->parsed()) {
      const verify::FuzzReport report = verify::fuzz(fuzz_flags.config());
      out << report.to_text();
      return report.all_pass() ? kExitOk : kExitCheckFailure;
    }
    if (audit_cmd->parsed()) {
      if (audit_scene.given()) {
        out << verify::audit_printed_formulas(audit_scene.params()).to_text();
      } else {
        out << verify::audit_sample(audit_sample_flags.config()).to_text();
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace simson::cli
