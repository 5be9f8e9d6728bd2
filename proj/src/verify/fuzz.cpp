#include "simson/verify/fuzz.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "simson/error.hpp"
#include "simson/verify/checks.hpp"

namespace simson::verify {

void FuzzConfig::validate() const {
  if (count < 1) throw Error(Errc::InvalidConfig, "fuzz count must be at least 1");
  if (max_mag < 1) throw Error(Errc::InvalidConfig, "max magnitude must be at least 1");
  if (max_den < 1) throw Error(Errc::InvalidConfig, "max denominator must be at least 1");
}

ParamSampler::ParamSampler(const FuzzConfig& config)
    : engine_(config.seed), max_mag_(config.max_mag), max_den_(config.max_den) {}

std::int64_t ParamSampler::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range + 1) % range;  // largest accepted draw
  std::uint64_t r = engine_();
  while (r > limit) r = engine_();
  return lo + static_cast<std::int64_t>(r % range);
}

num::Rational ParamSampler::rational() {
  const auto p = uniform(-max_mag_, max_mag_);
  const auto q = uniform(1, max_den_);
  return num::Rational::make(p, q);
}

scene::Params ParamSampler::params(bool t_zero) {
  const num::Rational a = rational();
  num::Rational b = rational();
  while (b == a) b = rational();
  num::Rational c = rational();
  while (c == a || c == b) c = rational();
  const num::Rational t = rational();
  return scene::Params::make(a, b, c, t_zero ? num::Rational(0) : t);
}

std::size_t FuzzReport::passing() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const auto& i) { return i.pass(); }));
}

std::string FuzzReport::to_text() const {
  std::string out = "fuzz seed=" + std::to_string(config.seed) + " count=" + std::to_string(config.count) +
                    " max-mag=" + std::to_string(config.max_mag) + " max-den=" + std::to_string(config.max_den) +
                    " t-zero=" + (config.include_t_zero ? "on" : "off") + "\n";
  for (const auto& inst : instances) {
    if (inst.pass()) continue;
    out += "FAIL instance " + std::to_string(inst.index) + " " + inst.params.to_string() + ":";
    if (!inst.error.empty()) out += " error " + inst.error;
    for (const auto& name : inst.failed_checks) out += " " + name;
    out += "\n";
  }
  out += "skipped " + std::to_string(skipped_h_equals_j) + " draws with H = J\n";
  out += std::to_string(passing()) + "/" + std::to_string(instances.size()) + " pass\n";
  return out;
}

namespace {

FuzzInstance evaluate(std::size_t index, const scene::Params& params) {
  FuzzInstance inst;
  inst.index = index;
  inst.params = params;
  try {
    const Report report = run_checks(scene::build_scene(params));
    inst.checks_total = report.checks.size();
    inst.checks_passed = report.passed();
    for (const auto& c : report.checks) {
      if (!c.pass) inst.failed_checks.push_back(c.name);
    }
  } catch (const Error& e) {
    inst.error = std::string(errc_name(e.code())) + ": " + e.what();
  }
  return inst;
}

bool h_equals_j(const scene::Params& params) {
  const geom::Point h = scene::orthocenter_h(params);
  return h.x.is_zero() && h.y.is_zero();
}

}  // namespace

std::vector<scene::Params> draw_params(const FuzzConfig& config, std::size_t& skipped_h_equals_j) {
  config.validate();
  ParamSampler sampler(config);
  std::vector<scene::Params> drawn;
  drawn.reserve(config.count);
  while (drawn.size() < config.count) {
    const bool t_zero = config.include_t_zero && drawn.size() % 10 == 0;
    scene::Params p = sampler.params(t_zero);
    if (h_equals_j(p)) {
      ++skipped_h_equals_j;
      continue;
    }
    drawn.push_back(std::move(p));
  }
  return drawn;
}

FuzzReport fuzz(const FuzzConfig& config) {
  config.validate();

  FuzzReport report;
  report.config = config;

  const std::vector<scene::Params> drawn = draw_params(config, report.skipped_h_equals_j);

  // Instances are independent; results land at their own index.
  report.instances.resize(drawn.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(drawn.size(), 1));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < drawn.size(); i += workers) report.instances[i] = evaluate(i, drawn[i]);
    });
  }
  for (auto& th : pool) th.join();
  return report;
}

}  // namespace simson::verify
