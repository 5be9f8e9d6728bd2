#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "simson/scene/construction.hpp"

namespace simson::verify {

struct FuzzConfig {
  std::uint64_t seed = 42;
  std::size_t count = 1000;
  /// Numerators are drawn from [-max_mag, max_mag].
  long max_mag = 20;
  /// Denominators are drawn from [1, max_den].
  long max_den = 10;
  /// Every instance whose index is a multiple of 10 uses t = 0.
  bool include_t_zero = true;

  /// Throws Errc::InvalidConfig unless count >= 1 and both magnitudes >= 1.
  void validate() const;
};

/// Reproducible random parameters.
///
/// The generator is std::mt19937_64 seeded with the configured seed; its
/// output sequence is fixed by the C++ standard. An integer in [lo, hi] is the
/// first raw 64-bit draw r below the largest multiple of (hi - lo + 1) that fits
/// in 2^64, mapped to lo + r mod (hi - lo + 1). A rational is numerator then
/// denominator. Parameters are drawn in the order a, b, c, t; a parameter equal
/// to an earlier one is redrawn.
class ParamSampler {
 public:
  explicit ParamSampler(const FuzzConfig& config);

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  num::Rational rational();
  scene::Params params(bool t_zero);

 private:
  std::mt19937_64 engine_;
  long max_mag_;
  long max_den_;
};

struct FuzzInstance {
  std::size_t index = 0;
  scene::Params params;
  std::size_t checks_passed = 0;
  std::size_t checks_total = 0;
  std::vector<std::string> failed_checks;
  /// Set when the construction itself threw.
  std::string error;

  bool pass() const { return error.empty() && failed_checks.empty() && checks_passed == checks_total; }
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<FuzzInstance> instances;
  /// Draws rejected because H coincided with J.
  std::size_t skipped_h_equals_j = 0;

  std::size_t passing() const;
  bool all_pass() const { return passing() == instances.size(); }

  /// Header line, one line per failing instance, then "P/N pass".
  std::string to_text() const;
};

/// The parameter sets the fuzzer checks: `config.count` draws, rejecting
/// (and counting in `skipped_h_equals_j`) any draw whose orthocenter is J.
std::vector<scene::Params> draw_params(const FuzzConfig& config, std::size_t& skipped_h_equals_j);

/// Builds and checks `config.count` random exact scenes. Deterministic in the config.
FuzzReport fuzz(const FuzzConfig& config);

}  // namespace simson::verify
