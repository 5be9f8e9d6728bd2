#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "simson/scene/construction.hpp"
#include "simson/verify/fuzz.hpp"

namespace simson::verify {

/// One compared quantity: the closed-form value as printed against the value
/// reached by construction.
struct AuditComponent {
  std::string name;
  std::string printed;
  std::string constructive;
  bool match = false;
};

struct AuditVerdict {
  std::string equation;  // "Eq2.3" ... "Eq2.8"
  std::vector<AuditComponent> components;

  bool match() const;
  /// "MATCH", or "MISMATCH(x)" listing the components that differ.
  std::string summary() const;
  const AuditComponent* component(std::string_view name) const;
};

struct AuditReport {
  scene::Params params;
  std::vector<AuditVerdict> verdicts;

  const AuditVerdict* verdict(std::string_view equation) const;
  /// abc != 0 and b + c != 0. The printed orthocenter x-coordinate differs
  /// from the constructed one by 2a^2b^2c^2/((1+a^2)(1+b^2)(1+c^2)), and the
  /// printed altitude misses A by 4(b+c); each printed value agrees with the
  /// construction exactly where this predicate fails.
  bool generic() const;
  /// Comma-joined "Eq2.3 MATCH, ..." used to group instances.
  std::string pattern() const;
  std::string to_text() const;
};

/// Evaluates the closed forms for the line AA0, the vertex circle, the
/// orthocenter, the altitude from A, the points X/Y/Z and the Hagge circle
/// literally, and compares each against the constructed scene.
///
/// Components compared:
///   Eq2.3  line        (a-2t)x - (1+2at)y + 4t = 0 against line(A, A0)
///   Eq2.4  d, e, f     circle centred at A0 through J
///   Eq2.5  x, y        orthocenter
///   Eq2.6  x_coefficient, y_coefficient, constant
///                      altitude from A, constructive line rescaled to the
///                      printed normal before comparing constants
///   Eq2.7  X.x ... Z.y X, and Y, Z by cyclic substitution
///   Eq2.8  d, e, f     Hagge circle after dividing by (1+a^2)(1+b^2)(1+c^2)
///
/// Throws Errc::DegenerateTriangle or Errc::JEqualsH.
AuditReport audit_printed_formulas(const scene::Params& params);

struct AuditSample {
  std::vector<AuditReport> reports;
  std::map<std::string, std::size_t> pattern_counts;
  std::map<std::string, std::size_t> generic_pattern_counts;
  std::size_t skipped_h_equals_j = 0;

  std::string to_text() const;
};

/// Audits `config.count` instances drawn exactly as the fuzzer draws them.
AuditSample audit_sample(const FuzzConfig& config);

}  // namespace simson::verify
