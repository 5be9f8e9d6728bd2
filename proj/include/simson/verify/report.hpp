#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace simson::verify {

struct Detail {
  std::string key;
  std::string value;
};

/// Outcome of one named check. A failed check always carries a witness.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::vector<Detail> witness;
  std::string note;
};

struct Report {
  std::string params;
  std::vector<CheckResult> checks;
  std::vector<std::string> flags;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_pass() const { return failed() == 0; }
  const CheckResult* find(std::string_view name) const;

  /// One "PASS name" / "FAIL name" line per check, witnesses indented below,
  /// then a summary line.
  std::string to_text() const;
};

/// Check names in execution order.
inline constexpr std::array<std::string_view, 19> kCheckNames{
    "on_circumcircle",
    "sigma0_through_J_and_K",
    "q_equidistant",
    "q_is_image_of_H",
    "similarity_ratio",
    "perspector_common",
    "xyz_incidences",
    "hagge_center_and_members",
    "L_on_BC",
    "M_on_CA",
    "N_on_AB",
    "lmn_collinear",
    "q_on_line",
    "reflection_route_equals_radical_route",
    "line_equals_double_simson_of_image",
    "equal_oblique_tangents",
    "concyclic_chains_thm41",
    "t_zero_reduction",
    "double_simson_of_ABC_through_H",
};

}  // namespace simson::verify
