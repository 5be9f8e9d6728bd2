#pragma once

#include "simson/scene/construction.hpp"
#include "simson/verify/report.hpp"

namespace simson::verify {

/// Runs every check in kCheckNames against the scene, in that order. Checks
/// never short-circuit and never throw: a construction error inside a check is
/// reported as that check's failure.
Report run_checks(const scene::Scene& scene);

}  // namespace simson::verify
