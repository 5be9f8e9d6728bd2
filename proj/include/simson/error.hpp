#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simson {

enum class Errc {
  ZeroDenominator,
  DivisionByZero,
  BackendMismatch,
  ParseError,
  InvalidLine,
  CoincidentPoints,
  CollinearPoints,
  ZeroRadius,
  IdenticalCircles,
  NoRadicalLine,
  KnownPointNotIncident,
  ParallelLines,
  NotCollinear,
  AllCoincident,
  NotOnCircumcircle,
  DegenerateTriangle,
  JEqualsH,
  ConstructionInvariant,
  InvalidConfig,
};

std::string_view errc_name(Errc code);

// Every failure in the library surfaces as this exception; `code()` names the
// violated precondition and `what()` carries a one-line diagnostic.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace simson
