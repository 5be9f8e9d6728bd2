#include "simson/error.hpp"

namespace simson {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::BackendMismatch: return "BackendMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidLine: return "InvalidLine";
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::CollinearPoints: return "CollinearPoints";
    case Errc::ZeroRadius: return "ZeroRadius";
    case Errc::IdenticalCircles: return "IdenticalCircles";
    case Errc::NoRadicalLine: return "NoRadicalLine";
    case Errc::KnownPointNotIncident: return "KnownPointNotIncident";
    case Errc::ParallelLines: return "ParallelLines";
    case Errc::NotCollinear: return "NotCollinear";
    case Errc::AllCoincident: return "AllCoincident";
    case Errc::NotOnCircumcircle: return "NotOnCircumcircle";
    case Errc::DegenerateTriangle: return "DegenerateTriangle";
    case Errc::JEqualsH: return "JEqualsH";
    case Errc::ConstructionInvariant: return "ConstructionInvariant";
    case Errc::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace simson
