#ifndef TROP_ERRORS_HPP
#define TROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyPolyhedron : Error {
  EmptyPolyhedron() : Error("infeasible halfspace system") {}
};
struct UnboundedDirection : Error {
  UnboundedDirection() : Error("supremum not attained: unbounded direction") {}
};
struct NotPointed : Error {
  NotPointed() : Error("polyhedron contains a line") {}
};
struct DimensionMismatch : Error {
  DimensionMismatch() : Error("ambient dimension mismatch") {}
};
struct Unbounded : Error {
  Unbounded() : Error("operation requires a bounded polyhedron") {}
};
struct ConeNotInFan : Error {
  ConeNotInFan() : Error("recession cone is not a cone of the fan") {}
};
struct StratumNotInFan : Error {
  StratumNotInFan() : Error("infinite-coordinate pattern spans no fan cone") {}
};
struct FanNotCompatible : Error {
  FanNotCompatible() : Error("fan cone does not fit inside a Newton fan cone") {}
};
struct CertificateInsufficient : Error {
  CertificateInsufficient() : Error("tail certificate too weak for this domain") {}
};
struct NotIsolated : Error {
  NotIsolated() : Error("point is not an isolated intersection point") {}
};
struct BoundaryStratum : Error {
  BoundaryStratum() : Error("boundary-stratum multiplicities are not computed") {}
};
struct GenericityFailure : Error {
  explicit GenericityFailure(const std::string& log)
      : Error("no admissible translation found: " + log) {}
};
struct WellDefinednessViolation : Error {
  WellDefinednessViolation() : Error("stable multiplicity disagrees across seeds") {}
};
struct NotFinite : Error {
  NotFinite() : Error("system has infinitely many common zeros") {}
};
struct PairingAmbiguous : Error {
  PairingAmbiguous() : Error("valuation pairing of resultant roots is ambiguous") {}
};
struct DegenerateSystem : Error {
  DegenerateSystem() : Error("system has infinitely many solutions") {}
};
struct UnrealizableValuation : Error {
  UnrealizableValuation() : Error("requested valuation not realizable") {}
};

}  // namespace trop

#endif  // TROP_ERRORS_HPP
