#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trimlat {

enum class Errc {
  InvalidInput,
  MalformedFile,
  CycleDetected,
  NotALattice,
  NoBoundedBottom,
  NoBoundedTop,
  NotComparable,
  NotJoinIrreducible,
  NotMeetIrreducible,
  NotACover,
  NotLeftModular,
  LabellingsDisagree,
  NotEL,
  NotInterpolating,
  NotClosed,
  ChainNotContained,
  NotAnAutomorphism,
  CapExceeded,
  CrossCheckFailed,
  NotReduced,
  NotAnInversionSet,
  FiberNotUnique,
  FibersNotPartition,
  NotHomomorphism,
  IsomorphismFailed,
  CensusMismatch,
  MinusOneAbsent,
  UnsupportedType,
  NotACongruence,
  OrderDependence,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class LatticeError : public std::runtime_error {
 public:
  LatticeError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace trimlat
