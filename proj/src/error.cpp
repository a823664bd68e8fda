#include "trimlat/error.hpp"

namespace trimlat {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::MalformedFile: return "MalformedFile";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::NotALattice: return "NotALattice";
    case Errc::NoBoundedBottom: return "NoBoundedBottom";
    case Errc::NoBoundedTop: return "NoBoundedTop";
    case Errc::NotComparable: return "NotComparable";
    case Errc::NotJoinIrreducible: return "NotJoinIrreducible";
    case Errc::NotMeetIrreducible: return "NotMeetIrreducible";
    case Errc::NotACover: return "NotACover";
    case Errc::NotLeftModular: return "NotLeftModular";
    case Errc::LabellingsDisagree: return "LabellingsDisagree";
    case Errc::NotEL: return "NotEL";
    case Errc::NotInterpolating: return "NotInterpolating";
    case Errc::NotClosed: return "NotClosed";
    case Errc::ChainNotContained: return "ChainNotContained";
    case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::CrossCheckFailed: return "CrossCheckFailed";
    case Errc::NotReduced: return "NotReduced";
    case Errc::NotAnInversionSet: return "NotAnInversionSet";
    case Errc::FiberNotUnique: return "FiberNotUnique";
    case Errc::FibersNotPartition: return "FibersNotPartition";
    case Errc::NotHomomorphism: return "NotHomomorphism";
    case Errc::IsomorphismFailed: return "IsomorphismFailed";
    case Errc::CensusMismatch: return "CensusMismatch";
    case Errc::MinusOneAbsent: return "MinusOneAbsent";
    case Errc::UnsupportedType: return "UnsupportedType";
    case Errc::NotACongruence: return "NotACongruence";
    case Errc::OrderDependence: return "OrderDependence";
  }
  return "Unknown";
}

}  // namespace trimlat
