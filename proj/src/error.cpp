#include "gck/error.hpp"

namespace gck {

const char* to_string(Errc c) {
  switch (c) {
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case Errc::CPViolated: return "CPViolated";
    case Errc::UncertaintyViolated: return "UncertaintyViolated";
    case Errc::InconsistentInvariants: return "InconsistentInvariants";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::NoSingleModeDilation: return "NoSingleModeDilation";
    case Errc::SingularAtUnity: return "SingularAtUnity";
    case Errc::NotInRegion: return "NotInRegion";
    case Errc::MissingComplement: return "MissingComplement";
  }
  return "?";
}

}  // namespace gck
