#include "adet/error.hpp"

namespace adet {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadInput: return "BadInput";
    case Errc::WrongRank: return "WrongRank";
    case Errc::NotOnAffineHyperplane: return "NotOnAffineHyperplane";
    case Errc::NotSaturated: return "NotSaturated";
    case Errc::NotSpanning: return "NotSpanning";
    case Errc::ZeroColumn: return "ZeroColumn";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotGood: return "NotGood";
    case Errc::NotVeryGood: return "NotVeryGood";
    case Errc::NotOpposite: return "NotOpposite";
    case Errc::NotSingleIntersection: return "NotSingleIntersection";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::AlreadyTerminal: return "AlreadyTerminal";
    case Errc::MergePlanInconsistent: return "MergePlanInconsistent";
    case Errc::CleanFailed: return "CleanFailed";
    case Errc::IterationLimitExceeded: return "IterationLimitExceeded";
    case Errc::NonSquare: return "NonSquare";
    case Errc::NotSquare: return "NotSquare";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::TooLarge: return "TooLarge";
    case Errc::CheckFailed: return "CheckFailed";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool errc_is_input_error(Errc c) {
  switch (c) {
    case Errc::BadInput:
    case Errc::WrongRank:
    case Errc::NotOnAffineHyperplane:
    case Errc::NotSaturated:
    case Errc::NotSpanning:
    case Errc::ZeroColumn:
      return true;
    default:
      return false;
  }
}

}  // namespace adet
