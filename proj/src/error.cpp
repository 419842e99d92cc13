#include "incalg/error.hpp"

namespace incalg {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::InvalidCocycle: return "InvalidCocycle";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::SplitFailed: return "SplitFailed";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotInvolutive: return "NotInvolutive";
    case ErrorKind::BadSign: return "BadSign";
    case ErrorKind::Char2Unsupported: return "Char2Unsupported";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotAnInvolution: return "NotAnInvolution";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::UpperRightNonzero: return "UpperRightNonzero";
    case ErrorKind::FixedPointsPresent: return "FixedPointsPresent";
    case ErrorKind::ZeroEpsilon: return "ZeroEpsilon";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotASquare: return "NotASquare";
    case ErrorKind::InfiniteClassCount: return "InfiniteClassCount";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace incalg
