#ifndef INCALG_ERROR_HPP
#define INCALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace incalg {

// Every failure raised by the library carries one of these kinds; the C API
// maps them onto stable numeric codes.
enum class ErrorKind {
  ZeroArgument,
  DomainMismatch,
  ParseError,
  CycleDetected,
  DuplicateLabel,
  UnknownLabel,
  SizeLimit,
  NoDecomposition,
  ContextMismatch,
  NotAUnit,
  NotComparable,
  NotAMorphism,
  NotUnital,
  InvalidCocycle,
  NotADerivation,
  SplitFailed,
  NotCentral,
  NotInvolutive,
  BadSign,
  Char2Unsupported,
  NotConnected,
  NotAnInvolution,
  HypothesisFailed,
  UpperRightNonzero,
  FixedPointsPresent,
  ZeroEpsilon,
  NotSymmetric,
  NotASquare,
  InfiniteClassCount,
  InvalidArgument,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace incalg

#endif
