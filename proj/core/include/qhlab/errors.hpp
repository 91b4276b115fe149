#pragma once

#include <stdexcept>
#include <string>

namespace qhlab {

enum class ErrorKind {
  // domain
  ResolutionTooCoarse,
  EmptyDomain,
  AlreadySmoothed,
  // elliptic
  EllipticityViolated,
  MMatrixViolated,
  ShiftExceedsTau,
  NoConvergence,
  NonPositiveEigenvector,
  // green
  SolverDivergence,
  NonPositiveColumn,
  CoincidentPoints,
  DisconnectedSubdomain,
  // metric
  Unreachable,
  ChainBlocked,
  GeodesicTooShort,
  NestingViolated,
  // potential
  NegativeInput,
  BallNotContained,
  ThetaUnavailable,
  TripleTooClose,
  InsufficientSpread,
  NonPositiveFunction,
  PoleTooCloseToBoundary,
  ArgumentOutOfDomain,
  // cli
  ConfigInvalid,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qhlab
