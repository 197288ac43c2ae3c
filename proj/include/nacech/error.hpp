#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nacech {

enum class ErrorKind {
  InvalidInput,
  EmptyInput,
  IndexOutOfRange,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotHomomorphism,
  NotAction,
  TooLarge,
  EquivarianceFailure,
  PeifferFailure,
  MissingEntry,
  NormalizationFailure,
  Cocyc1Failure,
  Cocyc2Failure,
  ResultNotCocycle,
  SearchSpaceTooLarge,
  StrategyMismatch,
  ActionNotFreeTransitive,
  ActionNotFree,
  TrivializationInvalid,
  VertexOutOfRange,
  BetaNotSurjective,
  KernelNotCentral,
  NotA1Cocycle,
  ConventionMismatch,
  AxiomFailure,
  Overflow,
  ParseError,
  SemanticError,
};

const char* to_string(ErrorKind k);

// Witness holds the offending indices (elements, vertices, line numbers) in
// the order the message names them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<long long> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<long long>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<long long> witness_;
};

}  // namespace nacech
