#pragma once

#include <stdexcept>
#include <string>

namespace rthy {

enum class ErrorKind {
  DimensionMismatch,
  IndexOutOfRange,
  ParseError,
  NotStochastic,
  NotReflexive,
  InvalidModule,
  NotReflexiveTransitive,
  NotRightInvariant,
  NotLeftInvariant,
  InvalidAction,
  HypothesisMismatch,
  WrongHypothesisCount,
  LengthMismatch,
  ZeroReference,
  ShapeMismatch,
  BadStratumBounds,
  EnumerationTooLarge,
  SearchTooLarge,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  // Guard errors mean the input was fine but the search space is too big.
  bool is_guard() const {
    return kind_ == ErrorKind::EnumerationTooLarge || kind_ == ErrorKind::SearchTooLarge;
  }

 private:
  ErrorKind kind_;
};

}  // namespace rthy
