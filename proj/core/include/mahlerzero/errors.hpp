#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mahlerzero {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract user input.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class PreconditionViolated : public InputError {
 public:
  using InputError::InputError;
};

/// Failures while expanding a Mahler function or an algebraic branch.
class ExpansionError : public Error {
 public:
  using Error::Error;
};

class InconsistentSeeds : public ExpansionError {
 public:
  InconsistentSeeds(std::size_t equation_index,
                    std::optional<std::size_t> coefficient_index);

  /// n such that the coefficient equation of z^n fails.
  std::size_t equation_index() const noexcept { return equation_index_; }
  /// Index of the seed that equation determines, when there is one.
  std::optional<std::size_t> coefficient_index() const noexcept {
    return coefficient_index_;
  }

 private:
  std::size_t equation_index_;
  std::optional<std::size_t> coefficient_index_;
};

class InsufficientSeeds : public ExpansionError {
 public:
  using ExpansionError::ExpansionError;
};

class SingularBranch : public ExpansionError {
 public:
  using ExpansionError::ExpansionError;
};

class NoRationalRoot : public ExpansionError {
 public:
  using ExpansionError::ExpansionError;
};

/// res_y vanished identically; the inputs share a factor in y.
class DegenerateResultant : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant (failed exact division, violated degree bound).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mahlerzero
