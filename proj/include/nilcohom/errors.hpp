#pragma once

#include <stdexcept>
#include <string>

namespace nilcohom {

/// Outcome of a structural check, with the first failure explained.
struct Verdict {
  bool ok = true;
  std::string message;
};

/// Bad user input: malformed files, invalid models, missing structures.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};

/// A quantity the paper proves as a theorem came out wrong. This always
/// indicates a bug in the library or a corrupted input, never a property
/// of a valid model.
struct TheoremTrap : std::logic_error {
  using std::logic_error::logic_error;
};

struct NonIntegrableStructure : ValidationError {
  using ValidationError::ValidationError;
};

struct IncompatiblePair : ValidationError {
  using ValidationError::ValidationError;
};

}  // namespace nilcohom
