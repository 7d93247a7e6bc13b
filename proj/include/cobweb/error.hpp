#pragma once

#include <stdexcept>
#include <string>

namespace cobweb {

/// Malformed user input: bad sequence spec, bad prefabiant literal, bad file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed request outside an operation's domain (zero term, index out of
/// range, search cap exceeded).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cobweb
