#pragma once

#include <stdexcept>
#include <string>

namespace relfree {

// Malformed textual input: unknown symbol, bad exponent, rank mismatch.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace relfree

namespace relfree {

// Well-formed input that no implemented theorem covers (torsion
// coefficients, an empty T-part).
class ScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace relfree
