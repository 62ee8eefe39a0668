#pragma once

#include <stdexcept>
#include <string>

namespace hyperbranch {

/// Raised when an argument violates an operation's precondition
/// (mismatched weights, out-of-range degree, malformed label).
class DomainError : public std::invalid_argument
{
public:
  explicit DomainError(const std::string& what)
  : std::invalid_argument(what)
  {}
};

/// Raised when an exact computation produces a value that can only come
/// from an upstream bug: a non-integral character value, a fractional or
/// negative multiplicity, a non-unitriangular transition matrix.
class ComputationError : public std::runtime_error
{
public:
  explicit ComputationError(const std::string& what)
  : std::runtime_error(what)
  {}
};

} // namespace hyperbranch
