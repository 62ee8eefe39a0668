#pragma once

#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace hyperbranch {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n)
{
  if (n < 0)
    throw DomainError("factorial of negative number");
  Integer r = 1;
  for (int i = 2; i <= n; ++i)
    r *= i;
  return r;
}

inline Integer power(int base, int exponent)
{
  return boost::multiprecision::pow(Integer(base), static_cast<unsigned>(exponent));
}

inline bool is_integral(const Rational& q)
{
  return boost::multiprecision::denominator(q) == 1;
}

/// Converts an exact rational that must be an integer; `what` names the
/// quantity in the error message.
inline Integer to_integer(const Rational& q, const std::string& what)
{
  if (!is_integral(q))
    throw ComputationError(what + " is not integral: " + q.str());
  return boost::multiprecision::numerator(q);
}

inline long long to_int64(const Integer& v)
{
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw DomainError("integer does not fit in 64 bits: " + v.str());
  return static_cast<long long>(v);
}

} // namespace hyperbranch
