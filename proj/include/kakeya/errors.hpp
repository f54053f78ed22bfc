#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace kakeya {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain where a closed form is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

// r1 - 1 <= a: the outer-needle bound c(r1 - 1) is undefined.
class CaseIIInfeasible : public Error {
 public:
  using Error::Error;
};

class EmptyFeasibleSet : public Error {
 public:
  using Error::Error;
};

// A bisection bracket whose predicate (or sign) is the same at both ends.
class BracketError : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <typename Scalar>
void require_finite(Scalar value, const char* name)
{
  using std::isfinite;
  if (!isfinite(value)) throw DomainError(std::string(name) + " must be finite");
}

}  // namespace detail

}  // namespace kakeya
