#pragma once

// The two area-per-angle rates that drive every bound:
//   f(r)    = r (2r - 1)^2 / 2       exterior area per unit arcsin(delta/r)
//   c(r, a) = a / (2 arcsin(a / r))  whole-triangle area per unit arcsin, needles outside B_r

#include <cmath>

#include "kakeya/errors.hpp"

namespace kakeya::bounds {

template <typename Scalar>
Scalar f(Scalar r)
{
  detail::require_finite(r, "r");
  if (r < 0 || r > Scalar(0.5)) throw DomainError("f(r) requires 0 <= r <= 1/2");
  const Scalar s = 2 * r - 1;
  return r * s * s / 2;
}

template <typename Scalar>
Scalar c(Scalar r, Scalar a)
{
  using std::asin;
  detail::require_finite(r, "r");
  detail::require_finite(a, "a");
  if (!(a > 0)) throw DomainError("c(r, a) requires a > 0");
  if (a > r) throw DomainError("c(r, a) requires a <= r");
  return a / (2 * asin(a / r));
}

}  // namespace kakeya::bounds
