#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <type_traits>

#include "kakeya/errors.hpp"

namespace kakeya {

template <typename Scalar>
struct QuadratureBudget {
  int max_depth = 50;
  long max_evaluations = 4'000'000;
};

namespace detail {

template <typename Scalar, typename Fn>
class AdaptiveSimpson {
 public:
  AdaptiveSimpson(Fn& fn, QuadratureBudget<Scalar> budget) : fn_(fn), budget_(budget) {}

  Scalar integrate(Scalar lo, Scalar hi, Scalar tol)
  {
    const Scalar f_lo = eval(lo);
    const Scalar f_hi = eval(hi);
    const Scalar mid = lo + (hi - lo) / 2;
    const Scalar f_mid = eval(mid);
    const Scalar whole = (hi - lo) / 6 * (f_lo + 4 * f_mid + f_hi);
    return refine(lo, hi, f_lo, f_mid, f_hi, whole, tol, 0);
  }

 private:
  Scalar eval(Scalar x)
  {
    if (++evaluations_ > budget_.max_evaluations)
      throw QuadratureError("adaptive Simpson exceeded its evaluation budget");
    return fn_(x);
  }

  // Richardson criterion |S2 - S1| <= 15 tol bounds the error of S2 + (S2 - S1)/15 by tol.
  Scalar refine(Scalar lo, Scalar hi, Scalar f_lo, Scalar f_mid, Scalar f_hi, Scalar whole, Scalar tol,
                int depth)
  {
    const Scalar mid = lo + (hi - lo) / 2;
    const Scalar lm = lo + (mid - lo) / 2;
    const Scalar rm = mid + (hi - mid) / 2;
    const Scalar f_lm = eval(lm);
    const Scalar f_rm = eval(rm);
    const Scalar left = (mid - lo) / 6 * (f_lo + 4 * f_lm + f_mid);
    const Scalar right = (hi - mid) / 6 * (f_mid + 4 * f_rm + f_hi);
    const Scalar delta = left + right - whole;
    if (std::abs(delta) <= 15 * tol) return left + right + delta / 15;
    if (depth >= budget_.max_depth)
      throw QuadratureError("adaptive Simpson did not converge within depth " +
                            std::to_string(budget_.max_depth));
    return refine(lo, mid, f_lo, f_lm, f_mid, left, tol / 2, depth + 1) +
           refine(mid, hi, f_mid, f_rm, f_hi, right, tol / 2, depth + 1);
  }

  Fn& fn_;
  QuadratureBudget<Scalar> budget_;
  long evaluations_ = 0;
};

}  // namespace detail

// Integral of fn over [lo, hi] with absolute error <= tol (adaptive Simpson).
template <typename Scalar, typename Fn>
Scalar adaptive_simpson(Fn&& fn, Scalar lo, Scalar hi, Scalar tol, QuadratureBudget<Scalar> budget = {})
{
  if (!(tol > 0)) throw DomainError("quadrature tolerance must be positive");
  if (lo == hi) return 0;
  if (hi < lo) return -adaptive_simpson(fn, hi, lo, tol, budget);
  detail::AdaptiveSimpson<Scalar, std::remove_reference_t<Fn>> rule(fn, budget);
  return rule.integrate(lo, hi, tol);
}

// Integral over [breaks.front(), breaks.back()] split at the interior breaks, which
// must be sorted. The tolerance is shared in proportion to piece length.
template <typename Scalar, typename Fn>
Scalar integrate_piecewise(Fn&& fn, std::span<const Scalar> breaks, Scalar tol, QuadratureBudget<Scalar> budget = {})
{
  if (breaks.size() < 2) return 0;
  const Scalar total = breaks.back() - breaks.front();
  if (!(total > 0)) return 0;
  Scalar sum = 0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Scalar width = breaks[i + 1] - breaks[i];
    if (!(width > 0)) continue;
    sum += adaptive_simpson(fn, breaks[i], breaks[i + 1], tol * width / total, budget);
  }
  return sum;
}

}  // namespace kakeya
