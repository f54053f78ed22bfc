#pragma once

// One-dimensional searches shared by the bound, optimizer and oracle code:
// sign-change bisection, predicate-switch bisection, golden-section maximization.

#include <cmath>
#include <utility>

#include "kakeya/errors.hpp"

namespace kakeya {

// Root of fn on [lo, hi] by bisection. fn(lo) and fn(hi) must differ in sign.
template <typename Scalar, typename Fn>
Scalar bisect_root(Fn&& fn, Scalar lo, Scalar hi, Scalar tol)
{
  Scalar f_lo = fn(lo);
  const Scalar f_hi = fn(hi);
  if (f_lo == 0) return lo;
  if (f_hi == 0) return hi;
  if ((f_lo < 0) == (f_hi < 0)) throw BracketError("bisect_root: no sign change on bracket");
  while (hi - lo > tol) {
    const Scalar mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const Scalar f_mid = fn(mid);
    if (f_mid == 0) return mid;
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

// Switch point of a predicate that flips exactly once on [lo, hi].
// Returns the midpoint of the final bracket, whose width is <= tol.
template <typename Scalar, typename Pred>
Scalar bisect_predicate(Pred&& pred, Scalar lo, Scalar hi, Scalar tol)
{
  const bool at_lo = pred(lo);
  if (at_lo == pred(hi)) throw BracketError("bisect_predicate: predicate constant on bracket");
  while (hi - lo > tol) {
    const Scalar mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (pred(mid) == at_lo)
      lo = mid;
    else
      hi = mid;
  }
  return lo + (hi - lo) / 2;
}

template <typename Scalar>
struct SearchPoint {
  Scalar x;
  Scalar value;
};

// Maximizer of a unimodal fn on [lo, hi], bracket shrunk to width <= tol.
// The endpoints are evaluated too, so a monotone fn returns the better endpoint.
template <typename Scalar, typename Fn>
SearchPoint<Scalar> golden_section_max(Fn&& fn, Scalar lo, Scalar hi, Scalar tol)
{
  if (!(hi > lo)) return {lo, fn(lo)};
  const Scalar inv_phi = (std::sqrt(Scalar(5)) - 1) / 2;
  Scalar x1 = hi - inv_phi * (hi - lo);
  Scalar x2 = lo + inv_phi * (hi - lo);
  Scalar f1 = fn(x1);
  Scalar f2 = fn(x2);
  const Scalar lo0 = lo, hi0 = hi;
  while (hi - lo > tol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = fn(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = fn(x2);
    }
  }
  SearchPoint<Scalar> best = f1 >= f2 ? SearchPoint<Scalar>{x1, f1} : SearchPoint<Scalar>{x2, f2};
  for (const Scalar edge : {lo0, hi0}) {
    const Scalar v = fn(edge);
    if (v > best.value) best = {edge, v};
  }
  return best;
}

}  // namespace kakeya
