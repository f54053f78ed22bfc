#pragma once

// Closed-form lower bounds for star-shaped Kakeya sets and their assembly into the
// two-case bound. Every value returned as a "coefficient" is the multiplier of pi.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "kakeya/constants.hpp"
#include "kakeya/errors.hpp"
#include "kakeya/geom.hpp"
#include "kakeya/quadrature.hpp"
#include "kakeya/rates.hpp"
#include "kakeya/search.hpp"

namespace kakeya::bounds {

// How r_lambda interpolates between a and r0.
//   reproducing:   r_lambda = lambda r0 + (1 - lambda) a
//   paper_literal: r_lambda = lambda a + (1 - lambda) r0
enum class RLambdaConvention { reproducing, paper_literal };

template <typename Scalar = double>
struct BoundParams {
  Scalar a;       // cap on needle distance
  Scalar r0;      // cutoff radius
  Scalar p;       // proportion of directions whose triangle stays in B_{r1}
  Scalar lambda;  // interpolation weight for r_lambda
};

template <typename Scalar = double>
BoundParams<Scalar> theorem_params()
{
  return {default_needle_cap<Scalar>, Scalar(0.25), Scalar(0.9), Scalar(0.9)};
}

template <typename Scalar>
void validate(const BoundParams<Scalar>& params)
{
  detail::require_finite(params.a, "a");
  detail::require_finite(params.r0, "r0");
  detail::require_finite(params.p, "p");
  detail::require_finite(params.lambda, "lambda");
  if (!(params.a > 0)) throw DomainError("a must be > 0");
  if (!(params.a < params.r0)) throw DomainError("a must be < r0");
  if (!(params.r0 < Scalar(0.5))) throw DomainError("r0 must be < 1/2");
  if (params.p < 0 || params.p > 1) throw DomainError("p must lie in [0, 1]");
  if (params.lambda < 0 || params.lambda > 1) throw DomainError("lambda must lie in [0, 1]");
}

template <typename Scalar = double>
struct DerivedParams {
  Scalar r_lambda;
  Scalar delta1;  // delta1_max(r_lambda, a)
  Scalar r1;      // ob_length(delta1, r_lambda)
  Scalar g_mid;   // (1 + 2 r_lambda) / (1 - 2 r_lambda)
  bool case_ii_feasible;  // r1 - 1 > a
};

template <typename Scalar>
DerivedParams<Scalar> derive_params(const BoundParams<Scalar>& params,
                                    RLambdaConvention convention = RLambdaConvention::reproducing)
{
  validate(params);
  const Scalar lam = params.lambda;
  DerivedParams<Scalar> d{};
  d.r_lambda = convention == RLambdaConvention::reproducing ? lam * params.r0 + (1 - lam) * params.a
                                                            : lam * params.a + (1 - lam) * params.r0;
  d.delta1 = geom::delta1_max(d.r_lambda, params.a);
  d.r1 = geom::ob_length(d.delta1, d.r_lambda);
  d.g_mid = (1 + 2 * d.r_lambda) / (1 - 2 * d.r_lambda);
  d.case_ii_feasible = d.r1 - 1 > params.a;
  return d;
}

// The three closed forms whose maximum is g(r), and which of them is active.
template <typename Scalar>
struct GBranches {
  std::array<Scalar, 3> values;  // (1+2r)/(1-2r), g_mid, pi/(pi/2 - atan 2r)
  int active;
};

template <typename Scalar>
GBranches<Scalar> g_branches(Scalar r, const DerivedParams<Scalar>& derived)
{
  detail::require_finite(r, "r");
  if (!(r > 0) || !(r < Scalar(0.5))) throw DomainError("g(r) requires 0 < r < 1/2");
  GBranches<Scalar> out;
  out.values = {(1 + 2 * r) / (1 - 2 * r), derived.g_mid, pi<Scalar> / (pi<Scalar> / 2 - std::atan(2 * r))};
  out.active = static_cast<int>(std::max_element(out.values.begin(), out.values.end()) - out.values.begin());
  return out;
}

// Cap on |J_Gamma| / theta for arcs of S_r.
template <typename Scalar>
Scalar g(Scalar r, const DerivedParams<Scalar>& derived)
{
  const GBranches<Scalar> b = g_branches(r, derived);
  return b.values[b.active];
}

// Radii in (lo, hi) where the active branch of g switches, ascending. A uniform scan
// brackets each switch, then bisection pins it to tol.
template <typename Scalar>
std::vector<Scalar> g_kinks(Scalar lo, Scalar hi, const DerivedParams<Scalar>& derived, Scalar tol = Scalar(1e-13),
                            int scan_cells = 512)
{
  std::vector<Scalar> kinks;
  if (!(hi > lo)) return kinks;
  auto active = [&](Scalar r) { return g_branches(r, derived).active; };
  Scalar left = lo;
  int left_branch = active(lo);
  for (int i = 1; i <= scan_cells; ++i) {
    const Scalar right = i == scan_cells ? hi : lo + (hi - lo) * i / scan_cells;
    const int right_branch = active(right);
    if (right_branch != left_branch) {
      const int from = left_branch;
      kinks.push_back(bisect_predicate([&](Scalar r) { return active(r) == from; }, left, right, tol));
    }
    left = right;
    left_branch = right_branch;
  }
  return kinks;
}

// Integral of r / g(r) over [a, r0], split at the kinks of g.
template <typename Scalar>
Scalar case_i_integral(const BoundParams<Scalar>& params, Scalar tol,
                       RLambdaConvention convention = RLambdaConvention::reproducing)
{
  if (params.a == params.r0) return 0;
  const DerivedParams<Scalar> derived = derive_params(params, convention);
  std::vector<Scalar> breaks{params.a};
  for (const Scalar k : g_kinks(params.a, params.r0, derived)) breaks.push_back(k);
  breaks.push_back(params.r0);
  auto integrand = [&](Scalar r) { return r / g(r, derived); };
  return integrate_piecewise<Scalar>(integrand, breaks, tol);
}

// One-dimensional outer measure of a direction set A ⊂ [0, pi).
template <typename Scalar = double>
class Measure1D {
 public:
  explicit Measure1D(Scalar value) : value_(value)
  {
    detail::require_finite(value, "measure");
    if (value < 0 || value > pi<Scalar>) throw DomainError("direction-set measure must lie in [0, pi]");
  }

  static Measure1D full() { return Measure1D(pi<Scalar>); }

  Scalar value() const { return value_; }

 private:
  Scalar value_;
};

namespace detail {

template <typename Scalar>
void require_cutoff(Scalar r)
{
  kakeya::detail::require_finite(r, "r");
  if (r < min_cutoff_radius<Scalar>) throw DomainError("cutoff radius r must be >= 0.15");
  if (r > Scalar(0.5)) throw DomainError("cutoff radius r must be <= 1/2");
}

}  // namespace detail

// Area bound |A|/4 f(r) for the union of triangles over directions A.
template <typename Scalar>
Scalar phiareamin_bound(Measure1D<Scalar> meas_a, Scalar r)
{
  detail::require_cutoff(r);
  return meas_a.value() * f(r) / 4;
}

// Adds an inner-part bound a0 to phiareamin_bound. The coefficient 1 - f/(2r^2) is
// clamped at zero, which drops a nonnegative term and keeps the bound valid.
template <typename Scalar>
Scalar inplusout_bound(Measure1D<Scalar> meas_a, Scalar r, Scalar a0)
{
  detail::require_cutoff(r);
  kakeya::detail::require_finite(a0, "a0");
  if (a0 < 0) throw DomainError("inner bound a0 must be >= 0");
  const Scalar fr = f(r);
  const Scalar coefficient = std::max(Scalar(0), 1 - fr / (2 * r * r));
  return meas_a.value() * fr / 4 + coefficient * a0;
}

// Area bound |A|/4 c(r) for directions whose needle avoids B_r.
template <typename Scalar>
Scalar outcir_bound(Measure1D<Scalar> meas_a, Scalar r, Scalar a)
{
  return meas_a.value() * c(r, a) / 4;
}

// Length bound p (pi/3) r / g(r) for the cross-section E ∩ S_r.
template <typename Scalar>
Scalar cross_section_bound(Scalar p, Scalar r, const DerivedParams<Scalar>& derived)
{
  kakeya::detail::require_finite(p, "p");
  if (p < 0 || p > 1) throw DomainError("p must lie in [0, 1]");
  return p * pi<Scalar> / 3 * r / g(r, derived);
}

template <typename Scalar>
Scalar cunningham_bound()
{
  return phiareamin_bound(Measure1D<Scalar>::full(), Scalar(1) / 6) / pi<Scalar>;
}

namespace detail {

// Case I: the cross-section integral is the inner bound a0 at the cutoff r0.
template <typename Scalar>
Scalar case_i_from_integral(const BoundParams<Scalar>& params, Scalar integral)
{
  const Scalar inner = params.p * pi<Scalar> / 3 * integral;
  return inplusout_bound(Measure1D<Scalar>::full(), params.r0, inner) / pi<Scalar>;
}

}  // namespace detail

template <typename Scalar>
Scalar case_i_bound(const BoundParams<Scalar>& params, Scalar tol,
                    RLambdaConvention convention = RLambdaConvention::reproducing)
{
  validate(params);
  detail::require_cutoff(params.r0);
  return detail::case_i_from_integral(params, case_i_integral(params, tol, convention));
}

template <typename Scalar>
Scalar case_ii_bound(const BoundParams<Scalar>& params, RLambdaConvention convention = RLambdaConvention::reproducing)
{
  const DerivedParams<Scalar> derived = derive_params(params, convention);
  if (!derived.case_ii_feasible)
    throw CaseIIInfeasible("r1 - 1 = " + std::to_string(derived.r1 - 1) + " does not exceed a");
  const Measure1D<Scalar> outer((1 - params.p) * pi<Scalar>);
  return outcir_bound(outer, derived.r1 - 1, params.a) / pi<Scalar>;
}

template <typename Scalar = double>
struct BoundBreakdown {
  Scalar case_i;
  Scalar case_ii;
  Scalar half_a;  // a / (2 pi): a needle farther than a already gives area a/2
  Scalar final;   // min(case_i, case_ii, half_a)
  Scalar integral_value;
  Scalar f_r0;
  Scalar c_r1m1;
  DerivedParams<Scalar> derived;
};

template <typename Scalar>
BoundBreakdown<Scalar> theorem_bound(const BoundParams<Scalar>& params, Scalar tol,
                                     RLambdaConvention convention = RLambdaConvention::reproducing)
{
  BoundBreakdown<Scalar> out{};
  out.derived = derive_params(params, convention);
  out.case_ii = case_ii_bound(params, convention);
  detail::require_cutoff(params.r0);
  out.integral_value = case_i_integral(params, tol, convention);
  out.case_i = detail::case_i_from_integral(params, out.integral_value);
  out.half_a = params.a / (2 * pi<Scalar>);
  out.f_r0 = f(params.r0);
  out.c_r1m1 = c(out.derived.r1 - 1, params.a);
  out.final = std::min({out.case_i, out.case_ii, out.half_a});
  return out;
}

}  // namespace kakeya::bounds
