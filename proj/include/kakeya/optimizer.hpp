#pragma once

// Parameter search for the two-case bound: p balances Case I against Case II,
// and (a, r0, lambda) maximize min(balanced value, a / (2 pi)).

#include <cstddef>
#include <vector>

#include "kakeya/bounds.hpp"

namespace kakeya::opt {

using Params = bounds::BoundParams<double>;
using Breakdown = bounds::BoundBreakdown<double>;
using bounds::RLambdaConvention;

struct Interval {
  double lo;
  double hi;

  bool is_point() const { return lo == hi; }
  double width() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

struct SearchBox {
  Interval a{0.05, 0.08};
  Interval r0{0.20, 0.26};
  Interval lambda{0.85, 0.95};
  int grid = 32;             // points per non-degenerate axis
  int starts = 4;            // best grid points refined
  double refine_tol = 1e-7;  // stop sweeping once the bound improves by less
  double quad_tol = 1e-10;
  RLambdaConvention convention = RLambdaConvention::reproducing;
};

void validate(const SearchBox& box);

// Box around the refined optimum (a = 0.06473, r0 = 0.22785, lambda = 0.90696).
// lambda is held near 0.90696: the objective keeps increasing as lambda
// drops below it, so a wide lambda range moves the optimum elsewhere.
SearchBox sec41_box();

// Collapses every axis of the box to the given point.
SearchBox point_box(const Params& params);

struct Balance {
  double p;      // in [0, 1]
  double value;  // min(case_i(p), case_ii(p)) as a coefficient of pi
  double k0;     // f(r0)/4 plus any inner-part term
  double k1;     // (1 - f(r0)/(2 r0^2)) * integral / 3
  double k2;     // c(r1 - 1)/4
  bool clamped;
};

// Balance from the three coefficients: case_i = p k1 + k0, case_ii = (1 - p) k2.
Balance balance_coefficients(double k0, double k1, double k2);

Balance balance(double a, double r0, double lambda, double tol,
                RLambdaConvention convention = RLambdaConvention::reproducing);

// p at which Case I equals Case II (clamped to [0, 1]).
double balance_p(double a, double r0, double lambda, double tol,
                 RLambdaConvention convention = RLambdaConvention::reproducing);

// min(balanced value, a / (2 pi)); -infinity where Case II is infeasible or the
// point leaves the parameter domain.
double objective(double a, double r0, double lambda, double tol,
                 RLambdaConvention convention = RLambdaConvention::reproducing);

struct TracePoint {
  Params params;
  double value;
};

struct OptimizationResult {
  Params best;  // p is the balanced p
  Breakdown breakdown;
  double balanced_p;
  std::vector<TracePoint> trace;
  std::size_t evaluations;
};

OptimizationResult optimize(const SearchBox& box);

struct RefinementStep {
  int iteration;
  double p;         // balanced p (start p at iteration 0)
  double inner;     // inner-part term added at r0, coefficient of pi
  double balanced;  // min(case_i, case_ii) before the a/2 cap
  double value;     // global bound
};

// Feeds the rescaled Case I bound (a/r1)^2 * case_i back into the inner part at r0
// and rebalances p. Stops after max_iter steps or when the bound grows by < tol.
std::vector<RefinementStep> refine_iterative_trace(const Params& start, int max_iter, double tol,
                                                   double quad_tol = 1e-10,
                                                   RLambdaConvention convention = RLambdaConvention::reproducing);

std::vector<double> refine_iterative(const Params& start, int max_iter, double tol, double quad_tol = 1e-10,
                                     RLambdaConvention convention = RLambdaConvention::reproducing);

}  // namespace kakeya::opt
