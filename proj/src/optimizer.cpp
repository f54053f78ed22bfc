#include "kakeya/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

#include "kakeya/search.hpp"

namespace kakeya::opt {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

void check_interval(const Interval& iv, double lo, double hi, const char* name)
{
  if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) throw DomainError(std::string(name) + " interval must be finite");
  if (iv.lo > iv.hi) throw DomainError(std::string(name) + " interval is empty");
  if (iv.lo < lo || iv.hi > hi) throw DomainError(std::string(name) + " interval leaves its domain");
}

std::vector<double> axis(const Interval& iv, int n)
{
  if (iv.is_point() || n == 1) return {iv.is_point() ? iv.lo : 0.5 * (iv.lo + iv.hi)};
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = i == n - 1 ? iv.hi : iv.lo + iv.width() * i / (n - 1);
  return xs;
}

double spacing(const Interval& iv, int n) { return iv.is_point() ? 0.0 : iv.width() / std::max(1, n - 1); }

struct Evaluator {
  const SearchBox& box;
  std::size_t count = 0;

  double operator()(double a, double r0, double lambda)
  {
    ++count;
    return objective(a, r0, lambda, box.quad_tol, box.convention);
  }

  // best a for fixed (r0, lambda); the objective is min(decreasing-ish, increasing) in a
  SearchPoint<double> profile(double r0, double lambda)
  {
    if (box.a.is_point()) return {box.a.lo, (*this)(box.a.lo, r0, lambda)};
    return golden_section_max<double>([&](double a) { return (*this)(a, r0, lambda); }, box.a.lo, box.a.hi,
                                      1e-10);
  }
};

struct Candidate {
  double a, r0, lambda, value;
};

}  // namespace

void validate(const SearchBox& box)
{
  check_interval(box.a, 0.0, 0.5, "a");
  check_interval(box.r0, min_cutoff_radius<double>, 0.5, "r0");
  check_interval(box.lambda, 0.0, 1.0, "lambda");
  if (!(box.a.lo > 0)) throw DomainError("a interval must be > 0");
  if (!(box.r0.hi < 0.5)) throw DomainError("r0 interval must be < 1/2");
  if (!(box.a.hi < box.r0.lo)) throw DomainError("a interval must lie strictly below the r0 interval");
  if (box.grid < 1) throw DomainError("grid must be >= 1");
  if (box.starts < 1) throw DomainError("starts must be >= 1");
  if (!(box.refine_tol > 0) || !(box.quad_tol > 0)) throw DomainError("tolerances must be > 0");
}

SearchBox sec41_box()
{
  SearchBox box;
  box.a = {0.060, 0.070};
  box.r0 = {0.220, 0.235};
  box.lambda = {0.906, 0.908};
  return box;
}

SearchBox point_box(const Params& params)
{
  SearchBox box;
  box.a = {params.a, params.a};
  box.r0 = {params.r0, params.r0};
  box.lambda = {params.lambda, params.lambda};
  return box;
}

Balance balance_coefficients(double k0, double k1, double k2)
{
  if (!(k1 + k2 > 0)) throw DomainError("balance needs K1 + K2 > 0");
  const double raw = (k2 - k0) / (k1 + k2);
  const double p = std::clamp(raw, 0.0, 1.0);
  Balance b{p, std::min(p * k1 + k0, (1 - p) * k2), k0, k1, k2, p != raw};
  return b;
}

Balance balance(double a, double r0, double lambda, double tol, RLambdaConvention convention)
{
  const Params params{a, r0, 0.5, lambda};
  const auto derived = bounds::derive_params(params, convention);
  if (!derived.case_ii_feasible)
    throw CaseIIInfeasible("r1 - 1 = " + std::to_string(derived.r1 - 1) + " does not exceed a");
  bounds::detail::require_cutoff(r0);
  const double fr = bounds::f(r0);
  const double coefficient = std::max(0.0, 1 - fr / (2 * r0 * r0));
  const double integral = bounds::case_i_integral(params, tol, convention);
  return balance_coefficients(fr / 4, coefficient * integral / 3, bounds::c(derived.r1 - 1, a) / 4);
}

double balance_p(double a, double r0, double lambda, double tol, RLambdaConvention convention)
{
  return balance(a, r0, lambda, tol, convention).p;
}

double objective(double a, double r0, double lambda, double tol, RLambdaConvention convention)
{
  try {
    return std::min(balance(a, r0, lambda, tol, convention).value, a / (2 * pi<double>));
  } catch (const CaseIIInfeasible&) {
    return neg_inf;
  } catch (const DomainError&) {
    return neg_inf;
  }
}

OptimizationResult optimize(const SearchBox& box)
{
  validate(box);
  const auto as = axis(box.a, box.grid);
  const auto rs = axis(box.r0, box.grid);
  const auto ls = axis(box.lambda, box.grid);

  // grid, evaluated in parallel by contiguous slabs of r0; results land in index order
  const std::size_t total = as.size() * rs.size() * ls.size();
  std::vector<double> values(total);
  auto slab = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t ia = idx % as.size();
      const std::size_t il = (idx / as.size()) % ls.size();
      const std::size_t ir = idx / (as.size() * ls.size());
      values[idx] = objective(as[ia], rs[ir], ls[il], box.quad_tol, box.convention);
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  const std::size_t chunk = (total + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::size_t begin = 0; begin < total; begin += chunk)
    jobs.push_back(std::async(std::launch::async, slab, begin, std::min(total, begin + chunk)));
  for (auto& job : jobs) job.get();

  std::vector<Candidate> grid;
  grid.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (values[idx] == neg_inf) continue;
    const std::size_t ia = idx % as.size();
    const std::size_t il = (idx / as.size()) % ls.size();
    const std::size_t ir = idx / (as.size() * ls.size());
    grid.push_back({as[ia], rs[ir], ls[il], values[idx]});
  }
  if (grid.empty()) throw EmptyFeasibleSet("no Case II feasible point in the search box");

  // stable sort keeps index order among ties
  std::stable_sort(grid.begin(), grid.end(), [](const Candidate& x, const Candidate& y) { return x.value > y.value; });

  OptimizationResult result{};
  result.evaluations = total;
  Evaluator eval{box};
  const double hr = spacing(box.r0, box.grid);
  const double hl = spacing(box.lambda, box.grid);

  Candidate best = grid.front();
  const bool collapsed = box.a.is_point() && box.r0.is_point() && box.lambda.is_point();
  const std::size_t starts = collapsed ? 0 : std::min<std::size_t>(box.starts, grid.size());
  if (collapsed) result.trace.push_back({{best.a, best.r0, 0.0, best.lambda}, best.value});
  for (std::size_t s = 0; s < starts; ++s) {
    Candidate cur = grid[s];
    result.trace.push_back({{cur.a, cur.r0, 0.0, cur.lambda}, cur.value});
    // fold a out first, then sweep r0 and lambda on shrinking local brackets
    {
      const auto pa = eval.profile(cur.r0, cur.lambda);
      if (pa.value >= cur.value) cur = {pa.x, cur.r0, cur.lambda, pa.value};
    }
    double wr = 2 * hr, wl = 2 * hl;
    for (int sweep = 0; sweep < 60; ++sweep) {
      const double before = cur.value;
      if (!box.r0.is_point()) {
        double best_a = cur.a;
        const auto pr = golden_section_max<double>(
            [&](double r0) { return eval.profile(r0, cur.lambda).value; }, std::max(box.r0.lo, cur.r0 - wr),
            std::min(box.r0.hi, cur.r0 + wr), 1e-9);
        if (pr.value > cur.value) {
          best_a = eval.profile(pr.x, cur.lambda).x;
          cur = {best_a, pr.x, cur.lambda, pr.value};
        }
      }
      if (!box.lambda.is_point()) {
        const auto pl = golden_section_max<double>(
            [&](double lam) { return eval.profile(cur.r0, lam).value; }, std::max(box.lambda.lo, cur.lambda - wl),
            std::min(box.lambda.hi, cur.lambda + wl), 1e-9);
        if (pl.value > cur.value) cur = {eval.profile(cur.r0, pl.x).x, cur.r0, pl.x, pl.value};
      }
      result.trace.push_back({{cur.a, cur.r0, 0.0, cur.lambda}, cur.value});
      if (cur.value - before < box.refine_tol) {
        if (sweep > 0) break;
      }
      wr *= 0.5;
      wl *= 0.5;
    }
    if (cur.value > best.value) best = cur;
  }
  result.evaluations += eval.count;

  const Balance bal = balance(best.a, best.r0, best.lambda, box.quad_tol, box.convention);
  result.balanced_p = bal.p;
  result.best = {best.a, best.r0, bal.p, best.lambda};
  for (auto& t : result.trace) t.params.p = balance_p(t.params.a, t.params.r0, t.params.lambda, box.quad_tol, box.convention);
  result.breakdown = bounds::theorem_bound(result.best, box.quad_tol, box.convention);
  return result;
}

std::vector<RefinementStep> refine_iterative_trace(const Params& start, int max_iter, double tol, double quad_tol,
                                                   RLambdaConvention convention)
{
  if (max_iter < 0) throw DomainError("max_iter must be >= 0");
  if (!(tol >= 0)) throw DomainError("tol must be >= 0");
  const auto first = bounds::theorem_bound(start, quad_tol, convention);
  std::vector<RefinementStep> steps{{0, start.p, 0.0, std::min(first.case_i, first.case_ii), first.final}};

  const double fr = first.f_r0;
  const double coefficient = std::max(0.0, 1 - fr / (2 * start.r0 * start.r0));
  const double k0 = fr / 4;
  const double k1 = coefficient * first.integral_value / 3;
  const double k2 = first.c_r1m1 / 4;
  const double shrink = (start.a / first.derived.r1) * (start.a / first.derived.r1);

  // every Case I value seen so far is a valid bound for the rescaled inner configuration,
  // so the inner term uses the best one; that keeps the sequence nondecreasing
  double best_case_i = first.case_i;
  for (int k = 1; k <= max_iter; ++k) {
    const double inner = shrink * best_case_i;
    const Balance b = balance_coefficients(k0 + coefficient * inner, k1, k2);
    const double value = std::min(b.value, first.half_a);
    steps.push_back({k, b.p, inner, b.value, value});
    best_case_i = std::max(best_case_i, b.p * k1 + b.k0);
    if (value - steps[steps.size() - 2].value < tol) break;
  }
  return steps;
}

std::vector<double> refine_iterative(const Params& start, int max_iter, double tol, double quad_tol,
                                     RLambdaConvention convention)
{
  std::vector<double> out;
  for (const auto& s : refine_iterative_trace(start, max_iter, tol, quad_tol, convention)) out.push_back(s.value);
  return out;
}

}  // namespace kakeya::opt
