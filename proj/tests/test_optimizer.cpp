#include <doctest.h>

#include <cmath>
#include <cstring>

#include "kakeya/optimizer.hpp"
#include "reference/values.hpp"

using namespace kakeya;
using namespace kakeya::opt;

namespace {

const Params defaults = bounds::theorem_params<double>();
const Params refined{0.06473, 0.22785, 0.88794, 0.90696};

bool same_bits(double x, double y) { return std::memcmp(&x, &y, sizeof(double)) == 0; }

}  // namespace

TEST_CASE("balance_coefficients")
{
  const auto b = balance_coefficients(0.25, 0.5, 1.0);
  CHECK(b.p == doctest::Approx(0.5));
  CHECK(b.value == doctest::Approx(0.5));
  CHECK_FALSE(b.clamped);

  // Case I already beats Case II at p = 0
  const auto low = balance_coefficients(2.0, 1.0, 1.0);
  CHECK(low.p == 0);
  CHECK(low.clamped);
  CHECK(low.value == 1.0);

  const auto high = balance_coefficients(0.0, 0.0, 1.0);
  CHECK(high.p == 1);
  CHECK(high.value == 0);

  CHECK_THROWS_AS(balance_coefficients(0.1, 0.0, 0.0), DomainError);
}

TEST_CASE("balance at the theorem defaults")
{
  const auto b = balance(defaults.a, defaults.r0, defaults.lambda, 1e-10);
  CHECK(std::abs(b.p - ref::theorem_balanced_p) <= 1e-9);
  CHECK(std::abs(b.value - ref::theorem_balanced) <= 1e-12);
  CHECK(std::abs(b.p - 0.9047) <= 5e-5);
  CHECK(std::abs(b.value - 0.01022) <= 5e-6);

  // equal cases at the balanced p
  Params q = defaults;
  q.p = b.p;
  const auto br = bounds::theorem_bound(q, 1e-10);
  CHECK(std::abs(br.case_i - br.case_ii) <= 1e-12);

  const auto lit = balance(defaults.a, defaults.r0, defaults.lambda, 1e-10, RLambdaConvention::paper_literal);
  CHECK(std::abs(lit.p - ref::literal_balanced_p) <= 1e-9);
  CHECK(std::abs(lit.value - ref::literal_balanced) <= 1e-12);

  // balanced value beats both cases at any other p
  for (int i = 0; i <= 20; ++i) {
    q.p = i / 20.0;
    const auto other = bounds::theorem_bound(q, 1e-10);
    CHECK(std::min(other.case_i, other.case_ii) <= b.value + 1e-13);
  }
}

TEST_CASE("objective")
{
  CHECK(objective(defaults.a, defaults.r0, defaults.lambda, 1e-10) ==
        std::min(ref::theorem_balanced, defaults.a / (2 * pi<double>)));
  CHECK(std::isinf(objective(0.3, 0.25, 0.9, 1e-10)));
  CHECK(objective(0.3, 0.25, 0.9, 1e-10) < 0);
  CHECK(std::isinf(objective(0.05, 0.10, 0.9, 1e-10)));
}

TEST_CASE("search box validation")
{
  SearchBox box;
  CHECK_NOTHROW(validate(box));
  box.a = {0.08, 0.05};
  CHECK_THROWS_AS(validate(box), DomainError);
  box = SearchBox{};
  box.a = {0.05, 0.21};
  CHECK_THROWS_AS(validate(box), DomainError);
  box = SearchBox{};
  box.r0 = {0.10, 0.26};
  CHECK_THROWS_AS(validate(box), DomainError);
  box = SearchBox{};
  box.grid = 0;
  CHECK_THROWS_AS(validate(box), DomainError);
  box = SearchBox{};
  box.lambda = {0.5, 1.5};
  CHECK_THROWS_AS(optimize(box), DomainError);
}

TEST_CASE("point box evaluates only that point")
{
  const auto r = optimize(point_box(defaults));
  CHECK(r.trace.size() == 1);
  CHECK(r.best.a == defaults.a);
  CHECK(r.best.r0 == defaults.r0);
  CHECK(r.best.lambda == defaults.lambda);
  CHECK(std::abs(r.balanced_p - ref::theorem_balanced_p) <= 1e-9);
  CHECK(r.breakdown.final == std::min({r.breakdown.case_i, r.breakdown.case_ii, r.breakdown.half_a}));
  CHECK(r.breakdown.final == 1.0 / 98);
}

TEST_CASE("optimize around the refined optimum")
{
  const auto r = optimize(sec41_box());
  CHECK(r.breakdown.final >= 0.01030);
  CHECK(std::abs(r.best.a - 0.06473) <= 2e-3);
  CHECK(std::abs(r.best.r0 - 0.22785) <= 2e-3);
  CHECK(std::abs(r.best.p - 0.88794) <= 2e-3);
  CHECK(std::abs(r.best.lambda - 0.90696) <= 2e-3);
  CHECK(std::abs(r.breakdown.final - r.best.a / (2 * pi<double>)) <= 1e-4);
  CHECK(r.best.p == r.balanced_p);
  CHECK(r.breakdown.final >= bounds::theorem_bound(refined, 1e-10).final - 1e-12);

  // breakdown.final is the maximum over the trace
  for (const auto& t : r.trace) CHECK(t.value <= r.breakdown.final + 1e-15);
  const auto box = sec41_box();
  CHECK(box.a.contains(r.best.a));
  CHECK(box.r0.contains(r.best.r0));
  CHECK(box.lambda.contains(r.best.lambda));

  // deterministic, including under the thread pool
  const auto again = optimize(sec41_box());
  CHECK(same_bits(again.breakdown.final, r.breakdown.final));
  CHECK(same_bits(again.best.a, r.best.a));
  CHECK(same_bits(again.best.r0, r.best.r0));
  CHECK(same_bits(again.best.lambda, r.best.lambda));
  CHECK(again.evaluations == r.evaluations);
}

TEST_CASE("optimize over the default box")
{
  const auto r = optimize(SearchBox{});
  CHECK(r.breakdown.final >= 0.01030);
  CHECK(r.breakdown.final >= objective(defaults.a, defaults.r0, defaults.lambda, 1e-10));
  CHECK(r.breakdown.final >= optimize(sec41_box()).breakdown.final - 1e-12);
  CHECK(r.breakdown.final <= upper_bound_coefficient<double>);
  CHECK(r.balanced_p >= 0);
  CHECK(r.balanced_p <= 1);
}

TEST_CASE("refine_iterative from the refined optimum")
{
  const auto steps = refine_iterative_trace(refined, 10, 1e-12);
  REQUIRE(steps.size() >= 2);
  CHECK(steps.size() <= 11);
  CHECK(steps[0].iteration == 0);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    CHECK(steps[i].value >= 0.01030);
    CHECK(steps[i].value <= upper_bound_coefficient<double>);
    CHECK(steps[i].p >= 0);
    CHECK(steps[i].p <= 1);
    if (i > 0) {
      CHECK(steps[i].value >= steps[i - 1].value);
      CHECK(steps[i].balanced >= steps[i - 1].balanced);
      CHECK(steps[i].inner >= steps[i - 1].inner);
    }
  }
  const auto values = refine_iterative(refined, 10, 1e-12);
  REQUIRE(values.size() == steps.size());
  for (std::size_t i = 0; i < values.size(); ++i) CHECK(values[i] == steps[i].value);
}

TEST_CASE("refine_iterative where the a/2 cap is slack")
{
  // a = 0.08 puts a/(2 pi) well above the balanced value, so the refinement moves the bound
  const Params start{0.08, 0.25, 0.9, 0.9};
  const auto steps = refine_iterative_trace(start, 20, 1e-14);
  REQUIRE(steps.size() >= 3);
  CHECK(steps.back().value > steps.front().value);
  for (std::size_t i = 1; i < steps.size(); ++i) CHECK(steps[i].value >= steps[i - 1].value);
  CHECK(steps.back().value < start.a / (2 * pi<double>));
  // the increments shrink geometrically
  if (steps.size() >= 4) {
    const double d1 = steps[2].value - steps[1].value;
    const double d2 = steps[3].value - steps[2].value;
    CHECK(d2 <= d1);
  }
  CHECK(refine_iterative(start, 0, 1e-9).size() == 1);
  CHECK_THROWS_AS(refine_iterative(start, -1, 1e-9), DomainError);
}
