#include "kakeya/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "kakeya/bounds.hpp"
#include "kakeya/rng.hpp"
#include "kakeya/search.hpp"

namespace kakeya::oracle {

namespace {

using geom::Point;

constexpr double cap_a = default_needle_cap<double>;
constexpr double two_pi = 2 * pi<double>;
constexpr double member_margin = 1e-12;
constexpr int points_per_pair = 1000;

std::string fmt(double x)
{
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

CheckReport make_report(CheckId id, std::int64_t samples, std::uint64_t seed, double tolerance, double violation,
                        std::string grid, std::string detail)
{
  return {id, samples, std::move(grid), violation, tolerance, violation <= tolerance, seed, std::move(detail)};
}

// --- IsoscelesMinimality: |Δ^ext| >= isosceles value at the same delta

CheckReport isosceles_minimality(std::int64_t n, std::uint64_t seed, double tol)
{
  CounterRng rng(check_stream(seed, CheckId::IsoscelesMinimality));
  double worst = 0;
  double worst_r = 0, worst_delta = 0, worst_t = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double r = rng.uniform(0.15, 0.5);
    const double delta = rng.uniform(0.0, std::min(cap_a, 0.9 * r));
    const double t = rng.uniform();
    const double alpha = rng.uniform(0.0, pi<double>);
    const double ext = geom::exterior_area(geom::make_triangle(alpha, delta, t), r);
    const double iso = geom::exterior_area_isosceles(delta, r);
    if (iso - ext > worst) {
      worst = iso - ext;
      worst_r = r, worst_delta = delta, worst_t = t;
    }
  }
  return make_report(CheckId::IsoscelesMinimality, n, seed, tol, worst,
                     "random (alpha, delta, t, r): r~U[0.15,0.5), delta~U[0,min(pi/49,0.9r)), t~U[0,1]",
                     "worst at r=" + fmt(worst_r) + " delta=" + fmt(worst_delta) + " t=" + fmt(worst_t));
}

// --- HMinAtZero: h_ratio(delta, r) >= f(r) on a delta grid, plus the delta -> 0 limit

CheckReport h_min_check(std::int64_t n, std::uint64_t seed, double tol)
{
  constexpr int radii = 71;
  double worst = 0;
  double worst_limit = 0;
  std::string where = "none";
  for (int j = 0; j < radii; ++j) {
    const double r = 0.15 + 0.35 * j / (radii - 1);
    const double fr = bounds::f(r);
    const double top = std::min(cap_a, r);
    for (std::int64_t k = 1; k <= n; ++k) {
      const double delta = top * static_cast<double>(k) / static_cast<double>(n + 1);
      const double gap = fr - geom::h_ratio(delta, r);
      if (gap > worst) {
        worst = gap;
        where = "r=" + fmt(r) + " delta=" + fmt(delta);
      }
    }
    const double near = geom::h_ratio(1e-6 * r, r);
    const double rel = std::abs(near - fr) / std::max(fr, 1e-300);
    worst_limit = std::max(worst_limit, fr > 0 ? rel : std::abs(near));
  }
  // the limit comparison is relative with its own 1e-4 allowance; only the excess counts
  const double limit_excess = std::max(0.0, worst_limit - 1e-4);
  return make_report(CheckId::HMinAtZero, n * radii, seed, tol, std::max(worst, limit_excess),
                     "r in {0.15 + 0.005 j : j = 0..70}; delta = k/(n+1) * min(pi/49, r), k = 1..n; limit at "
                     "delta = 1e-6 r",
                     "largest f(r) - h: " + fmt(worst) + " at " + where +
                         "; worst relative limit error " + fmt(worst_limit));
}

// --- ExtDisjoint / IntDisjoint

struct PairResult {
  std::int64_t tested = 0;
  std::int64_t points = 0;
  std::int64_t hits = 0;
  std::int64_t skipped = 0;
};

// Direction of the second needle: gap in [s, pi/2], every tenth pair exactly s.
double second_angle(CounterRng& rng, double theta1, double s, std::int64_t i)
{
  const double gap = i % 10 == 0 ? s : s + rng.uniform() * (pi<double> / 2 - s);
  const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
  const double side = rng.uniform() < 0.5 ? 0.0 : pi<double>;
  return theta1 + sign * gap + side;
}

CheckReport exterior_disjoint(std::int64_t n, std::uint64_t seed, double tol)
{
  CounterRng rng(check_stream(seed, CheckId::ExtDisjoint));
  PairResult res;
  for (std::int64_t i = 0; i < n; ++i) {
    const double r = rng.uniform(0.15, 0.5);
    const double top = std::min(cap_a, 0.9 * r);
    const double d1 = rng.uniform(0.0, top), d2 = rng.uniform(0.0, top);
    const double t1 = rng.uniform(), t2 = rng.uniform();
    const double theta1 = rng.uniform(0.0, two_pi);
    const double s = std::asin(d1 / r) + std::asin(d2 / r);
    const double theta2 = second_angle(rng, theta1, s, i);
    if (!geom::exterior_disjoint_criterion(theta1, d1, theta2, d2, r)) {
      ++res.skipped;  // equality case lost to rounding
      continue;
    }
    const auto tri1 = geom::needle_on_line(theta1, d1, t1);
    const auto tri2 = geom::needle_on_line(theta2, d2, t2);
    ++res.tested;
    // points of Δ1 beyond S_r: a needle point q with |q| > r, scaled by s in (r/|q|, 1)
    const double w = std::sqrt(std::max(0.0, r * r - d1 * d1));
    const double l1 = std::max(0.0, t1 - w), l2 = std::max(0.0, 1 - t1 - w);
    if (!(l1 + l2 > 0)) continue;
    for (int k = 0; k < points_per_pair; ++k) {
      const double v = rng.uniform() * (l1 + l2);
      const double u = v < l1 ? v : t1 + w + (v - l1);
      const Point<double> q = tri1.a + u * (tri1.b - tri1.a);
      const double s0 = r / q.norm();
      const Point<double> p = (s0 + (1 - s0) * rng.uniform()) * q;
      if (!(tri1.contains_interior(p, member_margin) && p.norm() > r * (1 + member_margin))) continue;
      ++res.points;
      if (tri2.contains_interior(p, member_margin) && p.norm() > r * (1 + member_margin)) ++res.hits;
    }
  }
  return make_report(CheckId::ExtDisjoint, n, seed, tol, static_cast<double>(res.hits),
                     "random needle pairs with gap >= arcsin(d1/r) + arcsin(d2/r); 1000 points of open Δ1^ext each",
                     std::to_string(res.tested) + " pairs, " + std::to_string(res.points) + " interior points, " +
                         std::to_string(res.hits) + " hits, " + std::to_string(res.skipped) +
                         " boundary pairs rejected by the criterion");
}

CheckReport interior_disjoint(std::int64_t n, std::uint64_t seed, double tol)
{
  CounterRng rng(check_stream(seed, CheckId::IntDisjoint));
  PairResult res;
  auto foot = [&](double w) {
    const double e = 2 * (1 - rng.uniform());  // (0, 2]
    return rng.uniform() < 0.5 ? -w - e : 1 + w + e;
  };
  for (std::int64_t i = 0; i < n; ++i) {
    const double r = rng.uniform(0.15, 0.5);
    const double top = std::min(cap_a, 0.9 * r);
    const double d1 = rng.uniform(0.0, top), d2 = rng.uniform(0.0, top);
    // foot off the needle by more than sqrt(r^2 - d^2): the needle misses B_r
    const double t1 = foot(std::sqrt(r * r - d1 * d1));
    const double t2 = foot(std::sqrt(r * r - d2 * d2));
    const double theta1 = rng.uniform(0.0, two_pi);
    const double s = std::asin(d1 / r) + std::asin(d2 / r);
    const double theta2 = second_angle(rng, theta1, s, i);
    if (!geom::exterior_disjoint_criterion(theta1, d1, theta2, d2, r)) {
      ++res.skipped;
      continue;
    }
    const auto tri1 = geom::needle_on_line(theta1, d1, t1);
    const auto tri2 = geom::needle_on_line(theta2, d2, t2);
    ++res.tested;
    for (int k = 0; k < points_per_pair; ++k) {
      const Point<double> q = tri1.a + rng.uniform() * (tri1.b - tri1.a);
      const Point<double> p = (rng.uniform() * r / q.norm()) * q;
      if (!(tri1.contains_interior(p, member_margin) && p.norm() < r * (1 - member_margin))) continue;
      ++res.points;
      if (tri2.contains_interior(p, member_margin) && p.norm() < r * (1 - member_margin)) ++res.hits;
    }
  }
  return make_report(CheckId::IntDisjoint, n, seed, tol, static_cast<double>(res.hits),
                     "random pairs of needles missing B_r with gap >= arcsin(d1/r) + arcsin(d2/r); 1000 points of "
                     "open Δ1^int each",
                     std::to_string(res.tested) + " pairs, " + std::to_string(res.points) + " interior points, " +
                         std::to_string(res.hits) + " hits, " + std::to_string(res.skipped) +
                         " boundary pairs rejected by the criterion");
}

// --- JGammaRatio: ratio <= (1+2r)/(1-2r), approached as delta0 -> 0

CheckReport jgamma_check(std::int64_t n, std::uint64_t seed, double tol)
{
  constexpr int radii = 35;
  double worst = 0, worst_limit = 0;
  std::string where = "none";
  for (int j = 0; j < radii; ++j) {
    const double r = 0.15 + 0.34 * j / (radii - 1);
    const double bound = (1 + 2 * r) / (1 - 2 * r);
    for (std::int64_t k = 1; k <= n; ++k) {
      const double delta0 = r * static_cast<double>(k) / static_cast<double>(n + 1);
      const double excess = geom::jgamma_ratio(delta0, r) - bound;
      if (excess > worst) {
        worst = excess;
        where = "r=" + fmt(r) + " delta0=" + fmt(delta0);
      }
    }
    const double near = geom::jgamma_ratio(1e-6 * r, r);
    worst_limit = std::max(worst_limit, std::abs(bound - near) / bound);
  }
  const double limit_excess = std::max(0.0, worst_limit - 1e-4);
  return make_report(CheckId::JGammaRatio, n * radii, seed, tol, std::max(worst, limit_excess),
                     "r in {0.15 + 0.01 j : j = 0..34}; delta0 = r k/(n+1), k = 1..n; limit at delta0 = 1e-6 r",
                     "largest ratio - bound: " + fmt(worst) + " at " + where + "; worst relative limit gap " +
                         fmt(worst_limit));
}

// --- CMin: x / (2 arcsin(x/r)) >= c(r, a) on (0, a]

CheckReport cmin_check(std::int64_t n, std::uint64_t seed, double tol)
{
  const std::array<double, 6> caps{cap_a, 0.01, 0.05, 0.1, 0.2, 0.3};
  const std::array<double, 7> stretch{1.0, 1.2, 1.5, 2.0, 4.0, 8.0, 15.0};
  double worst = 0;
  std::string where = "none";
  std::int64_t count = 0;
  auto scan = [&](double a, double r) {
    const double floor = bounds::c(r, a);
    for (std::int64_t k = 1; k <= n; ++k) {
      const double x = a * static_cast<double>(k) / static_cast<double>(n);
      const double gap = floor - x / (2 * std::asin(std::min(1.0, x / r)));
      if (gap > worst) {
        worst = gap;
        where = "a=" + fmt(a) + " r=" + fmt(r) + " x=" + fmt(x);
      }
      ++count;
    }
  };
  for (const double a : caps)
    for (const double m : stretch) scan(a, a * m);
  // the Case II radius at the theorem parameters
  scan(cap_a, bounds::theorem_bound(bounds::theorem_params<double>(), 1e-10).derived.r1 - 1);
  return make_report(CheckId::CMin, count, seed, tol, worst,
                     "a in {pi/49, 0.01, 0.05, 0.1, 0.2, 0.3}, r = a * {1, 1.2, 1.5, 2, 4, 8, 15} plus the theorem "
                     "r1 - 1; x = a k/n, k = 1..n",
                     "largest c - x/(2 arcsin(x/r)): " + fmt(worst) + " at " + where);
}

// --- FArgmax: argmax of f on [0.15, 0.5]

CheckReport f_argmax(std::int64_t n, std::uint64_t seed, double tol)
{
  std::int64_t best = 0;
  double best_value = -1;
  auto at = [&](std::int64_t k) { return 0.15 + 0.35 * static_cast<double>(k) / static_cast<double>(n - 1); };
  for (std::int64_t k = 0; k < n; ++k) {
    const double v = bounds::f(at(k));
    if (v > best_value) best_value = v, best = k;
  }
  const double lo = at(std::max<std::int64_t>(0, best - 1));
  const double hi = at(std::min<std::int64_t>(n - 1, best + 1));
  const auto peak = golden_section_max<double>([](double r) { return bounds::f(r); }, lo, hi, 1e-12);
  return make_report(CheckId::FArgmax, n, seed, tol, std::abs(peak.x - 1.0 / 6.0),
                     "uniform grid of n points on [0.15, 0.5], golden-section refinement between grid neighbours",
                     "argmax=" + fmt(peak.x) + " f=" + fmt(peak.value));
}

// --- SectorMeasure: area of {rho e^{i phi} : phi in A, rho <= r} = r^2 |A| / 2

struct Sector {
  std::vector<std::pair<double, double>> pieces;  // disjoint, sorted, inside [0, 2 pi)
  double r;

  double measure() const
  {
    double m = 0;
    for (const auto& [lo, hi] : pieces) m += hi - lo;
    return m;
  }

  bool contains(const Point<double>& p) const
  {
    if (p.squaredNorm() > r * r) return false;
    double phi = std::atan2(p.y(), p.x());
    if (phi < 0) phi += two_pi;
    for (const auto& [lo, hi] : pieces)
      if (phi >= lo && phi <= hi) return true;
    return false;
  }
};

Sector random_sector(CounterRng& rng)
{
  const int m = 1 + static_cast<int>(rng.below(4));
  std::vector<double> ends(2 * m);
  for (double& e : ends) e = rng.uniform(0.0, two_pi);
  std::sort(ends.begin(), ends.end());
  Sector s{{}, rng.uniform(0.1, 2.0)};
  for (int i = 0; i < m; ++i) s.pieces.emplace_back(ends[2 * i], ends[2 * i + 1]);
  return s;
}

CheckReport sector_measure(std::int64_t n, std::uint64_t seed, double tol)
{
  constexpr int sets = 100;
  const std::uint64_t key = check_stream(seed, CheckId::SectorMeasure);
  std::vector<std::future<std::pair<double, double>>> jobs;
  for (int j = 0; j < sets; ++j) {
    jobs.push_back(std::async(std::launch::async, [j, key, n] {
      CounterRng shape(derive_stream_key(key, 2 * static_cast<std::uint64_t>(j)));
      const Sector s = j == 0 ? Sector{{{0.0, pi<double> / 2}}, 1.0} : random_sector(shape);
      const BBox box{Point<double>(-s.r, -s.r), Point<double>(s.r, s.r)};
      const McEstimate est = mc_area([&s](const Point<double>& p) { return s.contains(p); }, box, n,
                                     derive_stream_key(key, 2 * static_cast<std::uint64_t>(j) + 1));
      const double exact = s.r * s.r * s.measure() / 2;
      const double p0 = exact / box.area();
      const double sigma = box.area() * std::sqrt(p0 * (1 - p0) / static_cast<double>(n));
      return std::pair{est.value - exact, sigma};
    }));
  }
  double sum = 0, var = 0, worst_single = 0;
  for (auto& job : jobs) {
    const auto [err, sigma] = job.get();
    sum += err;
    var += sigma * sigma;
    if (sigma > 0) worst_single = std::max(worst_single, std::abs(err) / sigma);
  }
  const double z = var > 0 ? std::abs(sum) / std::sqrt(var) : std::abs(sum) > 0 ? INFINITY : 0.0;
  return make_report(CheckId::SectorMeasure, n * sets, seed, tol, z,
                     "100 random unions of 1-4 arcs of [0, 2pi) with r~U[0.1, 2) (first set [0, pi/2], r = 1); "
                     "n hit-or-miss samples per set; violation = |sum of errors| / combined standard error",
                     "largest single-set |z| = " + fmt(worst_single));
}

// --- ArcConsistency: polar arcs vs edge-circle roots plus midpoint membership

struct ArcOracle {
  double total;
  int components;
};

ArcOracle arcs_by_roots(const Point<double>& a, const Point<double>& b, double r)
{
  const double span = std::atan2(geom::cross(a, b), a.dot(b));
  if (span == 0) return {0, 0};
  std::vector<double> taus{0.0, 1.0};
  const Point<double> d = b - a;
  const double qa = d.squaredNorm(), qb = 2 * a.dot(d), qc = a.squaredNorm() - r * r;
  const double disc = qb * qb - 4 * qa * qc;
  if (disc > 0) {
    const double root = std::sqrt(disc);
    const double q = -0.5 * (qb + std::copysign(root, qb));
    for (const double u : {q / qa, qc / q}) {
      if (!(u > 0 && u < 1)) continue;
      const Point<double> p = a + u * d;
      taus.push_back(std::atan2(geom::cross(a, p), a.dot(p)) / span);
    }
  }
  std::sort(taus.begin(), taus.end());
  const double phi_a = std::atan2(a.y(), a.x());
  const double o_side = geom::cross(d, Point<double>(-a));
  ArcOracle out{0, 0};
  bool prev_in = false;
  for (std::size_t i = 0; i + 1 < taus.size(); ++i) {
    const double lo = std::clamp(taus[i], 0.0, 1.0), hi = std::clamp(taus[i + 1], 0.0, 1.0);
    const double len = (hi - lo) * std::abs(span);
    if (!(len > 1e-9)) continue;
    const double phi = phi_a + 0.5 * (lo + hi) * span;
    const Point<double> m(r * std::cos(phi), r * std::sin(phi));
    const double side = geom::cross(d, Point<double>(m - a));
    const bool in = side == 0 || (side > 0) == (o_side > 0);
    if (in) {
      out.total += len;
      if (!prev_in) ++out.components;
    }
    prev_in = in;
  }
  return out;
}

CheckReport arc_consistency(std::int64_t n, std::uint64_t seed, double tol)
{
  CounterRng rng(check_stream(seed, CheckId::ArcConsistency));
  double worst = 0;
  std::int64_t count_mismatch = 0;
  std::string where = "none";
  for (std::int64_t i = 0; i < n; ++i) {
    const double r = rng.uniform(0.05, 0.5);
    const double delta = rng.uniform(0.0, std::min(cap_a, 0.9 * r));
    const double t = rng.uniform(-0.5, 1.5);
    const double theta = rng.uniform(0.0, two_pi);
    const auto tri = geom::needle_on_line(theta, delta, t);
    double total = 0;
    int count = 0;
    for (const auto& arc : geom::intersection_arcs(tri, r)) {
      total += arc.theta;
      if (arc.theta > 1e-9) ++count;
    }
    const ArcOracle ref = arcs_by_roots(tri.a, tri.b, r);
    double err = std::abs(total - ref.total);
    if (count != ref.components) {
      ++count_mismatch;
      err = std::max(err, 1.0);
    }
    if (err > worst) {
      worst = err;
      where = "r=" + fmt(r) + " delta=" + fmt(delta) + " t=" + fmt(t);
    }
  }
  return make_report(CheckId::ArcConsistency, n, seed, tol, worst,
                     "random (theta, delta, t, r): r~U[0.05,0.5), delta~U[0,min(pi/49,0.9r)), t~U[-0.5,1.5)",
                     "worst total-angle error " + fmt(worst) + " at " + where + "; " + std::to_string(count_mismatch) +
                         " arc-count mismatches");
}

}  // namespace

std::string_view name(CheckId id)
{
  switch (id) {
    case CheckId::IsoscelesMinimality: return "IsoscelesMinimality";
    case CheckId::HMinAtZero: return "HMinAtZero";
    case CheckId::ExtDisjoint: return "ExtDisjoint";
    case CheckId::IntDisjoint: return "IntDisjoint";
    case CheckId::JGammaRatio: return "JGammaRatio";
    case CheckId::CMin: return "CMin";
    case CheckId::FArgmax: return "FArgmax";
    case CheckId::SectorMeasure: return "SectorMeasure";
    case CheckId::ArcConsistency: return "ArcConsistency";
  }
  return "unknown";
}

std::optional<CheckId> parse_check(std::string_view text)
{
  for (const CheckId id : all_checks)
    if (name(id) == text) return id;
  return std::nullopt;
}

McEstimate mc_area(const Region& region, const BBox& bbox, std::int64_t samples, std::uint64_t seed)
{
  if (samples < 1) throw DomainError("mc_area: samples must be >= 1");
  if (!(bbox.hi.x() > bbox.lo.x()) || !(bbox.hi.y() > bbox.lo.y())) throw DomainError("mc_area: degenerate box");
  CounterRng rng(seed);
  std::int64_t hits = 0;
  for (std::int64_t k = 0; k < samples; ++k) {
    const double x = rng.uniform(bbox.lo.x(), bbox.hi.x());
    const double y = rng.uniform(bbox.lo.y(), bbox.hi.y());
    if (region(Point<double>(x, y))) ++hits;
  }
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / n;
  return {bbox.area() * p, bbox.area() * std::sqrt(p * (1 - p) / n), samples, seed};
}

CheckSettings default_settings(CheckId id)
{
  switch (id) {
    case CheckId::IsoscelesMinimality: return {10'000, 1e-10};
    case CheckId::HMinAtZero: return {10'000, 1e-12};
    case CheckId::ExtDisjoint: return {10'000, 0.0};
    case CheckId::IntDisjoint: return {10'000, 0.0};
    case CheckId::JGammaRatio: return {10'000, 1e-9};
    case CheckId::CMin: return {10'000, 1e-9};
    case CheckId::FArgmax: return {100'000, 1e-6};
    case CheckId::SectorMeasure: return {1'000'000, 3.0};
    case CheckId::ArcConsistency: return {10'000, 1e-9};
  }
  return {10'000, 0.0};
}

std::uint64_t check_stream(std::uint64_t master_seed, CheckId id)
{
  return derive_stream_key(master_seed, static_cast<std::uint64_t>(id));
}

CheckReport run_check(CheckId id, std::int64_t samples, std::uint64_t seed, double tolerance)
{
  if (samples < 100) throw DomainError("run_check: samples must be >= 100");
  if (!(tolerance >= 0)) throw DomainError("run_check: tolerance must be >= 0");
  switch (id) {
    case CheckId::IsoscelesMinimality: return isosceles_minimality(samples, seed, tolerance);
    case CheckId::HMinAtZero: return h_min_check(samples, seed, tolerance);
    case CheckId::ExtDisjoint: return exterior_disjoint(samples, seed, tolerance);
    case CheckId::IntDisjoint: return interior_disjoint(samples, seed, tolerance);
    case CheckId::JGammaRatio: return jgamma_check(samples, seed, tolerance);
    case CheckId::CMin: return cmin_check(samples, seed, tolerance);
    case CheckId::FArgmax: return f_argmax(samples, seed, tolerance);
    case CheckId::SectorMeasure: return sector_measure(samples, seed, tolerance);
    case CheckId::ArcConsistency: return arc_consistency(samples, seed, tolerance);
  }
  throw DomainError("run_check: unknown check");
}

CheckReport run_check(CheckId id, std::uint64_t seed)
{
  const CheckSettings s = default_settings(id);
  return run_check(id, s.samples, seed, s.tolerance);
}

std::vector<CheckReport> run_checks(std::span<const CheckId> ids, std::uint64_t seed,
                                    std::optional<std::int64_t> samples)
{
  std::vector<std::future<CheckReport>> jobs;
  for (const CheckId id : ids) {
    jobs.push_back(std::async(std::launch::async, [id, seed, samples] {
      const CheckSettings s = default_settings(id);
      return run_check(id, samples.value_or(s.samples), seed, s.tolerance);
    }));
  }
  std::vector<CheckReport> out;
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

bool h_min_at_zero(double r, const ThresholdOptions& options)
{
  if (options.grid < 2) throw DomainError("h_min_at_zero: grid must be >= 2");
  if (!(options.cap > 0)) throw DomainError("h_min_at_zero: cap must be > 0");
  const double fr = bounds::f(r);
  const double top = std::min(options.cap, r);
  double prev = fr;
  for (int k = 1; k <= options.grid; ++k) {
    // stay strictly below r when the cap does not bind
    const double delta = top * k / (options.grid + (top == r ? 1 : 0));
    const double h = geom::h_ratio(delta, r);
    if (options.mode == ThresholdMode::monotone) {
      if (h < prev) return false;
      prev = h;
    } else if (h < fr) {
      return false;
    }
  }
  return true;
}

double find_h_threshold(double lo, double hi, double tol, const ThresholdOptions& options)
{
  if (!(lo < hi)) throw BracketError("find_h_threshold: requires lo < hi");
  if (!(tol > 0)) throw DomainError("find_h_threshold: tol must be > 0");
  return bisect_predicate<double>([&](double r) { return h_min_at_zero(r, options); }, lo, hi, tol);
}

}  // namespace kakeya::oracle
