#pragma once

// Planar geometry of needle triangles and the cutoff circle S_r about the origin O.
//
// A needle is a unit segment AB. Its triangle is the closed triangle OAB, so every
// quantity here is a pure function of (direction, distance to O, foot position) and
// the cutoff radius r. Lengths are in units of the needle length.

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "kakeya/constants.hpp"
#include "kakeya/errors.hpp"
#include "kakeya/rates.hpp"

namespace kakeya::geom {

template <typename Scalar>
using Point = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
Scalar cross(const Point<Scalar>& p, const Point<Scalar>& q)
{
  return p.x() * q.y() - p.y() * q.x();
}

// Reduces angle to [0, period).
template <typename Scalar>
Scalar wrap_angle(Scalar angle, Scalar period)
{
  Scalar w = std::fmod(angle, period);
  if (w < 0) w += period;
  if (w >= period) w = 0;
  return w;
}

// Distance between two needle directions, taken mod pi; lies in [0, pi/2].
template <typename Scalar>
Scalar direction_gap(Scalar alpha1, Scalar alpha2)
{
  const Scalar d = wrap_angle(std::abs(alpha1 - alpha2), pi<Scalar>);
  return std::min(d, pi<Scalar> - d);
}

template <typename Scalar>
struct NeedleTriangle {
  Scalar alpha;  // needle direction, in [0, pi)
  Scalar delta;  // distance from O to the needle's supporting line
  Scalar t;      // foot of the perpendicular from O, measured from A toward B
  Point<Scalar> normal;  // unit vector from O toward the supporting line
  Point<Scalar> o, a, b;

  Scalar area() const { return std::abs(cross(a, b)) / 2; }

  // Barycentric weights of p with respect to (O, A, B). Undefined when delta == 0.
  std::array<Scalar, 3> barycentric(const Point<Scalar>& p) const
  {
    const Scalar det = cross(a, b);
    const Scalar wa = cross(p, b) / det;
    const Scalar wb = cross(a, p) / det;
    return {1 - wa - wb, wa, wb};
  }

  // Closed membership.
  bool contains(const Point<Scalar>& p) const
  {
    if (delta == 0) return false;
    const auto w = barycentric(p);
    return w[0] >= 0 && w[1] >= 0 && w[2] >= 0;
  }

  // Open membership with every barycentric weight above margin.
  bool contains_interior(const Point<Scalar>& p, Scalar margin = 0) const
  {
    if (delta == 0) return false;
    const auto w = barycentric(p);
    return w[0] > margin && w[1] > margin && w[2] > margin;
  }
};

// Needle on the line at distance delta in direction alpha. The raw angle also
// selects the side of O: the normal is (-sin alpha, cos alpha). t is unrestricted,
// so the foot may fall outside the needle (obtuse triangles).
template <typename Scalar>
NeedleTriangle<Scalar> needle_on_line(Scalar alpha, Scalar delta, Scalar t)
{
  detail::require_finite(alpha, "alpha");
  detail::require_finite(delta, "delta");
  detail::require_finite(t, "t");
  if (delta < 0) throw DomainError("needle distance delta must be >= 0");
  const Point<Scalar> u(std::cos(alpha), std::sin(alpha));
  const Point<Scalar> n(-u.y(), u.x());
  const Point<Scalar> foot = delta * n;
  NeedleTriangle<Scalar> tri;
  tri.alpha = wrap_angle(alpha, pi<Scalar>);
  tri.delta = delta;
  tri.t = t;
  tri.normal = n;
  tri.o = Point<Scalar>::Zero();
  tri.a = foot - t * u;
  tri.b = foot + (1 - t) * u;
  return tri;
}

// Needle whose foot lies on the needle itself: t in [0, 1], t = 1/2 is isosceles.
template <typename Scalar>
NeedleTriangle<Scalar> make_triangle(Scalar alpha, Scalar delta, Scalar t)
{
  detail::require_finite(t, "t");
  if (t < 0 || t > 1) throw DomainError("foot position t must lie in [0, 1]");
  return needle_on_line(alpha, delta, t);
}

template <typename Scalar>
struct Arc {
  Scalar r;
  Scalar start;  // in [0, 2 pi)
  Scalar end;    // start + theta
  Scalar theta;  // central angle

  Scalar length() const { return r * theta; }
};

template <typename Scalar>
struct DirectionInterval {
  Scalar lo;
  Scalar hi;

  Scalar width() const { return hi - lo; }
};

namespace detail {

template <typename Scalar>
void require_positive_radius(Scalar r)
{
  kakeya::detail::require_finite(r, "r");
  if (!(r > 0)) throw DomainError("radius r must be > 0");
}

// The isosceles closed forms assume the needle's endpoints are outside B_r,
// i.e. r^2 <= delta^2 + 1/4; otherwise the triangle does not reach S_r there.
template <typename Scalar>
void require_isosceles_domain(Scalar delta, Scalar r, const char* what)
{
  kakeya::detail::require_finite(delta, "delta");
  require_positive_radius(r);
  if (delta < 0) throw DomainError(std::string(what) + ": delta must be >= 0");
  if (delta >= r) throw DomainError(std::string(what) + ": requires delta < r");
  if (r * r > delta * delta + Scalar(0.25))
    throw DomainError(std::string(what) + ": needle endpoints lie inside B_r (r^2 > delta^2 + 1/4)");
}

// Signed area of the disk |x| <= r intersected with the triangle (O, p, q).
// The edge pq is split at its circle crossings; pieces inside the disk add a
// triangle, pieces outside add a circular sector.
template <typename Scalar>
Scalar disk_wedge_area(const Point<Scalar>& p, const Point<Scalar>& q, Scalar r)
{
  const Point<Scalar> d = q - p;
  const Scalar dd = d.squaredNorm();
  if (dd == 0) return 0;
  const Scalar r2 = r * r;
  const Scalar half_b = p.dot(d);
  const Scalar c = p.squaredNorm() - r2;
  std::array<Scalar, 4> cuts{Scalar(0), 0, 0, 0};
  std::size_t n = 1;
  const Scalar disc = half_b * half_b - dd * c;
  if (disc > 0) {
    // Stable quadratic roots of dd s^2 + 2 half_b s + c = 0.
    const Scalar sq = std::sqrt(disc);
    const Scalar qq = -(half_b + std::copysign(sq, half_b));
    Scalar s1 = qq / dd;
    Scalar s2 = qq != 0 ? c / qq : s1;
    if (s1 > s2) std::swap(s1, s2);
    if (s1 > 0 && s1 < 1) cuts[n++] = s1;
    if (s2 > 0 && s2 < 1) cuts[n++] = s2;
  }
  cuts[n++] = 1;
  Scalar sum = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Point<Scalar> x = p + cuts[i] * d;
    const Point<Scalar> y = p + cuts[i + 1] * d;
    const Point<Scalar> m = p + (cuts[i] + cuts[i + 1]) / 2 * d;
    if (m.squaredNorm() <= r2)
      sum += cross(x, y) / 2;
    else
      sum += r2 * std::atan2(cross(x, y), x.dot(y)) / 2;
  }
  return sum;
}

}  // namespace detail

// Area of polygon ∩ closed disk of radius r about O, for a simple polygon.
template <typename Scalar>
Scalar disk_polygon_area(std::span<const Point<Scalar>> vertices, Scalar r)
{
  detail::require_positive_radius(r);
  Scalar sum = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    sum += detail::disk_wedge_area(vertices[i], vertices[(i + 1) % vertices.size()], r);
  return std::abs(sum);
}

// |Δ \ B_r| by circular clipping.
template <typename Scalar>
Scalar exterior_area(const NeedleTriangle<Scalar>& tri, Scalar r)
{
  detail::require_positive_radius(r);
  if (tri.delta == 0) return 0;
  const std::array<Point<Scalar>, 3> vertices{tri.o, tri.a, tri.b};
  const Scalar inside = disk_polygon_area<Scalar>(vertices, r);
  return std::max(Scalar(0), tri.area() - inside);
}

// |Δ^ext| of the isosceles triangle at distance delta.
template <typename Scalar>
Scalar exterior_area_isosceles(Scalar delta, Scalar r)
{
  detail::require_isosceles_domain(delta, r, "exterior_area_isosceles");
  const Scalar sectors = (std::asin(delta / r) - std::atan(2 * delta)) * r * r;
  const Scalar value = delta / 2 - (delta * std::sqrt(r * r - delta * delta) + sectors);
  return std::max(Scalar(0), value);
}

// |Δ^ext| / arcsin(delta / r), continued to delta = 0 by its limit f(r).
template <typename Scalar>
Scalar h_ratio(Scalar delta, Scalar r)
{
  detail::require_isosceles_domain(delta, r, "h_ratio");
  if (delta == 0) return bounds::f(r);
  return exterior_area_isosceles(delta, r) / std::asin(delta / r);
}

// Central angle of each arc cut from S_r by the isosceles triangle at distance delta0.
template <typename Scalar>
Scalar theta_isosceles(Scalar delta0, Scalar r)
{
  detail::require_isosceles_domain(delta0, r, "theta_isosceles");
  return std::max(Scalar(0), std::asin(delta0 / r) - std::atan(2 * delta0));
}

// Upper bound on the central angle of any arc cut by a needle with delta <= a.
template <typename Scalar>
Scalar theta_max(Scalar a, Scalar r)
{
  kakeya::detail::require_finite(a, "a");
  detail::require_positive_radius(r);
  if (!(a > 0)) throw DomainError("theta_max: requires a > 0");
  if (a >= r) throw DomainError("theta_max: requires a < r");
  return std::asin(a / r) - std::atan(a / (std::sqrt(r * r - a * a) + 1));
}

// Directions whose longer arc is a fixed arc of central angle theta_isosceles(delta0, r),
// measured from the ray through the arc's first endpoint: [theta - s, s], s = arcsin(delta0/r).
template <typename Scalar>
DirectionInterval<Scalar> jgamma_interval(Scalar delta0, Scalar r)
{
  if (!(delta0 > 0)) throw DomainError("jgamma_interval: requires delta0 > 0");
  const Scalar theta = theta_isosceles(delta0, r);
  if (!(theta > 0)) throw DomainError("jgamma_interval: arc is degenerate");
  const Scalar s = std::asin(delta0 / r);
  return {theta - s, s};
}

// Width of jgamma_interval over the arc's central angle.
template <typename Scalar>
Scalar jgamma_ratio(Scalar delta0, Scalar r)
{
  const DirectionInterval<Scalar> j = jgamma_interval(delta0, r);
  return j.width() / theta_isosceles(delta0, r);
}

template <typename Scalar>
struct OaBeta {
  Scalar oa_length;
  Scalar beta1;
};

// Needle at distance a with endpoints on two rays from O that are theta apart:
// |OA| is the shorter endpoint distance and beta1 = arcsin(a / |OA|).
template <typename Scalar>
OaBeta<Scalar> oa_beta(Scalar theta, Scalar a)
{
  kakeya::detail::require_finite(theta, "theta");
  kakeya::detail::require_finite(a, "a");
  if (!(theta > 0)) throw DomainError("oa_beta: requires theta > 0");
  if (!(a > 0) || !(a < Scalar(0.5))) throw DomainError("oa_beta: requires 0 < a < 1/2");
  const Scalar cot = 1 / std::tan(theta);
  const Scalar inner = 1 - 4 * a * a + 4 * a * cot;
  if (!(inner >= 0)) throw DomainError("oa_beta: negative inner radicand");
  const Scalar outer = ((2 * a * cot + 1) - std::sqrt(inner)) / 2;
  if (!(outer > 0)) throw DomainError("oa_beta: nonpositive radicand for |OA|");
  const Scalar oa = std::sqrt(outer);
  if (a > oa) throw DomainError("oa_beta: a exceeds |OA|");
  return {oa, std::asin(a / oa)};
}

// |OB| bound sqrt(4 delta0^2 + 1) / (1 - 2 sqrt(r^2 - delta0^2)).
template <typename Scalar>
Scalar ob_length(Scalar delta0, Scalar r)
{
  kakeya::detail::require_finite(delta0, "delta0");
  detail::require_positive_radius(r);
  if (delta0 < 0 || delta0 >= r) throw DomainError("ob_length: requires 0 <= delta0 < r");
  if (r >= Scalar(0.5)) throw DomainError("ob_length: requires r < 1/2");
  const Scalar denom = 1 - 2 * std::sqrt(r * r - delta0 * delta0);
  if (!(denom > 0)) throw DomainError("ob_length: nonpositive denominator");
  return std::sqrt(4 * delta0 * delta0 + 1) / denom;
}

// Distance from O to the outer needle through the arc endpoint:
// delta0 / (1/2 - sqrt(r^2 - delta0^2)).
template <typename Scalar>
Scalar outer_needle_distance(Scalar delta0, Scalar r)
{
  return delta0 / (Scalar(0.5) - std::sqrt(r * r - delta0 * delta0));
}

// Largest delta0 with outer_needle_distance(delta0, r) <= a.
template <typename Scalar>
Scalar delta1_max(Scalar r, Scalar a)
{
  kakeya::detail::require_finite(a, "a");
  detail::require_positive_radius(r);
  if (!(a > 0) || !(a < Scalar(0.5))) throw DomainError("delta1_max: requires 0 < a < 1/2");
  if (r >= Scalar(0.5)) throw DomainError("delta1_max: requires r < 1/2");
  const Scalar radicand = 4 * r * r + 4 * a * a * r * r - a * a;
  if (radicand < 0) throw DomainError("delta1_max: negative radicand");
  return a * (1 - std::sqrt(radicand)) / (2 * (a * a + 1));
}

// Angular-gap test: directions at least arcsin(delta1/r) + arcsin(delta2/r) apart (mod pi)
// have disjoint open exterior parts. The condition is closed.
template <typename Scalar>
bool exterior_disjoint_criterion(Scalar alpha1, Scalar delta1, Scalar alpha2, Scalar delta2, Scalar r)
{
  kakeya::detail::require_finite(alpha1, "alpha1");
  kakeya::detail::require_finite(alpha2, "alpha2");
  detail::require_positive_radius(r);
  if (r > Scalar(0.5)) throw DomainError("exterior_disjoint_criterion: requires r <= 1/2");
  for (const Scalar d : {delta1, delta2}) {
    kakeya::detail::require_finite(d, "delta");
    if (d < 0 || d >= r) throw DomainError("exterior_disjoint_criterion: requires 0 <= delta < r");
  }
  return direction_gap(alpha1, alpha2) >= std::asin(delta1 / r) + std::asin(delta2 / r);
}

// Connected components of Δ ∩ S_r, longest first (ties by start angle).
//
// In polar angle psi measured from the normal, the triangle spans [psi_A, psi_B] and a
// point of S_r at angle psi is in Δ iff r cos(psi) <= delta, i.e. |psi| >= acos(delta/r).
template <typename Scalar>
std::vector<Arc<Scalar>> intersection_arcs(const NeedleTriangle<Scalar>& tri, Scalar r)
{
  detail::require_positive_radius(r);
  std::vector<Arc<Scalar>> arcs;
  if (tri.delta == 0) return arcs;
  const Scalar psi_a = std::atan2(-tri.t, tri.delta);
  const Scalar psi_b = std::atan2(1 - tri.t, tri.delta);
  const Scalar phi_n = std::atan2(tri.normal.y(), tri.normal.x());
  auto push = [&](Scalar lo, Scalar hi) {
    const Scalar theta = hi - lo;
    if (!(theta > 0)) return;
    const Scalar start = wrap_angle(phi_n + lo, 2 * pi<Scalar>);
    arcs.push_back({r, start, start + theta, theta});
  };
  if (tri.delta >= r) {
    push(psi_a, psi_b);
  } else {
    const Scalar kappa = std::acos(tri.delta / r);
    push(psi_a, std::min(psi_b, -kappa));
    push(std::max(psi_a, kappa), psi_b);
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc<Scalar>& x, const Arc<Scalar>& y) {
    if (x.theta != y.theta) return x.theta > y.theta;
    return x.start < y.start;
  });
  return arcs;
}

}  // namespace kakeya::geom
