#pragma once

#include <numbers>

namespace kakeya {

template <typename Scalar = double>
inline constexpr Scalar pi = std::numbers::pi_v<Scalar>;

// Needle-distance cap behind the pi/98 bound: a = pi/49, so a/2 = pi/98.
template <typename Scalar = double>
inline constexpr Scalar default_needle_cap = std::numbers::pi_v<Scalar> / 49;

// Smallest cutoff radius for which the exterior-area rate f(r) is a valid bound.
template <typename Scalar = double>
inline constexpr Scalar min_cutoff_radius = Scalar(0.15);

// Known upper bound for the infimum of star-shaped Kakeya areas, as a coefficient of pi.
template <typename Scalar = double>
inline constexpr Scalar upper_bound_coefficient = (5 - 2 * std::numbers::sqrt2_v<Scalar>) / 24;

}  // namespace kakeya
