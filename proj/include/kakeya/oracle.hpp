#pragma once

// Brute-force verification of the geometric lemmas: seeded Monte Carlo membership
// and area estimates, grid scans, and location of the h-ratio threshold.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kakeya/constants.hpp"
#include "kakeya/geom.hpp"

namespace kakeya::oracle {

enum class CheckId {
  IsoscelesMinimality,
  HMinAtZero,
  ExtDisjoint,
  IntDisjoint,
  JGammaRatio,
  CMin,
  FArgmax,
  SectorMeasure,
  ArcConsistency,
};

inline constexpr std::array<CheckId, 9> all_checks{
    CheckId::IsoscelesMinimality, CheckId::HMinAtZero, CheckId::ExtDisjoint,
    CheckId::IntDisjoint,         CheckId::JGammaRatio, CheckId::CMin,
    CheckId::FArgmax,             CheckId::SectorMeasure, CheckId::ArcConsistency,
};

std::string_view name(CheckId id);
std::optional<CheckId> parse_check(std::string_view text);

struct CheckReport {
  CheckId id;
  std::int64_t samples;
  std::string grid_spec;
  double max_violation;
  double tolerance;
  bool pass;  // max_violation <= tolerance
  std::uint64_t seed;
  std::string detail;
};

struct McEstimate {
  double value;
  double std_error;
  std::int64_t samples;
  std::uint64_t seed;
};

struct BBox {
  geom::Point<double> lo;
  geom::Point<double> hi;

  double area() const { return (hi.x() - lo.x()) * (hi.y() - lo.y()); }
};

using Region = std::function<bool(const geom::Point<double>&)>;

// Hit-or-miss estimate of the area of region inside bbox. Sample k uses outputs
// 2k and 2k+1 of the stream keyed by seed for x and y.
McEstimate mc_area(const Region& region, const BBox& bbox, std::int64_t samples, std::uint64_t seed);

struct CheckSettings {
  std::int64_t samples;
  double tolerance;
};

CheckSettings default_settings(CheckId id);

// Stream key for one check; parallel and serial runs draw the same numbers.
std::uint64_t check_stream(std::uint64_t master_seed, CheckId id);

// samples must be >= 100. Check failures are reported, not thrown.
CheckReport run_check(CheckId id, std::int64_t samples, std::uint64_t seed, double tolerance);
CheckReport run_check(CheckId id, std::uint64_t seed);

// Runs the checks concurrently; reports come back in the order given.
// A samples override applies to every check.
std::vector<CheckReport> run_checks(std::span<const CheckId> ids, std::uint64_t seed,
                                    std::optional<std::int64_t> samples = std::nullopt);

enum class ThresholdMode {
  monotone,     // h_ratio nondecreasing along the delta grid, starting from its delta -> 0 limit
  min_at_zero,  // no grid value of h_ratio below the delta -> 0 limit
};

struct ThresholdOptions {
  ThresholdMode mode = ThresholdMode::monotone;
  double cap = default_needle_cap<double>;  // delta grid covers (0, min(cap, r))
  int grid = 10000;
};

// Whether the minimum of h_ratio(., r) over the delta grid sits at delta -> 0.
bool h_min_at_zero(double r, const ThresholdOptions& options = {});

// Radius where h_min_at_zero switches from false to true, to within tol.
// Throws BracketError when the predicate does not switch on [lo, hi].
double find_h_threshold(double lo, double hi, double tol, const ThresholdOptions& options = {});

}  // namespace kakeya::oracle
