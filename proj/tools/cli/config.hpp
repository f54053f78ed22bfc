#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kakeya/bounds.hpp"
#include "kakeya/optimizer.hpp"
#include "kakeya/oracle.hpp"

namespace kakeya::cli {

enum class Emit { csv, svg, json };

struct Config {
  bounds::BoundParams<double> params = bounds::theorem_params<double>();
  bounds::RLambdaConvention rlambda_convention = bounds::RLambdaConvention::reproducing;
  double quad_tol = 1e-10;
  std::uint64_t seed = 7;
  std::filesystem::path output_dir = ".";
  std::set<Emit> emit;
  int digits = 6;
  std::string preset;  // empty, "cunningham", "theorem" or "sec41"
};

// Parameters at the refined optimum, used by `bound --preset sec41`.
bounds::BoundParams<double> sec41_params();

struct OutputTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string caption;

  // throws DomainError unless rectangular with finite entries
  void validate() const;
};

struct OptimizeOptions {
  opt::SearchBox box;
  int refine = 0;
  double refine_tol = 1e-9;
};

struct VerifyOptions {
  std::vector<oracle::CheckId> checks;  // empty means all
  std::optional<std::int64_t> samples;
};

struct ScanAxis {
  double from = 0;
  double to = 0;
  int steps = 0;  // intervals; the axis has steps + 1 points
  bool active = false;

  std::vector<double> points() const;
};

struct ScanOptions {
  std::string function;  // f, g, c, case_i, case_ii, final
  ScanAxis r;            // f, g, c
  ScanAxis a, r0, lambda, p;  // case_i, case_ii, final
};

}  // namespace kakeya::cli
