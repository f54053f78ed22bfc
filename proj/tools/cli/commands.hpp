#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace kakeya::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_infeasible = 3;

int cmd_bound(const Config& config, std::ostream& out);
int cmd_optimize(const Config& config, const OptimizeOptions& options, std::ostream& out);
int cmd_verify(const Config& config, const VerifyOptions& options, std::ostream& out);
int cmd_scan(const Config& config, const ScanOptions& options, std::ostream& out, std::ostream& err);

// Full command line without the program name, e.g. {"bound", "--preset", "theorem"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kakeya::cli
