#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "tanaka/config.hpp"

namespace tanaka {

/// Command-line overrides and output routing for one job.
struct DriverOptions {
    std::string out_dir = ".";
    std::optional<long> structure_index;  ///< pick among several admissible structures
    std::optional<long> bound;            ///< classify: dominant weight coordinate sum
    std::optional<long> max_degree;       ///< prolong: degree cap
};

/// Runs one parsed job and writes its report files under `opt.out_dir`.
/// Progress lines go to `out`, diagnostics to `err`.  Returns the process
/// exit code:
///   0  success (check: every module admits a structure)
///   2  prolongation hit the degree cap with a nonzero top layer
///   3  check: some module admits no structure
///   1  is reserved for thrown errors (bad input, ambiguous selection);
///      the caller maps exceptions to it.
/// Ambiguous structure selection throws std::invalid_argument listing the
/// available shifts.
int run_job(const JobConfig& cfg, const DriverOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace tanaka
