#pragma once

#include "nselab/config.hpp"
#include "nselab/reporting.hpp"

namespace nselab {

/// Runs the configured experiment and collects rows plus pass/fail checks.
/// Snapshot output (when enabled) is written under cfg.out_dir during the run.
RunReport run(const ExperimentConfig& cfg);

/// 0 when every check passed, 1 otherwise.
int exit_status(const RunReport& report);

}  // namespace nselab
