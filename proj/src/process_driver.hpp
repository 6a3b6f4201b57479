#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cforge/mapping_process.hpp"
#include "cforge/process_config.hpp"
#include "cforge/trajectory.hpp"

namespace cforge::detail {

struct DriveResult {
  TerminationCause termination = TerminationCause::kCandidatesExhausted;
  std::optional<std::int64_t> first_small_step;
  std::vector<TrackedComplex> tracked;
  std::vector<TrajectoryRecord> trajectory;
  std::optional<std::int64_t> first_band_exit;
  bool identity_holds = true;
};

/// Runs `state` to termination (or the configured step limit) while keeping
/// the tracked family and trajectory samples up to date. The "small" step is
/// the first at which the open count drops to the exclusion size.
DriveResult drive(ProcessState& state, const ProcessConfig& config, const Regime& regime, Rng tracking_rng);

}  // namespace cforge::detail
