#include "process_driver.hpp"

namespace cforge::detail {

DriveResult drive(ProcessState& state, const ProcessConfig& config, const Regime& regime, Rng tracking_rng) {
  std::vector<TrackedComplex> family = config.track;
  if (config.track_random > 0) {
    auto sampled = default_tracked_family(state.n, regime, config.track_random, tracking_rng);
    family.insert(family.end(), sampled.begin(), sampled.end());
  }
  TrajectoryTracker tracker(regime, state.n, std::move(family));
  tracker.attach(state);

  DriveResult result;
  result.identity_holds = tracker.identity_holds();
  const auto small = static_cast<std::size_t>(state.shape.exclusion);
  std::int64_t last_recorded = -1;
  std::size_t last_open = 0;

  while (true) {
    const CandidateScan scan = scan_candidates(state);
    last_open = scan.open_count;
    if (!result.first_small_step && scan.open_count <= small) result.first_small_step = state.step;
    if (config.record_every > 0 && state.step % config.record_every == 0) {
      result.trajectory.push_back(tracker.snapshot(state.step, scan.open_count));
      last_recorded = state.step;
    }
    if (config.max_steps && state.step >= *config.max_steps) {
      result.termination = TerminationCause::kStepLimit;
      break;
    }
    const StepOutcome out = advance(state, scan);
    if (out.terminated) {
      result.termination = TerminationCause::kCandidatesExhausted;
      break;
    }
    tracker.track_step(state.step, out.newly_closed);
    if (!tracker.family().empty() && !tracker.identity_holds()) result.identity_holds = false;
  }
  if (config.record_every > 0 && last_recorded != state.step) {
    result.trajectory.push_back(tracker.snapshot(state.step, last_open));
  }
  result.tracked = tracker.family();
  result.first_band_exit = tracker.first_band_exit();
  return result;
}

}  // namespace cforge::detail
