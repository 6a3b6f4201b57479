#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cforge/face.hpp"
#include "cforge/trajectory.hpp"

namespace cforge {

/// Parameters of one randomized mapping run (either process).
struct ProcessConfig {
  Vertex n = 0;
  int d = 2;
  std::uint64_t seed = 0;
  /// Explicitly tracked complexes; validated against the process regime.
  std::vector<TrackedComplex> track;
  /// When positive, the default sampled family (this many random face
  /// boundaries plus the regime's link shapes) is tracked in addition.
  int track_random = 10;
  /// Trajectory sampling stride in steps; 0 records nothing.
  std::int64_t record_every = 0;
  /// Lifts the n >= 4d+2 (resp. 4(d+1)+2) guard for tiny exhaustive checks.
  bool allow_small_n = false;
  std::optional<std::int64_t> max_steps;
  /// Pseudomanifold runs only: compute the exact dual vertex connectivity.
  bool check_connectivity = true;
};

/// Seeds for the process and for tracked-family sampling are split from one
/// generator, so tracking choices never perturb the process itself.
struct SeedStreams {
  Rng process;
  Rng tracking;
  explicit SeedStreams(std::uint64_t seed);
};

}  // namespace cforge
