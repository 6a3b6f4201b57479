#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cforge/complex.hpp"
#include "cforge/mapping_process.hpp"
#include "cforge/process_config.hpp"
#include "cforge/trajectory.hpp"

/// Random greedy mapping of the boundary corridor dSC_{d+1}(infinity) into the
/// complete d-complex on n vertices with no (d-1)-face used twice. The image
/// is a d-pseudomanifold.
namespace cforge::pm {

/// Throws InvalidParams unless d >= 2 and n >= 4(d+1)+2 (relaxed by
/// allow_small_n).
void validate(const ProcessConfig& config);

/// Initial state: d+2 distinct uniform vertices with all C(d+2, d) of their
/// (d-1)-faces closed.
ProcessState init(const ProcessConfig& config);
ProcessState init(const ProcessConfig& config, Rng process_rng);

/// Vertices whose cone over every (d-1)-subset of the last d+1 images is
/// open, excluding the last 2(d+1) images.
std::vector<Vertex> candidates(const ProcessState& state);

StepOutcome step(ProcessState& state);

/// phi applied to the d-faces of dSC_{d+1}(M), M = |phi|.
SimplicialComplex image_complex(const ProcessState& state);

struct RunReport {
  Vertex n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  std::int64_t steps = 0;
  /// Mapped vertex count M.
  std::int64_t mapped = 0;
  TerminationCause termination = TerminationCause::kCandidatesExhausted;
  std::optional<std::int64_t> first_small_step;
  std::vector<Vertex> phi;
  SimplicialComplex image;
  FVector f_vector;
  std::uint64_t closed_faces = 0;
  bool pseudomanifold = false;
  std::int64_t diameter = 0;
  double diameter_lower = 0;
  std::int64_t cs_upper = 0;
  double ridge_bound = 0;
  /// Dual vertex connectivity; absent when not computed.
  std::optional<std::int64_t> connectivity;
  std::optional<std::int64_t> first_band_exit_step;
  std::vector<TrackedComplex> tracked;
  std::vector<TrajectoryRecord> trajectory;
  std::map<std::string, bool> checks;

  bool passed() const;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport run(const ProcessConfig& config);

/// n p^size_A with p = 1 - C(d+1,2) d! i / n^d. Throws OutOfRegime when p < 0.
double predicted_Y(double n, int d, double i, int size_A);
/// n^(3/4) exp{16d p^(-(d^3/2 + d^2/2 - 1))} / 2. Throws OutOfRegime unless
/// p > 0.
double error_band(double n, int d, double t);

}  // namespace cforge::pm
