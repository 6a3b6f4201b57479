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

/// Random greedy mapping of the straight corridor SC_d(infinity) into the
/// complete d-complex on n vertices with no (d-1)-face used twice.
namespace cforge::corridor {

/// Throws InvalidParams unless d >= 2 and n >= 4d+2 (any n with room for the
/// initial simplex when allow_small_n is set).
void validate(const ProcessConfig& config);

/// Initial state: d+1 distinct uniform vertices with all their (d-1)-faces
/// closed.
ProcessState init(const ProcessConfig& config);
ProcessState init(const ProcessConfig& config, Rng process_rng);

/// Vertices eligible for the next step: every (d-1)-face spanned with the
/// terminal window is still open, and the vertex is not among the last 2d
/// images.
std::vector<Vertex> candidates(const ProcessState& state);

/// One step. A terminated outcome leaves the state unchanged.
StepOutcome step(ProcessState& state);

/// The facets phi([k, k+d]) of the mapped corridor.
SimplicialComplex image_complex(const ProcessState& state);

struct RunReport {
  Vertex n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  std::int64_t steps = 0;
  TerminationCause termination = TerminationCause::kCandidatesExhausted;
  /// First step at which the open count of the terminal window was <= 2d.
  std::optional<std::int64_t> first_small_step;
  std::vector<Vertex> phi;
  SimplicialComplex image;
  std::uint64_t closed_faces = 0;
  bool induced_path = false;
  std::int64_t diameter = 0;
  double volume_bound = 0;
  std::optional<std::int64_t> first_band_exit_step;
  std::vector<TrackedComplex> tracked;
  std::vector<TrajectoryRecord> trajectory;
  /// Named verification results; every entry must hold for a valid run.
  std::map<std::string, bool> checks;

  bool passed() const;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport run(const ProcessConfig& config);

/// n p^size_A with p = 1 - d d! i / n^d. Throws OutOfRegime when p < 0.
double predicted_Y(double n, int d, double i, int size_A);
/// n^(3/4) exp{(10d+11) p^(-d^2)} / 2. Throws OutOfRegime unless p > 0.
double error_band(double n, int d, double t);

/// floor((1/(d d!) - (log n)^(-eps)) n^d), or nullopt when the expression is
/// not positive. Throws InvalidParams unless 0 < eps < 1/d^2.
std::optional<double> i_end(double n, int d, double eps);
/// log n must exceed (d d!)^(1/eps) for i_end to be positive.
double i_end_log_threshold(int d, double eps);

}  // namespace cforge::corridor
