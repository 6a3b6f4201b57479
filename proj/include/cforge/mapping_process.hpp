#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cforge/closed_faces.hpp"
#include "cforge/face.hpp"
#include "cforge/rng.hpp"

namespace cforge {

/// The combinatorics shared by both randomized mapping processes. Each step
/// maps one new vertex v and closes every (d-1)-face tau + {v} with tau a
/// (d-1)-vertex subset of the trailing `window` images.
///
///   corridor (SC_d):        window d,   exclusion 2d,     initial d+1
///   boundary (dSC_{d+1}):   window d+1, exclusion 2(d+1), initial d+2
struct MappingShape {
  int d = 2;
  int window = 2;
  int exclusion = 4;
  int initial = 3;

  static MappingShape corridor(int d);
  static MappingShape boundary_corridor(int d);

  /// C(window, d-1): faces closed per step.
  std::uint64_t faces_per_step() const;
  /// C(initial, d): faces closed by the initial simplex.
  std::uint64_t initial_faces() const;

  friend bool operator==(const MappingShape&, const MappingShape&) = default;
};

enum class TerminationCause { kCandidatesExhausted, kStepLimit };

const char* to_string(TerminationCause cause);

/// Mutable state of one run. Single owner; copying forks the run.
struct ProcessState {
  MappingShape shape;
  Vertex n = 0;
  std::vector<Vertex> phi;  // phi[k-1] is the image of corridor vertex k
  ClosedFaceSet closed;
  std::int64_t step = 0;
  Rng rng{0};

  /// The trailing `window` images as a face.
  Face window_face() const;

  friend bool operator==(const ProcessState&, const ProcessState&) = default;
};

/// Picks `shape.initial` distinct uniform vertices and closes all their
/// d-vertex subsets. Throws InvalidParams when n cannot hold the initial
/// simplex or d < 2.
ProcessState init_mapping(const MappingShape& shape, Vertex n, Rng rng);

struct CandidateScan {
  /// Vertices outside the window with every tau + {v} still open, before the
  /// recent-image exclusion.
  std::size_t open_count = 0;
  /// The open vertices minus the trailing `exclusion` images, ascending.
  std::vector<Vertex> candidates;
};

/// Full scan over [n], O(n * C(window, d-1) * d).
CandidateScan scan_candidates(const ProcessState& state);

struct StepOutcome {
  bool terminated = false;
  Vertex chosen = 0;
  std::vector<Face> newly_closed;
  std::size_t open_count = 0;
  std::size_t candidate_count = 0;
};

/// Samples v uniformly from the scanned candidates and applies it, or reports
/// termination when there are none.
StepOutcome advance(ProcessState& state, const CandidateScan& scan);
StepOutcome advance(ProcessState& state);

}  // namespace cforge
