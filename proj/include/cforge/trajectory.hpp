#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cforge/face.hpp"
#include "cforge/mapping_process.hpp"
#include "cforge/rng.hpp"

namespace cforge {

/// Constants of the deterministic trajectory and error band for one process.
/// With t = i / n^d:
///   p(t)    = 1 - time_coefficient * t
///   Y_A     ~ n * p^|A|
///   e(t)    = exp(band_rate * p^(-band_power))
///   band(t) = n^(3/4) * e(t) / 2
/// and W_{A,j} counts removals from Y_A at steps congruent to j mod `period`.
struct Regime {
  enum class Side { kUpper, kLower };
  enum class Kind { kCorridor, kPseudomanifold };

  Kind kind = Kind::kCorridor;
  int d = 2;
  double time_coefficient = 0;
  double band_rate = 0;
  double band_power = 0;
  int period = 1;
  /// Which edge of the W interval the Z sequence measures against.
  Side z_side = Side::kUpper;
  /// Membership bounds of the tracked family: v_A and |A|.
  std::size_t max_vertices = 0;
  std::size_t max_faces = 0;

  /// Corridor process: p = 1 - d*d!*t, e = exp{(10d+11) p^(-d^2)},
  /// period 3d+1, v_A <= 2d, |A| <= d^2.
  static Regime corridor(int d);
  /// Boundary-corridor process: p = 1 - C(d+1,2)*d!*t,
  /// e = exp{16d p^(-(d^3/2 + d^2/2 - 1))}, period 3d+4,
  /// v_A <= 2(d+1), |A| <= d + (d+2)*C(d,2).
  static Regime pseudomanifold(int d);

  double time(double n, double step) const;
  double p(double t) const { return 1.0 - time_coefficient * t; }

  /// n * p^size. Throws OutOfRegime when p < 0.
  double predicted_Y(double n, double step, int size) const;
  /// n^(3/4) e(t) / 2. Throws OutOfRegime unless p > 0. May be +inf once
  /// e(t) overflows; that is the honest value of the formula.
  double error_band(double n, double t) const;
};

/// A fixed (d-2)-dimensional complex A whose open-vertex count Y_A is tracked.
struct TrackedComplex {
  std::string label;
  std::vector<Face> faces;  // sorted (d-2)-faces, each with d-1 vertices
  std::vector<Vertex> vertices;

  std::size_t size() const { return faces.size(); }
  std::size_t vertex_count() const { return vertices.size(); }

  /// Validates and canonicalizes. Throws InvalidTrackedComplex when a face
  /// has the wrong size, a vertex exceeds n, or the family bounds of `regime`
  /// are violated.
  static TrackedComplex make(std::string label, std::vector<Face> faces, Vertex n, const Regime& regime);

  friend bool operator==(const TrackedComplex&, const TrackedComplex&) = default;
};

/// Boundary of a (d-1)-face: its d faces of d-1 vertices.
TrackedComplex tracked_face_boundary(const Face& face, Vertex n, const Regime& regime);

/// The family sampled when the caller does not supply one: boundaries of
/// `random_boundaries` uniform (d-1)-faces, plus one shape of maximal size for
/// the regime (and, for the boundary-corridor regime, the codimension-2
/// skeleton of a random d-simplex), all labelled by a uniform injection.
std::vector<TrackedComplex> default_tracked_family(Vertex n, const Regime& regime, int random_boundaries,
                                                   Rng& rng);

struct TrackedSample {
  int id = 0;
  std::size_t size = 0;
  std::size_t y_observed = 0;
  double y_predicted = 0;
  std::vector<std::uint64_t> w;
  /// Z_{A,j} at the latest l with period*l + j <= step; empty before step j.
  std::vector<std::optional<double>> z;

  friend bool operator==(const TrackedSample&, const TrackedSample&) = default;
};

struct TrajectoryRecord {
  std::int64_t step = 0;
  double t = 0;
  double p = 0;
  double band = 0;
  /// |X| for the current window before recent-image exclusion (Y_A for A the
  /// boundary of the terminal face).
  std::size_t terminal_y = 0;
  /// Face count of the terminal-face boundary: d, or C(d+1, 2) for the
  /// boundary-corridor process.
  std::size_t terminal_size = 0;
  double terminal_predicted = 0;
  std::vector<TrackedSample> samples;

  friend bool operator==(const TrajectoryRecord&, const TrajectoryRecord&) = default;
};

/// Maintains Y_A and W_{A,j} incrementally for a fixed family of tracked
/// complexes, so that Y_A = n - v_A - sum_j W_{A,j} holds after every step.
class TrajectoryTracker {
 public:
  TrajectoryTracker(Regime regime, Vertex n, std::vector<TrackedComplex> family);

  /// Initializes Y_A from the closed faces of `state`. Vertices already
  /// removed are attributed to W_{A, state.step mod period}.
  void attach(const ProcessState& state);

  /// Accounts for the faces closed by step `step` (1-based count of steps
  /// after the initial simplex).
  void track_step(std::int64_t step, std::span<const Face> newly_closed);

  const Regime& regime() const { return regime_; }
  const std::vector<TrackedComplex>& family() const { return family_; }
  std::int64_t last_step() const { return last_step_; }

  std::size_t y(std::size_t a) const { return y_count_[a]; }
  bool in_y(std::size_t a, Vertex v) const { return in_y_[a][v] != 0; }
  std::uint64_t w(std::size_t a, int j) const { return w_[a][j]; }
  /// W_{A,j} as it stood after step `step`. Throws NotRecorded beyond the
  /// last tracked step.
  std::uint64_t w_at(std::size_t a, int j, std::int64_t step) const;

  /// Z_{A,j}(l) = W_{A,j}(period*l + j) - [n(1 - p^|A|) +/- band] / period,
  /// the sign chosen by the regime's z_side. Throws NotRecorded when
  /// period*l + j has not been reached.
  double z_value(std::size_t a, int j, std::int64_t ell) const;

  /// Y_A + v_A + sum_j W_{A,j} == n for every tracked A.
  bool identity_holds() const;

  /// First step at which some W_{A,j} left its interval, if any.
  std::optional<std::int64_t> first_band_exit() const { return first_band_exit_; }

  TrajectoryRecord snapshot(std::int64_t step, std::size_t terminal_y) const;

 private:
  void check_band(std::int64_t step);
  double z_from(std::size_t a, double w_value, std::int64_t step) const;

  Regime regime_;
  Vertex n_;
  std::vector<TrackedComplex> family_;
  std::vector<std::vector<char>> in_y_;
  std::vector<std::size_t> y_count_;
  std::vector<std::vector<std::uint64_t>> w_;
  std::vector<std::vector<std::int64_t>> removal_steps_;  // per A, ascending
  std::int64_t last_step_ = -1;
  std::optional<std::int64_t> first_band_exit_;
};

}  // namespace cforge
