#include <cmath>

#include "cforge/complex.hpp"
#include "cforge/corridor_process.hpp"
#include "cforge/errors.hpp"
#include "cforge/pm_process.hpp"
#include "cforge/trajectory.hpp"
#include "doctest.h"

using namespace cforge;

namespace {

ProcessConfig config(Vertex n, int d, std::uint64_t seed) {
  ProcessConfig c;
  c.n = n;
  c.d = d;
  c.seed = seed;
  return c;
}

/// Y_A recounted from the closed set.
std::size_t y_from_scratch(const TrackedComplex& a, const ProcessState& state) {
  std::size_t count = 0;
  for (Vertex v = 1; v <= state.n; ++v) {
    if (std::binary_search(a.vertices.begin(), a.vertices.end(), v)) continue;
    bool open = true;
    for (const Face& tau : a.faces) open = open && !state.closed.contains(tau.with(v));
    count += open ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST_CASE("regime constants") {
  const auto c = Regime::corridor(2);
  CHECK(c.period == 7);
  CHECK(c.time_coefficient == 4);
  CHECK(c.max_vertices == 4);
  CHECK(c.max_faces == 4);
  const auto p = Regime::pseudomanifold(2);
  CHECK(p.period == 10);
  CHECK(p.time_coefficient == 6);
  CHECK(p.max_vertices == 6);
  CHECK(p.max_faces == 6);
  CHECK(p.band_power == doctest::Approx(5));
  CHECK(Regime::pseudomanifold(3).max_faces == 3 + 5 * 3);
}

TEST_CASE("tracked complex validation") {
  const auto r = Regime::corridor(2);
  const auto a = tracked_face_boundary(Face::make({4, 9}), 30, r);
  CHECK(a.size() == 2);
  CHECK(a.vertex_count() == 2);
  CHECK_THROWS_AS(TrackedComplex::make("big", {Face::make({1}), Face::make({2}), Face::make({3}), Face::make({4}),
                                               Face::make({5})},
                                       30, r),
                  InvalidTrackedComplex);
  CHECK_THROWS_AS(TrackedComplex::make("wrong", {Face::make({1, 2})}, 30, r), InvalidTrackedComplex);
  CHECK_THROWS_AS(TrackedComplex::make("far", {Face::make({31})}, 30, r), InvalidTrackedComplex);

  const auto r3 = Regime::corridor(3);
  Rng rng(4);
  for (const auto& t : default_tracked_family(40, r3, 10, rng)) {
    CHECK(t.vertex_count() <= 6);
    CHECK(t.size() <= 9);
  }
  const auto family = default_tracked_family(40, r3, 10, rng);
  CHECK(family.size() == 11);
  CHECK(family.back().vertex_count() == 6);
  CHECK(family.back().size() == 9);

  const auto pr = Regime::pseudomanifold(3);
  const auto pm_family = default_tracked_family(40, pr, 3, rng);
  CHECK(pm_family.size() == 5);
  CHECK(pm_family.back().vertex_count() == 8);
  CHECK(pm_family.back().size() == pr.max_faces);
}

TEST_CASE("incremental counts match recounts and the decomposition identity") {
  for (int d = 2; d <= 3; ++d) {
    for (int kind = 0; kind < 2; ++kind) {
      const bool corridor_kind = kind == 0;
      const auto regime = corridor_kind ? Regime::corridor(d) : Regime::pseudomanifold(d);
      auto c = config(30, d, 40 + d);
      auto state = corridor_kind ? corridor::init(c) : pm::init(c);
      Rng rng(99);
      TrajectoryTracker tracker(regime, c.n, default_tracked_family(c.n, regime, 8, rng));
      tracker.attach(state);
      std::vector<std::vector<std::uint64_t>> previous_w;
      while (true) {
        for (std::size_t a = 0; a < tracker.family().size(); ++a) {
          CHECK(tracker.y(a) == y_from_scratch(tracker.family()[a], state));
        }
        CHECK(tracker.identity_holds());
        const auto out = advance(state);
        if (out.terminated) break;
        tracker.track_step(state.step, out.newly_closed);
        for (std::size_t a = 0; a < tracker.family().size(); ++a) {
          for (int j = 0; j < regime.period; ++j) {
            // Only the residue class of this step can grow.
            if (j != state.step % regime.period) {
              CHECK(tracker.w(a, j) == tracker.w_at(a, j, state.step - 1));
            } else {
              CHECK(tracker.w(a, j) >= tracker.w_at(a, j, state.step - 1));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("boundary of the terminal face counts the open vertices") {
  auto state = corridor::init(config(40, 2, 3));
  const auto regime = Regime::corridor(2);
  for (int i = 0; i < 150; ++i) {
    TrajectoryTracker tracker(regime, state.n, {tracked_face_boundary(state.window_face(), state.n, regime)});
    tracker.attach(state);
    const auto scan = scan_candidates(state);
    CHECK(tracker.y(0) == scan.open_count);
    if (advance(state, scan).terminated) break;
  }
}

TEST_CASE("martingale differences start at minus the band share") {
  auto state = corridor::init(config(50, 2, 6));
  const auto regime = Regime::corridor(2);
  // An edge away from the initial simplex has no removals at attach time.
  Vertex a = 1;
  while (std::find(state.phi.begin(), state.phi.end(), a) != state.phi.end()) ++a;
  Vertex b = a + 1;
  while (std::find(state.phi.begin(), state.phi.end(), b) != state.phi.end()) ++b;
  TrajectoryTracker tracker(regime, state.n, {tracked_face_boundary(Face::make({a, b}), state.n, regime)});
  tracker.attach(state);
  const double band0 = regime.error_band(50, 0);
  CHECK(tracker.z_value(0, 0, 0) == doctest::Approx(-band0 / regime.period));
  CHECK_THROWS_AS(tracker.z_value(0, 3, 0), NotRecorded);
  CHECK_THROWS_AS(tracker.w_at(0, 0, 1), NotRecorded);

  for (int i = 0; i < 200; ++i) {
    const auto out = advance(state);
    if (out.terminated) break;
    tracker.track_step(state.step, out.newly_closed);
  }
  const std::int64_t last = tracker.last_step();
  for (int j = 0; j < regime.period; ++j) {
    std::uint64_t prev = 0;
    for (std::int64_t ell = 0; regime.period * ell + j <= last; ++ell) {
      const auto w = tracker.w_at(0, j, regime.period * ell + j);
      CHECK(w >= prev);
      prev = w;
      // The rigorous band dwarfs n here, so Z stays negative.
      CHECK(tracker.z_value(0, j, ell) < 0);
    }
  }
}

TEST_CASE("a step far from A changes nothing") {
  auto state = corridor::init(config(60, 2, 10));
  const auto regime = Regime::corridor(2);
  TrajectoryTracker tracker(regime, state.n, {tracked_face_boundary(Face::make({59, 60}), state.n, regime)});
  tracker.attach(state);
  const auto y0 = tracker.y(0);
  const auto out = advance(state);
  bool touches = false;
  for (const Face& f : out.newly_closed) touches = touches || f.contains(Vertex{59}) || f.contains(Vertex{60});
  tracker.track_step(state.step, out.newly_closed);
  if (!touches) CHECK(tracker.y(0) == y0);
}

TEST_CASE("recorded trajectories") {
  auto c = config(60, 2, 2);
  c.record_every = 25;
  c.track_random = 3;
  const auto report = corridor::run(c);
  REQUIRE_FALSE(report.trajectory.empty());
  CHECK(report.trajectory.front().step == 0);
  CHECK(report.trajectory.back().step == report.steps);
  for (const auto& rec : report.trajectory) {
    CHECK(rec.samples.size() == report.tracked.size());
    CHECK(rec.p == doctest::Approx(1 - 4 * rec.t));
    for (const auto& s : rec.samples) {
      std::uint64_t total = 0;
      for (auto w : s.w) total += w;
      const auto& a = report.tracked[static_cast<std::size_t>(s.id)];
      CHECK(s.y_observed + a.vertex_count() + total == c.n);
      CHECK(s.w.size() == 7);
      CHECK(s.z.size() == 7);
    }
  }
}
