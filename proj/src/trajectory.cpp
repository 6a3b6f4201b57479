#include "cforge/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cforge/binomial.hpp"
#include "cforge/complex.hpp"
#include "cforge/errors.hpp"

namespace cforge {

Regime Regime::corridor(int d) {
  if (d < 2) throw InvalidParams("regime needs d >= 2");
  Regime r;
  r.kind = Kind::kCorridor;
  r.d = d;
  r.time_coefficient = static_cast<double>(d) * static_cast<double>(factorial(d));
  r.band_rate = 10.0 * d + 11.0;
  r.band_power = static_cast<double>(d) * d;
  r.period = 3 * d + 1;
  r.z_side = Side::kUpper;
  r.max_vertices = 2 * d;
  r.max_faces = static_cast<std::size_t>(d) * d;
  return r;
}

Regime Regime::pseudomanifold(int d) {
  if (d < 2) throw InvalidParams("regime needs d >= 2");
  Regime r;
  r.kind = Kind::kPseudomanifold;
  r.d = d;
  r.time_coefficient = static_cast<double>(binomial(d + 1, 2)) * static_cast<double>(factorial(d));
  r.band_rate = 16.0 * d;
  const double dd = d;
  r.band_power = dd * dd * dd / 2.0 + dd * dd / 2.0 - 1.0;
  r.period = 3 * d + 4;
  r.z_side = Side::kLower;
  r.max_vertices = 2 * (d + 1);
  r.max_faces = d + (d + 2) * binomial(d, 2);
  return r;
}

double Regime::time(double n, double step) const { return step / std::pow(n, d); }

double Regime::predicted_Y(double n, double step, int size) const {
  const double pv = p(time(n, step));
  if (pv < 0) throw OutOfRegime("p = " + std::to_string(pv) + " < 0 at step " + std::to_string(step));
  return n * std::pow(pv, size);
}

double Regime::error_band(double n, double t) const {
  const double pv = p(t);
  if (!(pv > 0) || t < 0) {
    throw OutOfRegime("error band needs 0 <= t with p > 0; got t = " + std::to_string(t));
  }
  return std::pow(n, 0.75) * std::exp(band_rate * std::pow(pv, -band_power)) / 2.0;
}

TrackedComplex TrackedComplex::make(std::string label, std::vector<Face> faces, Vertex n,
                                    const Regime& regime) {
  const auto want = static_cast<std::size_t>(regime.d - 1);
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (faces.empty()) throw InvalidTrackedComplex(label + ": empty complex");
  std::vector<Vertex> vertices;
  for (const Face& f : faces) {
    if (f.size() != want) {
      throw InvalidTrackedComplex(label + ": face " + f.to_string() + " is not a (d-2)-face");
    }
    if (f.back() > n) throw InvalidTrackedComplex(label + ": vertex exceeds n");
    vertices.insert(vertices.end(), f.begin(), f.end());
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.size() > regime.max_vertices || faces.size() > regime.max_faces) {
    throw InvalidTrackedComplex(label + ": v_A = " + std::to_string(vertices.size()) + ", |A| = " +
                                std::to_string(faces.size()) + " outside the tracked family (v_A <= " +
                                std::to_string(regime.max_vertices) +
                                ", |A| <= " + std::to_string(regime.max_faces) + ")");
  }
  return TrackedComplex{std::move(label), std::move(faces), std::move(vertices)};
}

TrackedComplex tracked_face_boundary(const Face& face, Vertex n, const Regime& regime) {
  if (face.size() != static_cast<std::size_t>(regime.d)) {
    throw InvalidTrackedComplex("boundary source " + face.to_string() + " is not a (d-1)-face");
  }
  return TrackedComplex::make("boundary" + face.to_string(), subfaces(face, regime.d - 1), n, regime);
}

namespace {

std::vector<Vertex> distinct_uniform(Vertex n, std::size_t count, Rng& rng) {
  std::vector<Vertex> out;
  while (out.size() < count) {
    const auto v = static_cast<Vertex>(rng.uniform_below(n) + 1);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

// (d-2)-faces of SC_D(N), relabelled through `labels` (labels[k-1] for k).
std::vector<Face> relabelled_corridor_faces(int D, Vertex N, int d, const std::vector<Vertex>& labels) {
  std::vector<Face> out;
  for (const Face& f : k_faces(straight_corridor(D, N), d - 2)) {
    std::vector<Vertex> image;
    for (Vertex k : f) image.push_back(labels[k - 1]);
    out.push_back(Face::make(image));
  }
  return out;
}

}  // namespace

std::vector<TrackedComplex> default_tracked_family(Vertex n, const Regime& regime, int random_boundaries,
                                                   Rng& rng) {
  const int d = regime.d;
  std::vector<TrackedComplex> family;
  for (int i = 0; i < random_boundaries; ++i) {
    family.push_back(tracked_face_boundary(Face::make(distinct_uniform(n, d, rng)), n, regime));
  }
  if (regime.kind == Regime::Kind::kCorridor) {
    // Link shape: the (d-2)-faces of SC_{d-1}(2d), d^2 of them on 2d vertices.
    if (n >= static_cast<Vertex>(2 * d)) {
      auto labels = distinct_uniform(n, 2 * d, rng);
      family.push_back(TrackedComplex::make("corridor_link", relabelled_corridor_faces(d - 1, 2 * d, d, labels),
                                            n, regime));
    }
  } else {
    auto simplex = distinct_uniform(n, d + 1, rng);
    family.push_back(TrackedComplex::make("codim2_skeleton",
                                          codim2_skeleton(Face::make(simplex)).facets(), n, regime));
    // Link shape: the (d-2)-faces of SC_d(2d+2), d + (d+2)C(d,2) on 2d+2 vertices.
    if (n >= static_cast<Vertex>(2 * d + 2)) {
      auto labels = distinct_uniform(n, 2 * d + 2, rng);
      family.push_back(TrackedComplex::make("boundary_link",
                                            relabelled_corridor_faces(d, 2 * d + 2, d, labels), n, regime));
    }
  }
  return family;
}

TrajectoryTracker::TrajectoryTracker(Regime regime, Vertex n, std::vector<TrackedComplex> family)
    : regime_(regime), n_(n) {
  for (auto& a : family) {
    family_.push_back(TrackedComplex::make(a.label, a.faces, n, regime_));
  }
  const std::size_t m = family_.size();
  in_y_.assign(m, std::vector<char>(n + 1, 0));
  y_count_.assign(m, 0);
  w_.assign(m, std::vector<std::uint64_t>(regime_.period, 0));
  removal_steps_.assign(m, {});
}

void TrajectoryTracker::attach(const ProcessState& state) {
  const int j = static_cast<int>(state.step % regime_.period);
  for (std::size_t a = 0; a < family_.size(); ++a) {
    const auto& A = family_[a];
    std::fill(in_y_[a].begin(), in_y_[a].end(), 0);
    std::fill(w_[a].begin(), w_[a].end(), 0);
    removal_steps_[a].clear();
    std::size_t count = 0;
    for (Vertex v = 1; v <= n_; ++v) {
      if (std::binary_search(A.vertices.begin(), A.vertices.end(), v)) continue;
      const bool open = std::none_of(A.faces.begin(), A.faces.end(),
                                     [&](const Face& s) { return state.closed.contains(s.with(v)); });
      if (open) {
        in_y_[a][v] = 1;
        ++count;
      } else {
        ++w_[a][j];
        removal_steps_[a].push_back(state.step);
      }
    }
    y_count_[a] = count;
  }
  last_step_ = state.step;
  check_band(state.step);
}

void TrajectoryTracker::track_step(std::int64_t step, std::span<const Face> newly_closed) {
  const int j = static_cast<int>(step % regime_.period);
  for (std::size_t a = 0; a < family_.size(); ++a) {
    const auto& faces = family_[a].faces;
    for (const Face& c : newly_closed) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        const Vertex w = c[i];
        if (!in_y_[a][w]) continue;
        if (!std::binary_search(faces.begin(), faces.end(), c.without_index(i))) continue;
        in_y_[a][w] = 0;
        --y_count_[a];
        ++w_[a][j];
        removal_steps_[a].push_back(step);
      }
    }
  }
  last_step_ = step;
  check_band(step);
}

void TrajectoryTracker::check_band(std::int64_t step) {
  if (first_band_exit_ || family_.empty()) return;
  const double n = n_;
  const double t = regime_.time(n, static_cast<double>(step));
  const double pv = regime_.p(t);
  if (!(pv > 0)) return;
  const double band = regime_.error_band(n, t);
  for (std::size_t a = 0; a < family_.size(); ++a) {
    const double centre = n * (1.0 - std::pow(pv, static_cast<double>(family_[a].size())));
    const double lo = (centre - band) / regime_.period;
    const double hi = (centre + band) / regime_.period;
    for (int j = 0; j < regime_.period; ++j) {
      const auto wv = static_cast<double>(w_[a][j]);
      if (wv < lo || wv > hi) {
        first_band_exit_ = step;
        return;
      }
    }
  }
}

std::uint64_t TrajectoryTracker::w_at(std::size_t a, int j, std::int64_t step) const {
  if (step > last_step_ || step < 0) {
    throw NotRecorded("step " + std::to_string(step) + " not tracked (last " + std::to_string(last_step_) + ")");
  }
  const auto& steps = removal_steps_.at(a);
  std::uint64_t count = 0;
  for (auto s : steps) {
    if (s > step) break;
    if (s % regime_.period == j) ++count;
  }
  return count;
}

double TrajectoryTracker::z_value(std::size_t a, int j, std::int64_t ell) const {
  if (j < 0 || j >= regime_.period || ell < 0) throw InvalidParams("z_value index out of range");
  const std::int64_t step = static_cast<std::int64_t>(regime_.period) * ell + j;
  return z_from(a, static_cast<double>(w_at(a, j, step)), step);
}

double TrajectoryTracker::z_from(std::size_t a, double wv, std::int64_t step) const {
  const double n = n_;
  const double t = regime_.time(n, static_cast<double>(step));
  const double band = regime_.error_band(n, t);
  const double centre = n * (1.0 - std::pow(regime_.p(t), static_cast<double>(family_.at(a).size())));
  const double edge = regime_.z_side == Regime::Side::kUpper ? centre + band : centre - band;
  return wv - edge / regime_.period;
}

bool TrajectoryTracker::identity_holds() const {
  for (std::size_t a = 0; a < family_.size(); ++a) {
    const std::uint64_t removed = std::accumulate(w_[a].begin(), w_[a].end(), std::uint64_t{0});
    if (y_count_[a] + family_[a].vertex_count() + removed != n_) return false;
    const auto members = static_cast<std::size_t>(std::count(in_y_[a].begin(), in_y_[a].end(), 1));
    if (members != y_count_[a]) return false;
  }
  return true;
}

TrajectoryRecord TrajectoryTracker::snapshot(std::int64_t step, std::size_t terminal_y) const {
  const double n = n_;
  TrajectoryRecord rec;
  rec.step = step;
  rec.t = regime_.time(n, static_cast<double>(step));
  rec.p = regime_.p(rec.t);
  rec.band = regime_.error_band(n, rec.t);
  rec.terminal_y = terminal_y;
  const int terminal_size = regime_.kind == Regime::Kind::kCorridor
                                ? regime_.d
                                : static_cast<int>(binomial(regime_.d + 1, 2));
  rec.terminal_size = static_cast<std::size_t>(terminal_size);
  rec.terminal_predicted = regime_.predicted_Y(n, static_cast<double>(step), terminal_size);
  for (std::size_t a = 0; a < family_.size(); ++a) {
    TrackedSample s;
    s.id = static_cast<int>(a);
    s.size = family_[a].size();
    s.y_observed = y_count_[a];
    s.y_predicted = regime_.predicted_Y(n, static_cast<double>(step), static_cast<int>(s.size));
    s.w = w_[a];
    for (int j = 0; j < regime_.period; ++j) {
      if (step < j) {
        s.z.emplace_back(std::nullopt);
      } else {
        // W_{A,j} only moves on steps congruent to j, so its value at the
        // latest such step is the current one.
        const std::int64_t at = step - (step - j) % regime_.period;
        s.z.emplace_back(z_from(a, static_cast<double>(w_[a][j]), at));
      }
    }
    rec.samples.push_back(std::move(s));
  }
  return rec;
}

}  // namespace cforge
