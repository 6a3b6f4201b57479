#include "cforge/corridor_process.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cforge/binomial.hpp"
#include "cforge/bounds.hpp"
#include "cforge/dual_graph.hpp"
#include "cforge/errors.hpp"
#include "process_driver.hpp"

namespace cforge::corridor {

void validate(const ProcessConfig& config) {
  const int d = config.d;
  if (d < 2) throw InvalidParams("dimension must be at least 2, got " + std::to_string(d));
  if (static_cast<std::size_t>(d) + 1 > Face::kMaxVertices) throw InvalidParams("dimension exceeds face capacity");
  if (!config.allow_small_n && config.n < static_cast<Vertex>(4 * d + 2)) {
    throw InvalidParams("n=" + std::to_string(config.n) + " is below 4d+2=" + std::to_string(4 * d + 2));
  }
  if (config.record_every < 0) throw InvalidParams("record_every must be non-negative");
}

ProcessState init(const ProcessConfig& config, Rng process_rng) {
  validate(config);
  return init_mapping(MappingShape::corridor(config.d), config.n, process_rng);
}

ProcessState init(const ProcessConfig& config) { return init(config, SeedStreams(config.seed).process); }

std::vector<Vertex> candidates(const ProcessState& state) { return scan_candidates(state).candidates; }

StepOutcome step(ProcessState& state) { return advance(state); }

SimplicialComplex image_complex(const ProcessState& state) {
  const auto size = static_cast<std::size_t>(state.shape.d) + 1;
  std::vector<Face> facets;
  for (std::size_t k = 0; k + size <= state.phi.size(); ++k) {
    facets.push_back(Face::make(std::span<const Vertex>(state.phi.data() + k, size)));
  }
  return SimplicialComplex(state.n, std::move(facets));
}

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

RunReport run(const ProcessConfig& config) {
  validate(config);
  SeedStreams streams(config.seed);
  ProcessState state = init(config, streams.process);
  auto driven = detail::drive(state, config, Regime::corridor(config.d), streams.tracking);

  RunReport report;
  report.n = config.n;
  report.d = config.d;
  report.seed = config.seed;
  report.steps = state.step;
  report.termination = driven.termination;
  report.first_small_step = driven.first_small_step;
  report.phi = state.phi;
  report.image = image_complex(state);
  report.closed_faces = state.closed.size();
  report.volume_bound = hs_upper(config.n, config.d);
  report.first_band_exit_step = driven.first_band_exit;
  report.tracked = std::move(driven.tracked);
  report.trajectory = std::move(driven.trajectory);

  const DualGraph dual = build_dual(report.image, config.d);
  report.induced_path = is_induced_path(dual);
  report.diameter = diameter(dual);

  const auto d = static_cast<std::uint64_t>(config.d);
  const auto steps = static_cast<std::uint64_t>(state.step);
  report.checks["induced_path"] = report.induced_path;
  report.checks["diameter_equals_steps"] = report.diameter == state.step;
  report.checks["image_facets"] = report.image.facet_count() == steps + 1;
  report.checks["closed_count"] = report.closed_faces == d + 1 + d * steps;
  report.checks["volume_bound"] = static_cast<double>(state.step) <= report.volume_bound;
  report.checks["eq1_identity"] = driven.identity_holds;
  return report;
}

double predicted_Y(double n, int d, double i, int size_A) {
  return Regime::corridor(d).predicted_Y(n, i, size_A);
}

double error_band(double n, int d, double t) { return Regime::corridor(d).error_band(n, t); }

std::optional<double> i_end(double n, int d, double eps) {
  if (d < 2) throw InvalidParams("dimension must be at least 2");
  if (!(eps > 0) || !(eps < 1.0 / (d * d))) {
    throw InvalidParams("eps must lie strictly between 0 and 1/d^2, got " + std::to_string(eps));
  }
  if (!(n > 1)) throw InvalidParams("n must exceed 1");
  const double leading = 1.0 / (d * static_cast<double>(factorial(d)));
  const double value = (leading - std::pow(std::log(n), -eps)) * std::pow(n, d);
  if (!(value > 0)) return std::nullopt;
  return std::floor(value);
}

double i_end_log_threshold(int d, double eps) {
  return std::pow(d * static_cast<double>(factorial(d)), 1.0 / eps);
}

}  // namespace cforge::corridor
