#include "cforge/pm_process.hpp"

#include <algorithm>
#include <string>

#include "cforge/binomial.hpp"
#include "cforge/bounds.hpp"
#include "cforge/dual_graph.hpp"
#include "cforge/errors.hpp"
#include "process_driver.hpp"

namespace cforge::pm {

void validate(const ProcessConfig& config) {
  const int d = config.d;
  if (d < 2) throw InvalidParams("dimension must be at least 2, got " + std::to_string(d));
  if (static_cast<std::size_t>(d) + 2 > Face::kMaxVertices) throw InvalidParams("dimension exceeds face capacity");
  const auto guard = static_cast<Vertex>(4 * (d + 1) + 2);
  if (!config.allow_small_n && config.n < guard) {
    throw InvalidParams("n=" + std::to_string(config.n) + " is below 4(d+1)+2=" + std::to_string(guard));
  }
  if (config.record_every < 0) throw InvalidParams("record_every must be non-negative");
}

ProcessState init(const ProcessConfig& config, Rng process_rng) {
  validate(config);
  return init_mapping(MappingShape::boundary_corridor(config.d), config.n, process_rng);
}

ProcessState init(const ProcessConfig& config) { return init(config, SeedStreams(config.seed).process); }

std::vector<Vertex> candidates(const ProcessState& state) { return scan_candidates(state).candidates; }

StepOutcome step(ProcessState& state) { return advance(state); }

SimplicialComplex image_complex(const ProcessState& state) {
  const auto M = static_cast<Vertex>(state.phi.size());
  const SimplicialComplex source = boundary_corridor(state.shape.d, M);
  std::vector<Face> facets;
  facets.reserve(source.facet_count());
  for (const Face& f : source.facets()) {
    std::vector<Vertex> mapped;
    for (Vertex x : f) mapped.push_back(state.phi[x - 1]);
    facets.push_back(Face::make(mapped));
  }
  return SimplicialComplex(state.n, std::move(facets));
}

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

namespace {

/// The ridges of the image are exactly the faces the process closed.
bool ridges_match_closed(const SimplicialComplex& image, const ProcessState& state) {
  const auto ridges = k_faces(image, state.shape.d - 1);
  if (ridges.size() != state.closed.size()) return false;
  return std::all_of(ridges.begin(), ridges.end(), [&](const Face& r) { return state.closed.contains(r); });
}

}  // namespace

RunReport run(const ProcessConfig& config) {
  validate(config);
  SeedStreams streams(config.seed);
  ProcessState state = init(config, streams.process);
  auto driven = detail::drive(state, config, Regime::pseudomanifold(config.d), streams.tracking);
  const int d = config.d;

  RunReport report;
  report.n = config.n;
  report.d = d;
  report.seed = config.seed;
  report.steps = state.step;
  report.mapped = static_cast<std::int64_t>(state.phi.size());
  report.termination = driven.termination;
  report.first_small_step = driven.first_small_step;
  report.phi = state.phi;
  report.image = image_complex(state);
  report.f_vector = f_vector(report.image);
  report.closed_faces = state.closed.size();
  report.pseudomanifold = is_pseudomanifold(report.image, d);
  report.first_band_exit_step = driven.first_band_exit;
  report.tracked = std::move(driven.tracked);
  report.trajectory = std::move(driven.trajectory);

  const std::uint64_t facets = report.f_vector[d];
  const std::uint64_t ridges = report.f_vector[d - 1];
  const DualGraph dual = build_dual(report.image, d);
  report.diameter = diameter(dual);
  report.diameter_lower = pm_diameter_lower(static_cast<double>(report.mapped), d);
  report.ridge_bound = pm_ridge_diameter_bound(ridges, d);
  if (config.check_connectivity) report.connectivity = vertex_connectivity(dual);
  const std::int64_t kappa = report.connectivity.value_or(d + 1);
  report.cs_upper = caccetta_smyth_bound(static_cast<std::int64_t>(dual.node_count()), std::max<std::int64_t>(kappa, 1));

  // The source complex is injective on d-faces iff no two facets coincide.
  const auto source_facets = boundary_corridor(d, static_cast<Vertex>(report.mapped)).facet_count();
  const auto steps = static_cast<std::uint64_t>(state.step);
  report.checks["pseudomanifold"] = report.pseudomanifold;
  report.checks["pure"] = report.image.is_pure(d);
  report.checks["facet_injective"] = report.image.facet_count() == source_facets;
  report.checks["ridge_injective"] = ridges_match_closed(report.image, state);
  report.checks["closed_count"] =
      report.closed_faces == binomial(d + 2, d) + binomial(d + 1, 2) * steps;
  report.checks["degree_sum"] = 2 * ridges == static_cast<std::uint64_t>(d + 1) * facets;
  report.checks["diameter_lower"] = static_cast<double>(report.diameter) >= report.diameter_lower;
  report.checks["diameter_ridge_bound"] = static_cast<double>(report.diameter) <= report.ridge_bound;
  report.checks["diameter_cs_bound"] = report.diameter <= report.cs_upper;
  if (report.connectivity) report.checks["connectivity"] = *report.connectivity >= d + 1;
  report.checks["eq1_identity"] = driven.identity_holds;
  return report;
}

double predicted_Y(double n, int d, double i, int size_A) {
  return Regime::pseudomanifold(d).predicted_Y(n, i, size_A);
}

double error_band(double n, int d, double t) { return Regime::pseudomanifold(d).error_band(n, t); }

}  // namespace cforge::pm
