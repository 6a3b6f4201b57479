#include "cforge/mapping_process.hpp"

#include <algorithm>
#include <string>

#include "cforge/binomial.hpp"
#include "cforge/errors.hpp"

namespace cforge {

MappingShape MappingShape::corridor(int d) { return {d, d, 2 * d, d + 1}; }

MappingShape MappingShape::boundary_corridor(int d) { return {d, d + 1, 2 * (d + 1), d + 2}; }

std::uint64_t MappingShape::faces_per_step() const { return binomial(window, d - 1); }

std::uint64_t MappingShape::initial_faces() const { return binomial(initial, d); }

const char* to_string(TerminationCause cause) {
  switch (cause) {
    case TerminationCause::kCandidatesExhausted:
      return "candidates_exhausted";
    case TerminationCause::kStepLimit:
      return "step_limit";
  }
  return "unknown";
}

Face ProcessState::window_face() const {
  const auto w = static_cast<std::size_t>(shape.window);
  return Face::make(std::span<const Vertex>(phi.data() + phi.size() - w, w));
}

ProcessState init_mapping(const MappingShape& shape, Vertex n, Rng rng) {
  if (shape.d < 2) throw InvalidParams("dimension must be at least 2, got " + std::to_string(shape.d));
  if (n < static_cast<Vertex>(shape.initial) + 1) {
    throw InvalidParams("n=" + std::to_string(n) + " cannot hold an initial simplex of " +
                        std::to_string(shape.initial) + " vertices plus one more");
  }
  ProcessState state;
  state.shape = shape;
  state.n = n;
  state.closed = ClosedFaceSet(n, shape.d);
  state.rng = rng;
  while (state.phi.size() < static_cast<std::size_t>(shape.initial)) {
    const auto v = static_cast<Vertex>(state.rng.uniform_below(n) + 1);
    if (std::find(state.phi.begin(), state.phi.end(), v) == state.phi.end()) state.phi.push_back(v);
  }
  for_each_subface(Face::make(state.phi), shape.d, [&](const Face& f) { state.closed.insert(f); });
  return state;
}

CandidateScan scan_candidates(const ProcessState& state) {
  const Face window = state.window_face();
  const auto cone_bases = subfaces(window, state.shape.d - 1);

  std::vector<char> excluded(state.n + 1, 0);
  const std::size_t recent = std::min<std::size_t>(state.phi.size(), state.shape.exclusion);
  for (std::size_t i = state.phi.size() - recent; i < state.phi.size(); ++i) excluded[state.phi[i]] = 1;

  CandidateScan scan;
  for (Vertex v = 1; v <= state.n; ++v) {
    if (window.contains(v)) continue;
    const bool open = std::none_of(cone_bases.begin(), cone_bases.end(),
                                   [&](const Face& tau) { return state.closed.contains(tau.with(v)); });
    if (!open) continue;
    ++scan.open_count;
    if (!excluded[v]) scan.candidates.push_back(v);
  }
  return scan;
}

StepOutcome advance(ProcessState& state, const CandidateScan& scan) {
  StepOutcome out;
  out.open_count = scan.open_count;
  out.candidate_count = scan.candidates.size();
  if (scan.candidates.empty()) {
    out.terminated = true;
    return out;
  }
  const Vertex v = scan.candidates[state.rng.uniform_below(scan.candidates.size())];
  const Face window = state.window_face();
  for_each_subface(window, state.shape.d - 1, [&](const Face& tau) {
    Face f = tau.with(v);
    if (!state.closed.insert(f)) {
      throw VerificationFailed("face " + f.to_string() + " closed twice at step " +
                               std::to_string(state.step + 1));
    }
    out.newly_closed.push_back(f);
  });
  state.phi.push_back(v);
  ++state.step;
  out.chosen = v;
  return out;
}

StepOutcome advance(ProcessState& state) { return advance(state, scan_candidates(state)); }

}  // namespace cforge
