#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cforge/face.hpp"

namespace cforge::experiment {

enum class Mode { kCorridor, kPm };

const char* to_string(Mode mode);
Mode mode_from_string(const std::string& text);

/// A grid of process runs: every (n, d) pair crossed with every seed.
struct ExperimentSpec {
  Mode mode = Mode::kCorridor;
  std::vector<Vertex> n_values;
  std::vector<int> d_values;
  std::vector<std::uint64_t> seeds;
  std::int64_t record_every = 0;
  int track_random = 10;
  bool check_connectivity = true;
  bool allow_small_n = false;
  /// Directory for per-run reports and summary.csv; empty writes nothing.
  std::string out_dir;
  /// 0 means CORRIDOR_FORGE_THREADS, else the hardware concurrency.
  unsigned threads = 0;
};

/// seeds base, base+1, ..., base+count-1.
std::vector<std::uint64_t> seed_range(std::uint64_t base, std::size_t count);

/// Reads a grid file:
///   {"mode": "corridor"|"pm", "n": [...], "d": [...],
///    "seeds": [...] | "base_seed": s, "seed_count": k,
///    "record_every": r, "track_random": m, "check_connectivity": b}
/// Throws FormatError on malformed input.
ExperimentSpec spec_from_json(const nlohmann::json& doc);

/// Throws InvalidParams when the grid is empty or a grid point violates the
/// process preconditions.
void validate(const ExperimentSpec& spec);

struct SummaryRow {
  std::string mode;
  Vertex n = 0;
  int d = 0;
  std::size_t runs = 0;
  double mean_steps = 0;
  std::int64_t min_steps = 0;
  std::int64_t max_steps = 0;
  /// n^d/(d d!) for corridor runs, n^d/(C(d+1,2) d!) for pm runs.
  double first_order_steps = 0;
  /// Exact volume bound on the step count.
  double exact_steps_bound = 0;
  double ratio_first_order = 0;
  double ratio_exact = 0;
  double mean_diameter = 0;
  /// Upper bound on length or diameter: hs_upper or hpm_upper.
  double diameter_bound = 0;
  bool all_checks_pass = true;

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

using SummaryTable = std::vector<SummaryRow>;

struct ExperimentResult {
  SummaryTable summary;
  /// Per-run report documents in grid order (n, then d, then seed).
  std::vector<nlohmann::json> reports;
  std::vector<std::string> files;
};

/// Runs the grid with seed-level parallelism. Any run failing a verification
/// check raises VerificationFailed naming its seed.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Aggregates report documents, grouping by (kind, n, d) in first-seen order.
SummaryTable summarize(const std::vector<nlohmann::json>& reports);
/// Re-reads every *.json report in `dir` (sorted by name) and aggregates.
SummaryTable summarize_directory(const std::string& dir);

std::string summary_csv(const SummaryTable& table);

/// Worker count: CORRIDOR_FORGE_THREADS when set and positive, else the
/// hardware concurrency (at least 1).
unsigned default_thread_count();

/// Exact longest induced path in J(n, d+1) by exhaustive search. Throws
/// RefusedSize when C(n, d+1) > 16.
int johnson_oracle(Vertex n, int d);

}  // namespace cforge::experiment
