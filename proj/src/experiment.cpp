#include "cforge/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <map>
#include <sstream>
#include <thread>

#include "cforge/binomial.hpp"
#include "cforge/bounds.hpp"
#include "cforge/corridor_process.hpp"
#include "cforge/dual_graph.hpp"
#include "cforge/errors.hpp"
#include "cforge/pm_process.hpp"
#include "cforge/serialize.hpp"

namespace cforge::experiment {

using nlohmann::json;

const char* to_string(Mode mode) { return mode == Mode::kCorridor ? "corridor" : "pm"; }

Mode mode_from_string(const std::string& text) {
  if (text == "corridor") return Mode::kCorridor;
  if (text == "pm") return Mode::kPm;
  throw InvalidParams("unknown experiment mode '" + text + "'");
}

std::vector<std::uint64_t> seed_range(std::uint64_t base, std::size_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (std::size_t i = 0; i < count; ++i) seeds[i] = base + i;
  return seeds;
}

ExperimentSpec spec_from_json(const json& doc) {
  try {
    ExperimentSpec spec;
    spec.mode = mode_from_string(doc.at("mode").get<std::string>());
    spec.n_values = doc.at("n").get<std::vector<Vertex>>();
    spec.d_values = doc.at("d").get<std::vector<int>>();
    if (doc.contains("seeds")) {
      spec.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
    } else {
      spec.seeds = seed_range(doc.value("base_seed", std::uint64_t{0}), doc.at("seed_count").get<std::size_t>());
    }
    spec.record_every = doc.value("record_every", std::int64_t{0});
    spec.track_random = doc.value("track_random", 10);
    spec.check_connectivity = doc.value("check_connectivity", true);
    return spec;
  } catch (const json::exception& e) {
    throw FormatError(std::string("grid file: ") + e.what());
  }
}

namespace {

ProcessConfig config_for(const ExperimentSpec& spec, Vertex n, int d, std::uint64_t seed) {
  ProcessConfig c;
  c.n = n;
  c.d = d;
  c.seed = seed;
  c.record_every = spec.record_every;
  c.track_random = spec.track_random;
  c.check_connectivity = spec.check_connectivity;
  c.allow_small_n = spec.allow_small_n;
  return c;
}

struct Task {
  Vertex n;
  int d;
  std::uint64_t seed;
};

std::string failed_checks(const std::map<std::string, bool>& checks) {
  std::string out;
  for (const auto& [name, ok] : checks) {
    if (!ok) out += (out.empty() ? "" : ", ") + name;
  }
  return out;
}

struct TaskOutput {
  json report;
  std::string csv;
};

TaskOutput run_task(const ExperimentSpec& spec, const Task& task) {
  const auto c = config_for(spec, task.n, task.d, task.seed);
  TaskOutput out;
  std::string failures;
  if (spec.mode == Mode::kCorridor) {
    const auto r = corridor::run(c);
    failures = failed_checks(r.checks);
    out.report = io::report_to_json(r);
    if (spec.record_every > 0) out.csv = io::trajectory_csv(r.trajectory, Regime::corridor(task.d).period);
  } else {
    const auto r = pm::run(c);
    failures = failed_checks(r.checks);
    out.report = io::report_to_json(r);
    if (spec.record_every > 0) out.csv = io::trajectory_csv(r.trajectory, Regime::pseudomanifold(task.d).period);
  }
  if (!failures.empty()) {
    throw VerificationFailed(std::string(to_string(spec.mode)) + " run n=" + std::to_string(task.n) +
                             " d=" + std::to_string(task.d) + " seed=" + std::to_string(task.seed) +
                             " failed: " + failures);
  }
  return out;
}

std::string run_stem(Mode mode, const Task& t) {
  return std::string(to_string(mode)) + "_n" + std::to_string(t.n) + "_d" + std::to_string(t.d) + "_seed" +
         std::to_string(t.seed);
}

}  // namespace

void validate(const ExperimentSpec& spec) {
  if (spec.seeds.empty()) throw InvalidParams("experiment needs at least one seed");
  if (spec.n_values.empty() || spec.d_values.empty()) throw InvalidParams("experiment grid is empty");
  for (Vertex n : spec.n_values) {
    for (int d : spec.d_values) {
      const auto c = config_for(spec, n, d, 0);
      if (spec.mode == Mode::kCorridor) {
        corridor::validate(c);
      } else {
        pm::validate(c);
      }
    }
  }
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("CORRIDOR_FORGE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  validate(spec);
  std::vector<Task> tasks;
  for (Vertex n : spec.n_values) {
    for (int d : spec.d_values) {
      for (auto seed : spec.seeds) tasks.push_back({n, d, seed});
    }
  }

  std::vector<TaskOutput> outputs(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        outputs[i] = run_task(spec, tasks[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      std::min<std::size_t>(spec.threads > 0 ? spec.threads : default_thread_count(), tasks.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ExperimentResult result;
  for (auto& o : outputs) result.reports.push_back(std::move(o.report));
  result.summary = summarize(result.reports);

  if (!spec.out_dir.empty()) {
    std::filesystem::create_directories(spec.out_dir);
    const std::filesystem::path dir(spec.out_dir);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      const std::string stem = run_stem(spec.mode, tasks[i]);
      const auto json_path = (dir / (stem + ".json")).string();
      io::write_file(json_path, io::dump(result.reports[i]));
      result.files.push_back(json_path);
      if (!outputs[i].csv.empty()) {
        const auto csv_path = (dir / (stem + "_trajectory.csv")).string();
        io::write_file(csv_path, outputs[i].csv);
        result.files.push_back(csv_path);
      }
    }
    const auto summary_path = (dir / "summary.csv").string();
    io::write_file(summary_path, summary_csv(result.summary));
    result.files.push_back(summary_path);
  }
  return result;
}

SummaryTable summarize(const std::vector<json>& reports) {
  struct Acc {
    SummaryRow row;
    double step_sum = 0;
    double diameter_sum = 0;
  };
  std::vector<Acc> groups;
  for (const auto& r : reports) {
    const std::string kind = r.at("kind").get<std::string>();
    const auto n = r.at("n").get<Vertex>();
    const int d = r.at("d").get<int>();
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Acc& a) { return a.row.mode == kind && a.row.n == n && a.row.d == d; });
    if (it == groups.end()) {
      Acc acc;
      acc.row.mode = kind;
      acc.row.n = n;
      acc.row.d = d;
      const double nd = n;
      if (kind == "corridor") {
        acc.row.first_order_steps = hs_first_order(nd, d);
        acc.row.exact_steps_bound = hs_upper(nd, d);
        acc.row.diameter_bound = hs_upper(nd, d);
      } else {
        const double per_step = static_cast<double>(binomial(d + 1, 2));
        acc.row.first_order_steps = std::pow(nd, d) / (per_step * static_cast<double>(factorial(d)));
        acc.row.exact_steps_bound = (binomial_real(nd, d) - static_cast<double>(binomial(d + 2, d))) / per_step;
        acc.row.diameter_bound = hpm_upper(nd, d);
      }
      acc.row.min_steps = INT64_MAX;
      acc.row.max_steps = INT64_MIN;
      groups.push_back(acc);
      it = groups.end() - 1;
    }
    const auto steps = r.at("steps").get<std::int64_t>();
    it->row.runs += 1;
    it->step_sum += static_cast<double>(steps);
    it->diameter_sum += static_cast<double>(r.at("diameter").get<std::int64_t>());
    it->row.min_steps = std::min(it->row.min_steps, steps);
    it->row.max_steps = std::max(it->row.max_steps, steps);
    it->row.all_checks_pass = it->row.all_checks_pass && r.at("passed").get<bool>();
  }
  SummaryTable table;
  for (auto& g : groups) {
    g.row.mean_steps = g.step_sum / static_cast<double>(g.row.runs);
    g.row.mean_diameter = g.diameter_sum / static_cast<double>(g.row.runs);
    g.row.ratio_first_order = g.row.mean_steps / g.row.first_order_steps;
    g.row.ratio_exact = g.row.mean_steps / g.row.exact_steps_bound;
    table.push_back(g.row);
  }
  return table;
}

SummaryTable summarize_directory(const std::string& dir) {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<json> reports;
  for (const auto& p : paths) {
    json doc;
    try {
      doc = json::parse(io::read_file(p.string()));
    } catch (const json::exception& e) {
      throw FormatError(p.string() + ": " + e.what());
    }
    const auto kind = doc.value("kind", "");
    io::validate(doc, kind == "pm" ? io::DocumentKind::kPmReport : io::DocumentKind::kCorridorReport);
    reports.push_back(std::move(doc));
  }
  return summarize(reports);
}

std::string summary_csv(const SummaryTable& table) {
  std::ostringstream out;
  out << "mode,n,d,runs,mean_steps,min_steps,max_steps,first_order_steps,exact_steps_bound,ratio_first_order,"
         "ratio_exact,mean_diameter,diameter_bound,all_checks_pass\n";
  for (const auto& r : table) {
    out << r.mode << ',' << r.n << ',' << r.d << ',' << r.runs << ',' << io::format_real(r.mean_steps) << ','
        << r.min_steps << ',' << r.max_steps << ',' << io::format_real(r.first_order_steps) << ','
        << io::format_real(r.exact_steps_bound) << ',' << io::format_real(r.ratio_first_order) << ','
        << io::format_real(r.ratio_exact) << ',' << io::format_real(r.mean_diameter) << ','
        << io::format_real(r.diameter_bound) << ',' << (r.all_checks_pass ? "true" : "false") << '\n';
  }
  return out.str();
}

int johnson_oracle(Vertex n, int d) {
  if (d < 1 || n < static_cast<Vertex>(d + 1)) throw InvalidParams("johnson_oracle needs n >= d+1 >= 2");
  const auto nodes = binomial(n, d + 1);
  if (nodes > 16) {
    throw RefusedSize("J(" + std::to_string(n) + ", " + std::to_string(d + 1) + ") has " + std::to_string(nodes) +
                      " nodes; exhaustive search is limited to 16");
  }
  return longest_induced_path_bruteforce(johnson_graph(n, d + 1), 16);
}

}  // namespace cforge::experiment
