// Command-line front end: process generation, complex analysis, homology,
// bound tables, the Johnson-graph oracle, and grid experiments.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cforge/bounds.hpp"
#include "cforge/complex.hpp"
#include "cforge/corridor_process.hpp"
#include "cforge/dual_graph.hpp"
#include "cforge/errors.hpp"
#include "cforge/experiment.hpp"
#include "cforge/gf2_homology.hpp"
#include "cforge/pm_process.hpp"
#include "cforge/serialize.hpp"

namespace {

using nlohmann::json;
using namespace cforge;

constexpr int kExitFailedCheck = 1;
constexpr int kExitBadInput = 2;

struct ProcessOptions {
  Vertex n = 0;
  int d = 2;
  std::uint64_t seed = 0;
  std::int64_t record_every = 0;
  int track_random = 10;
  std::optional<std::int64_t> max_steps;
  bool allow_small = false;
  bool no_connectivity = false;
  std::string out;
  std::string trajectory;
};

void add_process_options(CLI::App* cmd, ProcessOptions& o, bool pm) {
  cmd->add_option("--n", o.n, "ambient vertex count")->required();
  cmd->add_option("--d", o.d, "dimension (>= 2)")->capture_default_str();
  cmd->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
  cmd->add_option("--record-every", o.record_every, "trajectory sampling stride; 0 disables")->capture_default_str();
  cmd->add_option("--track-random", o.track_random, "random face boundaries to track")->capture_default_str();
  cmd->add_option("--max-steps", o.max_steps, "stop after this many steps");
  cmd->add_flag("--allow-small", o.allow_small, "lift the minimum-n guard (tiny exhaustive checks)");
  if (pm) cmd->add_flag("--no-connectivity", o.no_connectivity, "skip the dual vertex-connectivity computation");
  cmd->add_option("--out", o.out, "report JSON path (default: stdout)");
  cmd->add_option("--trajectory", o.trajectory, "trajectory CSV path (default: <out>_trajectory.csv)");
}

ProcessConfig to_config(const ProcessOptions& o) {
  ProcessConfig c;
  c.n = o.n;
  c.d = o.d;
  c.seed = o.seed;
  c.record_every = o.record_every;
  c.track_random = o.track_random;
  c.max_steps = o.max_steps;
  c.allow_small_n = o.allow_small;
  c.check_connectivity = !o.no_connectivity;
  return c;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    io::write_file(path, text);
  }
}

std::string trajectory_path(const ProcessOptions& o) {
  if (!o.trajectory.empty()) return o.trajectory;
  if (o.out.empty() || o.out == "-") return {};
  std::filesystem::path p(o.out);
  return (p.parent_path() / (p.stem().string() + "_trajectory.csv")).string();
}

template <typename Report>
int finish_run(const ProcessOptions& o, const Report& report, int period) {
  emit(o.out, io::dump(io::report_to_json(report)));
  if (o.record_every > 0) {
    const auto path = trajectory_path(o);
    if (path.empty()) {
      std::cerr << "note: trajectory not written (give --trajectory or --out)\n";
    } else {
      io::write_file(path, io::trajectory_csv(report.trajectory, period));
    }
  }
  if (!report.passed()) {
    for (const auto& [name, ok] : report.checks) {
      if (!ok) std::cerr << "check failed: " << name << " (seed " << report.seed << ")\n";
    }
    return kExitFailedCheck;
  }
  return 0;
}

io::ComplexDocument load_complex(const std::string& path) {
  const std::string text = path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : io::read_file(path);
  try {
    return io::complex_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

json analyze(const io::ComplexDocument& doc, bool connectivity) {
  const int d = doc.d;
  const auto fv = f_vector(doc.complex);
  json out = {{"n", doc.complex.n()},
              {"d", d},
              {"f_vector", fv.counts},
              {"pseudomanifold", is_pseudomanifold(doc.complex, d)},
              {"strongly_connected", is_strongly_connected(doc.complex, d)}};
  if (k_faces(doc.complex, d).empty()) {
    out["nodes"] = 0;
    out["edges"] = 0;
    out["diameter"] = nullptr;
    out["connectivity"] = nullptr;
    out["induced_path"] = false;
    return out;
  }
  const auto g = build_dual(doc.complex, d);
  out["nodes"] = g.node_count();
  out["edges"] = g.edge_count();
  out["diameter"] = is_connected(g) ? json(diameter(g)) : json(nullptr);
  out["connectivity"] = connectivity ? json(vertex_connectivity(g)) : json(nullptr);
  out["induced_path"] = is_induced_path(g);
  return out;
}

std::string bounds_output(const std::vector<double>& ns, const std::vector<int>& ds, std::optional<double> eps,
                          const std::string& format) {
  const auto rows = bounds_table(ns, ds);
  auto i_end_cell = [&](const BoundsRow& r) -> json {
    if (!eps) return nullptr;
    if (!(*eps > 0 && *eps < 1.0 / (r.d * r.d))) return "eps_out_of_range";
    const auto v = corridor::i_end(r.n, r.d, *eps);
    return v ? json(*v) : json("asymptotic_only");
  };
  if (format == "csv") {
    std::string out = "n,d,hs_exact,hs_first_order,hpm_exact,hpm_first_order,first_order_ge_exact";
    if (eps) out += ",i_end";
    out += "\n";
    for (const auto& r : rows) {
      out += io::format_real(r.n) + "," + std::to_string(r.d) + "," + io::format_real(r.hs_exact) + "," +
             io::format_real(r.hs_first_order) + "," + io::format_real(r.hpm_exact) + "," +
             io::format_real(r.hpm_first_order) + "," +
             ((r.hs_first_order >= r.hs_exact && r.hpm_first_order >= r.hpm_exact) ? "true" : "false");
      if (eps) {
        const json cell = i_end_cell(r);
        out += "," + (cell.is_string() ? cell.get<std::string>() : io::format_real(cell.get<double>()));
      }
      out += "\n";
    }
    return out;
  }
  json arr = json::array();
  for (const auto& r : rows) {
    json row = {{"n", r.n},
                {"d", r.d},
                {"hs_exact", r.hs_exact},
                {"hs_first_order", r.hs_first_order},
                {"hpm_exact", r.hpm_exact},
                {"hpm_first_order", r.hpm_first_order},
                {"first_order_ge_exact", r.hs_first_order >= r.hs_exact && r.hpm_first_order >= r.hpm_exact}};
    if (eps) row["i_end"] = i_end_cell(r);
    arr.push_back(row);
  }
  return io::dump(arr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized corridor mappings and high-diameter complexes"};
  app.require_subcommand(1);

  ProcessOptions corridor_opts;
  auto* gen_corridor = app.add_subcommand("generate-corridor", "run the corridor process and report");
  add_process_options(gen_corridor, corridor_opts, false);

  ProcessOptions pm_opts;
  auto* gen_pm = app.add_subcommand("generate-pm", "run the boundary-corridor process and report");
  add_process_options(gen_pm, pm_opts, true);

  std::string analyze_in = "-";
  std::string analyze_out;
  bool analyze_connectivity = true;
  auto* analyze_cmd = app.add_subcommand("analyze", "dual-graph statistics of a JSON complex");
  analyze_cmd->add_option("--in", analyze_in, "complex JSON (default: stdin)");
  analyze_cmd->add_option("--out", analyze_out, "output path (default: stdout)");
  analyze_cmd->add_flag("!--no-connectivity", analyze_connectivity, "skip vertex connectivity");

  std::string homology_in = "-";
  std::string homology_out;
  auto* homology_cmd = app.add_subcommand("homology", "reduced GF(2) Betti numbers of a JSON complex");
  homology_cmd->add_option("--in", homology_in, "complex JSON (default: stdin)");
  homology_cmd->add_option("--out", homology_out, "output path (default: stdout)");

  std::vector<double> bounds_n;
  std::vector<int> bounds_d;
  std::optional<double> bounds_eps;
  std::string bounds_format = "json";
  std::string bounds_out;
  auto* bounds_cmd = app.add_subcommand("bounds", "exact and first-order length/diameter bounds");
  bounds_cmd->add_option("--n", bounds_n, "vertex counts")->required();
  bounds_cmd->add_option("--d", bounds_d, "dimensions")->required();
  bounds_cmd->add_option("--eps", bounds_eps, "also report the end-of-analysis step for this eps");
  bounds_cmd->add_option("--format", bounds_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  bounds_cmd->add_option("--out", bounds_out, "output path (default: stdout)");

  Vertex johnson_n = 0;
  int johnson_d = 2;
  auto* johnson_cmd = app.add_subcommand("johnson-oracle", "exact longest induced path in J(n, d+1)");
  johnson_cmd->add_option("--n", johnson_n, "ground set size")->required();
  johnson_cmd->add_option("--d", johnson_d, "dimension")->capture_default_str();

  std::string grid_path;
  std::string experiment_out;
  std::optional<std::size_t> experiment_seeds;
  std::optional<unsigned> experiment_threads;
  std::string experiment_format = "csv";
  auto* experiment_cmd = app.add_subcommand("experiment", "run a parameter grid across seeds");
  experiment_cmd->add_option("--grid", grid_path, "grid JSON file")->required();
  experiment_cmd->add_option("--out", experiment_out, "directory for per-run reports and summary.csv");
  experiment_cmd->add_option("--seeds", experiment_seeds, "override: use seeds base_seed..base_seed+K-1");
  experiment_cmd->add_option("--threads", experiment_threads, "worker threads (default: CORRIDOR_FORGE_THREADS)");
  experiment_cmd->add_option("--format", experiment_format, "summary on stdout: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_corridor) {
      const auto report = corridor::run(to_config(corridor_opts));
      return finish_run(corridor_opts, report, Regime::corridor(corridor_opts.d).period);
    }
    if (*gen_pm) {
      const auto report = pm::run(to_config(pm_opts));
      return finish_run(pm_opts, report, Regime::pseudomanifold(pm_opts.d).period);
    }
    if (*analyze_cmd) {
      emit(analyze_out, io::dump(analyze(load_complex(analyze_in), analyze_connectivity)));
      return 0;
    }
    if (*homology_cmd) {
      const auto doc = load_complex(homology_in);
      emit(homology_out, io::dump(json{{"betti", reduced_betti_numbers(doc.complex)}}));
      return 0;
    }
    if (*bounds_cmd) {
      emit(bounds_out, bounds_output(bounds_n, bounds_d, bounds_eps, bounds_format));
      return 0;
    }
    if (*johnson_cmd) {
      const int length = experiment::johnson_oracle(johnson_n, johnson_d);
      std::cout << io::dump(json{{"n", johnson_n}, {"d", johnson_d}, {"longest_induced_path", length}});
      return 0;
    }
    if (*experiment_cmd) {
      json grid;
      try {
        grid = json::parse(io::read_file(grid_path));
      } catch (const json::parse_error& e) {
        throw FormatError(grid_path + ": " + e.what());
      }
      auto spec = experiment::spec_from_json(grid);
      if (experiment_seeds) spec.seeds = experiment::seed_range(grid.value("base_seed", std::uint64_t{0}), *experiment_seeds);
      if (experiment_threads) spec.threads = *experiment_threads;
      spec.out_dir = experiment_out;
      const auto result = experiment::run_experiment(spec);
      if (experiment_format == "csv") {
        std::cout << experiment::summary_csv(result.summary);
      } else {
        json rows = json::array();
        for (const auto& r : result.summary) {
          rows.push_back({{"mode", r.mode},
                          {"n", r.n},
                          {"d", r.d},
                          {"runs", r.runs},
                          {"mean_steps", r.mean_steps},
                          {"min_steps", r.min_steps},
                          {"max_steps", r.max_steps},
                          {"first_order_steps", r.first_order_steps},
                          {"exact_steps_bound", r.exact_steps_bound},
                          {"ratio_first_order", r.ratio_first_order},
                          {"ratio_exact", r.ratio_exact},
                          {"mean_diameter", r.mean_diameter},
                          {"diameter_bound", r.diameter_bound},
                          {"all_checks_pass", r.all_checks_pass}});
        }
        std::cout << io::dump(rows);
      }
      return 0;
    }
  } catch (const VerificationFailed& e) {
    std::cerr << e.what() << "\n";
    return kExitFailedCheck;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
