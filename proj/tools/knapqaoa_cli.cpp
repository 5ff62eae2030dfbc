// Command-line front end: ingest price data, solve bundled or external
// knapsack instances classically and with the walk-mixer QAOA, sweep circuit
// depth or Trotter steps, and pretty-print run reports.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knapqaoa/fixtures.hpp"
#include "knapqaoa/json_io.hpp"
#include "knapqaoa/knapsack.hpp"
#include "knapqaoa/oracle.hpp"
#include "knapqaoa/prices.hpp"
#include "knapqaoa/qaoa.hpp"

namespace {

using knapqaoa::KnapsackInstance;

struct InstanceSource {
  std::string fixture;
  std::string prices_path;
  std::vector<std::string> tickers;
  std::string start_date;
  std::string end_date;
  std::string instance_path;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--fixture", fixture, "Bundled instance name (stocks2..stocks8)");
    cmd->add_option("--prices", prices_path, "Price CSV (header: date,<T1>,<T2>,...)");
    cmd->add_option("--tickers", tickers, "Tickers to select from the CSV")->delimiter(',');
    cmd->add_option("--start", start_date, "First date (ISO-8601, inclusive)");
    cmd->add_option("--end", end_date, "Last date (ISO-8601, inclusive)");
    cmd->add_option("--instance", instance_path, "Instance JSON file");
  }

  KnapsackInstance resolve(std::vector<std::string>* tickers_out, std::string* label) const {
    const int sources = (!fixture.empty() ? 1 : 0) + (!prices_path.empty() ? 1 : 0) +
                        (!instance_path.empty() ? 1 : 0);
    if (sources != 1) {
      throw std::invalid_argument("exactly one of --fixture, --prices, --instance is required");
    }
    if (!fixture.empty()) {
      const auto& f = knapqaoa::fixture(fixture);
      if (tickers_out) *tickers_out = f.tickers;
      if (label) *label = f.name;
      return f.instance;
    }
    if (!prices_path.empty()) {
      if (tickers.empty()) throw std::invalid_argument("--prices requires --tickers");
      auto series = knapqaoa::load_prices(prices_path, tickers);
      if (!start_date.empty() || !end_date.empty()) {
        series = knapqaoa::clip_date_range(series, start_date, end_date);
      }
      const auto er = knapqaoa::expected_returns(series);
      if (tickers_out) *tickers_out = er.tickers;
      if (label) *label = "prices";
      return knapqaoa::encode_to_knapsack(er);
    }
    std::vector<std::string> names;
    const auto inst = knapqaoa::instance_from_json(knapqaoa::read_json_file(instance_path), &names);
    if (tickers_out) *tickers_out = names;
    if (label) *label = "instance";
    return inst;
  }
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << content;
}

int cmd_ingest(const InstanceSource& source, const std::string& out_path) {
  std::vector<std::string> tickers;
  const KnapsackInstance inst = source.resolve(&tickers, nullptr);
  const auto params = knapqaoa::derive_oracle_params(inst);
  emit(out_path, knapqaoa::instance_to_json(inst, tickers).dump(2) + "\n");
  std::cerr << "items: " << inst.size() << "  capacity: " << inst.capacity
            << "  qubits: " << inst.size() + params.weight_qubits + 3 << '\n';
  if (inst.unconstrained()) {
    std::cerr << "note: capacity admits every selection; the constraint never binds\n";
  }
  return 0;
}

int cmd_bks(const InstanceSource& source) {
  const KnapsackInstance inst = source.resolve(nullptr, nullptr);
  const auto dp = knapqaoa::solve_dp(inst);
  if (inst.size() <= 20) {
    const auto bf = knapqaoa::solve_brute_force(inst);
    if (bf.bits != dp.bits || bf.value != dp.value) {
      std::cerr << "error: dynamic program disagrees with exhaustive search\n";
      return 2;
    }
    std::cerr << "verified against exhaustive search over " << (1u << inst.size())
              << " selections\n";
  }
  std::cout << "bits: " << knapqaoa::bits_to_string(dp.bits) << "\nvalue: " << dp.value
            << "\nweight: " << dp.weight << '\n';
  return 0;
}

int cmd_solve(const InstanceSource& source, int p, int m, int budget, std::uint64_t seed,
              long shots, bool joint, bool timings, const std::string& out_path) {
  std::vector<std::string> tickers;
  const KnapsackInstance inst = source.resolve(&tickers, nullptr);
  const auto start = std::chrono::steady_clock::now();
  auto report = knapqaoa::run(inst, p, m, budget, seed, shots, joint, tickers);
  if (timings) {
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  emit(out_path, knapqaoa::report_to_json(report).dump(2) + "\n");
  std::cerr << "ratio_best: " << report.ratio_best
            << "  ratio_expectation: " << report.ratio_expectation
            << "  best: " << knapqaoa::bits_to_string(report.best_feasible.bits) << '\n';
  return 0;
}

int cmd_sweep(const InstanceSource& source, bool have_source, const std::string& axis, int range_lo,
              int range_hi, int p, int m, int budget, std::uint64_t seed, long shots, bool joint,
              const std::string& out_path) {
  if (axis != "p" && axis != "m") throw std::invalid_argument("--axis must be p or m");
  if (range_lo < 1 || range_hi < range_lo) throw std::invalid_argument("bad --range");

  std::vector<std::pair<std::string, KnapsackInstance>> instances;
  if (have_source) {
    std::string label;
    const KnapsackInstance inst = source.resolve(nullptr, &label);
    instances.emplace_back(label, inst);
  } else {
    for (const auto& f : knapqaoa::table_fixtures()) instances.emplace_back(f.name, f.instance);
  }

  std::ostringstream csv;
  csv << "instance,axis,value,ratio_best,ratio_expectation,wall_ms\n";
  for (const auto& [name, inst] : instances) {
    for (int v = range_lo; v <= range_hi; ++v) {
      const int pv = axis == "p" ? v : p;
      const int mv = axis == "m" ? v : m;
      const auto start = std::chrono::steady_clock::now();
      const auto report = knapqaoa::run(inst, pv, mv, budget, seed, shots, joint);
      const double wall_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
      csv << name << ',' << axis << ',' << v << ',' << report.ratio_best << ','
          << report.ratio_expectation << ',' << wall_ms << '\n';
      std::cerr << name << " " << axis << "=" << v << " ratio_best=" << report.ratio_best << '\n';
    }
  }
  emit(out_path, csv.str());
  return 0;
}

int cmd_report(const std::string& in_path) {
  const auto j = knapqaoa::read_json_file(in_path);
  std::cout << "p=" << j.at("p").get<int>() << " m=" << j.at("m").get<int>()
            << " seed=" << j.at("seed").get<std::uint64_t>()
            << " shots=" << j.at("shots").get<long>() << "\n";
  std::cout << "bks:            " << j.at("bks").at("bits").get<std::string>() << "  value "
            << j.at("bks").at("value").get<double>() << "\n";
  std::cout << "best feasible:  " << j.at("best_feasible").at("bits").get<std::string>()
            << "  value " << j.at("best_feasible").at("value").get<double>() << "  probability "
            << j.at("best_feasible").at("probability").get<double>() << "\n";
  std::cout << "ratio_best:        " << j.at("ratio_best").get<double>() << "\n";
  std::cout << "ratio_expectation: " << j.at("ratio_expectation").get<double>() << "\n";
  std::cout << "top of distribution:\n";
  const auto& dist = j.at("distribution");
  for (std::size_t i = 0; i < dist.size() && i < 8; ++i) {
    std::cout << "  " << dist[i][0].get<std::string>() << "  " << dist[i][1].get<double>() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knapsack portfolio selection with the quantum-walk-mixer QAOA"};
  app.require_subcommand(1);

  int p = 3;
  int m = 3;
  int budget = 800;
  std::uint64_t seed = 0;
  long shots = 0;
  bool joint = false;
  bool timings = false;
  std::string out_path;
  std::string axis = "p";
  std::string range_text = "1..5";
  std::string report_in;

  InstanceSource ingest_source;
  auto* ingest = app.add_subcommand("ingest", "Encode an instance and write its JSON");
  ingest_source.add_flags(ingest);
  ingest->add_option("--out", out_path, "Output path (default stdout)");

  InstanceSource bks_source;
  auto* bks = app.add_subcommand("bks", "Classical optimum via dynamic programming");
  bks_source.add_flags(bks);

  InstanceSource solve_source;
  auto* solve = app.add_subcommand("solve", "Optimize and write a run report");
  solve_source.add_flags(solve);
  solve->add_option("--p", p, "Circuit layers");
  solve->add_option("--m", m, "Trotter steps");
  solve->add_option("--budget", budget, "Optimizer grid points per layer");
  solve->add_option("--seed", seed, "Sampling seed");
  solve->add_option("--shots", shots, "0 = exact probabilities");
  solve->add_flag("--joint-opt", joint, "Joint 2p-parameter polish");
  solve->add_flag("--timings", timings, "Record wall time in the report");
  solve->add_option("--out", out_path, "Output path (default stdout)");

  InstanceSource sweep_source;
  auto* sweep = app.add_subcommand("sweep", "Ratio table over p or m (CSV)");
  sweep_source.add_flags(sweep);
  sweep->add_option("--axis", axis, "p or m");
  sweep->add_option("--range", range_text, "A..B inclusive");
  sweep->add_option("--p", p, "Fixed layers when sweeping m");
  sweep->add_option("--m", m, "Fixed Trotter steps when sweeping p");
  sweep->add_option("--budget", budget, "Optimizer grid points per layer");
  sweep->add_option("--seed", seed, "Sampling seed");
  sweep->add_option("--shots", shots, "0 = exact probabilities");
  sweep->add_flag("--joint-opt", joint, "Joint 2p-parameter polish");
  sweep->add_option("--out", out_path, "Output path (default stdout)");

  auto* report = app.add_subcommand("report", "Pretty-print a run report JSON");
  report->add_option("--in", report_in, "Report JSON path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) return cmd_ingest(ingest_source, out_path);
    if (bks->parsed()) return cmd_bks(bks_source);
    if (solve->parsed()) {
      return cmd_solve(solve_source, p, m, budget, seed, shots, joint, timings, out_path);
    }
    if (sweep->parsed()) {
      const auto dots = range_text.find("..");
      if (dots == std::string::npos) throw std::invalid_argument("--range expects A..B");
      const int lo = std::stoi(range_text.substr(0, dots));
      const int hi = std::stoi(range_text.substr(dots + 2));
      const auto& src = sweep_source;
      const bool have_source = !src.fixture.empty() || !src.prices_path.empty() ||
                               !src.instance_path.empty();
      return cmd_sweep(src, have_source, axis, lo, hi, p, m, budget, seed, shots, joint, out_path);
    }
    if (report->parsed()) return cmd_report(report_in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
