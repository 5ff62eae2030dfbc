#include "knapqaoa/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace knapqaoa {

ordered_json instance_to_json(const KnapsackInstance& inst,
                              const std::vector<std::string>& tickers) {
  ordered_json j;
  if (!tickers.empty()) j["tickers"] = tickers;
  j["values"] = inst.values;
  j["weights"] = inst.weights;
  j["capacity"] = inst.capacity;
  return j;
}

KnapsackInstance instance_from_json(const ordered_json& j,
                                    std::vector<std::string>* tickers_out) {
  KnapsackInstance inst;
  try {
    inst.values = j.at("values").get<std::vector<double>>();
    inst.weights = j.at("weights").get<std::vector<std::int64_t>>();
    inst.capacity = j.at("capacity").get<std::int64_t>();
    if (tickers_out) {
      *tickers_out = j.contains("tickers") ? j.at("tickers").get<std::vector<std::string>>()
                                           : std::vector<std::string>{};
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("instance json: ") + e.what());
  }
  inst.validate();
  return inst;
}

ordered_json fixtures_to_json() {
  ordered_json out = ordered_json::array();
  for (const auto& f : table_fixtures()) {
    ordered_json j;
    j["name"] = f.name;
    j["tickers"] = f.tickers;
    j["values"] = f.instance.values;
    j["weights"] = f.instance.weights;
    j["capacity"] = f.instance.capacity;
    j["bks"] = f.reference_bits;
    j["qubits"] = f.qubits;
    out.push_back(std::move(j));
  }
  return out;
}

ordered_json report_to_json(const RunReport& report) {
  ordered_json j;
  j["instance"] = instance_to_json(report.instance, report.tickers);
  j["p"] = report.schedule.layers;
  j["m"] = report.schedule.trotter_steps;
  j["budget"] = report.budget;
  j["seed"] = report.seed;
  j["shots"] = report.shots;
  j["schedule"] = {{"gammas", report.schedule.gammas}, {"betas", report.schedule.betas}};
  j["expectation"] = report.expectation;
  j["bks"] = {{"bits", bits_to_string(report.bks.bits)},
              {"value", report.bks.value},
              {"weight", report.bks.weight}};
  j["best_feasible"] = {{"bits", bits_to_string(report.best_feasible.bits)},
                        {"value", report.best_feasible.value},
                        {"probability", report.best_feasible.probability}};
  j["ratio_best"] = report.ratio_best;
  j["ratio_expectation"] = report.ratio_expectation;
  j["evaluations"] = report.evaluations;
  if (report.wall_ms.has_value()) {
    j["wall_ms"] = *report.wall_ms;
  } else {
    j["wall_ms"] = nullptr;
  }
  ordered_json dist = ordered_json::array();
  for (const auto& [bits, prob] : report.distribution) {
    dist.push_back(ordered_json::array({bits, prob}));
  }
  j["distribution"] = std::move(dist);
  return j;
}

ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace knapqaoa
