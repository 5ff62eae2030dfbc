#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knapqaoa/fixtures.hpp"
#include "knapqaoa/json_io.hpp"
#include "knapqaoa/knapsack.hpp"
#include "knapqaoa/oracle.hpp"
#include "knapqaoa/prices.hpp"
#include "knapqaoa/qaoa.hpp"

namespace py = pybind11;
using namespace knapqaoa;

namespace {

py::dict report_to_dict(const RunReport& report) {
  py::dict d;
  d["p"] = report.schedule.layers;
  d["m"] = report.schedule.trotter_steps;
  d["budget"] = report.budget;
  d["seed"] = report.seed;
  d["shots"] = report.shots;
  d["gammas"] = report.schedule.gammas;
  d["betas"] = report.schedule.betas;
  d["expectation"] = report.expectation;
  d["bks_bits"] = bits_to_string(report.bks.bits);
  d["bks_value"] = report.bks.value;
  d["best_bits"] = bits_to_string(report.best_feasible.bits);
  d["best_value"] = report.best_feasible.value;
  d["best_probability"] = report.best_feasible.probability;
  d["ratio_best"] = report.ratio_best;
  d["ratio_expectation"] = report.ratio_expectation;
  d["evaluations"] = report.evaluations;
  py::list dist;
  for (const auto& [bits, prob] : report.distribution) {
    dist.append(py::make_tuple(bits, prob));
  }
  d["distribution"] = dist;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Knapsack portfolio selection with the quantum-walk-mixer QAOA";

  py::class_<KnapsackInstance>(m, "KnapsackInstance")
      .def(py::init([](std::vector<double> values, std::vector<std::int64_t> weights,
                       std::int64_t capacity) {
             KnapsackInstance inst{std::move(values), std::move(weights), capacity};
             inst.validate();
             return inst;
           }),
           py::arg("values"), py::arg("weights"), py::arg("capacity"))
      .def_readonly("values", &KnapsackInstance::values)
      .def_readonly("weights", &KnapsackInstance::weights)
      .def_readonly("capacity", &KnapsackInstance::capacity)
      .def_property_readonly("n_items", &KnapsackInstance::size)
      .def("total_weight", &KnapsackInstance::total_weight)
      .def("__repr__", [](const KnapsackInstance& inst) {
        return "KnapsackInstance(n=" + std::to_string(inst.size()) +
               ", capacity=" + std::to_string(inst.capacity) + ")";
      });

  m.def("fixture_names", [] {
    std::vector<std::string> names;
    for (const auto& f : table_fixtures()) names.push_back(f.name);
    return names;
  });
  m.def(
      "fixture",
      [](const std::string& name) {
        const auto& f = fixture(name);
        return py::make_tuple(f.instance, f.tickers, f.reference_bits, f.qubits);
      },
      py::arg("name"), "Returns (instance, tickers, reference_bits, qubits)");

  m.def(
      "total_value",
      [](const std::string& bits, const KnapsackInstance& inst) {
        return total_value(bits_from_string(bits), inst);
      },
      py::arg("bits"), py::arg("instance"));
  m.def(
      "is_feasible",
      [](const std::string& bits, const KnapsackInstance& inst) {
        return is_feasible(bits_from_string(bits), inst);
      },
      py::arg("bits"), py::arg("instance"));

  m.def(
      "solve_dp",
      [](const KnapsackInstance& inst) {
        const auto s = solve_dp(inst);
        return py::make_tuple(bits_to_string(s.bits), s.value, s.weight);
      },
      py::arg("instance"), "Returns (bits, value, weight)");
  m.def(
      "solve_brute_force",
      [](const KnapsackInstance& inst) {
        const auto s = solve_brute_force(inst);
        return py::make_tuple(bits_to_string(s.bits), s.value, s.weight);
      },
      py::arg("instance"));
  m.def("approximation_ratio", &approximation_ratio, py::arg("achieved"), py::arg("optimal"));

  m.def(
      "qubit_count",
      [](const KnapsackInstance& inst) {
        return static_cast<int>(inst.size()) + derive_oracle_params(inst).weight_qubits + 3;
      },
      py::arg("instance"), "Qubits the circuit needs: N + q_w + 3");

  m.def(
      "load_expected_returns",
      [](const std::string& path, const std::vector<std::string>& tickers,
         const std::string& start, const std::string& end) {
        auto series = load_prices(path, tickers);
        if (!start.empty() || !end.empty()) series = clip_date_range(series, start, end);
        const auto er = expected_returns(series);
        return py::make_tuple(er.tickers, er.values);
      },
      py::arg("path"), py::arg("tickers"), py::arg("start") = "", py::arg("end") = "");
  m.def(
      "encode_to_knapsack",
      [](const std::vector<std::string>& tickers, const std::vector<double>& values) {
        return encode_to_knapsack(ExpectedReturns{tickers, values});
      },
      py::arg("tickers"), py::arg("values"));

  m.def(
      "optimize",
      [](const KnapsackInstance& inst, int p, int m_steps, int budget, std::uint64_t seed,
         bool joint) {
        const auto result = optimize(inst, p, m_steps, budget, seed, joint);
        py::dict d;
        d["gammas"] = result.schedule.gammas;
        d["betas"] = result.schedule.betas;
        d["evaluations"] = result.evaluations;
        d["expectation"] = result.expectation;
        return d;
      },
      py::arg("instance"), py::arg("p") = 3, py::arg("m") = 3, py::arg("budget") = 800,
      py::arg("seed") = 0, py::arg("joint") = false);

  m.def(
      "run",
      [](const KnapsackInstance& inst, int p, int m_steps, int budget, std::uint64_t seed,
         long shots, bool joint) {
        return report_to_dict(run(inst, p, m_steps, budget, seed, shots, joint));
      },
      py::arg("instance"), py::arg("p") = 3, py::arg("m") = 3, py::arg("budget") = 800,
      py::arg("seed") = 0, py::arg("shots") = 0, py::arg("joint") = false);

  m.def(
      "run_report_json",
      [](const KnapsackInstance& inst, int p, int m_steps, int budget, std::uint64_t seed,
         long shots, bool joint) {
        return report_to_json(run(inst, p, m_steps, budget, seed, shots, joint)).dump(2);
      },
      py::arg("instance"), py::arg("p") = 3, py::arg("m") = 3, py::arg("budget") = 800,
      py::arg("seed") = 0, py::arg("shots") = 0, py::arg("joint") = false,
      "The run report serialized exactly as the CLI writes it");
}
