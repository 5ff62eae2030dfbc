#include "knapqaoa/fixtures.hpp"

#include <stdexcept>

namespace knapqaoa {

namespace {

FixtureInstance make(std::string name, std::vector<std::string> tickers,
                     std::vector<double> values, std::int64_t capacity, std::string reference_bits,
                     int qubits) {
  KnapsackInstance inst;
  inst.values = std::move(values);
  inst.weights.assign(inst.values.size(), 1);
  inst.capacity = capacity;
  return {std::move(name), std::move(tickers), std::move(inst), std::move(reference_bits), qubits};
}

std::vector<FixtureInstance> build_fixtures() {
  std::vector<FixtureInstance> out;
  out.push_back(make("stocks2", {"MSFT", "AAPL"}, {0.2430, 0.2602}, 1, "01", 7));
  out.push_back(make("stocks3", {"MSFT", "AAPL", "NVDA"}, {0.2430, 0.2602, 0.2430}, 1, "010", 8));
  out.push_back(make("stocks4", {"MSFT", "AAPL", "GOOGL", "NVDA"},
                     {0.2430, 0.2602, 0.1047, 0.2430}, 2, "1100", 10));
  out.push_back(make("stocks5", {"MSFT", "AAPL", "GOOGL", "AMZN", "NVDA"},
                     {0.2430, 0.2602, 0.1047, 0.0716, 0.2430}, 2, "01001", 11));
  out.push_back(make("stocks6", {"MSFT", "AAPL", "GOOGL", "AMZN", "NVDA", "TSLA"},
                     {0.2430, 0.2602, 0.1047, 0.0716, 0.2430, 0.4203}, 3, "010011", 12));
  out.push_back(make("stocks7", {"MSFT", "AAPL", "GOOGL", "AMZN", "NVDA", "TSLA", "NFLX"},
                     {0.2430, 0.1870, 0.1749, 0.1898, 0.2856, 0.4203, 0.0797}, 3, "0100110", 13));
  out.push_back(make("stocks8", {"MSFT", "AAPL", "GOOGL", "AMZN", "NVDA", "TSLA", "NFLX", "V"},
                     {0.2430, 0.1899, 0.1780, 0.1903, 0.2874, 0.4203, 0.0797, 0.1341}, 4,
                     "11001100", 15));
  return out;
}

}  // namespace

const std::vector<FixtureInstance>& table_fixtures() {
  static const std::vector<FixtureInstance> fixtures = build_fixtures();
  return fixtures;
}

const FixtureInstance& fixture(const std::string& name) {
  for (const auto& f : table_fixtures()) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown fixture '" + name + "' (expected stocks2..stocks8)");
}

}  // namespace knapqaoa
