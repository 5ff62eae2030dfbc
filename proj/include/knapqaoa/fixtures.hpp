#pragma once

#include <string>
#include <vector>

#include "knapqaoa/knapsack.hpp"

namespace knapqaoa {

/// One bundled portfolio-selection instance: annualized expected returns as
/// values, unit weights, capacity = floor(N/2), together with the published
/// reference solution string and the qubit count its circuit needs.
struct FixtureInstance {
  std::string name;
  std::vector<std::string> tickers;
  KnapsackInstance instance;
  std::string reference_bits;  // published best-known-solution string
  int qubits = 0;
};

/// The seven canonical instances, stocks2..stocks8.
const std::vector<FixtureInstance>& table_fixtures();

/// Throws std::invalid_argument for unknown names.
const FixtureInstance& fixture(const std::string& name);

}  // namespace knapqaoa
