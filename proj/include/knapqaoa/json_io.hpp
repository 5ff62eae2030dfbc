#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "knapqaoa/fixtures.hpp"
#include "knapqaoa/knapsack.hpp"
#include "knapqaoa/qaoa.hpp"

namespace knapqaoa {

using ordered_json = nlohmann::ordered_json;

/// {"tickers": [...], "values": [...], "weights": [...], "capacity": C}.
/// tickers may be omitted for anonymous instances.
ordered_json instance_to_json(const KnapsackInstance& inst,
                              const std::vector<std::string>& tickers = {});

/// Inverse of instance_to_json; validates the result. When tickers_out is
/// non-null it receives the tickers array (empty if absent).
KnapsackInstance instance_from_json(const ordered_json& j,
                                    std::vector<std::string>* tickers_out = nullptr);

/// The bundled instances in fixture-file form (array of entries carrying
/// name, tickers, values, weights, capacity, bks, qubits).
ordered_json fixtures_to_json();

ordered_json report_to_json(const RunReport& report);

ordered_json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const ordered_json& j);

}  // namespace knapqaoa
