#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knapqaoa {

/// Item selection: bits[i] == 1 means item i is taken. Printed left to right
/// from index 0; this ordering is shared with the choice register (qubit i
/// holds item i).
using Bits = std::vector<std::uint8_t>;

std::string bits_to_string(const Bits& bits);
Bits bits_from_string(const std::string& text);

/// A 0/1 knapsack: maximize the total value of the selected items subject to
/// their total integer weight staying within the capacity.
struct KnapsackInstance {
  std::vector<double> values;
  std::vector<std::int64_t> weights;
  std::int64_t capacity = 0;

  std::size_t size() const { return values.size(); }
  std::int64_t total_weight() const;

  /// True when the capacity admits every selection (the constraint never
  /// binds). Accepted, but callers may want to flag it.
  bool unconstrained() const { return capacity >= total_weight(); }

  /// Throws std::invalid_argument on malformed instances: empty, mismatched
  /// lengths, a negative weight or capacity, or all weights zero.
  void validate() const;
};

std::int64_t total_weight(const Bits& selection, const KnapsackInstance& inst);
double total_value(const Bits& selection, const KnapsackInstance& inst);
bool is_feasible(const Bits& selection, const KnapsackInstance& inst);

struct BksSolution {
  Bits bits;
  double value = 0.0;
  std::int64_t weight = 0;
};

/// Exhaustive search over all 2^N selections. Guarded to N <= 25. Ties on
/// value resolve to the lexicographically smallest bit sequence (item 0
/// compared first).
BksSolution solve_brute_force(const KnapsackInstance& inst);

/// Dynamic program over integer capacity with solution recovery. Same
/// optimum and same tie-break rule as solve_brute_force on any instance.
BksSolution solve_dp(const KnapsackInstance& inst);

/// achieved / optimal. Throws std::invalid_argument when optimal <= 0.
double approximation_ratio(double achieved, double optimal);

}  // namespace knapqaoa
