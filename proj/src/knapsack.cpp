#include "knapqaoa/knapsack.hpp"

#include <algorithm>
#include <stdexcept>

namespace knapqaoa {

std::string bits_to_string(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

Bits bits_from_string(const std::string& text) {
  Bits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bits_from_string: invalid character '" + std::string(1, c) + "'");
    }
    out.push_back(c == '1' ? 1 : 0);
  }
  return out;
}

std::int64_t KnapsackInstance::total_weight() const {
  std::int64_t total = 0;
  for (auto w : weights) total += w;
  return total;
}

void KnapsackInstance::validate() const {
  if (values.empty()) throw std::invalid_argument("knapsack: no items");
  if (values.size() != weights.size()) {
    throw std::invalid_argument("knapsack: values/weights length mismatch");
  }
  if (capacity < 0) throw std::invalid_argument("knapsack: negative capacity");
  bool any_positive = false;
  for (auto w : weights) {
    if (w < 0) throw std::invalid_argument("knapsack: negative weight");
    if (w > 0) any_positive = true;
  }
  if (!any_positive) throw std::invalid_argument("knapsack: all weights zero");
}

namespace {

void check_length(const Bits& selection, const KnapsackInstance& inst) {
  if (selection.size() != inst.size()) {
    throw std::invalid_argument("selection length does not match instance size");
  }
}

}  // namespace

std::int64_t total_weight(const Bits& selection, const KnapsackInstance& inst) {
  check_length(selection, inst);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < selection.size(); ++i) {
    if (selection[i]) total += inst.weights[i];
  }
  return total;
}

double total_value(const Bits& selection, const KnapsackInstance& inst) {
  check_length(selection, inst);
  double total = 0.0;
  for (std::size_t i = 0; i < selection.size(); ++i) {
    if (selection[i]) total += inst.values[i];
  }
  return total;
}

bool is_feasible(const Bits& selection, const KnapsackInstance& inst) {
  return total_weight(selection, inst) <= inst.capacity;
}

BksSolution solve_brute_force(const KnapsackInstance& inst) {
  inst.validate();
  const std::size_t n = inst.size();
  if (n > 25) throw std::invalid_argument("solve_brute_force: N > 25");

  // The empty selection is always feasible.
  Bits best_bits(n, 0);
  double best_value = 0.0;
  Bits bits(n, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1u;
    if (total_weight(bits, inst) > inst.capacity) continue;
    const double value = total_value(bits, inst);
    if (value > best_value ||
        (value == best_value &&
         std::lexicographical_compare(bits.begin(), bits.end(), best_bits.begin(), best_bits.end()))) {
      best_value = value;
      best_bits = bits;
    }
  }
  return {best_bits, total_value(best_bits, inst), total_weight(best_bits, inst)};
}

BksSolution solve_dp(const KnapsackInstance& inst) {
  inst.validate();
  const std::size_t n = inst.size();
  // Capacities beyond the total weight change nothing.
  const std::int64_t cap = std::min(inst.capacity, inst.total_weight());

  // best[i][c]: optimal value over items i..n-1 with remaining capacity c.
  std::vector<std::vector<double>> best(n + 1, std::vector<double>(static_cast<std::size_t>(cap) + 1, 0.0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::int64_t c = 0; c <= cap; ++c) {
      double v = best[i + 1][c];
      if (inst.weights[i] <= c) {
        v = std::max(v, inst.values[i] + best[i + 1][c - inst.weights[i]]);
      }
      best[i][c] = v;
    }
  }

  // Preferring to skip whenever skipping still attains the optimum yields the
  // lexicographically smallest optimal selection.
  Bits bits(n, 0);
  std::int64_t c = cap;
  for (std::size_t i = 0; i < n; ++i) {
    if (best[i][c] == best[i + 1][c]) continue;
    bits[i] = 1;
    c -= inst.weights[i];
  }
  return {bits, total_value(bits, inst), total_weight(bits, inst)};
}

double approximation_ratio(double achieved, double optimal) {
  if (!(optimal > 0.0)) throw std::invalid_argument("approximation_ratio: optimal must be > 0");
  return achieved / optimal;
}

}  // namespace knapqaoa
