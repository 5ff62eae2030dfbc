#include "knapqaoa/oracle.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace knapqaoa {

namespace {

constexpr double kCleanWeightTol = 1e-9;

// Phase rotation placing "+value" into the swapless Fourier basis: reg[t]
// accumulates 2*pi*value / 2^(t+1). Reduced modulo the period before the
// trig call.
double addition_angle(std::int64_t value, int t, bool negate) {
  const std::int64_t period = std::int64_t{1} << (t + 1);
  const std::int64_t reduced = ((value % period) + period) % period;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduced) / static_cast<double>(period);
  return negate ? -angle : angle;
}

}  // namespace

void OracleParams::validate(const KnapsackInstance& inst) const {
  if (threshold_bit < 0 || weight_qubits < 1 || offset < 0) {
    throw std::invalid_argument("oracle params: malformed");
  }
  if ((std::int64_t{1} << threshold_bit) != inst.capacity + offset + 1) {
    throw std::invalid_argument("oracle params: 2^k != capacity + offset + 1");
  }
  const std::int64_t max_content = inst.total_weight() + offset;
  if ((std::int64_t{1} << weight_qubits) <= max_content) {
    throw std::invalid_argument("oracle params: weight register overflows");
  }
}

OracleParams derive_oracle_params(const KnapsackInstance& inst) {
  inst.validate();
  OracleParams params;
  const auto target = static_cast<std::uint64_t>(inst.capacity) + 1;
  params.threshold_bit = static_cast<int>(std::bit_width(target - 1));  // smallest k: 2^k >= C+1
  params.offset = (std::int64_t{1} << params.threshold_bit) - inst.capacity - 1;
  const auto max_content = static_cast<std::uint64_t>(inst.total_weight() + params.offset);
  params.weight_qubits = std::max(1, static_cast<int>(std::bit_width(max_content)));
  params.validate(inst);
  return params;
}

RegisterLayout standard_layout(const KnapsackInstance& inst, const OracleParams& params) {
  const int n = static_cast<int>(inst.size());
  RegisterLayout layout;
  for (int i = 0; i < n; ++i) layout.choice.push_back(i);
  for (int t = 0; t < params.weight_qubits; ++t) layout.weight.push_back(n + t);
  layout.ancilla_fn = n + params.weight_qubits;
  layout.ancilla_fx = n + params.weight_qubits + 1;
  layout.ancilla_fi = n + params.weight_qubits + 2;
  layout.validate();
  return layout;
}

RegisterLayout standard_layout(const KnapsackInstance& inst) {
  return standard_layout(inst, derive_oracle_params(inst));
}

void apply_u1(StateVector& state, const RegisterLayout& layout, const KnapsackInstance& inst,
              const OracleParams& params, bool inverse) {
  if (layout.weight.size() != static_cast<std::size_t>(params.weight_qubits) ||
      layout.choice.size() != inst.size()) {
    throw std::invalid_argument("apply_u1: layout does not match instance/params");
  }
  const std::span<const int> wreg(layout.weight);
  state.apply_qft(wreg, /*inverse=*/false);
  for (int t = 0; t < params.weight_qubits; ++t) {
    if (params.offset != 0) {
      state.apply_phase(layout.weight[t], addition_angle(params.offset, t, inverse));
    }
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (inst.weights[i] == 0) continue;
      state.apply_cphase(layout.choice[i], layout.weight[t], addition_angle(inst.weights[i], t, inverse));
    }
  }
  state.apply_qft(wreg, /*inverse=*/true);
}

void apply_u2(StateVector& state, const RegisterLayout& layout, const OracleParams& params,
              int flag_qubit) {
  std::vector<StateVector::Control> controls;
  for (int t = params.threshold_bit; t < params.weight_qubits; ++t) {
    controls.push_back({layout.weight[t], 0});
  }
  state.apply_mcx(controls, flag_qubit);
}

void apply_oracle(StateVector& state, const RegisterLayout& layout, const KnapsackInstance& inst,
                  const OracleParams& params, int flag_qubit) {
  if (nonzero_weight_mass(state, layout) > kCleanWeightTol) {
    throw std::logic_error("apply_oracle: weight register not clean");
  }
  apply_u1(state, layout, inst, params, /*inverse=*/false);
  apply_u2(state, layout, params, flag_qubit);
  apply_u1(state, layout, inst, params, /*inverse=*/true);
}

double nonzero_weight_mass(const StateVector& state, const RegisterLayout& layout) {
  std::size_t wmask = 0;
  for (int q : layout.weight) wmask |= std::size_t{1} << q;
  double mass = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i & wmask) mass += std::norm(state.amp(i));
  }
  return mass;
}

}  // namespace knapqaoa
