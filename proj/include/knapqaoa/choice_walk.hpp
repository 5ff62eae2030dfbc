#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "knapqaoa/knapsack.hpp"

namespace knapqaoa {

/// Reduced evolution of the constrained-walk circuit on the choice register
/// alone. Between layers the weight register and mixer ancillas of the full
/// circuit are always |0>, so the whole QAOA evolution lives in the
/// 2^N-dimensional choice subspace; each partial mixer acts there as an
/// RX(theta) rotation on the pair (x, x with bit i flipped) exactly when
/// both endpoints are feasible. This class applies those rotations directly
/// from a classical feasibility table, producing the same unitary as the
/// gate-level circuit (cross-checked in tests) at a fraction of the cost.
/// The optimizer's candidate evaluations run on it; reported final states
/// always come from the gate-level circuit.
class ChoiceWalk {
 public:
  explicit ChoiceWalk(const KnapsackInstance& inst);

  int num_items() const { return n_items_; }
  std::size_t dimension() const { return amps_.size(); }

  /// Uniform superposition over all selections.
  void reset_uniform();
  void set_amplitudes(std::vector<std::complex<double>> amps);
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

  /// e^{-i gamma v_i} per set bit, mirroring the gate-level separator.
  void apply_phase_separator(double gamma);

  /// m sweeps of per-item pair rotations with angle 2*beta/m. Requires
  /// beta in [0, m*pi).
  void apply_mixer(double beta, int trotter_steps);

  /// Sum over selections of probability times total value.
  double expectation() const;

  const std::vector<double>& values() const { return value_; }
  bool feasible(std::size_t index) const { return feasible_[index] != 0; }

 private:
  int n_items_;
  std::vector<std::uint8_t> feasible_;
  std::vector<double> value_;
  std::vector<std::complex<double>> amps_;
};

}  // namespace knapqaoa
