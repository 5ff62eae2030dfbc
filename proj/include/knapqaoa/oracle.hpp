#pragma once

#include <cstdint>

#include "knapqaoa/knapsack.hpp"
#include "knapqaoa/statevector.hpp"

namespace knapqaoa {

/// Parameters of the capacity check. With offset c0 = 2^k - C - 1 the
/// constraint w(x) <= C becomes "bits k and above of w(x) + c0 are all
/// zero", which one multi-controlled NOT can test.
struct OracleParams {
  int threshold_bit = 0;      // k
  std::int64_t offset = 0;    // c0
  int weight_qubits = 0;      // q_w, sized so w_total + c0 never overflows

  void validate(const KnapsackInstance& inst) const;
};

/// k is the smallest integer with 2^k >= capacity + 1; the weight register
/// is wide enough for the largest possible content, total weight + offset.
OracleParams derive_oracle_params(const KnapsackInstance& inst);

/// Contiguous layout: choice qubits 0..N-1, weight register next, then the
/// three ancillas. Total N + q_w + 3.
RegisterLayout standard_layout(const KnapsackInstance& inst);
RegisterLayout standard_layout(const KnapsackInstance& inst, const OracleParams& params);

/// U1: adds w(x) + c0 into the weight register (Fourier-basis additions,
/// one pass of phase rotations per item plus the unconditional offset).
/// The inverse subtracts it again.
void apply_u1(StateVector& state, const RegisterLayout& layout, const KnapsackInstance& inst,
              const OracleParams& params, bool inverse = false);

/// U2: flips the flag qubit on components whose weight-register bits at
/// positions >= k are all zero, i.e. w(x) <= capacity.
void apply_u2(StateVector& state, const RegisterLayout& layout, const OracleParams& params,
              int flag_qubit);

/// Full oracle U1 U2 U1^dagger: flag ^= f(x), weight register restored to
/// |0>. Throws std::logic_error when called with a dirty weight register.
void apply_oracle(StateVector& state, const RegisterLayout& layout, const KnapsackInstance& inst,
                  const OracleParams& params, int flag_qubit);

/// Probability mass on components whose weight register is not |0>.
double nonzero_weight_mass(const StateVector& state, const RegisterLayout& layout);

}  // namespace knapqaoa
