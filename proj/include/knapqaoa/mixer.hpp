#pragma once

#include "knapqaoa/knapsack.hpp"
#include "knapqaoa/oracle.hpp"
#include "knapqaoa/statevector.hpp"

namespace knapqaoa {

/// Trotterization settings for the walk mixer. The mixing angle domain
/// widens with the step count: beta in [0, m*pi).
struct MixerConfig {
  int trotter_steps = 1;
  double beta_bound = 0.0;

  static MixerConfig for_steps(int m);
};

/// V_i: writes (f(n_i(x)), f(x), f(x) AND f(n_i(x))) into the three mixer
/// ancillas. n_i(x) is x with bit i flipped; the neighbor check works by
/// X-conjugating choice qubit i around an oracle call. The inverse reverses
/// the gate list. Forward application throws std::logic_error on dirty
/// ancillas.
void apply_vi(StateVector& state, const RegisterLayout& layout, const KnapsackInstance& inst,
              const OracleParams& params, int item, bool inverse = false);

/// One walk step for item i: V_i, RX(theta) on choice qubit i controlled by
/// the pair-feasibility ancilla, V_i^dagger. Ancillas end clean.
void apply_partial_mixer(StateVector& state, const RegisterLayout& layout,
                         const KnapsackInstance& inst, const OracleParams& params, int item,
                         double theta);

/// Trotterized walk mixer: m sweeps of the partial mixers i = 0..N-1, each
/// with angle 2*beta/m. Requires beta in [0, m*pi).
void apply_mixer(StateVector& state, const RegisterLayout& layout, const KnapsackInstance& inst,
                 const OracleParams& params, double beta, int trotter_steps);

/// Diagonal phase e^{-i gamma v(x)} per choice component, one PHASE gate per
/// item.
void apply_phase_separator(StateVector& state, const RegisterLayout& layout,
                           const KnapsackInstance& inst, double gamma);

/// Probability mass on components where any mixer ancilla is set.
double ancilla_stray_mass(const StateVector& state, const RegisterLayout& layout);

}  // namespace knapqaoa
