#include "knapqaoa/mixer.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace knapqaoa {

namespace {
constexpr double kCleanAncillaTol = 1e-9;
}

MixerConfig MixerConfig::for_steps(int m) {
  if (m < 1) throw std::invalid_argument("mixer: trotter steps must be >= 1");
  return {m, static_cast<double>(m) * std::numbers::pi};
}

void apply_vi(StateVector& state, const RegisterLayout& layout, const KnapsackInstance& inst,
              const OracleParams& params, int item, bool inverse) {
  if (item < 0 || static_cast<std::size_t>(item) >= inst.size()) {
    throw std::invalid_argument("apply_vi: item out of range");
  }
  const int qi = layout.choice[item];
  if (!inverse) {
    if (ancilla_stray_mass(state, layout) > kCleanAncillaTol) {
      throw std::logic_error("apply_vi: mixer ancillas not clean");
    }
    // Neighbor feasibility f(n_i(x)), then own feasibility f(x), then the AND.
    state.apply_x(qi);
    apply_oracle(state, layout, inst, params, layout.ancilla_fn);
    state.apply_x(qi);
    apply_oracle(state, layout, inst, params, layout.ancilla_fx);
    const std::array<StateVector::Control, 2> both{{{layout.ancilla_fn, 1}, {layout.ancilla_fx, 1}}};
    state.apply_mcx(both, layout.ancilla_fi);
  } else {
    const std::array<StateVector::Control, 2> both{{{layout.ancilla_fn, 1}, {layout.ancilla_fx, 1}}};
    state.apply_mcx(both, layout.ancilla_fi);
    apply_oracle(state, layout, inst, params, layout.ancilla_fx);
    state.apply_x(qi);
    apply_oracle(state, layout, inst, params, layout.ancilla_fn);
    state.apply_x(qi);
  }
}

void apply_partial_mixer(StateVector& state, const RegisterLayout& layout,
                         const KnapsackInstance& inst, const OracleParams& params, int item,
                         double theta) {
  apply_vi(state, layout, inst, params, item, /*inverse=*/false);
  state.apply_crx(layout.ancilla_fi, layout.choice[item], theta);
  apply_vi(state, layout, inst, params, item, /*inverse=*/true);
}

void apply_mixer(StateVector& state, const RegisterLayout& layout, const KnapsackInstance& inst,
                 const OracleParams& params, double beta, int trotter_steps) {
  const MixerConfig config = MixerConfig::for_steps(trotter_steps);
  if (!(beta >= 0.0) || !(beta < config.beta_bound)) {
    throw std::invalid_argument("apply_mixer: beta outside [0, m*pi)");
  }
  const double theta = 2.0 * beta / static_cast<double>(trotter_steps);
  for (int rep = 0; rep < trotter_steps; ++rep) {
    for (std::size_t i = 0; i < inst.size(); ++i) {
      apply_partial_mixer(state, layout, inst, params, static_cast<int>(i), theta);
    }
  }
}

void apply_phase_separator(StateVector& state, const RegisterLayout& layout,
                           const KnapsackInstance& inst, double gamma) {
  if (layout.choice.size() != inst.size()) {
    throw std::invalid_argument("phase separator: layout does not match instance");
  }
  for (std::size_t i = 0; i < inst.size(); ++i) {
    state.apply_phase(layout.choice[i], -gamma * inst.values[i]);
  }
}

double ancilla_stray_mass(const StateVector& state, const RegisterLayout& layout) {
  const std::size_t amask = (std::size_t{1} << layout.ancilla_fn) |
                            (std::size_t{1} << layout.ancilla_fx) |
                            (std::size_t{1} << layout.ancilla_fi);
  double mass = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i & amask) mass += std::norm(state.amp(i));
  }
  return mass;
}

}  // namespace knapqaoa
