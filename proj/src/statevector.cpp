#include "knapqaoa/statevector.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace knapqaoa {

void RegisterLayout::validate() const {
  const int total = total_qubits();
  std::unordered_set<int> seen;
  auto add = [&](int q) {
    if (q < 0 || q >= total) throw std::invalid_argument("layout: qubit index out of range");
    if (!seen.insert(q).second) throw std::invalid_argument("layout: duplicate qubit index");
  };
  for (int q : choice) add(q);
  for (int q : weight) add(q);
  add(ancilla_fn);
  add(ancilla_fx);
  add(ancilla_fi);
  if (choice.empty()) throw std::invalid_argument("layout: empty choice register");
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw std::invalid_argument("statevector: bad qubit count");
  amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

void StateVector::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) throw std::invalid_argument("statevector: qubit out of range");
}

double StateVector::norm_sq() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

void StateVector::assert_normalized(double tol) const {
  if (std::abs(norm_sq() - 1.0) > tol) {
    throw std::logic_error("statevector: norm drifted from 1");
  }
}

void StateVector::apply_h(int qubit) {
  check_qubit(qubit);
  const std::size_t mask = std::size_t{1} << qubit;
  const std::size_t lo = mask - 1;
  const std::size_t hi = ~lo;
  constexpr double inv_sqrt2 = 0.7071067811865475244;
  for (std::size_t i = 0; i < amps_.size() / 2; ++i) {
    const std::size_t i0 = ((i & hi) << 1) | (i & lo);
    const std::size_t i1 = i0 | mask;
    const Complex a0 = amps_[i0];
    const Complex a1 = amps_[i1];
    amps_[i0] = inv_sqrt2 * (a0 + a1);
    amps_[i1] = inv_sqrt2 * (a0 - a1);
  }
}

void StateVector::apply_x(int qubit) {
  check_qubit(qubit);
  const std::size_t mask = std::size_t{1} << qubit;
  const std::size_t lo = mask - 1;
  const std::size_t hi = ~lo;
  for (std::size_t i = 0; i < amps_.size() / 2; ++i) {
    const std::size_t i0 = ((i & hi) << 1) | (i & lo);
    std::swap(amps_[i0], amps_[i0 | mask]);
  }
}

void StateVector::apply_rx(int qubit, double theta) {
  check_qubit(qubit);
  const double c = std::cos(theta / 2.0);
  const Complex ms{0.0, -std::sin(theta / 2.0)};
  const std::size_t mask = std::size_t{1} << qubit;
  const std::size_t lo = mask - 1;
  const std::size_t hi = ~lo;
  for (std::size_t i = 0; i < amps_.size() / 2; ++i) {
    const std::size_t i0 = ((i & hi) << 1) | (i & lo);
    const std::size_t i1 = i0 | mask;
    const Complex a0 = amps_[i0];
    const Complex a1 = amps_[i1];
    amps_[i0] = c * a0 + ms * a1;
    amps_[i1] = ms * a0 + c * a1;
  }
}

void StateVector::apply_phase(int qubit, double phi) {
  check_qubit(qubit);
  const Complex rot = std::polar(1.0, phi);
  const std::size_t mask = std::size_t{1} << qubit;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) amps_[i] *= rot;
  }
}

void StateVector::apply_cphase(int control, int target, double phi) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw std::invalid_argument("cphase: control equals target");
  const Complex rot = std::polar(1.0, phi);
  const std::size_t both = (std::size_t{1} << control) | (std::size_t{1} << target);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & both) == both) amps_[i] *= rot;
  }
}

void StateVector::apply_crx(int control, int target, double theta) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw std::invalid_argument("crx: control equals target");
  const double c = std::cos(theta / 2.0);
  const Complex ms{0.0, -std::sin(theta / 2.0)};
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) {
      const std::size_t j = i | tmask;
      const Complex a0 = amps_[i];
      const Complex a1 = amps_[j];
      amps_[i] = c * a0 + ms * a1;
      amps_[j] = ms * a0 + c * a1;
    }
  }
}

void StateVector::apply_mcx(std::span<const Control> controls, int target) {
  check_qubit(target);
  std::size_t ctrl_mask = 0;
  std::size_t ctrl_pattern = 0;
  for (const auto& c : controls) {
    check_qubit(c.qubit);
    if (c.qubit == target) throw std::invalid_argument("mcx: target among controls");
    const std::size_t bit = std::size_t{1} << c.qubit;
    if (ctrl_mask & bit) throw std::invalid_argument("mcx: duplicate control");
    ctrl_mask |= bit;
    if (c.polarity) ctrl_pattern |= bit;
  }
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (!(i & tmask) && (i & ctrl_mask) == ctrl_pattern) {
      std::swap(amps_[i], amps_[i | tmask]);
    }
  }
}

void StateVector::apply_qft(std::span<const int> reg, bool inverse) {
  const int n = static_cast<int>(reg.size());
  std::unordered_set<int> seen;
  for (int q : reg) {
    check_qubit(q);
    if (!seen.insert(q).second) throw std::invalid_argument("qft: duplicate register qubit");
  }
  if (!inverse) {
    for (int t = n - 1; t >= 0; --t) {
      apply_h(reg[t]);
      for (int s = t - 1; s >= 0; --s) {
        apply_cphase(reg[s], reg[t], 2.0 * std::numbers::pi / static_cast<double>(std::size_t{1} << (t - s + 1)));
      }
    }
  } else {
    for (int t = 0; t < n; ++t) {
      for (int s = 0; s < t; ++s) {
        apply_cphase(reg[s], reg[t], -2.0 * std::numbers::pi / static_cast<double>(std::size_t{1} << (t - s + 1)));
      }
      apply_h(reg[t]);
    }
  }
}

void StateVector::dump(std::ostream& out, double threshold) const {
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (std::abs(amps_[i]) > threshold) {
      out << i << ' ' << amps_[i].real() << ' ' << amps_[i].imag() << '\n';
    }
  }
}

StateVector init_state(const RegisterLayout& layout) {
  layout.validate();
  StateVector state(layout.total_qubits());
  for (int q : layout.choice) state.apply_h(q);
  return state;
}

std::vector<double> choice_marginal(const StateVector& state, const RegisterLayout& layout) {
  layout.validate();
  const int n_items = static_cast<int>(layout.choice.size());
  std::vector<double> marginal(std::size_t{1} << n_items, 0.0);
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double p = std::norm(state.amp(i));
    if (p == 0.0) continue;
    std::size_t key = 0;
    for (int b = 0; b < n_items; ++b) {
      if (i & (std::size_t{1} << layout.choice[b])) key |= std::size_t{1} << b;
    }
    marginal[key] += p;
  }
  return marginal;
}

std::map<std::string, double> choice_distribution(const StateVector& state,
                                                  const RegisterLayout& layout) {
  const auto marginal = choice_marginal(state, layout);
  const int n_items = static_cast<int>(layout.choice.size());
  std::map<std::string, double> dist;
  for (std::size_t key = 0; key < marginal.size(); ++key) {
    dist[choice_index_to_string(key, n_items)] = marginal[key];
  }
  return dist;
}

std::string choice_index_to_string(std::uint64_t index, int n_items) {
  std::string out(static_cast<std::size_t>(n_items), '0');
  for (int i = 0; i < n_items; ++i) {
    if (index & (std::uint64_t{1} << i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

}  // namespace knapqaoa
