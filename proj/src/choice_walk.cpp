#include "knapqaoa/choice_walk.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace knapqaoa {

ChoiceWalk::ChoiceWalk(const KnapsackInstance& inst) {
  inst.validate();
  n_items_ = static_cast<int>(inst.size());
  if (n_items_ > 25) throw std::invalid_argument("choice walk: N > 25");
  const std::size_t dim = std::size_t{1} << n_items_;
  feasible_.resize(dim);
  value_.resize(dim);
  Bits bits(inst.size(), 0);
  for (std::size_t x = 0; x < dim; ++x) {
    for (int i = 0; i < n_items_; ++i) bits[i] = (x >> i) & 1u;
    feasible_[x] = is_feasible(bits, inst) ? 1 : 0;
    value_[x] = total_value(bits, inst);
  }
  amps_.assign(dim, {0.0, 0.0});
  amps_[0] = 1.0;
}

void ChoiceWalk::reset_uniform() {
  const double a = 1.0 / std::sqrt(static_cast<double>(amps_.size()));
  amps_.assign(amps_.size(), {a, 0.0});
}

void ChoiceWalk::set_amplitudes(std::vector<std::complex<double>> amps) {
  if (amps.size() != amps_.size()) throw std::invalid_argument("choice walk: wrong amplitude count");
  amps_ = std::move(amps);
}

void ChoiceWalk::apply_phase_separator(double gamma) {
  for (int i = 0; i < n_items_; ++i) {
    const std::complex<double> rot = std::polar(1.0, -gamma * value_[std::size_t{1} << i]);
    const std::size_t mask = std::size_t{1} << i;
    for (std::size_t x = 0; x < amps_.size(); ++x) {
      if (x & mask) amps_[x] *= rot;
    }
  }
}

void ChoiceWalk::apply_mixer(double beta, int trotter_steps) {
  if (trotter_steps < 1) throw std::invalid_argument("choice walk: trotter steps must be >= 1");
  const double bound = static_cast<double>(trotter_steps) * std::numbers::pi;
  if (!(beta >= 0.0) || !(beta < bound)) {
    throw std::invalid_argument("choice walk: beta outside [0, m*pi)");
  }
  // theta = 2*beta/m per partial mixer; the RX half-angle is beta/m.
  const double c = std::cos(beta / static_cast<double>(trotter_steps));
  const std::complex<double> ms{0.0, -std::sin(beta / static_cast<double>(trotter_steps))};
  for (int rep = 0; rep < trotter_steps; ++rep) {
    for (int i = 0; i < n_items_; ++i) {
      const std::size_t mask = std::size_t{1} << i;
      for (std::size_t x = 0; x < amps_.size(); ++x) {
        if (x & mask) continue;
        const std::size_t y = x | mask;
        if (!feasible_[x] || !feasible_[y]) continue;
        const std::complex<double> a0 = amps_[x];
        const std::complex<double> a1 = amps_[y];
        amps_[x] = c * a0 + ms * a1;
        amps_[y] = ms * a0 + c * a1;
      }
    }
  }
}

double ChoiceWalk::expectation() const {
  double total = 0.0;
  for (std::size_t x = 0; x < amps_.size(); ++x) {
    total += std::norm(amps_[x]) * value_[x];
  }
  return total;
}

}  // namespace knapqaoa
