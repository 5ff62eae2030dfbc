#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace knapqaoa {

/// Qubit assignment for one problem instance: N choice qubits (item i on
/// choice[i]), the weight register (weight[0] = least significant bit), and
/// the three mixer ancillas. ancilla_fi doubles as the oracle flag target
/// when only f(x) is needed.
struct RegisterLayout {
  std::vector<int> choice;
  std::vector<int> weight;
  int ancilla_fn = -1;
  int ancilla_fx = -1;
  int ancilla_fi = -1;

  int total_qubits() const {
    return static_cast<int>(choice.size() + weight.size()) + 3;
  }

  /// Throws std::invalid_argument unless all indices are distinct and within
  /// [0, total_qubits()).
  void validate() const;
};

/// Dense statevector over n qubits, amplitudes indexed little-endian: bit j
/// of the basis index is qubit j. The 2-norm stays 1 (checked, never
/// silently renormalized).
class StateVector {
 public:
  using Complex = std::complex<double>;

  explicit StateVector(int n_qubits);

  int num_qubits() const { return n_qubits_; }
  std::size_t size() const { return amps_.size(); }
  Complex& amp(std::size_t index) { return amps_[index]; }
  const Complex& amp(std::size_t index) const { return amps_[index]; }
  const std::vector<Complex>& amplitudes() const { return amps_; }

  double norm_sq() const;
  /// Throws std::logic_error when |norm^2 - 1| exceeds tol.
  void assert_normalized(double tol = 1e-10) const;

  void apply_h(int qubit);
  void apply_x(int qubit);
  /// RX(theta) = cos(theta/2) I - i sin(theta/2) X.
  void apply_rx(int qubit, double theta);
  /// diag(1, e^{i phi}).
  void apply_phase(int qubit, double phi);
  /// e^{i phi} on components with control = 1 and target = 1.
  void apply_cphase(int control, int target, double phi);
  /// RX(theta) on the target within the control = 1 subspace.
  void apply_crx(int control, int target, double theta);

  struct Control {
    int qubit;
    int polarity = 1;  // 1: fires on |1>, 0: fires on |0>
  };
  /// X on the target for components where every control matches its
  /// polarity. No controls means a plain X.
  void apply_mcx(std::span<const Control> controls, int target);

  /// Fourier transform on the register (reg[0] = least significant bit),
  /// Coppersmith circuit without the terminal bit-reversal swaps. After the
  /// forward transform of a basis integer a, qubit reg[t] carries the
  /// relative phase e^{2 pi i a / 2^(t+1)}; adding an integer b in this
  /// basis is therefore PHASE(2 pi b / 2^(t+1)) on each reg[t], and the
  /// inverse transform brings (a + b) mod 2^n back to the computational
  /// basis.
  void apply_qft(std::span<const int> reg, bool inverse);

  /// Writes one `index real imag` line per amplitude above the threshold.
  void dump(std::ostream& out, double threshold = 1e-12) const;

 private:
  void check_qubit(int qubit) const;

  int n_qubits_;
  std::vector<Complex> amps_;
};

/// |+>^N on the choice qubits, |0> everywhere else.
StateVector init_state(const RegisterLayout& layout);

/// Marginal probability of each choice-register value; index bit i = item i.
/// Sums to 1 within 1e-9 for a normalized state.
std::vector<double> choice_marginal(const StateVector& state, const RegisterLayout& layout);

/// Same marginal keyed by printed bitstring.
std::map<std::string, double> choice_distribution(const StateVector& state,
                                                  const RegisterLayout& layout);

/// Little-endian choice index -> printed bitstring ("bit i = item i").
std::string choice_index_to_string(std::uint64_t index, int n_items);

}  // namespace knapqaoa
