#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knapqaoa/knapsack.hpp"
#include "knapqaoa/oracle.hpp"
#include "knapqaoa/statevector.hpp"

namespace knapqaoa {

/// Per-layer variational angles. gammas in [0, 2*pi), betas in
/// [0, trotter_steps * pi).
struct QaoaSchedule {
  int layers = 0;
  int trotter_steps = 1;
  std::vector<double> gammas;
  std::vector<double> betas;

  void validate() const;
};

struct FeasibleBest {
  Bits bits;
  double value = 0.0;
  double probability = 0.0;
};

struct RunReport {
  KnapsackInstance instance;
  std::vector<std::string> tickers;  // may be empty for anonymous instances
  QaoaSchedule schedule;
  std::vector<std::pair<std::string, double>> distribution;  // descending probability
  double expectation = 0.0;
  FeasibleBest best_feasible;
  BksSolution bks;
  double ratio_best = 0.0;
  double ratio_expectation = 0.0;
  long evaluations = 0;
  long budget = 0;
  std::uint64_t seed = 0;
  long shots = 0;
  std::optional<double> wall_ms;  // filled by callers that time the run
};

/// Gate-level circuit: uniform superposition on the choice register, then p
/// rounds of phase separator and Trotterized walk mixer.
StateVector evolve(const KnapsackInstance& inst, const RegisterLayout& layout,
                   const QaoaSchedule& schedule);

/// Probability-weighted total value over the full choice distribution
/// (infeasible selections contribute their raw value).
double expectation(const StateVector& state, const RegisterLayout& layout,
                   const KnapsackInstance& inst);

struct OptimizeResult {
  QaoaSchedule schedule;
  long evaluations = 0;
  double expectation = 0.0;
};

/// Deterministic depth-progressive search. Each new layer's (gamma, beta)
/// comes from a coarse grid of `budget` points over [0,2pi) x [0,m*pi) plus
/// bounded Nelder-Mead refinement of the best starts; all angles placed so
/// far are then re-optimized together with a joint simplex pass (extending
/// a frozen schedule plateaus well short of what the circuit can reach).
/// `joint` adds one deeper final polish over all 2p parameters. Identical
/// inputs always produce identical schedules.
OptimizeResult optimize(const KnapsackInstance& inst, int layers, int trotter_steps, int budget,
                        std::uint64_t seed, bool joint = false);

/// Full pipeline: optimize, evolve the gate-level circuit at the optimum,
/// measure (exact probabilities, or multinomial sampling when shots > 0),
/// and score against the dynamic-programming optimum.
RunReport run(const KnapsackInstance& inst, int layers, int trotter_steps, int budget,
              std::uint64_t seed, long shots = 0, bool joint = false,
              std::vector<std::string> tickers = {});

}  // namespace knapqaoa
