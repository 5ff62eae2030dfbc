#include "knapqaoa/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "knapqaoa/choice_walk.hpp"
#include "knapqaoa/mixer.hpp"

namespace knapqaoa {

void QaoaSchedule::validate() const {
  if (layers < 0) throw std::invalid_argument("schedule: negative layer count");
  if (trotter_steps < 1) throw std::invalid_argument("schedule: trotter steps must be >= 1");
  if (gammas.size() != static_cast<std::size_t>(layers) ||
      betas.size() != static_cast<std::size_t>(layers)) {
    throw std::invalid_argument("schedule: angle count does not match layer count");
  }
  const double beta_bound = static_cast<double>(trotter_steps) * std::numbers::pi;
  for (double g : gammas) {
    if (!(g >= 0.0) || !(g < 2.0 * std::numbers::pi)) {
      throw std::invalid_argument("schedule: gamma outside [0, 2*pi)");
    }
  }
  for (double b : betas) {
    if (!(b >= 0.0) || !(b < beta_bound)) {
      throw std::invalid_argument("schedule: beta outside [0, m*pi)");
    }
  }
}

StateVector evolve(const KnapsackInstance& inst, const RegisterLayout& layout,
                   const QaoaSchedule& schedule) {
  schedule.validate();
  const OracleParams params = derive_oracle_params(inst);
  StateVector state = init_state(layout);
  for (int k = 0; k < schedule.layers; ++k) {
    apply_phase_separator(state, layout, inst, schedule.gammas[k]);
    apply_mixer(state, layout, inst, params, schedule.betas[k], schedule.trotter_steps);
  }
  return state;
}

double expectation(const StateVector& state, const RegisterLayout& layout,
                   const KnapsackInstance& inst) {
  const auto marginal = choice_marginal(state, layout);
  const int n = static_cast<int>(inst.size());
  Bits bits(inst.size(), 0);
  double total = 0.0;
  for (std::size_t x = 0; x < marginal.size(); ++x) {
    for (int i = 0; i < n; ++i) bits[i] = (x >> i) & 1u;
    total += marginal[x] * total_value(bits, inst);
  }
  return total;
}

namespace {

struct Candidate {
  double gamma = 0.0;
  double beta = 0.0;
  double score = 0.0;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.gamma != b.gamma) return a.gamma < b.gamma;
  return a.beta < b.beta;
}

// Evaluates one (gamma, beta) pair appended to the frozen prefix.
class LayerObjective {
 public:
  LayerObjective(ChoiceWalk& walk, std::vector<std::complex<double>> prefix, int trotter_steps,
                 long& evaluations)
      : walk_(walk), prefix_(std::move(prefix)), m_(trotter_steps), evaluations_(evaluations) {}

  double operator()(double gamma, double beta) {
    walk_.set_amplitudes(prefix_);
    walk_.apply_phase_separator(gamma);
    walk_.apply_mixer(beta, m_);
    ++evaluations_;
    return walk_.expectation();
  }

 private:
  ChoiceWalk& walk_;
  std::vector<std::complex<double>> prefix_;
  int m_;
  long& evaluations_;
};

struct Box {
  double gamma_hi;
  double beta_hi;

  void clamp(double& gamma, double& beta) const {
    gamma = std::min(std::max(gamma, 0.0), gamma_hi);
    beta = std::min(std::max(beta, 0.0), beta_hi);
  }
};

// Standard Nelder-Mead on (gamma, beta), reflections clamped into the box.
template <typename F>
Candidate nelder_mead_2d(F&& f, const Box& box, Candidate start, double dg, double db,
                         int max_evals) {
  struct Vertex {
    double g, b, score;
  };
  auto eval = [&](double g, double b) {
    box.clamp(g, b);
    return Vertex{g, b, f(g, b)};
  };
  std::array<Vertex, 3> simplex{
      Vertex{start.gamma, start.beta, start.score},
      eval(start.gamma + dg, start.beta),
      eval(start.gamma, start.beta + db),
  };
  int used = 2;
  auto order = [&] {
    std::sort(simplex.begin(), simplex.end(), [](const Vertex& a, const Vertex& b) {
      if (a.score != b.score) return a.score > b.score;
      if (a.g != b.g) return a.g < b.g;
      return a.b < b.b;
    });
  };
  order();
  while (used < max_evals) {
    const double cg = (simplex[0].g + simplex[1].g) / 2.0;
    const double cb = (simplex[0].b + simplex[1].b) / 2.0;
    const Vertex& worst = simplex[2];
    Vertex reflected = eval(cg + (cg - worst.g), cb + (cb - worst.b));
    ++used;
    if (reflected.score > simplex[0].score) {
      Vertex expanded = eval(cg + 2.0 * (cg - worst.g), cb + 2.0 * (cb - worst.b));
      ++used;
      simplex[2] = expanded.score > reflected.score ? expanded : reflected;
    } else if (reflected.score > simplex[1].score) {
      simplex[2] = reflected;
    } else {
      Vertex contracted = eval(cg + 0.5 * (worst.g - cg), cb + 0.5 * (worst.b - cb));
      ++used;
      if (contracted.score > worst.score) {
        simplex[2] = contracted;
      } else {
        // Shrink toward the best vertex.
        for (int v = 1; v < 3; ++v) {
          simplex[v] = eval(simplex[0].g + 0.5 * (simplex[v].g - simplex[0].g),
                            simplex[0].b + 0.5 * (simplex[v].b - simplex[0].b));
        }
        used += 2;
      }
    }
    order();
    const double spread = std::abs(simplex[0].score - simplex[2].score) +
                          std::abs(simplex[0].g - simplex[2].g) +
                          std::abs(simplex[0].b - simplex[2].b);
    if (spread < 1e-12) break;
  }
  Candidate out{simplex[0].g, simplex[0].b, simplex[0].score};
  return out;
}

constexpr int kRefineEvals = 60;
constexpr std::size_t kRefineStarts = 3;

// Nelder-Mead over the first `layers` (gamma, beta) pairs of `angles`
// (flattened gamma0, beta0, gamma1, ...), everything clamped into the box.
// Refines in place, returns the best score seen.
class JointObjective {
 public:
  JointObjective(ChoiceWalk& walk, int trotter_steps, long& evaluations)
      : walk_(walk), m_(trotter_steps), evaluations_(evaluations) {}

  double operator()(const std::vector<double>& angles) {
    walk_.reset_uniform();
    for (std::size_t k = 0; 2 * k + 1 < angles.size(); ++k) {
      walk_.apply_phase_separator(angles[2 * k]);
      walk_.apply_mixer(angles[2 * k + 1], m_);
    }
    ++evaluations_;
    return walk_.expectation();
  }

 private:
  ChoiceWalk& walk_;
  int m_;
  long& evaluations_;
};

double joint_refine(JointObjective& objective, const Box& box, std::vector<double>& angles,
                    double start_score, int max_evals) {
  const int dims = static_cast<int>(angles.size());
  auto clamp_all = [&](std::vector<double>& a) {
    for (int d = 0; d < dims; d += 2) box.clamp(a[d], a[d + 1]);
  };

  std::vector<std::vector<double>> simplex{angles};
  std::vector<double> scores{start_score};
  int used = 0;
  for (int d = 0; d < dims; ++d) {
    auto vertex = angles;
    vertex[d] += (d % 2 == 0 ? box.gamma_hi : box.beta_hi) / 20.0;
    clamp_all(vertex);
    simplex.push_back(std::move(vertex));
    scores.push_back(objective(simplex.back()));
    ++used;
  }
  auto order = [&] {
    std::vector<std::size_t> idx(simplex.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    std::vector<std::vector<double>> s2;
    std::vector<double> sc2;
    s2.reserve(simplex.size());
    sc2.reserve(scores.size());
    for (auto i : idx) {
      s2.push_back(std::move(simplex[i]));
      sc2.push_back(scores[i]);
    }
    simplex = std::move(s2);
    scores = std::move(sc2);
  };
  order();

  while (used < max_evals) {
    std::vector<double> centroid(dims, 0.0);
    for (int v = 0; v < dims; ++v) {
      for (int d = 0; d < dims; ++d) centroid[d] += simplex[v][d];
    }
    for (int d = 0; d < dims; ++d) centroid[d] /= static_cast<double>(dims);
    const auto& worst = simplex.back();

    std::vector<double> reflected(dims);
    for (int d = 0; d < dims; ++d) reflected[d] = centroid[d] + (centroid[d] - worst[d]);
    clamp_all(reflected);
    const double r_score = objective(reflected);
    ++used;
    if (r_score > scores.front()) {
      std::vector<double> expanded(dims);
      for (int d = 0; d < dims; ++d) expanded[d] = centroid[d] + 2.0 * (centroid[d] - worst[d]);
      clamp_all(expanded);
      const double e_score = objective(expanded);
      ++used;
      if (e_score > r_score) {
        simplex.back() = std::move(expanded);
        scores.back() = e_score;
      } else {
        simplex.back() = std::move(reflected);
        scores.back() = r_score;
      }
    } else if (r_score > scores[scores.size() - 2]) {
      simplex.back() = std::move(reflected);
      scores.back() = r_score;
    } else {
      std::vector<double> contracted(dims);
      for (int d = 0; d < dims; ++d) contracted[d] = centroid[d] + 0.5 * (worst[d] - centroid[d]);
      clamp_all(contracted);
      const double c_score = objective(contracted);
      ++used;
      if (c_score > scores.back()) {
        simplex.back() = std::move(contracted);
        scores.back() = c_score;
      } else {
        for (std::size_t v = 1; v < simplex.size(); ++v) {
          for (int d = 0; d < dims; ++d) {
            simplex[v][d] = simplex[0][d] + 0.5 * (simplex[v][d] - simplex[0][d]);
          }
          scores[v] = objective(simplex[v]);
          ++used;
        }
      }
    }
    order();
    double spread = std::abs(scores.front() - scores.back());
    for (int d = 0; d < dims; ++d) spread += std::abs(simplex.front()[d] - simplex.back()[d]);
    if (spread < 1e-12) break;
  }
  if (scores.front() > start_score) {
    angles = simplex.front();
    return scores.front();
  }
  return start_score;
}

}  // namespace

OptimizeResult optimize(const KnapsackInstance& inst, int layers, int trotter_steps, int budget,
                        std::uint64_t /*seed*/, bool joint) {
  inst.validate();
  if (layers < 1) throw std::invalid_argument("optimize: layers must be >= 1");
  if (trotter_steps < 1) throw std::invalid_argument("optimize: trotter steps must be >= 1");
  if (budget < 1) throw std::invalid_argument("optimize: budget must be >= 1");

  const double gamma_bound = 2.0 * std::numbers::pi;
  const double beta_bound = static_cast<double>(trotter_steps) * std::numbers::pi;
  const Box box{std::nextafter(gamma_bound, 0.0), std::nextafter(beta_bound, 0.0)};

  // The landscape varies much faster along beta than along gamma (the values
  // v_i are O(0.1), so e^{-i gamma v} sweeps slowly over [0, 2pi)), and the
  // useful beta basins can be narrow. Spend the budget beta-heavy, origin
  // always included.
  int g_gamma = std::max(4, static_cast<int>(std::lround(std::sqrt(
                                static_cast<double>(budget) /
                                (2.0 * static_cast<double>(trotter_steps))))));
  int g_beta = std::max(4, budget / g_gamma);

  ChoiceWalk walk(inst);
  walk.reset_uniform();
  std::vector<std::complex<double>> prefix = walk.amplitudes();

  long evaluations = 0;
  double best_score = 0.0;
  std::vector<double> angles;  // gamma0, beta0, gamma1, ...
  JointObjective joint_objective(walk, trotter_steps, evaluations);

  for (int layer = 0; layer < layers; ++layer) {
    LayerObjective objective(walk, prefix, trotter_steps, evaluations);
    std::vector<Candidate> grid;
    grid.reserve(static_cast<std::size_t>(g_gamma) * g_beta);
    for (int jg = 0; jg < g_gamma; ++jg) {
      const double gamma = gamma_bound * static_cast<double>(jg) / static_cast<double>(g_gamma);
      for (int jb = 0; jb < g_beta; ++jb) {
        const double beta = beta_bound * static_cast<double>(jb) / static_cast<double>(g_beta);
        grid.push_back({gamma, beta, objective(gamma, beta)});
      }
    }
    std::sort(grid.begin(), grid.end(), better);

    // The landscape carries near-degenerate local maxima whose basins score
    // almost equally on a coarse grid, so refine the best few starts.
    const double dg = gamma_bound / static_cast<double>(g_gamma) / 2.0;
    const double db = beta_bound / static_cast<double>(g_beta) / 2.0;
    Candidate refined = grid.front();
    const std::size_t starts = std::min<std::size_t>(kRefineStarts, grid.size());
    for (std::size_t s = 0; s < starts; ++s) {
      const Candidate polished = nelder_mead_2d(objective, box, grid[s], dg, db, kRefineEvals);
      if (better(polished, refined)) refined = polished;
    }

    angles.push_back(refined.gamma);
    angles.push_back(refined.beta);
    best_score = refined.score;

    // Extending the schedule alone plateaus quickly: the previous layers'
    // optimum is rarely optimal for the deeper circuit. Re-optimize all
    // 2(k+1) angles around the extended schedule before moving on.
    if (layer >= 1) {
      best_score = joint_refine(joint_objective, box, angles, best_score, budget);
    }

    walk.reset_uniform();
    for (std::size_t k = 0; 2 * k + 1 < angles.size(); ++k) {
      walk.apply_phase_separator(angles[2 * k]);
      walk.apply_mixer(angles[2 * k + 1], trotter_steps);
    }
    prefix = walk.amplitudes();
  }

  QaoaSchedule schedule;
  schedule.layers = layers;
  schedule.trotter_steps = trotter_steps;
  for (int k = 0; k < layers; ++k) {
    schedule.gammas.push_back(angles[2 * k]);
    schedule.betas.push_back(angles[2 * k + 1]);
  }

  if (joint && layers >= 1) {
    // Deeper final polish over all 2p angles with a larger evaluation cap.
    best_score = joint_refine(joint_objective, box, angles, best_score, 2 * budget);
    for (int k = 0; k < layers; ++k) {
      schedule.gammas[k] = angles[2 * k];
      schedule.betas[k] = angles[2 * k + 1];
    }
  }

  schedule.validate();
  return {std::move(schedule), evaluations, best_score};
}

namespace {

std::vector<double> sample_distribution(const std::vector<double>& exact, long shots,
                                        std::uint64_t seed) {
  std::vector<double> cdf(exact.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    acc += exact[i];
    cdf[i] = acc;
  }
  std::vector<long> counts(exact.size(), 0);
  std::mt19937_64 rng(seed);
  for (long s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t idx = std::min(static_cast<std::size_t>(it - cdf.begin()), exact.size() - 1);
    ++counts[idx];
  }
  std::vector<double> sampled(exact.size());
  for (std::size_t i = 0; i < exact.size(); ++i) {
    sampled[i] = static_cast<double>(counts[i]) / static_cast<double>(shots);
  }
  return sampled;
}

}  // namespace

RunReport run(const KnapsackInstance& inst, int layers, int trotter_steps, int budget,
              std::uint64_t seed, long shots, bool joint, std::vector<std::string> tickers) {
  if (shots < 0) throw std::invalid_argument("run: negative shot count");
  OptimizeResult opt = optimize(inst, layers, trotter_steps, budget, seed, joint);

  const RegisterLayout layout = standard_layout(inst);
  const StateVector state = evolve(inst, layout, opt.schedule);
  const std::vector<double> exact = choice_marginal(state, layout);
  const std::vector<double> probs = shots > 0 ? sample_distribution(exact, shots, seed) : exact;

  const int n = static_cast<int>(inst.size());
  RunReport report;
  report.instance = inst;
  report.tickers = std::move(tickers);
  report.schedule = opt.schedule;
  report.evaluations = opt.evaluations;
  report.budget = budget;
  report.seed = seed;
  report.shots = shots;

  Bits bits(inst.size(), 0);
  bool have_best = false;
  double expect = 0.0;
  for (std::size_t x = 0; x < probs.size(); ++x) {
    for (int i = 0; i < n; ++i) bits[i] = (x >> i) & 1u;
    const double value = total_value(bits, inst);
    expect += probs[x] * value;
    if (!is_feasible(bits, inst)) continue;
    const bool wins =
        !have_best || probs[x] > report.best_feasible.probability ||
        (probs[x] == report.best_feasible.probability &&
         std::lexicographical_compare(bits.begin(), bits.end(), report.best_feasible.bits.begin(),
                                      report.best_feasible.bits.end()));
    if (wins) {
      report.best_feasible = {bits, value, probs[x]};
      have_best = true;
    }
  }
  report.expectation = expect;

  report.distribution.reserve(probs.size());
  for (std::size_t x = 0; x < probs.size(); ++x) {
    report.distribution.emplace_back(choice_index_to_string(x, n), probs[x]);
  }
  std::sort(report.distribution.begin(), report.distribution.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });

  report.bks = solve_dp(inst);
  report.ratio_best = approximation_ratio(report.best_feasible.value, report.bks.value);
  report.ratio_expectation = approximation_ratio(report.expectation, report.bks.value);
  return report;
}

}  // namespace knapqaoa
