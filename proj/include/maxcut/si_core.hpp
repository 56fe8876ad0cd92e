#pragma once

#include <optional>
#include <string>

#include "maxcut/inner_solver.hpp"
#include "maxcut/subgradient.hpp"

namespace maxcut {

struct SolverConfig {
  double p = kPInf;  // norm parameter in [1, inf]
  int T = 2000;      // iteration count
  std::uint64_t seed = 0;
  double tie_tol = 1e-9;
  bool record_metrics = false;
  // Early stop when r is unchanged for this many steps; 0 disables
  // (the reference protocol runs exactly T iterations).
  int early_stop_window = 0;
};

// Per-iteration cost counters: sorted-tail length n - m0, permutation
// displacement delta_sigma, and the number of changed coordinates |V(k)|.
struct IterationMetrics {
  std::vector<int> n_minus_m0;
  std::vector<double> delta_sigma;
  std::vector<int> v_size;
};

struct SolverState {
  StateVector x;  // kept sup-normalized, ||x||_inf = 1
  double r = 0.0;
  SubgradientContext ctx;
  int k = 0;
  double best_r = 0.0;
  Vector best_x;
  SplitMix64 rng{0};
  std::vector<double> r_trajectory;
  IterationMetrics metrics;
};

// Provenance of one solver run.
struct RunRecord {
  std::string graph_name;
  std::string algorithm;  // "SI", "SI-P" or "SC"
  double p = kPInf;
  std::uint64_t seed = 0;
  int iterations = 0;  // T
  // SI-P only
  int stall_window = 0;
  int restarts_per_turn = 0;
  double beta_min = 0.0, beta_max = 0.0;
  int turn_count = 0;
  long total_iterations = 0;

  double initial_cut = 0.0;
  double final_cut = 0.0;
  double best_r = 0.0;
  std::vector<double> r_trajectory;
  double mean_nm0_frac = 0.0;
  double mean_dsigma_frac = 0.0;
  double mean_vsize_frac = 0.0;
  double wall_time_s = 0.0;

  Vector best_x;   // not serialized
  Vector final_x;  // not serialized
};

// Sign-rounds to {+1, -1} with sign(0) = +1.
SideVector threshold_cut(const Vector& x);

// Normalizes x0, evaluates r0 = F(x0) and builds the subgradient context.
// At p = inf the initial point is sign-rounded first, so r0 equals twice
// the thresholded initial cut.
SolverState init_state(const Graph& g, const Vector& x0,
                       const SolverConfig& cfg);

// One crystallized iteration: sample a vertex of the inner solution set,
// commit it with incremental r/q/p updates, refresh the subgradient.
// Throws std::logic_error if monotonicity or the ratio bound breaks.
void step(SolverState& st, const Graph& g, const SolverConfig& cfg);

// Replaces the iterate by z_new (sup-normalized) and performs the
// incremental bookkeeping. allow_decrease suspends the monotonicity check
// (perturbation moves decrease r on purpose).
void commit_point(SolverState& st, const Graph& g, const SolverConfig& cfg,
                  const Vector& z_new, bool allow_decrease);

RunRecord run_si(const Graph& g, const Vector& x0, const SolverConfig& cfg);

// Membership in the flip-stable set: F(T_i x) <= F(x) + tol for all i.
// Requires a binary iterate (S< empty); otherwise returns false with the
// first non-extreme coordinate as witness.
std::pair<bool, std::optional<int>> certify_local_optimum(
    const Graph& g, const StateVector& x, double tol = 1e-9);

}  // namespace maxcut
