#pragma once

#include "maxcut/si_core.hpp"

namespace maxcut {

struct PerturbConfig {
  int t = 3;           // stall window triggering a perturbation
  int L = 20;          // si_perturb calls per outer turn
  int T = 2000;        // iterations per si_perturb call
  double beta_min = 0.0;  // beta drawn uniformly from (beta_min, beta_max)
  double beta_max = 1.0;
  int max_outer = 64;  // safety cap on outer turns
};

// Stochastic escape move: coordinate i is negated with probability
// exp(-beta |p_bar_i|). Requires a binary iterate; beta <= 0 is an error.
Vector perturb(const StateVector& x, const Vector& p_bar, double beta,
               SplitMix64& rng);

struct PerturbResult {
  Vector x_opt;
  double r_opt = 0.0;
};

// SI for T iterations with perturbation whenever r has been flat for t
// consecutive steps; returns the best point seen over the whole trajectory.
PerturbResult si_perturb(const Graph& g, const Vector& x0,
                         const SolverConfig& cfg, const PerturbConfig& pcfg,
                         double beta);

// Outer restart loop: turns of L si_perturb calls with independent random
// beta, warm-started from the incumbent; stops at the first turn that fails
// to improve it (or at max_outer).
RunRecord run_si_p(const Graph& g, const Vector& x0, const SolverConfig& cfg,
                   const PerturbConfig& pcfg);

}  // namespace maxcut
