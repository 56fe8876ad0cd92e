#include "maxcut/perturbation.hpp"

#include <cassert>
#include <chrono>
#include <cmath>

namespace maxcut {

Vector perturb(const StateVector& x, const Vector& p_bar, double beta,
               SplitMix64& rng) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  const int n = static_cast<int>(x.x.size());
  Vector y(n);
  for (int i = 0; i < n; ++i) {
    const double flip_prob = std::exp(-beta * std::abs(p_bar[i]));
    y[i] = rng.uniform() < flip_prob ? -x.x[i] : x.x[i];
  }
  return y;
}

namespace {

bool is_binary(const StateVector& x, double tol) {
  for (int i = 0; i < x.x.size(); ++i)
    if (std::abs(x.inf_norm - std::abs(x.x[i])) > tol * x.inf_norm)
      return false;
  return true;
}

#ifndef NDEBUG
// For binary x the single-flip change of F has magnitude 2|p_bar_i|.
void check_flip_identity(const Graph& g, const StateVector& x,
                         const Vector& p_bar) {
  for (int i = 0; i < g.order(); ++i) {
    double delta = 0.0;
    for (const Neighbor& nb : g.neighbors(i))
      delta += nb.w * (std::abs(-x.x[i] - x.x[nb.v]) -
                       std::abs(x.x[i] - x.x[nb.v]));
    assert(std::abs(std::abs(delta) - 2.0 * std::abs(p_bar[i])) <=
           1e-6 * std::max(1.0, std::abs(delta)));
  }
}
#endif

}  // namespace

PerturbResult si_perturb(const Graph& g, const Vector& x0,
                         const SolverConfig& cfg, const PerturbConfig& pcfg,
                         double beta) {
  SolverState st = init_state(g, x0, cfg);
  const double flat_tol = (is_inf_norm(cfg.p) && g.has_integer_weights())
                              ? 0.0
                              : 1e-9;
  int streak = 0;
  for (int k = 0; k < pcfg.T; ++k) {
    const double r_before = st.r;
    step(st, g, cfg);
    if (std::abs(st.r - r_before) <= flat_tol * std::max(1.0, std::abs(st.r)))
      ++streak;
    else
      streak = 0;
    if (streak > pcfg.t) {
      StateVector base = st.x;
      if (!is_binary(base, cfg.tie_tol)) {
        // Stall states at p < inf may keep interior coordinates; perturb
        // the sign-rounded point instead.
        for (int i = 0; i < base.x.size(); ++i) base.x[i] = sign(base.x[i]);
        base.inf_norm = 1.0;
      }
#ifndef NDEBUG
      check_flip_identity(g, base, st.ctx.p_bar);
#endif
      const Vector z_new = perturb(base, st.ctx.p_bar, beta, st.rng);
      commit_point(st, g, cfg, z_new, /*allow_decrease=*/true);
      streak = 0;
    }
  }
  return {st.best_x, st.best_r};
}

RunRecord run_si_p(const Graph& g, const Vector& x0, const SolverConfig& cfg,
                   const PerturbConfig& pcfg) {
  const auto t0 = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.algorithm = "SI-P";
  rec.p = cfg.p;
  rec.seed = cfg.seed;
  rec.iterations = pcfg.T;
  rec.stall_window = pcfg.t;
  rec.restarts_per_turn = pcfg.L;
  rec.beta_min = pcfg.beta_min;
  rec.beta_max = pcfg.beta_max;
  rec.initial_cut = cut_value(g, threshold_cut(x0));

  SplitMix64 beta_rng(mix_seed(cfg.seed, 0xbe7aULL));
  Vector incumbent_x = x0;
  // An already-optimal start must stop after one turn, so the incumbent
  // value is the start's own F rather than 0.
  double incumbent_r = init_state(g, x0, cfg).r;
  rec.r_trajectory.push_back(incumbent_r);
  int count = 0;
  while (true) {
    double turn_best = -1.0;
    Vector turn_best_x;
    for (int l = 0; l < pcfg.L; ++l) {
      double beta = beta_rng.uniform(pcfg.beta_min, pcfg.beta_max);
      if (!(beta > 0.0)) beta = 1e-12;  // range is open at 0
      SolverConfig run_cfg = cfg;
      run_cfg.seed =
          mix_seed(cfg.seed, static_cast<std::uint64_t>(count) * pcfg.L + l + 1);
      PerturbResult res = si_perturb(g, incumbent_x, run_cfg, pcfg, beta);
      if (res.r_opt > turn_best) {
        turn_best = res.r_opt;
        turn_best_x = std::move(res.x_opt);
      }
    }
    ++count;
    if (turn_best > incumbent_r) {
      incumbent_r = turn_best;
      incumbent_x = std::move(turn_best_x);
      rec.r_trajectory.push_back(incumbent_r);
      if (count >= pcfg.max_outer) break;
    } else {
      break;
    }
  }

  rec.turn_count = count;
  rec.total_iterations = static_cast<long>(count) * pcfg.L * pcfg.T;
  rec.best_r = incumbent_r;
  rec.best_x = incumbent_x;
  rec.final_x = incumbent_x;
  rec.final_cut = cut_value(g, threshold_cut(incumbent_x));
  rec.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rec;
}

}  // namespace maxcut
