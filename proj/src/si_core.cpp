#include "maxcut/si_core.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <numeric>

namespace maxcut {

SideVector threshold_cut(const Vector& x) {
  SideVector side(x.size());
  for (int i = 0; i < x.size(); ++i) side[i] = x[i] >= 0.0 ? 1 : -1;
  return side;
}

SolverState init_state(const Graph& g, const Vector& x0,
                       const SolverConfig& cfg) {
  if (x0.size() != g.order())
    throw std::invalid_argument("initial vector length mismatch");
  if (!(x0.cwiseAbs().maxCoeff() > 0.0))
    throw std::domain_error("initial vector must be nonzero");

  SolverState st;
  if (is_inf_norm(cfg.p)) {
    Vector rounded(x0.size());
    for (int i = 0; i < x0.size(); ++i) rounded[i] = sign(x0[i]);
    st.x = StateVector::make(std::move(rounded), cfg.p);
  } else {
    st.x = StateVector::make(x0, cfg.p);
    st.x.normalize_inf();
  }
  st.r = eval_I(g, st.x.x);  // ||x||_inf = 1
  st.ctx = build_context(g, st.x, cfg.tie_tol);
  st.best_r = st.r;
  st.best_x = st.x.x;
  st.rng = SplitMix64(cfg.seed);
  st.r_trajectory.push_back(st.r);
  return st;
}

void commit_point(SolverState& st, const Graph& g, const SolverConfig& cfg,
                  const Vector& z_new, bool allow_decrease) {
  const int n = g.order();
  const double tol = cfg.tie_tol;  // iterates are sup-normalized
  Vector& z = st.x.x;

  int changed = 0;
  double delta_i = 0.0;
  // Telescoped increments over the hybrid vectors z^{k,i}: coordinates are
  // rewritten in ascending order, so edges with both endpoints changed are
  // visited once with the partially updated state on the other side.
  for (int i = 0; i < n; ++i) {
    const double b = z_new[i];
    const double a = z[i];
    if (b == a) continue;
    ++changed;
    for (const Neighbor& nb : g.neighbors(i)) {
      const double c = z[nb.v];
      const double w = nb.w;
      delta_i += w * (std::abs(b - c) - std::abs(a - c));
      const bool tie_old = std::abs(a - c) <= tol;
      const bool tie_new = std::abs(b - c) <= tol;
      if (tie_old != tie_new) {
        const double dq = tie_new ? w : -w;
        st.ctx.q[i] += dq;
        st.ctx.q[nb.v] += dq;
      }
      const double old_i = tie_old ? w : w * sign(a - c);
      const double new_i = tie_new ? w : w * sign(b - c);
      st.ctx.sign_sum[i] += new_i - old_i;
      const double old_j = tie_old ? w : w * sign(c - a);
      const double new_j = tie_new ? w : w * sign(c - b);
      st.ctx.sign_sum[nb.v] += new_j - old_j;
    }
    z[i] = b;
  }
  st.x.inf_norm = 1.0;

  const double r_prev = st.r;
  st.r += delta_i;
  if (!allow_decrease) {
    const double mono_tol =
        (is_inf_norm(cfg.p) && g.has_integer_weights())
            ? 0.0
            : 1e-9 * std::max(1.0, std::abs(r_prev));
    if (st.r < r_prev - mono_tol)
      throw std::logic_error("monotonicity violated: r decreased");
  }

  const Vector p_bar =
      compute_p_bar(st.x, st.ctx.q, st.ctx.p(), cfg.tie_tol);
  const long disp = refresh(st.ctx, g, st.x, p_bar);
  norm_gap(st.ctx, st.r);  // throws on a broken ratio bound

  if (st.r > st.best_r) {
    st.best_r = st.r;
    st.best_x = z;
  }
  st.r_trajectory.push_back(st.r);
  if (cfg.record_metrics) {
    st.metrics.delta_sigma.push_back(static_cast<double>(disp) / (2.0 * n));
    st.metrics.v_size.push_back(changed);
  }
  ++st.k;
}

void step(SolverState& st, const Graph& g, const SolverConfig& cfg) {
  const int n = g.order();
  if (st.ctx.s.lpNorm<1>() == 0.0) {
    // No ascent direction exists (edgeless graph); stay put.
    st.r_trajectory.push_back(st.r);
    if (cfg.record_metrics) {
      st.metrics.n_minus_m0.push_back(0);
      st.metrics.delta_sigma.push_back(0.0);
      st.metrics.v_size.push_back(0);
    }
    ++st.k;
    return;
  }
  const InnerSolution sol = solve_inner(st.ctx.s, st.r, cfg.p);
  const Vector z_new = sample_vertex_inf(sol, st.rng);
  if (cfg.record_metrics) st.metrics.n_minus_m0.push_back(n - sol.m0);
  commit_point(st, g, cfg, z_new, /*allow_decrease=*/false);
}

namespace {

double mean_of(const std::vector<int>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

}  // namespace

RunRecord run_si(const Graph& g, const Vector& x0, const SolverConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  SolverState st = init_state(g, x0, cfg);

  RunRecord rec;
  rec.algorithm = "SI";
  rec.p = cfg.p;
  rec.seed = cfg.seed;
  rec.iterations = cfg.T;
  rec.initial_cut = cut_value(g, threshold_cut(x0));

  for (int k = 0; k < cfg.T; ++k) {
    step(st, g, cfg);
    if (cfg.early_stop_window > 0 && st.k >= cfg.early_stop_window) {
      const auto& tr = st.r_trajectory;
      bool stalled = true;
      for (int j = 0; j < cfg.early_stop_window; ++j)
        if (tr[tr.size() - 1 - j] != tr[tr.size() - 2 - j]) {
          stalled = false;
          break;
        }
      if (stalled) break;
    }
  }

  rec.best_r = st.best_r;
  rec.best_x = st.best_x;
  rec.final_x = st.x.x;
  rec.final_cut = cut_value(g, threshold_cut(st.best_x));
  rec.r_trajectory = std::move(st.r_trajectory);
  const int n = g.order();
  rec.mean_nm0_frac = mean_of(st.metrics.n_minus_m0) / n;
  rec.mean_dsigma_frac = mean_of(st.metrics.delta_sigma) / n;
  rec.mean_vsize_frac = mean_of(st.metrics.v_size) / n;
  rec.total_iterations = st.k;
  rec.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rec;
}

std::pair<bool, std::optional<int>> certify_local_optimum(
    const Graph& g, const StateVector& x, double tol) {
  const int n = g.order();
  const double inf = x.inf_norm;
  for (int i = 0; i < n; ++i)
    if (std::abs(inf - std::abs(x.x[i])) > tol * inf)
      return {false, i};  // S< not empty, certificate undefined

  for (int i = 0; i < n; ++i) {
    double delta_i = 0.0;
    for (const Neighbor& nb : g.neighbors(i))
      delta_i += nb.w * (std::abs(-x.x[i] - x.x[nb.v]) -
                         std::abs(x.x[i] - x.x[nb.v]));
    if (delta_i / inf > tol) return {false, i};
  }
  return {true, std::nullopt};
}

}  // namespace maxcut
