#include "maxcut/subgradient.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace maxcut {

Vector compute_p_bar(const StateVector& x, const Vector& q, const Vector& p,
                     double tie_tol) {
  const double tol = tie_tol * x.inf_norm;
  const int n = static_cast<int>(x.x.size());
  Vector p_bar(n);
  for (int i = 0; i < n; ++i) {
    if (std::abs(x.x[i] - x.inf_norm) <= tol)
      p_bar[i] = p[i] - q[i];  // S+
    else if (std::abs(x.x[i] + x.inf_norm) <= tol)
      p_bar[i] = p[i] + q[i];  // S-
    else
      p_bar[i] = p[i] + sign(p[i]) * q[i];  // S<
  }
  return p_bar;
}

SubgradientContext build_context(const Graph& g, const StateVector& x,
                                 double tie_tol) {
  const int n = g.order();
  const double tol = tie_tol * x.inf_norm;
  SubgradientContext ctx;
  ctx.q = Vector::Zero(n);
  ctx.sign_sum = Vector::Zero(n);

  for (const Edge& e : g.edges()) {
    const double d = x.x[e.u] - x.x[e.v];
    if (std::abs(d) <= tol) {
      ctx.q[e.u] += e.w;
      ctx.q[e.v] += e.w;
      // sign(0) = +1 on both orientations; cancels against q in p.
      ctx.sign_sum[e.u] += e.w;
      ctx.sign_sum[e.v] += e.w;
    } else {
      const double s = sign(d);
      ctx.sign_sum[e.u] += e.w * s;
      ctx.sign_sum[e.v] -= e.w * s;
    }
  }

  ctx.p_bar = compute_p_bar(x, ctx.q, ctx.p(), tie_tol);

  ctx.sigma.resize(n);
  std::iota(ctx.sigma.begin(), ctx.sigma.end(), 0);
  const Vector& xv = x.x;
  const Vector& pb = ctx.p_bar;
  std::stable_sort(ctx.sigma.begin(), ctx.sigma.end(), [&](int a, int b) {
    if (xv[a] != xv[b]) return xv[a] < xv[b];
    return pb[a] < pb[b];
  });
  ctx.rank.resize(n);
  for (int pos = 0; pos < n; ++pos) ctx.rank[ctx.sigma[pos]] = pos;

  ctx.s = Vector::Zero(n);
  for (const Edge& e : g.edges()) {
    if (ctx.rank[e.u] > ctx.rank[e.v]) {
      ctx.s[e.u] += e.w;
      ctx.s[e.v] -= e.w;
    } else {
      ctx.s[e.u] -= e.w;
      ctx.s[e.v] += e.w;
    }
  }
  return ctx;
}

long refresh(SubgradientContext& ctx, const Graph& g, const StateVector& x,
             const Vector& p_bar_new) {
  ctx.p_bar = p_bar_new;
  const Vector& xv = x.x;
  const Vector& pb = ctx.p_bar;
  const int n = static_cast<int>(ctx.sigma.size());

  auto less = [&](int a, int b) {
    if (xv[a] != xv[b]) return xv[a] < xv[b];
    return pb[a] < pb[b];
  };

  std::vector<int> old_rank = ctx.rank;

  // Adjacent-swap insertion sort; each swap of graph-adjacent vertices
  // transfers 2w between their subgradient entries.
  for (int i = 1; i < n; ++i) {
    int j = i;
    while (j > 0 && less(ctx.sigma[j], ctx.sigma[j - 1])) {
      const int a = ctx.sigma[j - 1];
      const int b = ctx.sigma[j];
      const double w = g.edge_weight(a, b);
      if (w != 0.0) {
        ctx.s[a] += 2.0 * w;
        ctx.s[b] -= 2.0 * w;
      }
      ctx.sigma[j - 1] = b;
      ctx.sigma[j] = a;
      ctx.rank[a] = j;
      ctx.rank[b] = j - 1;
      --j;
    }
  }

  long displacement = 0;
  for (int v = 0; v < n; ++v)
    displacement += std::abs(static_cast<long>(ctx.rank[v]) - old_rank[v]);
  return displacement;
}

double norm_gap(const SubgradientContext& ctx, double r, double tol) {
  const double gap = ctx.s.lpNorm<1>() - r;
  if (gap < -tol * std::max(1.0, std::abs(r)))
    throw std::logic_error("subgradient norm bound violated: ||s||_1 < r");
  return gap;
}

}  // namespace maxcut
