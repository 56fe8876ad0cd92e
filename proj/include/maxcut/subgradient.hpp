#pragma once

#include "maxcut/vectorspace.hpp"

namespace maxcut {

// Interval data of the subdifferential of I at x, together with a selected
// permutation sigma and the subgradient s^sigma it induces:
//   q_i = sum of w_ij over tie edges (x_i = x_j),
//   p_i = sum of w_ij sign(x_i - x_j) - q_i,
//   s_i = sum of w_ij sign(rank(i) - rank(j)),
// where rank is the inverse of sigma and sigma sorts vertices ascending by
// the lexicographic key (x_i, p_bar_i).
struct SubgradientContext {
  Vector q;
  Vector sign_sum;  // sum of w_ij sign(x_i - x_j); p = sign_sum - q
  Vector p_bar;
  std::vector<int> sigma;  // position -> vertex
  std::vector<int> rank;   // vertex -> position
  Vector s;

  Vector p() const { return sign_sum - q; }
};

// Boundary indicator of the subdifferential interval: p -/+ q on S+/-,
// p + sign(p) q on S<.
Vector compute_p_bar(const StateVector& x, const Vector& q, const Vector& p,
                     double tie_tol = 1e-9);

// Full construction at x; ties in the sort key broken by ascending vertex id.
SubgradientContext build_context(const Graph& g, const StateVector& x,
                                 double tie_tol = 1e-9);

// Re-sorts sigma under the new keys (x, p_bar_new) by adjacent-swap
// insertion, adjusting s by -/+ 2w at each swap of graph-adjacent vertices.
// ctx.q / ctx.sign_sum are the caller's responsibility (updated
// incrementally by the solver loop); this routine stores p_bar_new and
// rebuilds sigma / rank / s. Returns the total rank displacement
// sum_i |rank_new(i) - rank_old(i)|.
long refresh(SubgradientContext& ctx, const Graph& g, const StateVector& x,
             const Vector& p_bar_new);

// ||s||_1 - r, nonnegative up to tol by the iteration's ratio bound.
// Throws std::logic_error if negative beyond tol.
double norm_gap(const SubgradientContext& ctx, double r, double tol = 1e-9);

}  // namespace maxcut
