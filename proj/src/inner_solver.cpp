#include "maxcut/inner_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace maxcut {

Vector accumulation(const Vector& v_abs_sorted) {
  const int n = static_cast<int>(v_abs_sorted.size());
  for (int i = 0; i + 1 < n; ++i)
    if (v_abs_sorted[i] < v_abs_sorted[i + 1])
      throw std::invalid_argument("accumulation input must be nonincreasing");
  if (n > 0 && v_abs_sorted[n - 1] < 0.0)
    throw std::invalid_argument("accumulation input must be nonnegative");

  Vector a(n);
  double prefix = 0.0;
  for (int m = 1; m <= n; ++m) {
    prefix += v_abs_sorted[m - 1];
    const double next = m < n ? v_abs_sorted[m] : 0.0;
    a[m - 1] = prefix - m * next;
  }
  return a;
}

InnerSolution solve_inner(const Vector& v, double r, double p, double tol) {
  const int n = static_cast<int>(v.size());
  if (r < 0.0) throw std::invalid_argument("r must be nonnegative");
  const double l1 = v.lpNorm<1>();
  if (!(l1 > 0.0)) throw std::invalid_argument("v must be nonzero");
  const double eq_tol = tol * std::max(1.0, l1);
  if (r > l1 + eq_tol)
    throw std::logic_error("solve_inner precondition r <= ||v||_1 violated");

  InnerSolution sol;
  sol.p = p;
  sol.sign_v.resize(n);
  for (int i = 0; i < n; ++i) sol.sign_v[i] = sign(v[i]);

  sol.perm.resize(n);
  std::iota(sol.perm.begin(), sol.perm.end(), 0);
  std::stable_sort(sol.perm.begin(), sol.perm.end(), [&](int a, int b) {
    return std::abs(v[a]) > std::abs(v[b]);
  });
  Vector va(n);
  for (int k = 0; k < n; ++k) va[k] = std::abs(v[sol.perm[k]]);

  sol.free_mask.assign(n, 0);
  sol.z_sorted = Vector::Ones(n);

  if (is_inf_norm(p) || std::abs(r - l1) <= eq_tol) {
    // Scenario 3: x / ||x||_inf in Sgn(v); zero-v coordinates are free.
    sol.scenario = Scenario::S3;
    sol.m0 = sol.m1 = n;
    sol.free_lo = -1.0;
    sol.free_hi = 1.0;
    for (int k = 0; k < n; ++k)
      if (va[k] == 0.0) sol.free_mask[k] = 1;
    sol.objective = r - l1;
    return sol;
  }

  const Vector a_acc = accumulation(va);
  int m0 = n;
  for (int m = 1; m <= n; ++m)
    if (a_acc[m - 1] > r) {
      m0 = m;
      break;
    }
  sol.m0 = m0;

  double prefix_m0 = 0.0;
  for (int k = 0; k < m0; ++k) prefix_m0 += va[k];

  if (p == 1.0) {
    // Scenario 2: z = 1 up to m1, 0 past m0, free in between.
    sol.scenario = Scenario::S2;
    int m1 = 1;
    for (int m = n; m >= 1; --m) {
      const double prev = m >= 2 ? a_acc[m - 2] : 0.0;
      if (prev < r - eq_tol) {
        m1 = m;
        break;
      }
    }
    sol.m1 = m1;
    sol.free_lo = 0.0;
    sol.free_hi = 1.0;
    for (int k = m1; k < m0; ++k) sol.free_mask[k] = 1;
    for (int k = m0; k < n; ++k) sol.z_sorted[k] = 0.0;
    // G is constant on the solution set; evaluate at the all-high vertex.
    sol.objective = (r - sol.z_sorted.dot(va)) / sol.z_sorted.lpNorm<1>();
    return sol;
  }

  // Scenario 1: unique minimizer z_i = min{1, a_i^(1/(p-1))}.
  sol.scenario = Scenario::S1;
  sol.m1 = m0;
  const double alpha = prefix_m0 - r;  // > 0 by the choice of m0
  const double inv_pm1 = 1.0 / (p - 1.0);
  for (int k = 0; k < n; ++k) {
    const double a_k = m0 * va[k] / alpha;
    sol.z_sorted[k] = k < m0 ? 1.0 : std::min(1.0, std::pow(a_k, inv_pm1));
  }
  sol.objective = (r - sol.z_sorted.dot(va)) / p_norm(sol.z_sorted, p);
  return sol;
}

Vector sample_vertex_inf(const InnerSolution& sol, SplitMix64& rng) {
  const int n = static_cast<int>(sol.perm.size());
  Vector x(n);
  for (int k = 0; k < n; ++k) {
    const double z =
        sol.free_mask[k] ? (rng.coin() ? sol.free_hi : sol.free_lo)
                         : sol.z_sorted[k];
    const int i = sol.perm[k];
    x[i] = sol.sign_v[i] * z;
  }
  return x;
}

StateVector sample_vertex(const InnerSolution& sol, SplitMix64& rng) {
  Vector x = sample_vertex_inf(sol, rng);
  x /= p_norm(x, sol.p);
  return StateVector::make(std::move(x), sol.p);
}

}  // namespace maxcut
