#include "maxcut/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "maxcut/vectorspace.hpp"

namespace maxcut {

Cut brute_force_maxcut(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw std::invalid_argument("brute_force_maxcut cap is n <= 24");

  SideVector side = SideVector::Constant(n, 1);
  double value = 0.0;
  SideVector best_side = side;
  double best_value = value;

  // Gray-code walk over the 2^(n-1) assignments of vertices 1..n-1; one
  // vertex flips per step, so the cut value updates in O(deg).
  const std::uint32_t total = n > 1 ? (1u << (n - 1)) : 1u;
  for (std::uint32_t t = 1; t < total; ++t) {
    const int j = std::countr_zero(t) + 1;
    double delta = 0.0;
    for (const Neighbor& nb : g.neighbors(j))
      delta += side[j] != side[nb.v] ? -nb.w : nb.w;
    side[j] = -side[j];
    value += delta;
    if (value > best_value) {
      best_value = value;
      best_side = side;
    }
  }
  return {best_side, best_value};
}

namespace {

// Cheap kernels for the p values exercised by the tests; pow() fallback.
double pow_p(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  if (p == 4.0) return (x * x) * (x * x);
  if (p == 1.5) return x * std::sqrt(x);
  return std::pow(x, p);
}

double root_p(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return std::sqrt(x);
  if (p == 4.0) return std::sqrt(std::sqrt(x));
  if (p == 1.5) return std::cbrt(x * x);
  return std::pow(x, 1.0 / p);
}

double root_pm1(double x, double p) {
  if (p == 2.0) return x;
  if (p == 4.0) return std::cbrt(x);
  if (p == 1.5) return x * x;
  return std::pow(x, 1.0 / (p - 1.0));
}

struct InnerScan {
  double r, p, step;
  int K;  // grid indices run 0..K

  double eval(double num, double base_norm_p, double gamma, double t) const {
    const double norm = is_inf_norm(p)
                            ? base_norm_p  // base_norm_p carries z_1 directly
                            : root_p(base_norm_p + pow_p(t, p), p);
    return (num - gamma * t) / norm;
  }

  // Exact grid minimum over t = k*step, k in [0, hi]. f(t) has at most one
  // interior critical point (a minimum), located where t^(p-1) = gamma*B/(-C)
  // from d/dt (C - gamma t)(B + t^p)^(-1/p) = -(gamma B + C t^(p-1)) * (...).
  double min_over_tail(double C, double B, double gamma, int hi) const {
    double best = eval(C, B, gamma, 0.0);
    const double at_hi = eval(C, B, gamma, hi * step);
    best = std::min(best, at_hi);
    if (!is_inf_norm(p) && p > 1.0 && C < 0.0 && gamma > 0.0) {
      const double t_star = root_pm1(gamma * B / -C, p);
      const int kf = static_cast<int>(std::floor(t_star / step));
      for (int k = std::max(0, kf); k <= std::min(hi, kf + 1); ++k)
        best = std::min(best, eval(C, B, gamma, k * step));
    }
    return best;
  }
};

}  // namespace

double grid_inner_min(const Vector& v, double r, double p, double step) {
  const int n = static_cast<int>(v.size());
  if (n < 1 || n > 3) throw std::invalid_argument("grid_inner_min cap is n <= 3");
  if (!(step > 0.0) || step > 1e-2 + 1e-12)
    throw std::invalid_argument("grid_inner_min requires 0 < step <= 1e-2");
  if (r < 0.0) throw std::invalid_argument("r must be nonnegative");

  std::array<double, 3> a{0.0, 0.0, 0.0};
  for (int i = 0; i < n; ++i) a[i] = std::abs(v[i]);
  std::sort(a.begin(), a.begin() + n, std::greater<>());

  const int K = static_cast<int>(std::lround(1.0 / step));
  InnerScan scan{r, p, step, K};
  double best = std::numeric_limits<double>::infinity();

  if (n == 1) {
    for (int k = 1; k <= K; ++k) {
      const double t = k * step;
      best = std::min(best, (r - a[0] * t) / t);
    }
    return best;
  }

  // Ordered region z_1 >= ... >= z_n; z_1 >= step since z = 0 is excluded.
  for (int k1 = 1; k1 <= K; ++k1) {
    const double z1 = k1 * step;
    const double b1 = is_inf_norm(p) ? z1 : pow_p(z1, p);
    const double c1 = r - a[0] * z1;
    if (n == 2) {
      best = std::min(best, scan.min_over_tail(c1, b1, a[1], k1));
      continue;
    }
    for (int k2 = 0; k2 <= k1; ++k2) {
      const double z2 = k2 * step;
      const double b2 = is_inf_norm(p) ? b1 : b1 + pow_p(z2, p);
      best = std::min(best, scan.min_over_tail(c1 - a[1] * z2, b2, a[2], k2));
    }
  }
  return best;
}

double max_subgradient_l1(const Graph& g, const Vector& x) {
  const int n = g.order();
  for (int i = 0; i < n; ++i)
    if (std::abs(x[i]) != 1.0)
      throw std::invalid_argument("max_subgradient_l1 needs a +-1 vector");

  Vector s = Vector::Zero(n);
  std::vector<Edge> ties;
  for (const Edge& e : g.edges()) {
    if (x[e.u] == x[e.v]) {
      ties.push_back(e);
    } else {
      s[e.u] += e.w * sign(x[e.u] - x[e.v]);
      s[e.v] += e.w * sign(x[e.v] - x[e.u]);
    }
  }
  const int k = static_cast<int>(ties.size());
  if (k > 20) throw std::invalid_argument("max_subgradient_l1 cap is 20 ties");

  std::vector<int> touched;
  std::vector<char> is_touched(n, 0);
  for (const Edge& e : ties)
    for (int u : {e.u, e.v})
      if (!is_touched[u]) {
        is_touched[u] = 1;
        touched.push_back(u);
      }
  double fixed_l1 = 0.0;
  for (int i = 0; i < n; ++i)
    if (!is_touched[i]) fixed_l1 += std::abs(s[i]);

  double best = -1.0;
  std::vector<double> st(touched.size());
  std::vector<int> pos(n, -1);
  for (size_t j = 0; j < touched.size(); ++j) pos[touched[j]] = static_cast<int>(j);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    for (size_t j = 0; j < touched.size(); ++j) st[j] = s[touched[j]];
    for (int e = 0; e < k; ++e) {
      const double z = (mask >> e) & 1u ? 1.0 : -1.0;
      st[pos[ties[e].u]] += ties[e].w * z;
      st[pos[ties[e].v]] -= ties[e].w * z;
    }
    double l1 = fixed_l1;
    for (double val : st) l1 += std::abs(val);
    best = std::max(best, l1);
  }
  return best;
}

EigenPair dense_max_eigenpair(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    L(e.u, e.v) -= e.w;
    L(e.v, e.u) -= e.w;
    L(e.u, e.u) += e.w;
    L(e.v, e.v) += e.w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("dense eigensolve failed");
  EigenPair out;
  out.lambda = es.eigenvalues()(n - 1);
  out.x = es.eigenvectors().col(n - 1);
  out.residual = (L * out.x - out.lambda * out.x).norm();
  return out;
}

}  // namespace maxcut
