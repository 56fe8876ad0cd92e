#pragma once

#include <limits>
#include <vector>

#include "maxcut/graph.hpp"

namespace maxcut {

// Norm parameter p in [1, inf]; infinity() encodes the sup-norm.
constexpr double kPInf = std::numeric_limits<double>::infinity();

inline bool is_inf_norm(double p) { return p == kPInf; }

// sign with sign(0) = +1
inline double sign(double t) { return t >= 0.0 ? 1.0 : -1.0; }

// A nonzero point of the continuous relaxation with its cached sup-norm.
struct StateVector {
  Vector x;
  double inf_norm = 0.0;
  double p = kPInf;

  static StateVector make(Vector x, double p = kPInf);

  // Divides by the sup-norm in place (pure conditioning; F is scale-free).
  void normalize_inf() {
    x /= inf_norm;
    inf_norm = 1.0;
  }
};

struct LevelSets {
  std::vector<int> s_plus;
  std::vector<int> s_minus;
  std::vector<int> s_less;
};

// I(x) = sum_{ij in E} w_ij |x_i - x_j|
double eval_I(const Graph& g, const Vector& x);

// F(x) = I(x) / ||x||_inf; throws std::domain_error on the zero vector.
double eval_F(const Graph& g, const Vector& x);

// Partition of {0..n-1} into S+, S-, S< with relative tie tolerance:
// i in S+/- iff |x_i -/+ ||x||_inf| <= tie_tol * ||x||_inf.
LevelSets level_sets(const StateVector& x, double tie_tol = 1e-9);

// T_i x: negate coordinate i.
StateVector flip(const StateVector& x, int i);

double p_norm(const Vector& x, double p);

}  // namespace maxcut
