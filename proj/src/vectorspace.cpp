#include "maxcut/vectorspace.hpp"

#include <cmath>

namespace maxcut {

StateVector StateVector::make(Vector x, double p) {
  StateVector s;
  s.inf_norm = x.cwiseAbs().maxCoeff();
  if (!(s.inf_norm > 0.0))
    throw std::domain_error("state vector must be nonzero");
  s.x = std::move(x);
  s.p = p;
  return s;
}

double eval_I(const Graph& g, const Vector& x) {
  if (x.size() != g.order())
    throw std::invalid_argument("vector length mismatch");
  double total = 0.0;
  for (const Edge& e : g.edges()) total += e.w * std::abs(x[e.u] - x[e.v]);
  return total;
}

double eval_F(const Graph& g, const Vector& x) {
  double inf_norm = x.size() > 0 ? x.cwiseAbs().maxCoeff() : 0.0;
  if (!(inf_norm > 0.0)) throw std::domain_error("F undefined at the zero vector");
  return eval_I(g, x) / inf_norm;
}

LevelSets level_sets(const StateVector& x, double tie_tol) {
  LevelSets ls;
  const double tol = tie_tol * x.inf_norm;
  for (int i = 0; i < x.x.size(); ++i) {
    if (std::abs(x.x[i] - x.inf_norm) <= tol)
      ls.s_plus.push_back(i);
    else if (std::abs(x.x[i] + x.inf_norm) <= tol)
      ls.s_minus.push_back(i);
    else
      ls.s_less.push_back(i);
  }
  return ls;
}

StateVector flip(const StateVector& x, int i) {
  if (i < 0 || i >= x.x.size()) throw std::out_of_range("flip index");
  StateVector y = x;
  y.x[i] = -y.x[i];
  return y;
}

double p_norm(const Vector& x, double p) {
  if (is_inf_norm(p)) return x.cwiseAbs().maxCoeff();
  if (p == 1.0) return x.cwiseAbs().sum();
  if (p == 2.0) return x.norm();
  double s = 0.0;
  for (int i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i]), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace maxcut
