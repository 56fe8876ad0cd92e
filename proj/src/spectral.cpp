#include "maxcut/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "maxcut/vectorspace.hpp"

namespace maxcut {

EigenPair max_laplacian_eigenvector(const Graph& g,
                                    const SpectralConfig& cfg) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  const int max_iters = cfg.max_iters > 0 ? cfg.max_iters : 10 * n + 1000;

  SplitMix64 rng(cfg.seed);
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.uniform(-1.0, 1.0);
  const double norm0 = x.norm();
  if (!(norm0 > 0.0)) x[0] = 1.0;  // unreachable in practice
  x /= x.norm();

  EigenPair out;
  for (int k = 1; k <= max_iters; ++k) {
    Vector y = laplacian_apply(g, x);
    const double lambda = x.dot(y);
    const double residual = (y - lambda * x).norm();
    if (residual <= cfg.tol * std::max(lambda, 1e-300)) {
      out.x = x;
      out.lambda = lambda;
      out.iterations = k;
      out.residual = residual;
      return out;
    }
    const double ynorm = y.norm();
    if (!(ynorm > 0.0)) {
      // x landed in the kernel; edgeless graphs have L = 0 and any unit
      // vector is an eigenvector for lambda = 0.
      out.x = x;
      out.lambda = 0.0;
      out.iterations = k;
      out.residual = 0.0;
      return out;
    }
    x = y / ynorm;
  }
  throw std::runtime_error("power iteration did not converge");
}

Cut spectral_cut(const Graph& g, const Vector& x) {
  if (x.size() != g.order())
    throw std::invalid_argument("vector length mismatch");
  SideVector side(g.order());
  for (int i = 0; i < g.order(); ++i) side[i] = sign(x[i]) > 0 ? 1 : -1;
  return {side, cut_value(g, side)};
}

}  // namespace maxcut
