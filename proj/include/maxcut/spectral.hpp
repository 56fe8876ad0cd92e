#pragma once

#include "maxcut/graph.hpp"
#include "maxcut/rng.hpp"

namespace maxcut {

struct EigenPair {
  Vector x;            // unit 2-norm eigenvector
  double lambda = 0.0;
  int iterations = 0;
  double residual = 0.0;  // ||Lx - lambda x||_2 at exit
};

struct SpectralConfig {
  double tol = 1e-8;  // relative residual target
  int max_iters = 0;  // 0 picks 10 n + 1000
  std::uint64_t seed = 0;
};

// Dominant eigenpair of the graph Laplacian L = D - W by power iteration
// from a seeded random start. L is positive semidefinite, so the dominant
// eigenvalue is the largest one. Throws std::runtime_error if the residual
// ||Lx - lambda x||_2 <= tol * lambda is not reached within max_iters.
EigenPair max_laplacian_eigenvector(const Graph& g, const SpectralConfig& cfg);

// Thresholds x at zero (sign(0) = +1) and evaluates the induced cut.
Cut spectral_cut(const Graph& g, const Vector& x);

}  // namespace maxcut
