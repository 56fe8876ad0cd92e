#include <doctest.h>

#include <cmath>

#include "maxcut/oracle.hpp"
#include "maxcut/spectral.hpp"
#include "test_util.hpp"

using namespace maxcut;
namespace tu = maxcut::testutil;

TEST_CASE("single edge eigenpair") {
  const Graph g = tu::single_edge();
  SpectralConfig cfg;
  cfg.seed = 91;
  const EigenPair ep = max_laplacian_eigenvector(g, cfg);
  CHECK(ep.lambda == doctest::Approx(2.0).epsilon(1e-9));
  const double c = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(ep.x[0]) == doctest::Approx(c).epsilon(1e-6));
  CHECK(ep.x[0] * ep.x[1] < 0.0);
  CHECK(ep.residual <= cfg.tol * ep.lambda);
}

TEST_CASE("triangle eigenpair lies in the lambda = 3 plane") {
  const Graph g = tu::triangle();
  SpectralConfig cfg;
  cfg.seed = 92;
  const EigenPair ep = max_laplacian_eigenvector(g, cfg);
  CHECK(ep.lambda == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(std::abs(ep.x.sum()) < 1e-6);  // orthogonal to the kernel
}

TEST_CASE("star K_1,3 eigenvalue matches the dense oracle") {
  const Graph star = Graph::from_edges(
      4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}});
  SpectralConfig cfg;
  cfg.seed = 93;
  const EigenPair ep = max_laplacian_eigenvector(star, cfg);
  CHECK(ep.lambda == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(ep.lambda ==
        doctest::Approx(dense_max_eigenpair(star).lambda).epsilon(1e-9));
}

TEST_CASE("residual contract and dense-oracle agreement on random graphs") {
  SplitMix64 rng(94);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 3 + static_cast<int>(rng.below(6));  // n <= 8
    const Graph g = tu::random_connected_graph(rng, n);
    SpectralConfig cfg;
    cfg.seed = rng.next();
    const EigenPair ep = max_laplacian_eigenvector(g, cfg);
    CHECK(ep.residual <= cfg.tol * ep.lambda);
    CHECK(std::abs(ep.x.norm() - 1.0) < 1e-9);
    CHECK(ep.lambda ==
          doctest::Approx(dense_max_eigenpair(g).lambda).epsilon(1e-6));
  }
}

TEST_CASE("Rayleigh quotient dominates random unit vectors") {
  SplitMix64 rng(95);
  const Graph g = tu::random_connected_graph(rng, 10);
  SpectralConfig cfg;
  cfg.seed = 96;
  const EigenPair ep = max_laplacian_eigenvector(g, cfg);
  const double top = ep.x.dot(laplacian_apply(g, ep.x));
  for (int rep = 0; rep < 50; ++rep) {
    Vector y(10);
    for (int i = 0; i < 10; ++i) y[i] = rng.uniform(-1.0, 1.0);
    y /= y.norm();
    CHECK(top >= y.dot(laplacian_apply(g, y)) - 1e-6);
  }
}

TEST_CASE("determinism per seed") {
  SplitMix64 rng(97);
  const Graph g = tu::random_connected_graph(rng, 12);
  SpectralConfig cfg;
  cfg.seed = 98;
  const EigenPair a = max_laplacian_eigenvector(g, cfg);
  const EigenPair b = max_laplacian_eigenvector(g, cfg);
  CHECK(a.x == b.x);
  CHECK(a.lambda == b.lambda);
}

TEST_CASE("non-convergence raises after max_iters") {
  const Graph g = tu::path3();
  SpectralConfig cfg;
  cfg.seed = 99;
  cfg.max_iters = 1;
  cfg.tol = 1e-15;
  CHECK_THROWS_AS(max_laplacian_eigenvector(g, cfg), std::runtime_error);
}

TEST_CASE("spectral_cut thresholds at zero with sign(0) = +1") {
  const Graph edge = tu::single_edge();
  Vector x(2);
  x << 0.7, -0.7;
  const Cut cut = spectral_cut(edge, x);
  CHECK(cut.value == 1.0);
  CHECK(cut.side[0] == 1);
  CHECK(cut.side[1] == -1);

  Vector pos(2);
  pos << 0.3, 0.0;
  const Cut zero = spectral_cut(edge, pos);
  CHECK(zero.value == 0.0);
  CHECK(zero.side[1] == 1);
}
