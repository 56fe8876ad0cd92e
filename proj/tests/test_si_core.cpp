#include <doctest.h>

#include <cmath>

#include "maxcut/oracle.hpp"
#include "maxcut/si_core.hpp"
#include "test_util.hpp"

using namespace maxcut;
namespace tu = maxcut::testutil;

namespace {

Vector vec(std::initializer_list<double> vals) {
  Vector v(static_cast<int>(vals.size()));
  int i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("init_state evaluates r0 and is scale-free") {
  const Graph tri = tu::triangle();
  SolverConfig cfg;
  const SolverState a = init_state(tri, vec({1, 1, -1}), cfg);
  CHECK(a.r == 4.0);
  CHECK(a.k == 0);
  const SolverState b = init_state(tri, vec({2, 2, -2}), cfg);
  CHECK(b.r == 4.0);
  CHECK(b.x.x == a.x.x);
  CHECK_THROWS_AS(init_state(tri, Vector::Zero(3), cfg),
                  std::domain_error);
}

TEST_CASE("step ascends strictly from the constant path state") {
  const Graph path = tu::path3();
  SolverConfig cfg;
  cfg.seed = 5;
  SolverState st = init_state(path, vec({1, 1, 1}), cfg);
  CHECK(st.r == 0.0);
  step(st, path, cfg);
  CHECK(st.r >= 2.0);
}

TEST_CASE("step keeps the triangle fixed point") {
  const Graph tri = tu::triangle();
  SolverConfig cfg;
  cfg.seed = 6;
  SolverState st = init_state(tri, vec({1, 1, -1}), cfg);
  for (int k = 0; k < 10; ++k) {
    step(st, tri, cfg);
    CHECK(st.r == 4.0);
  }
}

TEST_CASE("run_si solves the toy graphs at p = inf") {
  SolverConfig cfg;
  cfg.T = 50;
  const Graph tri = tu::triangle();
  const Graph c4 = tu::cycle4();
  SplitMix64 rng(61);
  for (int rep = 0; rep < 5; ++rep) {
    cfg.seed = rng.next();
    CHECK(run_si(tri, tu::random_pm1(rng, 3), cfg).final_cut == 2.0);
    CHECK(run_si(c4, tu::random_pm1(rng, 4), cfg).final_cut == 4.0);
  }
}

TEST_CASE("certify_local_optimum on frozen examples") {
  const Graph tri = tu::triangle();
  auto [ok, witness] =
      certify_local_optimum(tri, StateVector::make(vec({1, 1, -1})));
  CHECK(ok);
  CHECK(!witness.has_value());

  // constant path state: flipping either endpoint already improves F, so
  // the first improving index (vertex 1) is the witness
  const Graph path = tu::path3();
  auto [ok2, witness2] =
      certify_local_optimum(path, StateVector::make(vec({1, 1, 1})));
  CHECK(!ok2);
  CHECK(witness2.value() == 0);

  // non-binary states are rejected with the offending coordinate
  auto [ok3, witness3] =
      certify_local_optimum(path, StateVector::make(vec({1, 0.5, -1})));
  CHECK(!ok3);
  CHECK(witness3.value() == 1);
}

TEST_CASE("monotone trajectories respect the subgradient bound") {
  SplitMix64 rng(62);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 4 + static_cast<int>(rng.below(7));
    const Graph g = tu::random_connected_graph(rng, n);
    for (double p : {2.0, kPInf}) {
      SolverConfig cfg;
      cfg.p = p;
      cfg.seed = rng.next();
      SolverState st = init_state(g, tu::random_pm1(rng, n), cfg);
      for (int k = 0; k < 60; ++k) {
        const double r_prev = st.r;
        step(st, g, cfg);
        CHECK(st.r >= r_prev - 1e-9);
        CHECK(st.r <= st.ctx.s.lpNorm<1>() + 1e-9);
      }
      CHECK(st.best_r <= 2.0 * brute_force_maxcut(g).value + 1e-9);
    }
  }
}

TEST_CASE("finite-step stabilization at p = inf certifies a local optimum") {
  SplitMix64 rng(63);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 5 + static_cast<int>(rng.below(8));  // n <= 12
    const Graph g = tu::random_connected_graph(rng, n);
    SolverConfig cfg;
    cfg.T = 500;
    cfg.seed = rng.next();
    const RunRecord rec = run_si(g, tu::random_pm1(rng, n), cfg);
    const std::size_t len = rec.r_trajectory.size();
    for (std::size_t k = len - 50; k < len; ++k)
      CHECK(rec.r_trajectory[k] == rec.r_trajectory[len - 1]);
    auto [ok, witness] =
        certify_local_optimum(g, StateVector::make(rec.final_x));
    CHECK(ok);
  }
}

TEST_CASE("incremental bookkeeping matches full recomputation") {
  SplitMix64 rng(64);
  for (double p : {2.0, kPInf}) {
    const Graph g = tu::random_connected_graph(rng, 16);
    SolverConfig cfg;
    cfg.p = p;
    cfg.seed = 99;
    SolverState st = init_state(g, tu::random_pm1(rng, 16), cfg);
    for (int k = 0; k < 50; ++k) {
      step(st, g, cfg);
      const double tol =
          is_inf_norm(p) ? 0.0 : 1e-9 * std::max(1.0, st.r);
      CHECK(std::abs(st.r - eval_I(g, st.x.x)) <= tol);
      const auto fresh = build_context(g, st.x, cfg.tie_tol);
      CHECK((st.ctx.q - fresh.q).lpNorm<Eigen::Infinity>() <= tol);
      CHECK((st.ctx.p() - fresh.p()).lpNorm<Eigen::Infinity>() <= tol);
    }
  }
}

TEST_CASE("early stop window halts a stalled run") {
  const Graph tri = tu::triangle();
  SolverConfig cfg;
  cfg.T = 500;
  cfg.early_stop_window = 10;
  cfg.seed = 3;
  const RunRecord rec = run_si(tri, vec({1, 1, -1}), cfg);
  CHECK(rec.total_iterations < 500);
  CHECK(rec.final_cut == 2.0);
}

TEST_CASE("threshold_cut rounds with sign(0) = +1") {
  const SideVector side = threshold_cut(vec({0.5, 0.0, -0.1}));
  CHECK(side[0] == 1);
  CHECK(side[1] == 1);
  CHECK(side[2] == -1);
}

TEST_CASE("metrics are recorded when requested") {
  const Graph g = tu::cycle4();
  SolverConfig cfg;
  cfg.T = 20;
  cfg.record_metrics = true;
  cfg.seed = 8;
  SolverState st = init_state(g, vec({1, -1, 1, -1}), cfg);
  for (int k = 0; k < 20; ++k) step(st, g, cfg);
  CHECK(st.metrics.n_minus_m0.size() == 20);
  CHECK(st.metrics.delta_sigma.size() == 20);
  CHECK(st.metrics.v_size.size() == 20);
  for (int v : st.metrics.v_size) {
    CHECK(v >= 0);
    CHECK(v <= 4);
  }
}
