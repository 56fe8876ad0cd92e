#pragma once

#include <cstdint>

#include "maxcut/rng.hpp"
#include "maxcut/vectorspace.hpp"

namespace maxcut {

enum class Scenario { S1, S2, S3 };

// Description of the solution set of
//   min_{||x||_p = 1} { r ||x||_inf - (x, v) },   0 < r <= ||v||_1,
// in the sorted nonnegative coordinates z (|v| descending). Coordinates with
// free_mask set may take either extreme value {free_lo, free_hi}; the
// remaining entries of z_sorted are determined. Mapping back to x goes
// through perm and sign(v):  x* = sign(v) . z / ||z||_p.
struct InnerSolution {
  Scenario scenario = Scenario::S3;
  std::vector<int> perm;  // perm[k] = original index of k-th largest |v|
  int m0 = 0;             // threshold index (1-based), n in Scenario 3
  int m1 = 0;             // lower threshold (Scenario 2); equals m0 elsewhere
  Vector z_sorted;        // determined values; free entries hold free_hi
  std::vector<std::uint8_t> free_mask;
  double free_lo = 0.0;
  double free_hi = 1.0;
  Vector sign_v;  // sign of v in original order, sign(0) = +1
  double p = kPInf;
  double objective = 0.0;  // the minimum L(r, v); <= 0
};

// A(m) = sum_{j<=m} (|v_j| - |v_{m+1}|) for m = 1..n, with v_{n+1} = 0.
// Input must be sorted nonincreasing (checked; throws std::invalid_argument).
Vector accumulation(const Vector& v_abs_sorted);

// Closed-form inner minimizer. r = 0 is accepted (cold starts with F = 0);
// r < 0 is an argument error, r > ||v||_1 + tol a broken upstream invariant.
InnerSolution solve_inner(const Vector& v, double r, double p,
                          double tol = 1e-9);

// A vertex of the solution polytope, sup-normalized (max |x_i| = 1). Free
// coordinates are drawn independently and uniformly from their extremes.
Vector sample_vertex_inf(const InnerSolution& sol, SplitMix64& rng);

// Same vertex scaled to the p-sphere, ||x||_p = 1.
StateVector sample_vertex(const InnerSolution& sol, SplitMix64& rng);

}  // namespace maxcut
