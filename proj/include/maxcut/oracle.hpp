#pragma once

#include "maxcut/graph.hpp"
#include "maxcut/spectral.hpp"

namespace maxcut {

// Exact maximum cut by enumeration of the 2^(n-1) sign patterns with
// vertex 0 fixed on the positive side. Hard cap n <= 24; the first
// maximizer in enumeration order is returned as witness.
Cut brute_force_maxcut(const Graph& g);

// Grid minimum of G(z) = (r - (z, v_abs_sorted)) / ||z||_p over
// {0, step, ..., 1}^n excluding z = 0. Restricting to the ordered region
// z_1 >= ... >= z_n loses nothing: sorting any grid point descending is
// again a grid point and cannot increase G. Caps: n <= 3, step <= 1e-2.
double grid_inner_min(const Vector& v, double r, double p, double step);

// Max of ||s||_1 over all orientations z_ij in {-1, +1} of the tie edges
// (x_i = x_j); signs of the remaining edges are fixed by x. Exhaustive,
// cap 20 tie edges. x must be a binary +-1 vector.
double max_subgradient_l1(const Graph& g, const Vector& x);

// Largest Laplacian eigenpair from a full dense symmetric eigensolve.
EigenPair dense_max_eigenpair(const Graph& g);

}  // namespace maxcut
