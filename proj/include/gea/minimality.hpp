#pragma once

#include <vector>

#include "gea/so3.hpp"

namespace gea {

/// The finite reachable-height sequences for a canonical pair with rho != 0.
/// z[k] is the maximum z-coordinate on the unit sphere reachable from the
/// south pole after k switch pairs; f[k] is where the axis-plane of the k-th
/// backbone circle crosses the z-axis. Iteration stops at the first index
/// kbar with f[kbar] >= 1, and z[k] == -cos(k * beta).
struct MinSequence {
    double rho = 0.0;
    std::vector<double> z;
    std::vector<double> f;
    int kbar = 0;
    double beta = 0.0;
};

/// Evaluate the sequences for rho != 0 (throws std::invalid_argument at 0).
MinSequence build_sequence(double rho);

struct OrderValue {
    int count = 0;
    int ktilde = 0;
};

/// Order function: the minimum factor count over factorizations whose
/// rightmost factor is a (possibly trivial, counted) rotation about the
/// first canonical axis. Boundary comparisons snap toward the smaller
/// count within tol.snap.
OrderValue order_value(const Rotation& x, const MinSequence& seq,
                       const Tolerances& tol = default_tols());

struct MinDecision {
    int count = 0;
    Axis last_axis = Axis::Z1;
    int ktilde = 0;
};

/// Minimum factor count over both axis orderings. For rho == 0 this is the
/// classical Euler resolution (both orderings tried, ties keep Z1 last);
/// the identity target reports count 0.
MinDecision min_factors(const Rotation& x, double rho,
                        const Tolerances& tol = default_tols());

}  // namespace gea
