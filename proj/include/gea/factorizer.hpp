#pragma once

#include <vector>

#include "gea/so3.hpp"

namespace gea {

struct Factor {
    Axis axis = Axis::Z1;
    double parameter = 0.0;
};

/// Ordered product of one-parameter factors, leftmost first:
///   X = exp(G(a_1) p_1) * exp(G(a_2) p_2) * ... ,
/// with G(Z1) = S12 and G(Z2) = rho*S12 + S23.
struct Factorization {
    double rho = 0.0;
    std::vector<Factor> factors;

    int count() const { return static_cast<int>(factors.size()); }
};

/// The canonical generator exponentiated by factors on the given axis.
SkewGenerator axis_generator(Axis axis, double rho);

/// Parameter period of the axis subgroup: 2*pi for Z1, 2*pi/sqrt(1+rho^2) for Z2.
double axis_period(Axis axis, double rho);

/// Left-to-right product of the factor exponentials.
Rotation reconstruct(const Factorization& f);

/// Reduce parameters mod period, drop trivial factors and merge adjacent
/// factors on the same axis. Idempotent.
Factorization normalize(Factorization f, const Tolerances& tol = default_tols());

/// Given a factorization of W X W^T (W the swap reflection), produce the
/// factorization of X by conjugating each factor; length is preserved.
Factorization map_back_reflected(const Factorization& f,
                                 const Tolerances& tol = default_tols());

/// Minimum-length factorization of a rotation target over the canonical pair.
/// The result reconstructs the target within tol.reconstruct and its length
/// equals the min_factors count.
Factorization factor_minimal(const Rotation& x, double rho,
                             const Tolerances& tol = default_tols());

namespace detail {

/// Classical Euler resolution at rho == 0: extract both axis orderings in
/// closed form and keep the one with fewer nontrivial factors (ties keep
/// the ordering whose rightmost axis is Z1).
Factorization factor_euler_orthogonal(const Rotation& x, const Tolerances& tol);

}  // namespace detail

}  // namespace gea
