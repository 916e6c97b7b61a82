#pragma once

#include "gea/so3.hpp"

namespace gea {

/// Result of reducing an independent pair (Z1, Z2) to the canonical form
/// (S12, rho*S12 + S23) by the rotation T and the scalings lambda1, d:
///
///   T Z1 T^T = lambda1 * S12
///   T Z2 T^T = a * S12 + d * S23,   rho = a / d
struct CanonicalPair {
    Rotation T;
    double lambda1 = 1.0;
    double a = 0.0;
    double d = 1.0;
    double rho = 0.0;
    double psi = 0.0;
};

/// Build the canonical frame for an independent generator pair.
/// Throws std::invalid_argument when z1 == 0 and DependentGenerators when
/// the pair spans a single line (|d| below the dependence threshold).
CanonicalPair canonicalize(const SkewGenerator& z1, const SkewGenerator& z2,
                           const Tolerances& tol = default_tols());

/// The orthogonal involution (det -1) that exchanges the roles of the two
/// canonical generators up to scale and sign:
///
///   W (rho*S12 + S23) W^T = -sqrt(1+rho^2) * S12
///   W S12 W^T             = -(1/sqrt(1+rho^2)) * (rho*S12 + S23)
Rotation swap_reflection(double rho);

/// Conjugate a target into the canonical frame: T X T^T.
Rotation to_canonical_target(const Rotation& x, const CanonicalPair& pair);

/// Duration tau >= 0 on the original one-parameter subgroup equivalent to
/// parameter theta on the canonical subgroup, reduced into [0, period).
double canonical_param_to_original(Axis axis, double theta, const CanonicalPair& pair);

/// Period of the original subgroup for the given axis.
double original_period(Axis axis, const CanonicalPair& pair);

}  // namespace gea
