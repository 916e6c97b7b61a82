#pragma once

#include <Eigen/Dense>

#include "gea/factorizer.hpp"
#include "gea/so3.hpp"

namespace gea {

using Unitary2 = Eigen::Matrix2cd;

/// Element of su(2) as coefficients on the basis
///   Sx = [[0,-i],[-i,0]],  Sy = [[0,-1],[1,0]],  Sz = [[-i,0],[0,i]];
/// the realized matrix is traceless and anti-Hermitian by construction.
struct SuGenerator {
    double bx = 0.0;
    double by = 0.0;
    double bz = 0.0;

    Unitary2 matrix() const;

    /// |eigenvalues| of the realized matrix: sqrt(bx^2 + by^2 + bz^2).
    /// exp(V t) has period 2*pi / rate() and exp(V pi/rate()) == -I.
    double rate() const;

    bool is_zero(double tol = 0.0) const { return rate() <= tol; }

    SuGenerator operator+(const SuGenerator& o) const { return {bx + o.bx, by + o.by, bz + o.bz}; }
    SuGenerator operator*(double s) const { return {bx * s, by * s, bz * s}; }
};

SuGenerator su_basis_x();
SuGenerator su_basis_y();
SuGenerator su_basis_z();

/// Closed-form exponential exp(V t) in SU(2).
Unitary2 exp_su2(const SuGenerator& v, double t);

/// The Lie algebra isomorphism su(2) -> so(3):
/// Sx -> 2*S13, Sy -> 2*S23, Sz -> -2*S12, extended linearly.
SkewGenerator phi_tilde(const SuGenerator& v);

/// The 2-to-1 covering homomorphism SU(2) -> SO(3), computed through the
/// adjoint action so no logarithm branch is involved; phi(U) == phi(-U).
Rotation phi(const Unitary2& u);

bool is_special_unitary(const Unitary2& u, double tol);

/// Minimum-length factorization of an SU(2) target over the subgroups of
/// two independent generators. Parameters are durations on exp(Zbar_i t);
/// the factor product equals the target exactly (never its negative).
Factorization factor_su2(const Unitary2& target, const SuGenerator& zbar1,
                         const SuGenerator& zbar2, const Tolerances& tol = default_tols());

/// Left-to-right product of exp(Zbar_axis t) over the factors.
Unitary2 reconstruct_su2(const Factorization& f, const SuGenerator& zbar1,
                         const SuGenerator& zbar2);

}  // namespace gea
