#include "gea/su2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gea/canonical.hpp"
#include "gea/errors.hpp"

namespace gea {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const std::complex<double> kI{0.0, 1.0};

double positive_mod(double value, double period) {
    double r = std::fmod(value, period);
    if (r < 0.0) r += period;
    if (r == period) r = 0.0;
    return r;
}

}  // namespace

Unitary2 SuGenerator::matrix() const {
    Unitary2 m;
    m << -kI * bz, -kI * bx - by,
         -kI * bx + by, kI * bz;
    return m;
}

double SuGenerator::rate() const {
    return std::sqrt(bx * bx + by * by + bz * bz);
}

SuGenerator su_basis_x() { return {1.0, 0.0, 0.0}; }
SuGenerator su_basis_y() { return {0.0, 1.0, 0.0}; }
SuGenerator su_basis_z() { return {0.0, 0.0, 1.0}; }

Unitary2 exp_su2(const SuGenerator& v, double t) {
    const double w = v.rate();
    const double angle = w * t;
    if (angle == 0.0) return Unitary2::Identity();
    // V^2 = -w^2 I, so the series closes just like the planar rotation.
    return std::cos(angle) * Unitary2::Identity() + (std::sin(angle) / w) * v.matrix();
}

SkewGenerator phi_tilde(const SuGenerator& v) {
    return {-2.0 * v.bz, 2.0 * v.bx, 2.0 * v.by};
}

Rotation phi(const Unitary2& u) {
    const SuGenerator basis[3] = {su_basis_x(), su_basis_y(), su_basis_z()};
    const Unitary2 udag = u.adjoint();

    // Expansion coefficients of U E_j U^dag in the basis, via the trace form
    // <A,B> = -Tr(A B)/2 which is orthonormal on {Sx, Sy, Sz}.
    Eigen::Matrix3d m;
    for (int j = 0; j < 3; ++j) {
        const Unitary2 conj = u * basis[j].matrix() * udag;
        for (int i = 0; i < 3; ++i)
            m(i, j) = -0.5 * (basis[i].matrix() * conj).trace().real();
    }

    // Orthonormal images of the basis under phi_tilde, as columns.
    Eigen::Matrix3d frame;
    frame << 0.0, -1.0, 0.0,
             1.0, 0.0, 0.0,
             0.0, 0.0, 1.0;
    return frame * m * frame.transpose();
}

bool is_special_unitary(const Unitary2& u, double tol) {
    const bool unitary = (u * u.adjoint() - Unitary2::Identity()).cwiseAbs().maxCoeff() < tol;
    return unitary && std::abs(u.determinant() - 1.0) < tol;
}

Unitary2 reconstruct_su2(const Factorization& f, const SuGenerator& zbar1,
                         const SuGenerator& zbar2) {
    Unitary2 u = Unitary2::Identity();
    for (const Factor& factor : f.factors)
        u = u * exp_su2(factor.axis == Axis::Z1 ? zbar1 : zbar2, factor.parameter);
    return u;
}

Factorization factor_su2(const Unitary2& target, const SuGenerator& zbar1,
                         const SuGenerator& zbar2, const Tolerances& tol) {
    if (!is_special_unitary(target, std::max(tol.validate, 1e-10)))
        throw std::invalid_argument("factor_su2: target is not in SU(2) within tolerance");

    const SkewGenerator z1 = phi_tilde(zbar1);
    const SkewGenerator z2 = phi_tilde(zbar2);
    const CanonicalPair pair = canonicalize(z1, z2, tol);  // throws DependentGenerators

    Factorization f;
    f.rho = pair.rho;

    const Rotation x = phi(target);
    if ((x - Rotation::Identity()).cwiseAbs().maxCoeff() <= tol.snap) {
        if ((target - Unitary2::Identity()).cwiseAbs().maxCoeff() <= tol.reconstruct) return f;
        // target == -I: one full half-period about the first generator
        f.factors = {{Axis::Z1, std::numbers::pi / zbar1.rate()}};
        if ((reconstruct_su2(f, zbar1, zbar2) - target).cwiseAbs().maxCoeff() > tol.reconstruct)
            throw InternalSolverFailure("factor_su2: projected identity is neither I nor -I");
        return f;
    }

    const Factorization canonical = factor_minimal(to_canonical_target(x, pair), pair.rho, tol);
    for (const Factor& factor : canonical.factors)
        f.factors.push_back({factor.axis, canonical_param_to_original(factor.axis, factor.parameter, pair)});

    const Unitary2 lifted = reconstruct_su2(f, zbar1, zbar2);
    if ((lifted - target).norm() <= tol.reconstruct) return f;
    if ((lifted + target).norm() > tol.reconstruct)
        throw InternalSolverFailure("factor_su2: lifted product is neither the target nor its negative");

    // The lift landed on the negative sheet: shifting the first parameter
    // by its subgroup's half-period flips exactly that factor's sign, for
    // any parameter value, since exp is periodic under the full period.
    // An empty factorization on this sheet means the target is -I.
    if (f.factors.empty()) {
        f.factors = {{Axis::Z1, std::numbers::pi / zbar1.rate()}};
    } else {
        Factor& first = f.factors.front();
        const double rate = (first.axis == Axis::Z1 ? zbar1 : zbar2).rate();
        first.parameter = positive_mod(first.parameter + std::numbers::pi / rate, kTwoPi / rate);
    }
    if ((reconstruct_su2(f, zbar1, zbar2) - target).norm() > tol.reconstruct)
        throw InternalSolverFailure("factor_su2: sign correction failed the residual");
    return f;
}

}  // namespace gea
