#include "gea/canonical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gea/errors.hpp"

namespace gea {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double positive_mod(double value, double period) {
    double r = std::fmod(value, period);
    if (r < 0.0) r += period;
    if (r == period) r = 0.0;
    return r;
}

}  // namespace

CanonicalPair canonicalize(const SkewGenerator& z1, const SkewGenerator& z2,
                           const Tolerances& tol) {
    const double speed1 = z1.speed();
    if (speed1 == 0.0) throw std::invalid_argument("canonicalize: Z1 is zero");

    // Rows of T1 are an orthonormal basis {v1, v2, v3} with v3 spanning the
    // kernel of Z1. The sign v3 = -w_hat makes lambda1 = +speed(Z1), so the
    // original and canonical pairs have the same psi.
    const Vec3 v3 = -z1.axis_vector() / speed1;
    Vec3 v1 = Vec3::UnitZ().cross(v3);
    if (v1.norm() < 1e-6) v1 = Vec3::UnitX().cross(v3);
    v1 = (v1 - v1.dot(v3) * v3).normalized();
    const Vec3 v2 = v3.cross(v1);

    Rotation t1;
    t1.row(0) = v1;
    t1.row(1) = v2;
    t1.row(2) = v3;

    const Eigen::Matrix3d w = t1 * z2.matrix() * t1.transpose();
    const double b = w(0, 2);
    const double c = w(1, 2);

    // theta solves b cos(theta) + c sin(theta) = 0; this root makes d >= 0.
    const double theta = std::atan2(-b, c);
    const Rotation t = exp_rot(s_basis(1, 2), theta) * t1;

    const Eigen::Matrix3d v = t * z2.matrix() * t.transpose();
    const double a = v(0, 1);
    const double d = v(1, 2);

    if (std::abs(d) <= tol.dependence * z2.speed() || z2.speed() == 0.0)
        throw DependentGenerators("canonicalize: generators are linearly dependent");

    CanonicalPair pair;
    pair.T = t;
    pair.lambda1 = speed1;
    pair.a = a;
    pair.d = d;
    pair.rho = a / d;
    pair.psi = pair.rho / std::sqrt(1.0 + pair.rho * pair.rho);
    return pair;
}

Rotation swap_reflection(double rho) {
    const double n = std::sqrt(1.0 + rho * rho);
    Rotation w;
    w << -rho / n, 0.0, 1.0 / n,
         0.0, 1.0, 0.0,
         1.0 / n, 0.0, rho / n;
    return w;
}

Rotation to_canonical_target(const Rotation& x, const CanonicalPair& pair) {
    return pair.T * x * pair.T.transpose();
}

double original_period(Axis axis, const CanonicalPair& pair) {
    if (axis == Axis::Z1) return kTwoPi / std::abs(pair.lambda1);
    return kTwoPi / (std::abs(pair.d) * std::sqrt(1.0 + pair.rho * pair.rho));
}

double canonical_param_to_original(Axis axis, double theta, const CanonicalPair& pair) {
    const double scale = axis == Axis::Z1 ? pair.lambda1 : pair.d;
    return positive_mod(theta / scale, original_period(axis, pair));
}

}  // namespace gea
