#include "gea/so3.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gea {

Tolerances Tolerances::scaled(double base) {
    const double k = base / 1e-9;
    Tolerances t;
    t.validate *= k;
    t.snap *= k;
    t.step *= k;
    t.reconstruct *= k;
    t.drop *= k;
    t.dependence *= k;
    return t;
}

const Tolerances& default_tols() {
    static const Tolerances t{};
    return t;
}

Eigen::Matrix3d SkewGenerator::matrix() const {
    Eigen::Matrix3d m;
    m << 0.0, c12, c13,
        -c12, 0.0, c23,
        -c13, -c23, 0.0;
    return m;
}

Vec3 SkewGenerator::axis_vector() const {
    return {-c23, c13, -c12};
}

double SkewGenerator::speed() const {
    return std::sqrt(c12 * c12 + c13 * c13 + c23 * c23);
}

bool SkewGenerator::is_zero(double tol) const {
    return speed() <= tol;
}

SkewGenerator s_basis(int h, int k) {
    if (h == 1 && k == 2) return {1.0, 0.0, 0.0};
    if (h == 1 && k == 3) return {0.0, 1.0, 0.0};
    if (h == 2 && k == 3) return {0.0, 0.0, 1.0};
    throw std::invalid_argument("s_basis: index pair must be (1,2), (1,3) or (2,3)");
}

Rotation exp_rot(const SkewGenerator& z, double t) {
    const double s = z.speed();
    const double angle = s * t;
    if (angle == 0.0) return Rotation::Identity();
    const Eigen::Matrix3d k = z.matrix() / s;
    return Rotation::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * (k * k);
}

AxisAngle log_rot(const Rotation& x) {
    const double c = std::clamp((x.trace() - 1.0) / 2.0, -1.0, 1.0);

    // sin(angle) * w_hat, read off the antisymmetric part
    const Vec3 u{(x(2, 1) - x(1, 2)) / 2.0,
                 (x(0, 2) - x(2, 0)) / 2.0,
                 (x(1, 0) - x(0, 1)) / 2.0};

    // atan2 keeps the angle well conditioned at both ends of [0, pi]
    const double angle = std::atan2(u.norm(), c);
    if (angle < 1e-15) return {SkewGenerator{}, 0.0};

    Vec3 w;
    if (angle < 3.0) {
        w = u.normalized();
    } else {
        // Near pi the antisymmetric part degenerates; use w w^T from the
        // symmetric part and recover the sign from u where possible.
        const Eigen::Matrix3d b = (x + x.transpose()) / 2.0;
        const Eigen::Matrix3d outer = (b - c * Eigen::Matrix3d::Identity()) / (1.0 - c);
        int j = 0;
        outer.diagonal().maxCoeff(&j);
        w = outer.col(j) / std::sqrt(std::max(outer(j, j), 1e-300));
        w.normalize();
        if (u.norm() > 1e-12) {
            if (u.dot(w) < 0.0) w = -w;
        }
    }

    SkewGenerator g = SkewGenerator::from_axis_vector(w);
    if (u.norm() <= 1e-12) {
        // angle == pi: force the largest-magnitude coefficient positive
        const double a12 = std::abs(g.c12), a13 = std::abs(g.c13), a23 = std::abs(g.c23);
        double lead = g.c12;
        if (a13 > a12 && a13 >= a23) lead = g.c13;
        else if (a23 > a12 && a23 > a13) lead = g.c23;
        if (lead < 0.0) g = -g;
    }
    return {g, angle};
}

double inner(const SkewGenerator& z1, const SkewGenerator& z2) {
    return 2.0 * (z1.c12 * z2.c12 + z1.c13 * z2.c13 + z1.c23 * z2.c23);
}

double cos_angle_psi(const SkewGenerator& z1, const SkewGenerator& z2) {
    if (z1.is_zero() || z2.is_zero())
        throw std::invalid_argument("cos_angle_psi: zero generator");
    const double v = inner(z1, z2) / (std::sqrt(inner(z1, z1)) * std::sqrt(inner(z2, z2)));
    return std::clamp(v, -1.0, 1.0);
}

bool is_orthogonal(const Rotation& x, double tol) {
    return (x.transpose() * x - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < tol;
}

bool is_rotation(const Rotation& x, double tol) {
    return is_orthogonal(x, tol) && x.determinant() > 0.0;
}

void require_rotation(const Rotation& x, double tol, const char* what) {
    if (!is_rotation(x, tol))
        throw std::invalid_argument(std::string(what) + " is not a rotation matrix within tolerance");
}

}  // namespace gea
