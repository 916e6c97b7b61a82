#pragma once

#include <Eigen/Dense>

#include "gea/tolerances.hpp"

namespace gea {

using Rotation = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

/// Which of the two fixed generators a factor exponentiates.
enum class Axis { Z1, Z2 };

/// Element of so(3) stored as coefficients on the basis {S12, S13, S23},
/// where S_hk has +1 at entry (h,k) and -1 at (k,h). Skewness is structural;
/// the 3x3 matrix is realized on demand.
struct SkewGenerator {
    double c12 = 0.0;
    double c13 = 0.0;
    double c23 = 0.0;

    Eigen::Matrix3d matrix() const;

    /// Vector w with matrix() == [w]x (the cross-product matrix of w).
    Vec3 axis_vector() const;

    /// Angular rate of exp(Z t): sqrt(c12^2 + c13^2 + c23^2).
    double speed() const;

    bool is_zero(double tol = 0.0) const;

    SkewGenerator operator+(const SkewGenerator& o) const { return {c12 + o.c12, c13 + o.c13, c23 + o.c23}; }
    SkewGenerator operator-(const SkewGenerator& o) const { return {c12 - o.c12, c13 - o.c13, c23 - o.c23}; }
    SkewGenerator operator-() const { return {-c12, -c13, -c23}; }
    SkewGenerator operator*(double s) const { return {c12 * s, c13 * s, c23 * s}; }

    static SkewGenerator from_axis_vector(const Vec3& w) { return {-w.z(), w.y(), -w.x()}; }
};

inline SkewGenerator operator*(double s, const SkewGenerator& z) { return z * s; }

/// Basis matrix S_hk for (h,k) in {(1,2),(1,3),(2,3)} (1-based indices).
/// Throws std::invalid_argument on any other pair.
SkewGenerator s_basis(int h, int k);

/// exp(Z t) by the axis-angle closed form; exact rotation up to rounding.
Rotation exp_rot(const SkewGenerator& z, double t);

struct AxisAngle {
    SkewGenerator axis;  ///< unit speed, zero when angle == 0
    double angle = 0.0;  ///< in [0, pi]
};

/// Principal logarithm. At angle pi the +/- axis ambiguity is broken by
/// making the largest-magnitude coefficient of the generator positive;
/// near the identity the zero generator with angle 0 is returned.
AxisAngle log_rot(const Rotation& x);

/// Trace(Z1 Z2^T) = 2 (c12 c12' + c13 c13' + c23 c23').
double inner(const SkewGenerator& z1, const SkewGenerator& z2);

/// Cosine of the angle between two nonzero generators under inner().
/// Throws std::invalid_argument if either generator is zero.
double cos_angle_psi(const SkewGenerator& z1, const SkewGenerator& z2);

/// max |X^T X - I| < tol and det(X) > 0.
bool is_rotation(const Rotation& x, double tol);

/// Orthogonal with either determinant sign.
bool is_orthogonal(const Rotation& x, double tol);

/// Throws std::invalid_argument unless is_rotation(x, tol).
void require_rotation(const Rotation& x, double tol, const char* what = "matrix");

}  // namespace gea
