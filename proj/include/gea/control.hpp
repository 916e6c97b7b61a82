#pragma once

#include <utility>
#include <vector>

#include "gea/so3.hpp"
#include "gea/su2.hpp"

namespace gea {

/// Bilinear system dX/dt = A X + B X u on SO(3) whose control u takes only
/// the two values M and N.
struct BilinearSystem {
    SkewGenerator A;
    SkewGenerator B;
    double M = 1.0;
    double N = -1.0;
};

/// Two-level quantum variant on SU(2).
struct QuantumBilinearSystem {
    SuGenerator A;
    SuGenerator B;
    double M = 1.0;
    double N = -1.0;
};

struct Segment {
    double u = 0.0;         ///< control value, one of {M, N}
    double duration = 0.0;  ///< >= 0
};

/// Time-ordered piecewise-constant control; the first segment acts first.
struct ControlSchedule {
    std::vector<Segment> segments;

    int switches() const { return segments.empty() ? 0 : static_cast<int>(segments.size()) - 1; }
};

/// Z1 = A + B*M and Z2 = A + B*N. Throws NotControllableWithTwoLevels when
/// the pair is linearly dependent.
std::pair<SkewGenerator, SkewGenerator> generators(const BilinearSystem& sys,
                                                   const Tolerances& tol = default_tols());

std::pair<SuGenerator, SuGenerator> generators(const QuantumBilinearSystem& sys,
                                               const Tolerances& tol = default_tols());

/// Minimum-switch schedule steering the fundamental matrix from I to x;
/// propagate(sys, result) == x within the reconstruction tolerance and the
/// switch count equals the minimum factor count minus one.
ControlSchedule synthesize(const BilinearSystem& sys, const Rotation& x,
                           const Tolerances& tol = default_tols());

ControlSchedule synthesize(const QuantumBilinearSystem& sys, const Unitary2& target,
                           const Tolerances& tol = default_tols());

/// Exact piecewise-exponential propagation of the fundamental matrix.
Rotation propagate(const BilinearSystem& sys, const ControlSchedule& sched);

Unitary2 propagate(const QuantumBilinearSystem& sys, const ControlSchedule& sched);

/// Samples of x(t) = X(t) x0 at uniform times within each segment, exact
/// exponentials throughout. The initial sample (0, x0) is always included.
std::vector<std::pair<double, Vec3>> propagate_state(const BilinearSystem& sys,
                                                     const ControlSchedule& sched, const Vec3& x0,
                                                     int samples_per_segment);

}  // namespace gea
