#include "gea/control.hpp"

#include <cmath>
#include <stdexcept>

#include "gea/canonical.hpp"
#include "gea/errors.hpp"
#include "gea/factorizer.hpp"

namespace gea {

namespace {

/// Reverse a factorization into time order and attach control values;
/// the rightmost factor acts first.
ControlSchedule schedule_from_factors(const std::vector<Factor>& factors,
                                      const std::vector<double>& durations, double m, double n,
                                      const Tolerances& tol) {
    ControlSchedule sched;
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
        const double u = factors[i].axis == Axis::Z1 ? m : n;
        const double d = durations[i];
        if (d <= tol.drop) continue;
        if (!sched.segments.empty() && sched.segments.back().u == u) {
            sched.segments.back().duration += d;
        } else {
            sched.segments.push_back({u, d});
        }
    }
    return sched;
}

}  // namespace

std::pair<SkewGenerator, SkewGenerator> generators(const BilinearSystem& sys,
                                                   const Tolerances& tol) {
    const SkewGenerator z1 = sys.A + sys.B * sys.M;
    const SkewGenerator z2 = sys.A + sys.B * sys.N;
    const Vec3 v1 = z1.axis_vector();
    const Vec3 v2 = z2.axis_vector();
    if (v1.cross(v2).norm() <= tol.dependence * v1.norm() * v2.norm() || z1.is_zero() ||
        z2.is_zero())
        throw NotControllableWithTwoLevels(
            "generators: A + B*M and A + B*N are linearly dependent");
    return {z1, z2};
}

std::pair<SuGenerator, SuGenerator> generators(const QuantumBilinearSystem& sys,
                                               const Tolerances& tol) {
    const SuGenerator z1 = sys.A + sys.B * sys.M;
    const SuGenerator z2 = sys.A + sys.B * sys.N;
    const Vec3 v1{z1.bx, z1.by, z1.bz};
    const Vec3 v2{z2.bx, z2.by, z2.bz};
    if (v1.cross(v2).norm() <= tol.dependence * v1.norm() * v2.norm() || z1.is_zero() ||
        z2.is_zero())
        throw NotControllableWithTwoLevels(
            "generators: A + B*M and A + B*N are linearly dependent");
    return {z1, z2};
}

ControlSchedule synthesize(const BilinearSystem& sys, const Rotation& x, const Tolerances& tol) {
    const auto [z1, z2] = generators(sys, tol);
    CanonicalPair pair;
    try {
        pair = canonicalize(z1, z2, tol);
    } catch (const DependentGenerators& e) {
        throw NotControllableWithTwoLevels(e.what());
    }

    const Factorization f = factor_minimal(to_canonical_target(x, pair), pair.rho, tol);
    std::vector<double> durations;
    durations.reserve(f.factors.size());
    for (const Factor& factor : f.factors)
        durations.push_back(canonical_param_to_original(factor.axis, factor.parameter, pair));
    return schedule_from_factors(f.factors, durations, sys.M, sys.N, tol);
}

ControlSchedule synthesize(const QuantumBilinearSystem& sys, const Unitary2& target,
                           const Tolerances& tol) {
    const auto [z1, z2] = generators(sys, tol);
    Factorization f;
    try {
        f = factor_su2(target, z1, z2, tol);
    } catch (const DependentGenerators& e) {
        throw NotControllableWithTwoLevels(e.what());
    }
    std::vector<double> durations;
    durations.reserve(f.factors.size());
    for (const Factor& factor : f.factors) durations.push_back(factor.parameter);
    return schedule_from_factors(f.factors, durations, sys.M, sys.N, tol);
}

Rotation propagate(const BilinearSystem& sys, const ControlSchedule& sched) {
    Rotation x = Rotation::Identity();
    for (const Segment& seg : sched.segments)
        x = exp_rot(sys.A + sys.B * seg.u, seg.duration) * x;
    return x;
}

Unitary2 propagate(const QuantumBilinearSystem& sys, const ControlSchedule& sched) {
    Unitary2 u = Unitary2::Identity();
    for (const Segment& seg : sched.segments)
        u = exp_su2(sys.A + sys.B * seg.u, seg.duration) * u;
    return u;
}

std::vector<std::pair<double, Vec3>> propagate_state(const BilinearSystem& sys,
                                                     const ControlSchedule& sched, const Vec3& x0,
                                                     int samples_per_segment) {
    if (samples_per_segment < 1)
        throw std::invalid_argument("propagate_state: samples_per_segment must be >= 1");

    std::vector<std::pair<double, Vec3>> samples;
    samples.emplace_back(0.0, x0);

    Rotation x = Rotation::Identity();
    double t0 = 0.0;
    for (const Segment& seg : sched.segments) {
        const SkewGenerator z = sys.A + sys.B * seg.u;
        for (int j = 1; j <= samples_per_segment; ++j) {
            const double local = seg.duration * j / samples_per_segment;
            samples.emplace_back(t0 + local, exp_rot(z, local) * x * x0);
        }
        x = exp_rot(z, seg.duration) * x;
        t0 += seg.duration;
    }
    return samples;
}

}  // namespace gea
