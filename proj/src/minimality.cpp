#include "gea/minimality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gea/canonical.hpp"
#include "gea/errors.hpp"
#include "gea/factorizer.hpp"

namespace gea {

MinSequence build_sequence(double rho) {
    if (rho == 0.0)
        throw std::invalid_argument(
            "build_sequence: rho == 0 is the classical Euler case, handled by min_factors");

    const double ar = std::abs(rho);
    const double gain = 2.0 * rho * rho / (1.0 + rho * rho);

    MinSequence seq;
    seq.rho = rho;
    seq.beta = std::acos(std::clamp((rho * rho - 1.0) / (rho * rho + 1.0), -1.0, 1.0));

    // The height gain per switch pair is beta, so the sequence has about
    // pi/beta entries; refuse magnitudes that would not fit in memory.
    // beta underflows to 0 when rho^2 exceeds 2/eps, far past the cap.
    if (!(seq.beta > 0.0) || std::numbers::pi / seq.beta > 5e6)
        throw std::invalid_argument("build_sequence: |rho| too large, sequence would have over 5e6 entries");

    seq.z.push_back(-1.0);
    for (int k = 0;; ++k) {
        const double zk = seq.z.back();
        const double fk = std::sqrt(std::max(0.0, 1.0 - zk * zk)) / ar + zk;
        seq.f.push_back(fk);
        if (fk >= 1.0 && k >= 1) {
            seq.kbar = k;
            break;
        }
        seq.z.push_back(gain * fk - zk);
        if (k > 10000000)
            throw InternalSolverFailure("build_sequence: no termination index found");
    }
    return seq;
}

OrderValue order_value(const Rotation& x, const MinSequence& seq, const Tolerances& tol) {
    const double rho = seq.rho;
    const double x33 = x(2, 2);
    const double x13 = x(0, 2);
    const double eps = tol.snap;

    // Membership in the first-axis subgroup is tested through the off-block
    // entries, which are linear in the distance to the subgroup; x33 alone
    // is only quadratically sensitive and would claim count 1 for targets
    // far beyond what a one-factor reconstruction can absorb.
    const double off = std::max(std::max(std::abs(x(0, 2)), std::abs(x(1, 2))),
                                std::max(std::abs(x(2, 0)), std::abs(x(2, 1))));
    if (off <= eps && x33 > 0.0) return {1, 0};

    const double mz = -x33;  // z-coordinate of the displaced south pole
    if (mz <= seq.z[1] + eps) {
        const bool on_plane = std::abs(x13 - rho * (mz + 1.0)) <= eps;
        return {on_plane ? 2 : 3, 0};
    }

    int ktilde = 1;
    for (int k = 2; k <= seq.kbar; ++k) {
        if (seq.z[k] + eps < mz) ktilde = k;
    }

    const double sgn = rho > 0.0 ? 1.0 : -1.0;
    const bool reach_in_one_arc =
        sgn * x13 >= -std::abs(rho) * (x33 + seq.f[ktilde]) - eps;
    return {reach_in_one_arc ? 2 * ktilde + 2 : 2 * ktilde + 3, ktilde};
}

MinDecision min_factors(const Rotation& x, double rho, const Tolerances& tol) {
    if ((x - Rotation::Identity()).cwiseAbs().maxCoeff() <= tol.snap)
        return {0, Axis::Z1, 0};

    if (rho == 0.0) {
        const Factorization f = detail::factor_euler_orthogonal(x, tol);
        MinDecision dec;
        dec.count = f.count();
        dec.last_axis = f.factors.empty() ? Axis::Z1 : f.factors.back().axis;
        dec.ktilde = 0;
        return dec;
    }

    const MinSequence seq = build_sequence(rho);
    const OrderValue direct = order_value(x, seq, tol);
    const Rotation w = swap_reflection(rho);
    const OrderValue reflected = order_value(w * x * w.transpose(), seq, tol);

    MinDecision dec;
    if (direct.count <= reflected.count) {
        dec.count = direct.count;
        dec.last_axis = Axis::Z1;
        dec.ktilde = direct.ktilde;
    } else {
        dec.count = reflected.count;
        dec.last_axis = Axis::Z2;
        dec.ktilde = reflected.ktilde;
    }
    return dec;
}

}  // namespace gea
