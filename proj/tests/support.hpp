#pragma once

// Shared helpers for the unit and acceptance suites. Everything here is
// test-side machinery, independent of the solver paths it is used to check.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "gea/factorizer.hpp"
#include "gea/so3.hpp"
#include "gea/su2.hpp"

namespace gea::testsupport {

inline Rotation random_rotation(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Eigen::Vector4d q{normal(rng), normal(rng), normal(rng), normal(rng)};
    q.normalize();
    const double w = q[0], x = q[1], y = q[2], z = q[3];
    Rotation r;
    r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
        2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
        2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
    return r;
}

inline SkewGenerator random_skew(std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> normal;
    return {scale * normal(rng), scale * normal(rng), scale * normal(rng)};
}

inline SuGenerator random_su(std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> normal;
    return {scale * normal(rng), scale * normal(rng), scale * normal(rng)};
}

inline Unitary2 random_special_unitary(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
    SuGenerator v = random_su(rng);
    const double r = v.rate();
    if (r == 0.0) return Unitary2::Identity();
    return exp_su2(v, uni(rng) / r);
}

/// Plain truncated power series for the matrix exponential; used as an
/// independent oracle for the closed-form rotation exponential.
inline Eigen::Matrix3d exp_series(const Eigen::Matrix3d& m, int terms = 60) {
    Eigen::Matrix3d sum = Eigen::Matrix3d::Identity();
    Eigen::Matrix3d term = Eigen::Matrix3d::Identity();
    for (int k = 1; k <= terms; ++k) {
        term = term * m / static_cast<double>(k);
        sum += term;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Exact rational arithmetic for the reachable-height recurrence. The rho = 2
// sequence stays rational because every 1 - z^2 along the way is a perfect
// square of a rational.
// ---------------------------------------------------------------------------

struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static std::int64_t gcd(std::int64_t a, std::int64_t b) {
        while (b != 0) {
            const std::int64_t t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    }

    static Fraction make(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::invalid_argument("Fraction: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const std::int64_t g = gcd(n, d);
        return {g == 0 ? 0 : n / g, g == 0 ? 1 : d / g};
    }

    Fraction operator+(const Fraction& o) const { return make(num * o.den + o.num * den, den * o.den); }
    Fraction operator-(const Fraction& o) const { return make(num * o.den - o.num * den, den * o.den); }
    Fraction operator*(const Fraction& o) const { return make(num * o.num, den * o.den); }
    Fraction operator/(const Fraction& o) const { return make(num * o.den, den * o.num); }
    bool operator>=(const Fraction& o) const { return (*this - o).num >= 0; }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    static std::int64_t isqrt_exact(std::int64_t v) {
        if (v < 0) throw std::invalid_argument("Fraction: sqrt of a negative");
        std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
        while (r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        if (r * r != v) throw std::invalid_argument("Fraction: sqrt is not exact");
        return r;
    }

    Fraction sqrt_exact() const { return make(isqrt_exact(num), isqrt_exact(den)); }
};

struct RationalSequence {
    std::vector<Fraction> z;
    std::vector<Fraction> f;
    int kbar = 0;
};

/// Run the recurrence z0 = f0 = -1, f_k = sqrt(1 - z_k^2)/|rho| + z_k,
/// z_{k+1} = (2 rho^2 / (1 + rho^2)) f_k - z_k in exact rational arithmetic,
/// stopping at the first f_k >= 1. Requires every square root on the way to
/// be exact (true for rho = 2).
inline RationalSequence rational_sequence(std::int64_t rho_num, std::int64_t rho_den) {
    const Fraction rho = Fraction::make(rho_num, rho_den);
    const Fraction rho2 = rho * rho;
    const Fraction gain = Fraction::make(2, 1) * rho2 / (rho2 + Fraction::make(1, 1));
    const Fraction abs_rho = Fraction::make(rho.num < 0 ? -rho.num : rho.num, rho.den);
    const Fraction one = Fraction::make(1, 1);

    RationalSequence seq;
    seq.z.push_back(Fraction::make(-1, 1));
    for (int k = 0; k < 64; ++k) {
        const Fraction zk = seq.z.back();
        const Fraction fk = (one - zk * zk).sqrt_exact() / abs_rho + zk;
        seq.f.push_back(fk);
        if (fk >= one && k >= 1) {
            seq.kbar = k;
            return seq;
        }
        seq.z.push_back(gain * fk - zk);
    }
    throw std::runtime_error("rational_sequence: no termination index within 64 steps");
}

// ---------------------------------------------------------------------------
// Derivative-free local minimizer plus multi-start search: the brute-force
// oracle that products one factor shorter than the claimed minimum cannot
// reach the target.
// ---------------------------------------------------------------------------

inline double nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                          std::vector<double> start, double step, int max_iter) {
    const int dim = static_cast<int>(start.size());
    std::vector<std::vector<double>> simplex(dim + 1, start);
    std::vector<double> value(dim + 1);
    for (int i = 0; i < dim; ++i) simplex[i + 1][i] += step;
    for (int i = 0; i <= dim; ++i) value[i] = objective(simplex[i]);

    for (int iter = 0; iter < max_iter; ++iter) {
        std::vector<int> order(dim + 1);
        for (int i = 0; i <= dim; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return value[a] < value[b]; });
        const int best = order[0], worst = order[dim], second = order[dim - 1];

        std::vector<double> centroid(dim, 0.0);
        for (int i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (int d = 0; d < dim; ++d) centroid[d] += simplex[i][d] / dim;
        }

        auto blend = [&](double t) {
            std::vector<double> p(dim);
            for (int d = 0; d < dim; ++d) p[d] = centroid[d] + t * (simplex[worst][d] - centroid[d]);
            return p;
        };

        const std::vector<double> reflected = blend(-1.0);
        const double fr = objective(reflected);
        if (fr < value[best]) {
            const std::vector<double> expanded = blend(-2.0);
            const double fe = objective(expanded);
            if (fe < fr) {
                simplex[worst] = expanded;
                value[worst] = fe;
            } else {
                simplex[worst] = reflected;
                value[worst] = fr;
            }
        } else if (fr < value[second]) {
            simplex[worst] = reflected;
            value[worst] = fr;
        } else {
            const std::vector<double> contracted = blend(0.5);
            const double fc = objective(contracted);
            if (fc < value[worst]) {
                simplex[worst] = contracted;
                value[worst] = fc;
            } else {
                for (int i = 0; i <= dim; ++i) {
                    if (i == best) continue;
                    for (int d = 0; d < dim; ++d)
                        simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
                    value[i] = objective(simplex[i]);
                }
            }
        }
    }
    return *std::min_element(value.begin(), value.end());
}

/// Best Frobenius distance to `target` over alternating products with
/// `nfactors` factors, searched with `restarts` random starts per leading
/// axis. Exponentials are the only solver primitive this touches.
inline double multistart_min_distance(const Rotation& target, double rho, int nfactors,
                                      int restarts, std::mt19937_64& rng) {
    if (nfactors <= 0)
        return (target - Rotation::Identity()).norm();

    double best = std::numeric_limits<double>::infinity();
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    for (int lead = 0; lead < 2; ++lead) {
        std::vector<Axis> axes(nfactors);
        std::vector<double> periods(nfactors);
        for (int i = 0; i < nfactors; ++i) {
            axes[i] = (i % 2 == lead) ? Axis::Z2 : Axis::Z1;
            periods[i] = axis_period(axes[i], rho);
        }
        auto objective = [&](const std::vector<double>& params) {
            Rotation x = Rotation::Identity();
            for (int i = 0; i < nfactors; ++i)
                x = x * exp_rot(axis_generator(axes[i], rho), params[i]);
            return (x - target).norm();
        };
        for (int r = 0; r < restarts; ++r) {
            std::vector<double> start(nfactors);
            for (int i = 0; i < nfactors; ++i) start[i] = uni(rng) * periods[i];
            best = std::min(best, nelder_mead(objective, start, 0.6, 140));
            if (best < 1e-6) return best;
        }
    }
    return best;
}

}  // namespace gea::testsupport
