#include "gea/factorizer.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "gea/canonical.hpp"
#include "gea/errors.hpp"
#include "gea/minimality.hpp"

namespace gea {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double positive_mod(double value, double period) {
    double r = std::fmod(value, period);
    if (r < 0.0) r += period;
    if (r == period) r = 0.0;
    return r;
}

Vec3 south_pole() { return {0.0, 0.0, -1.0}; }

/// Parameter t in [0, period) with exp(gen t) p == q, for p and q on the
/// same circle about the generator axis. Returns nothing when the two
/// points are not on a common circle within `gate`; returns 0 when both sit
/// on the axis (any parameter works).
std::optional<double> rot_param_between(const SkewGenerator& gen, const Vec3& p,
                                        const Vec3& q, double gate) {
    const double s = gen.speed();
    const Vec3 w = gen.axis_vector() / s;
    if (std::abs(w.dot(p) - w.dot(q)) > gate) return std::nullopt;
    const Vec3 pp = p - w.dot(p) * w;
    const Vec3 qq = q - w.dot(q) * w;
    if (std::abs(pp.norm() - qq.norm()) > gate) return std::nullopt;
    if (std::min(pp.norm(), qq.norm()) <= gate) return 0.0;
    const double angle = std::atan2(w.dot(pp.cross(qq)), pp.dot(qq));
    return positive_mod(angle / s, kTwoPi / s);
}

/// Parameters t with (exp(gen t) p).z() == z_target. The z-coordinate along
/// the circle is C + A cos(u) + B sin(u) in the rotation angle u, so there
/// are at most two roots per period.
std::array<std::optional<double>, 2> climb_params(const SkewGenerator& gen, const Vec3& p,
                                                  double z_target, double snap) {
    std::array<std::optional<double>, 2> out{};
    const double s = gen.speed();
    const Vec3 w = gen.axis_vector() / s;
    const double center = w.dot(p) * w.z();
    const double a = p.z() - center;
    const double b = w.cross(p).z();
    const double radius = std::hypot(a, b);
    const double rhs = z_target - center;
    if (radius < 1e-14) {
        if (std::abs(rhs) <= snap) out[0] = 0.0;
        return out;
    }
    double c = rhs / radius;
    const double slack = (2.0 * snap + 1e-12) / radius;
    if (c > 1.0) {
        if (c > 1.0 + slack) return out;
        c = 1.0;
    } else if (c < -1.0) {
        if (c < -1.0 - slack) return out;
        c = -1.0;
    }
    const double phase = std::atan2(b, a);
    const double delta = std::acos(c);
    out[0] = positive_mod((phase + delta) / s, kTwoPi / s);
    if (delta > 1e-12) out[1] = positive_mod((phase - delta) / s, kTwoPi / s);
    return out;
}

/// If r is a rotation about the z-axis within `gate`, its parameter on the
/// S12 subgroup, in [0, 2*pi).
std::optional<double> extract_z_rotation(const Rotation& r, double gate) {
    if (std::abs(r(2, 2) - 1.0) > gate) return std::nullopt;
    const double off = std::max(std::max(std::abs(r(0, 2)), std::abs(r(1, 2))),
                                std::max(std::abs(r(2, 0)), std::abs(r(2, 1))));
    if (off > gate) return std::nullopt;
    return positive_mod(std::atan2(r(0, 1), r(0, 0)), kTwoPi);
}

struct SolveContext {
    double rho;
    SkewGenerator gen1;
    SkewGenerator gen2;
    double half1;  // parameter of a half-turn about each axis
    double half2;
    double gate;
    double snap;
    double residual_tol;
};

SolveContext make_context(double rho, const Tolerances& tol) {
    SolveContext ctx;
    ctx.rho = rho;
    ctx.gen1 = axis_generator(Axis::Z1, rho);
    ctx.gen2 = axis_generator(Axis::Z2, rho);
    ctx.half1 = kPi;
    ctx.half2 = kPi / ctx.gen2.speed();
    ctx.gate = std::max(tol.reconstruct, 20.0 * tol.snap);
    ctx.snap = tol.snap;
    ctx.residual_tol = tol.reconstruct;
    return ctx;
}

bool residual_ok(const Factorization& f, const Rotation& x, double tol) {
    return (reconstruct(f) - x).norm() <= tol;
}

/// Minimum factorization whose rightmost factor rotates about Z1, following
/// the alternating-half-turn backbone construction. `order` must be the
/// order value of x for this rho.
std::optional<Factorization> solve_z1_last(const Rotation& x, const MinSequence& seq,
                                           const OrderValue& order, const SolveContext& ctx) {
    const int s = order.count;
    Factorization f;
    f.rho = ctx.rho;

    if (s == 1) {
        f.factors = {{Axis::Z1, positive_mod(std::atan2(x(0, 1), x(0, 0)), kTwoPi)}};
        if (!residual_ok(f, x, ctx.residual_tol)) return std::nullopt;
        return f;
    }

    const Vec3 ps = south_pole();
    const Vec3 pf = x * ps;

    if (s == 2) {
        const auto t1 = rot_param_between(ctx.gen2, ps, pf, ctx.gate);
        if (!t1) return std::nullopt;
        const Rotation prefix = exp_rot(ctx.gen2, *t1);
        const auto ts = extract_z_rotation(prefix.transpose() * x, ctx.gate);
        if (!ts) return std::nullopt;
        f.factors = {{Axis::Z2, *t1}, {Axis::Z1, *ts}};
        if (!residual_ok(f, x, ctx.residual_tol)) return std::nullopt;
        return f;
    }

    const Rotation e1h = exp_rot(ctx.gen1, ctx.half1);
    const Rotation e2h = exp_rot(ctx.gen2, ctx.half2);
    const int kt = order.ktilde;

    if (s % 2 == 1) {
        // x = exp(Z1 t1) exp(Z2 t2) [exp(Z1 pi) exp(Z2 pi)]^kt exp(Z1 ts):
        // climb the last backbone circle to the height of pf, then align
        // the azimuth, then absorb the residual z-rotation.
        Rotation backbone = Rotation::Identity();
        for (int i = 0; i < kt; ++i) backbone = backbone * e1h * e2h;
        const Vec3 g0 = backbone * ps;

        for (const auto& t2 : climb_params(ctx.gen2, g0, pf.z(), ctx.snap)) {
            if (!t2) continue;
            const Rotation climb = exp_rot(ctx.gen2, *t2);
            const auto t1 = rot_param_between(ctx.gen1, climb * g0, pf, ctx.gate);
            if (!t1) continue;
            const Rotation prefix = exp_rot(ctx.gen1, *t1) * climb * backbone;
            const auto ts = extract_z_rotation(prefix.transpose() * x, ctx.gate);
            if (!ts) continue;
            f.factors.clear();
            f.factors.push_back({Axis::Z1, *t1});
            f.factors.push_back({Axis::Z2, *t2});
            for (int i = 0; i < kt; ++i) {
                f.factors.push_back({Axis::Z1, ctx.half1});
                f.factors.push_back({Axis::Z2, ctx.half2});
            }
            f.factors.push_back({Axis::Z1, *ts});
            if (residual_ok(f, x, ctx.residual_tol)) return f;
        }
        return std::nullopt;
    }

    // Even count 2*kt + 2: land on the intersection of the target's own
    // Z2-circle with the highest backbone circle, then ride the Z2 arc to pf.
    Rotation backbone = e2h;
    for (int i = 0; i < kt - 1; ++i) backbone = backbone * e1h * e2h;
    const Vec3 b0 = backbone * ps;

    // The boundary snap in the order function admits targets whose circle
    // misses the landing height by O(snap); the discriminant slack matches.
    const double zbar = seq.z[kt];
    const double xbar = -x(0, 2) - ctx.rho * (zbar + x(2, 2));
    double y2 = 1.0 - zbar * zbar - xbar * xbar;
    if (y2 < -(4.0 * (1.0 + std::abs(ctx.rho)) * ctx.snap + 1e-12)) return std::nullopt;
    if (y2 < 0.0) y2 = 0.0;
    const double ybar = std::sqrt(y2);

    const std::array<double, 2> roots{ybar, -ybar};
    for (int i = 0; i < (ybar > 1e-12 ? 2 : 1); ++i) {
        const Vec3 pbar{xbar, roots[i], zbar};
        const auto t2 = rot_param_between(ctx.gen1, b0, pbar, ctx.gate);
        if (!t2) continue;
        const auto t1 = rot_param_between(ctx.gen2, pbar, pf, ctx.gate);
        if (!t1) continue;
        const Rotation prefix = exp_rot(ctx.gen2, *t1) * exp_rot(ctx.gen1, *t2) * backbone;
        const auto ts = extract_z_rotation(prefix.transpose() * x, ctx.gate);
        if (!ts) continue;
        f.factors.clear();
        f.factors.push_back({Axis::Z2, *t1});
        f.factors.push_back({Axis::Z1, *t2});
        f.factors.push_back({Axis::Z2, ctx.half2});
        for (int j = 0; j < kt - 1; ++j) {
            f.factors.push_back({Axis::Z1, ctx.half1});
            f.factors.push_back({Axis::Z2, ctx.half2});
        }
        f.factors.push_back({Axis::Z1, *ts});
        if (residual_ok(f, x, ctx.residual_tol)) return f;
    }
    return std::nullopt;
}

/// z-x-z style extraction for the orthogonal pair (S12, S23):
///   x = exp(S12 a) exp(S23 b) exp(S12 c), b in [0, pi].
Factorization extract_zxz(const Rotation& x) {
    Factorization f;
    f.rho = 0.0;
    const double sb = std::hypot(x(0, 2), x(1, 2));
    const double b = std::atan2(sb, x(2, 2));
    if (sb >= 1e-12) {
        const double a = std::atan2(x(0, 2), x(1, 2));
        const double c = std::atan2(x(2, 0), -x(2, 1));
        f.factors = {{Axis::Z1, positive_mod(a, kTwoPi)},
                     {Axis::Z2, b},
                     {Axis::Z1, positive_mod(c, kTwoPi)}};
    } else if (x(2, 2) > 0.0) {
        f.factors = {{Axis::Z1, positive_mod(std::atan2(x(0, 1), x(0, 0)), kTwoPi)}};
    } else {
        // b == pi; put the whole z-rotation on the left factor
        const Rotation left = x * exp_rot(s_basis(2, 3), kPi);
        f.factors = {{Axis::Z1, positive_mod(std::atan2(left(0, 1), left(0, 0)), kTwoPi)},
                     {Axis::Z2, kPi}};
    }
    return f;
}

}  // namespace

SkewGenerator axis_generator(Axis axis, double rho) {
    if (axis == Axis::Z1) return s_basis(1, 2);
    return s_basis(1, 2) * rho + s_basis(2, 3);
}

double axis_period(Axis axis, double rho) {
    if (axis == Axis::Z1) return kTwoPi;
    return kTwoPi / std::sqrt(1.0 + rho * rho);
}

Rotation reconstruct(const Factorization& f) {
    Rotation x = Rotation::Identity();
    for (const Factor& factor : f.factors)
        x = x * exp_rot(axis_generator(factor.axis, f.rho), factor.parameter);
    return x;
}

Factorization normalize(Factorization f, const Tolerances& tol) {
    Factorization out;
    out.rho = f.rho;
    auto trivial = [&](Axis axis, double p) {
        const double period = axis_period(axis, f.rho);
        return p <= tol.drop || period - p <= tol.drop;
    };
    for (const Factor& factor : f.factors) {
        const double period = axis_period(factor.axis, f.rho);
        double p = positive_mod(factor.parameter, period);
        if (!out.factors.empty() && out.factors.back().axis == factor.axis) {
            double merged = positive_mod(out.factors.back().parameter + p, period);
            if (trivial(factor.axis, merged)) {
                out.factors.pop_back();
            } else {
                out.factors.back().parameter = merged;
            }
            continue;
        }
        if (!trivial(factor.axis, p)) out.factors.push_back({factor.axis, p});
    }
    return out;
}

Factorization map_back_reflected(const Factorization& f, const Tolerances&) {
    const double scale = std::sqrt(1.0 + f.rho * f.rho);
    Factorization out;
    out.rho = f.rho;
    out.factors.reserve(f.factors.size());
    for (const Factor& factor : f.factors) {
        if (factor.axis == Axis::Z1) {
            out.factors.push_back(
                {Axis::Z2, positive_mod(-factor.parameter / scale, axis_period(Axis::Z2, f.rho))});
        } else {
            out.factors.push_back(
                {Axis::Z1, positive_mod(-factor.parameter * scale, axis_period(Axis::Z1, f.rho))});
        }
    }
    return out;
}

namespace detail {

Factorization factor_euler_orthogonal(const Rotation& x, const Tolerances& tol) {
    const Factorization direct = normalize(extract_zxz(x), tol);

    const Rotation w = swap_reflection(0.0);
    const Factorization reflected =
        normalize(map_back_reflected(extract_zxz(w * x * w.transpose())), tol);

    const bool direct_ok = (reconstruct(direct) - x).norm() <= tol.reconstruct;
    const bool reflected_ok = (reconstruct(reflected) - x).norm() <= tol.reconstruct;
    if (!direct_ok && !reflected_ok)
        throw InternalSolverFailure("factor_euler_orthogonal: both orderings failed the residual");
    if (!reflected_ok || (direct_ok && direct.count() <= reflected.count())) return direct;
    return reflected;
}

}  // namespace detail

Factorization factor_minimal(const Rotation& x, double rho, const Tolerances& tol) {
    require_rotation(x, std::max(tol.validate, 1e-9), "target");

    if (rho == 0.0) return detail::factor_euler_orthogonal(x, tol);

    Factorization empty;
    empty.rho = rho;
    if ((x - Rotation::Identity()).cwiseAbs().maxCoeff() <= tol.snap) return empty;

    const MinSequence seq = build_sequence(rho);
    const SolveContext ctx = make_context(rho, tol);

    const OrderValue direct = order_value(x, seq, tol);
    const Rotation w = swap_reflection(rho);
    const Rotation y = w * x * w.transpose();
    const OrderValue reflected = order_value(y, seq, tol);
    const int best = std::min(direct.count, reflected.count);

    if (direct.count == best) {
        if (auto f = solve_z1_last(x, seq, direct, ctx)) {
            const Factorization n = normalize(*f, tol);
            if (n.count() == best && residual_ok(n, x, tol.reconstruct)) return n;
        }
    }
    if (reflected.count == best) {
        if (auto f = solve_z1_last(y, seq, reflected, ctx)) {
            const Factorization n = normalize(map_back_reflected(*f, tol), tol);
            if (n.count() == best && residual_ok(n, x, tol.reconstruct)) return n;
        }
    }
    throw InternalSolverFailure("factor_minimal: no branch produced a factorization of length " +
                                std::to_string(best) + " within tolerance");
}

}  // namespace gea
