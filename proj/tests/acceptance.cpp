// Acceptance suite: one pass/fail line per criterion, exit code equal to the
// number of failures. Everything runs at fixed seeds and fixed tolerances.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gea/canonical.hpp"
#include "gea/control.hpp"
#include "gea/errors.hpp"
#include "gea/factorizer.hpp"
#include "gea/minimality.hpp"
#include "gea/su2.hpp"
#include "support.hpp"

using namespace gea;
namespace ts = gea::testsupport;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
    std::string name;
    std::function<bool(std::string&)> run;
};

// 1. Reconstruction: random targets at fixed rho values plus raw generator
//    pairs through the canonical frame; length always equals the minimum.
bool reconstruction_suite(std::string& detail) {
    std::mt19937_64 rng(1001);
    double worst = 0.0;
    for (double rho : {0.25, 1.0, 2.0, 5.0}) {
        for (int i = 0; i < 1000; ++i) {
            const Rotation x = ts::random_rotation(rng);
            const Factorization f = factor_minimal(x, rho);
            const double res = (reconstruct(f) - x).norm();
            worst = std::max(worst, res);
            if (res >= 1e-8) {
                detail = "residual " + std::to_string(res) + " at rho " + std::to_string(rho);
                return false;
            }
            if (f.count() != min_factors(x, rho).count) {
                detail = "length mismatch at rho " + std::to_string(rho);
                return false;
            }
        }
    }

    int pairs = 0;
    while (pairs < 100) {
        const SkewGenerator z1 = ts::random_skew(rng);
        const SkewGenerator z2 = ts::random_skew(rng);
        CanonicalPair pair;
        try {
            pair = canonicalize(z1, z2);
        } catch (const std::exception&) {
            continue;
        }
        ++pairs;
        const Rotation x = ts::random_rotation(rng);
        const Factorization f = factor_minimal(to_canonical_target(x, pair), pair.rho);
        Rotation product = Rotation::Identity();
        for (const Factor& factor : f.factors) {
            const double tau = canonical_param_to_original(factor.axis, factor.parameter, pair);
            product = product * exp_rot(factor.axis == Axis::Z1 ? z1 : z2, tau);
        }
        const double res = (product - x).norm();
        worst = std::max(worst, res);
        if (res >= 1e-8) {
            detail = "raw-pair residual " + std::to_string(res);
            return false;
        }
        if (f.count() != min_factors(to_canonical_target(x, pair), pair.rho).count) {
            detail = "raw-pair length mismatch";
            return false;
        }
    }
    std::ostringstream os;
    os << "worst residual " << worst << " over 4100 targets";
    detail = os.str();
    return true;
}

// 2. Minimality: a multi-start search over products one factor shorter never
//    approaches the target.
bool minimality_oracle(std::string& detail) {
    std::mt19937_64 rng(1002);
    const double rho = 2.0;
    double closest = std::numeric_limits<double>::infinity();
    int tested = 0;
    while (tested < 50) {
        const Rotation x = ts::random_rotation(rng);
        const int count = min_factors(x, rho).count;
        if (count < 2 || count > 6) continue;
        ++tested;
        const double best = ts::multistart_min_distance(x, rho, count - 1, 500, rng);
        closest = std::min(closest, best);
        if (best <= 1e-3) {
            detail = "a " + std::to_string(count - 1) + "-factor product reached distance " +
                     std::to_string(best);
            return false;
        }
    }
    std::ostringstream os;
    os << "closest shorter-product distance " << closest;
    detail = os.str();
    return true;
}

// 3. Orthogonal generators: max count 3 over random targets, with counts
//    1 and 2 attained on constructed targets.
bool euler_order(std::string& detail) {
    std::mt19937_64 rng(1003);
    int max_count = 0;
    for (int i = 0; i < 10000; ++i) {
        const int count = min_factors(ts::random_rotation(rng), 0.0).count;
        max_count = std::max(max_count, count);
        if (count > 3) {
            detail = "count " + std::to_string(count) + " exceeds 3";
            return false;
        }
    }
    if (max_count != 3) {
        detail = "max count over random targets is " + std::to_string(max_count) + ", expected 3";
        return false;
    }
    if (min_factors(exp_rot(s_basis(1, 2), 0.8), 0.0).count != 1) {
        detail = "single-axis target did not report count 1";
        return false;
    }
    const Rotation two = exp_rot(s_basis(2, 3), 0.9) * exp_rot(s_basis(1, 2), 0.5);
    if (min_factors(two, 0.0).count != 2) {
        detail = "two-factor target did not report count 2";
        return false;
    }
    detail = "max 3 over 10000 targets; constructed targets hit 1 and 2";
    return true;
}

// 4. Exact sequence values at rho = 2 against the rational oracle, and the
//    immediate termination for rho <= 1.
bool exact_sequence(std::string& detail) {
    const ts::RationalSequence oracle = ts::rational_sequence(2, 1);
    const MinSequence seq = build_sequence(2.0);
    if (seq.kbar != 3 || oracle.kbar != 3) {
        detail = "kbar mismatch";
        return false;
    }
    for (int k = 0; k <= 3; ++k) {
        if (std::abs(seq.z[k] - oracle.z[k].value()) >= 1e-12 ||
            std::abs(seq.f[k] - oracle.f[k].value()) >= 1e-12) {
            detail = "value mismatch at index " + std::to_string(k);
            return false;
        }
    }
    std::mt19937_64 rng(1004);
    std::uniform_real_distribution<double> uni(1e-9, 1.0);
    for (int i = 0; i < 100; ++i) {
        if (build_sequence(uni(rng)).kbar != 1) {
            detail = "kbar != 1 for rho <= 1";
            return false;
        }
    }
    detail = "rho=2 matches the rational recurrence to 1e-12; kbar=1 on (0,1]";
    return true;
}

// 5. Closed form agreement and the minimum gap.
bool closed_form(std::string& detail) {
    std::mt19937_64 rng(1005);
    std::uniform_real_distribution<double> uni(1.0 + 1e-12, 10.0);
    for (int i = 0; i < 100; ++i) {
        const double rho = uni(rng);
        const MinSequence seq = build_sequence(rho);
        const double beta = std::acos((rho * rho - 1.0) / (rho * rho + 1.0));
        for (int k = 0; k <= seq.kbar; ++k) {
            if (std::abs(seq.z[k] + std::cos(k * beta)) >= 1e-10) {
                detail = "closed form off at rho " + std::to_string(rho);
                return false;
            }
        }
        const double bound = 2.0 / (1.0 + rho * rho) - 1e-12;
        for (size_t k = 0; k + 1 < seq.z.size(); ++k) {
            if (seq.z[k + 1] - seq.z[k] <= bound) {
                detail = "gap bound violated at rho " + std::to_string(rho);
                return false;
            }
        }
    }
    detail = "100 random rho in (1,10]";
    return true;
}

// 6. Double cover: lifted factorizations hit the target on the correct
//    sheet; the covering map is a homomorphism.
bool double_cover(std::string& detail) {
    std::mt19937_64 rng(1006);
    double worst = 0.0;
    int done = 0;
    while (done < 500) {
        const SuGenerator z1 = ts::random_su(rng);
        const SuGenerator z2 = ts::random_su(rng);
        const Unitary2 target = ts::random_special_unitary(rng);
        Factorization f;
        try {
            f = factor_su2(target, z1, z2);
        } catch (const DependentGenerators&) {
            continue;
        }
        ++done;
        const double res = (reconstruct_su2(f, z1, z2) - target).norm();
        worst = std::max(worst, res);
        if (res >= 1e-8) {
            detail = "lift residual " + std::to_string(res);
            return false;
        }
        const CanonicalPair pair = canonicalize(phi_tilde(z1), phi_tilde(z2));
        const int projected = min_factors(to_canonical_target(phi(target), pair), pair.rho).count;
        if (!(f.count() == projected || (projected == 0 && f.count() == 1))) {
            detail = "count mismatch: " + std::to_string(f.count()) + " vs projected " +
                     std::to_string(projected);
            return false;
        }
    }
    for (int i = 0; i < 1000; ++i) {
        const Unitary2 u = ts::random_special_unitary(rng);
        const Unitary2 v = ts::random_special_unitary(rng);
        if ((phi(u * v) - phi(u) * phi(v)).cwiseAbs().maxCoeff() >= 1e-10) {
            detail = "homomorphism defect";
            return false;
        }
    }
    std::ostringstream os;
    os << "worst lift residual " << worst << "; 1000 homomorphism pairs";
    detail = os.str();
    return true;
}

// 7. Control synthesis: propagation, switch counts, norm conservation.
bool control_synthesis(std::string& detail) {
    std::mt19937_64 rng(1007);
    std::uniform_real_distribution<double> mag(0.2, 2.0);
    double worst = 0.0;
    int done = 0;
    while (done < 200) {
        BilinearSystem sys{ts::random_skew(rng), ts::random_skew(rng), mag(rng), -mag(rng)};
        const Rotation x = ts::random_rotation(rng);
        ControlSchedule sched;
        try {
            sched = synthesize(sys, x);
        } catch (const NotControllableWithTwoLevels&) {
            continue;
        }
        ++done;
        const double res = (propagate(sys, sched) - x).norm();
        worst = std::max(worst, res);
        if (res >= 1e-8) {
            detail = "propagation residual " + std::to_string(res);
            return false;
        }
        const auto [z1, z2] = generators(sys);
        const CanonicalPair pair = canonicalize(z1, z2);
        const int min = min_factors(to_canonical_target(x, pair), pair.rho).count;
        if (sched.switches() != std::max(0, min - 1)) {
            detail = "switch count " + std::to_string(sched.switches()) + " vs minimum " +
                     std::to_string(min);
            return false;
        }
        SkewGenerator axis = ts::random_skew(rng);
        Vec3 x0 = axis.axis_vector();
        if (x0.norm() < 1e-6) x0 = Vec3::UnitX();
        x0.normalize();
        for (const auto& [t, p] : propagate_state(sys, sched, x0, 8)) {
            if (std::abs(p.norm() - 1.0) >= 1e-10) {
                detail = "trajectory norm drift at t " + std::to_string(t);
                return false;
            }
        }
    }
    std::ostringstream os;
    os << "worst propagation residual " << worst << " over 200 systems";
    detail = os.str();
    return true;
}

// 8. Reflection identities and the factor-level mapping.
bool reflection_identities(std::string& detail) {
    std::mt19937_64 rng(1008);
    std::uniform_real_distribution<double> uni(-8.0, 8.0);
    for (int i = 0; i < 100; ++i) {
        double rho = uni(rng);
        if (std::abs(rho) < 1e-3) rho = 0.5;
        const double n = std::sqrt(1.0 + rho * rho);
        const Rotation w = swap_reflection(rho);
        const Eigen::Matrix3d g1 = s_basis(1, 2).matrix();
        const Eigen::Matrix3d g2 = rho * g1 + s_basis(2, 3).matrix();
        if ((w * g2 * w.transpose() + n * g1).cwiseAbs().maxCoeff() >= 1e-12 ||
            (w * g1 * w.transpose() + g2 / n).cwiseAbs().maxCoeff() >= 1e-12) {
            detail = "generator identity violated at rho " + std::to_string(rho);
            return false;
        }

        Factorization f;
        f.rho = rho;
        std::uniform_int_distribution<int> len(1, 6);
        std::uniform_int_distribution<int> coin(0, 1);
        const int count = len(rng);
        const int lead = coin(rng);
        std::uniform_real_distribution<double> pos(0.0, 1.0);
        for (int k = 0; k < count; ++k) {
            const Axis axis = (k % 2 == lead) ? Axis::Z1 : Axis::Z2;
            f.factors.push_back({axis, pos(rng) * axis_period(axis, rho)});
        }
        const Factorization mapped = map_back_reflected(f);
        if ((reconstruct(mapped) - w * reconstruct(f) * w.transpose()).cwiseAbs().maxCoeff() >=
            1e-10) {
            detail = "factor mapping defect at rho " + std::to_string(rho);
            return false;
        }
    }
    detail = "100 random rho";
    return true;
}

}  // namespace

int main() {
    const std::vector<Check> checks = {
        {"reconstruction-suite", reconstruction_suite},
        {"minimality-oracle", minimality_oracle},
        {"euler-order-at-psi-zero", euler_order},
        {"exact-sequence-rho-2", exact_sequence},
        {"closed-form-and-gaps", closed_form},
        {"double-cover-suite", double_cover},
        {"control-synthesis", control_synthesis},
        {"reflection-identities", reflection_identities},
    };

    int failures = 0;
    for (size_t i = 0; i < checks.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = checks[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %zu %s (%s, %.2fs)\n", ok ? "PASS" : "FAIL", i + 1,
                    checks[i].name.c_str(), detail.c_str(), seconds);
        if (!ok) ++failures;
    }
    return failures;
}
