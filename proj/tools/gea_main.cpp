// Command-line front end: every subcommand reads one JSON document from
// standard input (or --input) and writes one JSON document (or CSV for
// sphere-path) to standard output. Exit codes: 0 success, 2 malformed
// input, 3 dependent/uncontrollable generators, 4 internal tolerance
// failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gea/canonical.hpp"
#include "gea/control.hpp"
#include "gea/errors.hpp"
#include "gea/factorizer.hpp"
#include "gea/json_io.hpp"
#include "gea/minimality.hpp"
#include "gea/su2.hpp"

namespace {

using gea::jsonio::json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInternal = 4;

struct Options {
    std::string command;
    std::string input_path;
    std::string format = "json";
    int samples = 64;
    double tol = 1e-9;
};

json read_request(const Options& opt) {
    std::string text;
    if (opt.input_path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(opt.input_path);
        if (!in) throw std::invalid_argument("cannot open input file " + opt.input_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("input is not valid JSON");
    return j;
}

json run_canonicalize(const json& req, const gea::Tolerances& tol) {
    const auto z1 = gea::jsonio::skew_from_json(gea::jsonio::required_field(req, "Z1"), "Z1");
    const auto z2 = gea::jsonio::skew_from_json(gea::jsonio::required_field(req, "Z2"), "Z2");
    const gea::CanonicalPair pair = gea::canonicalize(z1, z2, tol);
    return json{{"T", gea::jsonio::mat3_to_json(pair.T)}, {"lambda1", pair.lambda1},
                {"a", pair.a},                            {"d", pair.d},
                {"rho", pair.rho},                        {"psi", pair.psi}};
}

json run_sequence(const json& req) {
    const double rho = gea::jsonio::number_field(req, "rho");
    const gea::MinSequence seq = gea::build_sequence(rho);
    return json{{"rho", seq.rho}, {"z", seq.z}, {"f", seq.f}, {"kbar", seq.kbar}, {"beta", seq.beta}};
}

json run_min_count(const json& req, const gea::Tolerances& tol) {
    const auto x = gea::jsonio::mat3_from_json(gea::jsonio::required_field(req, "target"), "target");
    gea::require_rotation(x, std::max(tol.validate, 1e-9), "target");
    const double rho = gea::jsonio::number_field(req, "rho");
    const gea::MinDecision dec = gea::min_factors(x, rho, tol);
    return json{{"count", dec.count},
                {"last_axis", dec.last_axis == gea::Axis::Z1 ? "Z1" : "Z2"},
                {"ktilde", dec.ktilde}};
}

json run_factor(const json& req, const gea::Tolerances& tol) {
    const auto x = gea::jsonio::mat3_from_json(gea::jsonio::required_field(req, "target"), "target");
    const double rho = gea::jsonio::number_field(req, "rho");
    const gea::Factorization f = gea::factor_minimal(x, rho, tol);
    const double residual = (gea::reconstruct(f) - x).norm();
    return json{{"count", f.count()},
                {"factors", gea::jsonio::factors_to_json(f)},
                {"residual_norm", residual}};
}

json run_lift_su2(const json& req, const gea::Tolerances& tol) {
    const auto target =
        gea::jsonio::unitary_from_json(gea::jsonio::required_field(req, "target"), "target");
    const auto z1 = gea::jsonio::su_from_json(gea::jsonio::required_field(req, "Zbar1"), "Zbar1");
    const auto z2 = gea::jsonio::su_from_json(gea::jsonio::required_field(req, "Zbar2"), "Zbar2");
    const gea::Factorization f = gea::factor_su2(target, z1, z2, tol);
    const double residual = (gea::reconstruct_su2(f, z1, z2) - target).norm();
    return json{{"count", f.count()},
                {"factors", gea::jsonio::factors_to_json(f)},
                {"residual_norm", residual}};
}

gea::BilinearSystem system_from_json(const json& req) {
    gea::BilinearSystem sys;
    sys.A = gea::jsonio::skew_from_json(gea::jsonio::required_field(req, "A"), "A");
    sys.B = gea::jsonio::skew_from_json(gea::jsonio::required_field(req, "B"), "B");
    sys.M = gea::jsonio::number_field(req, "M");
    sys.N = gea::jsonio::number_field(req, "N");
    return sys;
}

json run_synthesize(const json& req, const gea::Tolerances& tol) {
    const gea::BilinearSystem sys = system_from_json(req);
    const auto x = gea::jsonio::mat3_from_json(gea::jsonio::required_field(req, "target"), "target");
    gea::require_rotation(x, std::max(tol.validate, 1e-9), "target");
    const gea::ControlSchedule sched = gea::synthesize(sys, x, tol);
    json out = gea::jsonio::schedule_to_json(sched);
    out["switches"] = sched.switches();
    return out;
}

json run_simulate(const json& req) {
    gea::BilinearSystem sys;
    sys.A = gea::jsonio::skew_from_json(gea::jsonio::required_field(req, "A"), "A");
    sys.B = gea::jsonio::skew_from_json(gea::jsonio::required_field(req, "B"), "B");
    sys.M = 1.0;
    sys.N = -1.0;
    const gea::ControlSchedule sched = gea::jsonio::schedule_from_json(req, "simulate");
    return json{{"X", gea::jsonio::mat3_to_json(gea::propagate(sys, sched))}};
}

int run_sphere_path(const json& req, const Options& opt, std::ostream& os) {
    if (opt.samples < 1) throw std::invalid_argument("--samples must be >= 1");

    gea::BilinearSystem sys;
    gea::ControlSchedule sched;
    if (req.contains("factors")) {
        // A factorization over the canonical pair: rightmost factor first in
        // time. Encode the two generators as A + B*u with u in {1, -1}.
        const double rho = gea::jsonio::number_field(req, "rho");
        const gea::Factorization f = gea::jsonio::factors_from_json(
            gea::jsonio::required_field(req, "factors"), rho, "factors");
        const gea::SkewGenerator g1 = gea::axis_generator(gea::Axis::Z1, rho);
        const gea::SkewGenerator g2 = gea::axis_generator(gea::Axis::Z2, rho);
        sys.A = (g1 + g2) * 0.5;
        sys.B = (g1 - g2) * 0.5;
        sys.M = 1.0;
        sys.N = -1.0;
        for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it)
            sched.segments.push_back({it->axis == gea::Axis::Z1 ? 1.0 : -1.0, it->parameter});
    } else {
        sys = system_from_json(req);
        sched = gea::jsonio::schedule_from_json(req, "sphere-path");
    }

    const auto samples = gea::propagate_state(sys, sched, {0.0, 0.0, -1.0}, opt.samples);
    if (opt.format == "csv") {
        os << "t,x,y,z\n";
        char buf[180];
        for (const auto& [t, p] : samples) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", t, p.x(), p.y(), p.z());
            os << buf;
        }
        return kExitOk;
    }
    json rows = json::array();
    for (const auto& [t, p] : samples)
        rows.push_back(json{{"t", t}, {"x", p.x()}, {"y", p.y()}, {"z", p.z()}});
    gea::jsonio::write_deterministic(os, json{{"samples", rows}});
    return kExitOk;
}

int dispatch(const Options& opt) {
    const gea::Tolerances tol = gea::Tolerances::scaled(opt.tol);
    const json req = read_request(opt);

    if (opt.command == "sphere-path") return run_sphere_path(req, opt, std::cout);

    json out;
    if (opt.command == "canonicalize") out = run_canonicalize(req, tol);
    else if (opt.command == "sequence") out = run_sequence(req);
    else if (opt.command == "min-count") out = run_min_count(req, tol);
    else if (opt.command == "factor") out = run_factor(req, tol);
    else if (opt.command == "lift-su2") out = run_lift_su2(req, tol);
    else if (opt.command == "synthesize") out = run_synthesize(req, tol);
    else if (opt.command == "simulate") out = run_simulate(req);
    else throw std::invalid_argument("unknown command " + opt.command);

    gea::jsonio::write_deterministic(std::cout, out);
    return kExitOk;
}

void report_error(const char* kind, const std::string& message) {
    gea::jsonio::write_deterministic(std::cerr, json{{"error", kind}, {"message", message}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-length rotation factorizations and minimum-switch bang-bang schedules"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--tol", opt.tol, "base tolerance; scales all internal tolerances")
        ->default_val(1e-9);

    const std::vector<std::string> names = {"canonicalize", "sequence", "min-count", "factor",
                                            "lift-su2",     "synthesize", "simulate", "sphere-path"};
    for (const std::string& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        sub->fallthrough();  // lets global flags like --tol appear after the subcommand
        sub->add_option("--input", opt.input_path, "read the request from a file instead of stdin");
        if (name == "sphere-path") {
            sub->add_option("--format", opt.format, "json or csv")
                ->check(CLI::IsMember({"json", "csv"}));
            sub->add_option("--samples", opt.samples, "samples per segment")->default_val(64);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }
    opt.command = app.get_subcommands().front()->get_name();

    try {
        return dispatch(opt);
    } catch (const gea::DependentGenerators& e) {
        report_error("DependentGenerators", e.what());
        return kExitDegenerate;
    } catch (const gea::NotControllableWithTwoLevels& e) {
        report_error("NotControllableWithTwoLevels", e.what());
        return kExitDegenerate;
    } catch (const gea::InternalSolverFailure& e) {
        report_error("InternalSolverFailure", e.what());
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        report_error("InvalidInput", e.what());
        return kExitBadInput;
    } catch (const std::exception& e) {
        report_error("InvalidInput", e.what());
        return kExitBadInput;
    }
}
