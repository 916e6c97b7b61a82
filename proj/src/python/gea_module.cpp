#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gea/canonical.hpp"
#include "gea/control.hpp"
#include "gea/errors.hpp"
#include "gea/factorizer.hpp"
#include "gea/minimality.hpp"
#include "gea/su2.hpp"

namespace py = pybind11;

PYBIND11_MODULE(gea, m) {
    m.doc() = "Minimum-length factorizations of rotations over two fixed axes and "
              "minimum-switch bang-bang schedules on SO(3) and SU(2)";

    py::register_exception<gea::DependentGenerators>(m, "DependentGenerators");
    py::register_exception<gea::NotControllableWithTwoLevels>(m, "NotControllableWithTwoLevels");
    py::register_exception<gea::InternalSolverFailure>(m, "InternalSolverFailure");

    py::enum_<gea::Axis>(m, "Axis")
        .value("Z1", gea::Axis::Z1)
        .value("Z2", gea::Axis::Z2);

    py::class_<gea::SkewGenerator>(m, "SkewGenerator")
        .def(py::init<double, double, double>(), py::arg("c12") = 0.0, py::arg("c13") = 0.0,
             py::arg("c23") = 0.0)
        .def_readwrite("c12", &gea::SkewGenerator::c12)
        .def_readwrite("c13", &gea::SkewGenerator::c13)
        .def_readwrite("c23", &gea::SkewGenerator::c23)
        .def("matrix", &gea::SkewGenerator::matrix)
        .def("axis_vector", &gea::SkewGenerator::axis_vector)
        .def("speed", &gea::SkewGenerator::speed)
        .def("__repr__", [](const gea::SkewGenerator& z) {
            return "SkewGenerator(c12=" + std::to_string(z.c12) + ", c13=" + std::to_string(z.c13) +
                   ", c23=" + std::to_string(z.c23) + ")";
        });

    py::class_<gea::AxisAngle>(m, "AxisAngle")
        .def_readonly("axis", &gea::AxisAngle::axis)
        .def_readonly("angle", &gea::AxisAngle::angle);

    py::class_<gea::CanonicalPair>(m, "CanonicalPair")
        .def_readonly("T", &gea::CanonicalPair::T)
        .def_readonly("lambda1", &gea::CanonicalPair::lambda1)
        .def_readonly("a", &gea::CanonicalPair::a)
        .def_readonly("d", &gea::CanonicalPair::d)
        .def_readonly("rho", &gea::CanonicalPair::rho)
        .def_readonly("psi", &gea::CanonicalPair::psi);

    py::class_<gea::MinSequence>(m, "MinSequence")
        .def_readonly("rho", &gea::MinSequence::rho)
        .def_readonly("z", &gea::MinSequence::z)
        .def_readonly("f", &gea::MinSequence::f)
        .def_readonly("kbar", &gea::MinSequence::kbar)
        .def_readonly("beta", &gea::MinSequence::beta);

    py::class_<gea::MinDecision>(m, "MinDecision")
        .def_readonly("count", &gea::MinDecision::count)
        .def_readonly("last_axis", &gea::MinDecision::last_axis)
        .def_readonly("ktilde", &gea::MinDecision::ktilde);

    py::class_<gea::Factor>(m, "Factor")
        .def(py::init<gea::Axis, double>(), py::arg("axis"), py::arg("parameter"))
        .def_readwrite("axis", &gea::Factor::axis)
        .def_readwrite("parameter", &gea::Factor::parameter);

    py::class_<gea::Factorization>(m, "Factorization")
        .def(py::init<>())
        .def_readwrite("rho", &gea::Factorization::rho)
        .def_readwrite("factors", &gea::Factorization::factors)
        .def("count", &gea::Factorization::count);

    py::class_<gea::SuGenerator>(m, "SuGenerator")
        .def(py::init<double, double, double>(), py::arg("bx") = 0.0, py::arg("by") = 0.0,
             py::arg("bz") = 0.0)
        .def_readwrite("bx", &gea::SuGenerator::bx)
        .def_readwrite("by", &gea::SuGenerator::by)
        .def_readwrite("bz", &gea::SuGenerator::bz)
        .def("matrix", &gea::SuGenerator::matrix)
        .def("rate", &gea::SuGenerator::rate);

    py::class_<gea::Segment>(m, "Segment")
        .def(py::init<double, double>(), py::arg("u"), py::arg("duration"))
        .def_readwrite("u", &gea::Segment::u)
        .def_readwrite("duration", &gea::Segment::duration);

    py::class_<gea::ControlSchedule>(m, "ControlSchedule")
        .def(py::init<>())
        .def_readwrite("segments", &gea::ControlSchedule::segments)
        .def("switches", &gea::ControlSchedule::switches);

    py::class_<gea::BilinearSystem>(m, "BilinearSystem")
        .def(py::init<gea::SkewGenerator, gea::SkewGenerator, double, double>(), py::arg("A"),
             py::arg("B"), py::arg("M"), py::arg("N"))
        .def_readwrite("A", &gea::BilinearSystem::A)
        .def_readwrite("B", &gea::BilinearSystem::B)
        .def_readwrite("M", &gea::BilinearSystem::M)
        .def_readwrite("N", &gea::BilinearSystem::N);

    py::class_<gea::QuantumBilinearSystem>(m, "QuantumBilinearSystem")
        .def(py::init<gea::SuGenerator, gea::SuGenerator, double, double>(), py::arg("A"),
             py::arg("B"), py::arg("M"), py::arg("N"))
        .def_readwrite("A", &gea::QuantumBilinearSystem::A)
        .def_readwrite("B", &gea::QuantumBilinearSystem::B)
        .def_readwrite("M", &gea::QuantumBilinearSystem::M)
        .def_readwrite("N", &gea::QuantumBilinearSystem::N);

    m.def("s_basis", &gea::s_basis, py::arg("h"), py::arg("k"));
    m.def("exp_rot", &gea::exp_rot, py::arg("z"), py::arg("t"));
    m.def("log_rot", &gea::log_rot, py::arg("x"));
    m.def("inner", &gea::inner, py::arg("z1"), py::arg("z2"));
    m.def("cos_angle_psi", &gea::cos_angle_psi, py::arg("z1"), py::arg("z2"));

    m.def("canonicalize",
          [](const gea::SkewGenerator& z1, const gea::SkewGenerator& z2) {
              return gea::canonicalize(z1, z2);
          },
          py::arg("z1"), py::arg("z2"));
    m.def("swap_reflection", &gea::swap_reflection, py::arg("rho"));
    m.def("to_canonical_target", &gea::to_canonical_target, py::arg("x"), py::arg("pair"));
    m.def("canonical_param_to_original", &gea::canonical_param_to_original, py::arg("axis"),
          py::arg("theta"), py::arg("pair"));

    m.def("build_sequence", &gea::build_sequence, py::arg("rho"));
    m.def("min_factors",
          [](const gea::Rotation& x, double rho) { return gea::min_factors(x, rho); },
          py::arg("x"), py::arg("rho"));

    m.def("axis_generator", &gea::axis_generator, py::arg("axis"), py::arg("rho"));
    m.def("axis_period", &gea::axis_period, py::arg("axis"), py::arg("rho"));
    m.def("factor_minimal",
          [](const gea::Rotation& x, double rho) { return gea::factor_minimal(x, rho); },
          py::arg("x"), py::arg("rho"));
    m.def("reconstruct", &gea::reconstruct, py::arg("f"));
    m.def("map_back_reflected",
          [](const gea::Factorization& f) { return gea::map_back_reflected(f); }, py::arg("f"));
    m.def("normalize", [](const gea::Factorization& f) { return gea::normalize(f); }, py::arg("f"));

    m.def("phi_tilde", &gea::phi_tilde, py::arg("v"));
    m.def("phi", &gea::phi, py::arg("u"));
    m.def("exp_su2", &gea::exp_su2, py::arg("v"), py::arg("t"));
    m.def("factor_su2",
          [](const gea::Unitary2& target, const gea::SuGenerator& z1, const gea::SuGenerator& z2) {
              return gea::factor_su2(target, z1, z2);
          },
          py::arg("target"), py::arg("zbar1"), py::arg("zbar2"));
    m.def("reconstruct_su2", &gea::reconstruct_su2, py::arg("f"), py::arg("zbar1"),
          py::arg("zbar2"));

    m.def("generators",
          [](const gea::BilinearSystem& sys) { return gea::generators(sys); }, py::arg("sys"));
    m.def("synthesize",
          [](const gea::BilinearSystem& sys, const gea::Rotation& x) {
              return gea::synthesize(sys, x);
          },
          py::arg("sys"), py::arg("x"));
    m.def("synthesize_su2",
          [](const gea::QuantumBilinearSystem& sys, const gea::Unitary2& target) {
              return gea::synthesize(sys, target);
          },
          py::arg("sys"), py::arg("target"));
    m.def("propagate",
          [](const gea::BilinearSystem& sys, const gea::ControlSchedule& sched) {
              return gea::propagate(sys, sched);
          },
          py::arg("sys"), py::arg("sched"));
    m.def("propagate_su2",
          [](const gea::QuantumBilinearSystem& sys, const gea::ControlSchedule& sched) {
              return gea::propagate(sys, sched);
          },
          py::arg("sys"), py::arg("sched"));
    m.def("propagate_state", &gea::propagate_state, py::arg("sys"), py::arg("sched"),
          py::arg("x0"), py::arg("samples_per_segment"));
}
