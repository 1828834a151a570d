#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gqc/classify.hpp"
#include "gqc/errors.hpp"
#include "gqc/measures.hpp"
#include "gqc/scan.hpp"
#include "gqc/serialize.hpp"
#include "gqc/teleport.hpp"
#include "gqc/thresholds.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "directional Gaussian correlations of two-mode states";

  py::register_exception<gqc::FormError>(m, "FormError", PyExc_ValueError);
  py::register_exception<gqc::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<gqc::ProductStateError>(m, "ProductStateError",
                                                 PyExc_ValueError);
  py::register_exception<gqc::NumericError>(m, "NumericError",
                                            PyExc_ArithmeticError);

  py::enum_<gqc::Direction>(m, "Direction")
      .value("A_GIVEN_B", gqc::Direction::AGivenB)
      .value("B_GIVEN_A", gqc::Direction::BGivenA);

  py::enum_<gqc::ClassLabel>(m, "ClassLabel")
      .value("UNPHYSICAL", gqc::ClassLabel::Unphysical)
      .value("PRODUCT", gqc::ClassLabel::Product)
      .value("DISCORD_ONLY", gqc::ClassLabel::DiscordOnly)
      .value("ENTANGLED_PPT_ONLY", gqc::ClassLabel::EntangledPptOnly)
      .value("DUAN_ENTANGLED", gqc::ClassLabel::DuanEntangled)
      .value("ONE_WAY_STEER_AB", gqc::ClassLabel::OneWaySteerAb)
      .value("ONE_WAY_STEER_BA", gqc::ClassLabel::OneWaySteerBa)
      .value("TWO_WAY_STEER", gqc::ClassLabel::TwoWaySteer)
      .value("SYMMETRIC_EPR", gqc::ClassLabel::SymmetricEpr)
      .value("BOUNDARY", gqc::ClassLabel::Boundary);

  py::enum_<gqc::BoundarySurface>(m, "BoundarySurface")
      .value("DISCORD_AB", gqc::BoundarySurface::DiscordAb)
      .value("DISCORD_BA", gqc::BoundarySurface::DiscordBa)
      .value("ENT_PPT", gqc::BoundarySurface::EntPpt)
      .value("DUAN", gqc::BoundarySurface::Duan)
      .value("STEER_AB", gqc::BoundarySurface::SteerAb)
      .value("STEER_BA", gqc::BoundarySurface::SteerBa)
      .value("SYMMETRIC_EPR", gqc::BoundarySurface::SymmetricEpr);

  py::enum_<gqc::UnifiedVerdict>(m, "UnifiedVerdict")
      .value("STEERING", gqc::UnifiedVerdict::Steering)
      .value("ENTANGLEMENT", gqc::UnifiedVerdict::Entanglement)
      .value("DISCORD_BEYOND_ENTANGLEMENT",
             gqc::UnifiedVerdict::DiscordBeyondEntanglement);

  py::enum_<gqc::TeleportDirection>(m, "TeleportDirection")
      .value("A_TO_B", gqc::TeleportDirection::AToB)
      .value("B_TO_A", gqc::TeleportDirection::BToA)
      .value("SYMMETRIC", gqc::TeleportDirection::Symmetric);

  py::enum_<gqc::ThresholdCriterion>(m, "ThresholdCriterion")
      .value("ENT_PPT", gqc::ThresholdCriterion::EntPpt)
      .value("STEER_AB", gqc::ThresholdCriterion::SteerAb)
      .value("STEER_BA", gqc::ThresholdCriterion::SteerBa)
      .value("DUAN_QT", gqc::ThresholdCriterion::DuanQt)
      .value("DUAN_ST", gqc::ThresholdCriterion::DuanSt);

  py::enum_<gqc::ScanMode>(m, "ScanMode")
      .value("STS_NOISE_GRID", gqc::ScanMode::StsNoiseGrid)
      .value("RAW_NM_GRID", gqc::ScanMode::RawNmGrid);

  py::enum_<gqc::Quantity>(m, "Quantity")
      .value("ENT_PPT", gqc::Quantity::EntPpt)
      .value("DUAN", gqc::Quantity::Duan)
      .value("E_AB", gqc::Quantity::EAb)
      .value("E_BA", gqc::Quantity::EBa)
      .value("D_AB", gqc::Quantity::DAb)
      .value("D_BA", gqc::Quantity::DBa)
      .value("S_COND", gqc::Quantity::SCond)
      .value("H_COND", gqc::Quantity::HCond)
      .value("LABEL", gqc::Quantity::Label);

  py::class_<gqc::StsParams>(m, "StsParams")
      .def(py::init<double, double, double>(), py::arg("r"), py::arg("na"),
           py::arg("nb"))
      .def_readwrite("r", &gqc::StsParams::r)
      .def_readwrite("na", &gqc::StsParams::na)
      .def_readwrite("nb", &gqc::StsParams::nb);

  py::class_<gqc::CovarianceMatrix>(m, "CovarianceMatrix")
      .def(py::init<double, double, double, double>(), py::arg("n"),
           py::arg("m"), py::arg("c1"), py::arg("c2"))
      .def_readwrite("n", &gqc::CovarianceMatrix::n)
      .def_readwrite("m", &gqc::CovarianceMatrix::m)
      .def_readwrite("c1", &gqc::CovarianceMatrix::c1)
      .def_readwrite("c2", &gqc::CovarianceMatrix::c2)
      .def("is_sts_form", &gqc::CovarianceMatrix::is_sts_form)
      .def("c", &gqc::CovarianceMatrix::c)
      .def("__repr__", [](const gqc::CovarianceMatrix& cm) {
        return "CovarianceMatrix(n=" + gqc::fmt12(cm.n) +
               ", m=" + gqc::fmt12(cm.m) + ", c1=" + gqc::fmt12(cm.c1) +
               ", c2=" + gqc::fmt12(cm.c2) + ")";
      });

  py::class_<gqc::SymplecticSpectrum>(m, "SymplecticSpectrum")
      .def_readonly("i1", &gqc::SymplecticSpectrum::i1)
      .def_readonly("i2", &gqc::SymplecticSpectrum::i2)
      .def_readonly("i3", &gqc::SymplecticSpectrum::i3)
      .def_readonly("i4", &gqc::SymplecticSpectrum::i4)
      .def_readonly("delta", &gqc::SymplecticSpectrum::delta)
      .def_readonly("d_plus", &gqc::SymplecticSpectrum::d_plus)
      .def_readonly("d_minus", &gqc::SymplecticSpectrum::d_minus)
      .def_readonly("d_minus_pt", &gqc::SymplecticSpectrum::d_minus_pt);

  py::class_<gqc::SteeringResult>(m, "SteeringResult")
      .def_readonly("value", &gqc::SteeringResult::value)
      .def_readonly("gain", &gqc::SteeringResult::gain);

  py::class_<gqc::DiscordResult>(m, "DiscordResult")
      .def_readonly("value", &gqc::DiscordResult::value)
      .def_readonly("s_cond", &gqc::DiscordResult::s_cond)
      .def_readonly("h_cond", &gqc::DiscordResult::h_cond);

  py::class_<gqc::CorrelationReport>(m, "CorrelationReport")
      .def_readonly("ent_ppt", &gqc::CorrelationReport::ent_ppt)
      .def_readonly("duan", &gqc::CorrelationReport::duan)
      .def_readonly("e_ab", &gqc::CorrelationReport::e_ab)
      .def_readonly("e_ba", &gqc::CorrelationReport::e_ba)
      .def_readonly("g_ab_opt", &gqc::CorrelationReport::g_ab_opt)
      .def_readonly("g_ba_opt", &gqc::CorrelationReport::g_ba_opt)
      .def_readonly("g_sym_ab", &gqc::CorrelationReport::g_sym_ab)
      .def_readonly("g_sym_ba", &gqc::CorrelationReport::g_sym_ba)
      .def_readonly("d_ab", &gqc::CorrelationReport::d_ab)
      .def_readonly("d_ba", &gqc::CorrelationReport::d_ba)
      .def_readonly("s_cond_ab", &gqc::CorrelationReport::s_cond_ab)
      .def_readonly("h_cond_ab", &gqc::CorrelationReport::h_cond_ab)
      .def_readonly("s_cond_ba", &gqc::CorrelationReport::s_cond_ba)
      .def_readonly("h_cond_ba", &gqc::CorrelationReport::h_cond_ba);

  py::class_<gqc::ClassFlags>(m, "ClassFlags")
      .def_readonly("physical", &gqc::ClassFlags::physical)
      .def_readonly("product", &gqc::ClassFlags::product)
      .def_readonly("discord_ab", &gqc::ClassFlags::discord_ab)
      .def_readonly("discord_ba", &gqc::ClassFlags::discord_ba)
      .def_readonly("entangled_ppt", &gqc::ClassFlags::entangled_ppt)
      .def_readonly("duan_entangled", &gqc::ClassFlags::duan_entangled)
      .def_readonly("steer_ab", &gqc::ClassFlags::steer_ab)
      .def_readonly("steer_ba", &gqc::ClassFlags::steer_ba)
      .def_readonly("two_way_steer", &gqc::ClassFlags::two_way_steer)
      .def_readonly("symmetric_epr", &gqc::ClassFlags::symmetric_epr)
      .def_readonly("boundary", &gqc::ClassFlags::boundary);

  py::class_<gqc::UnifiedSignature>(m, "UnifiedSignature")
      .def_readonly("e", &gqc::UnifiedSignature::e)
      .def_readonly("steering_bound", &gqc::UnifiedSignature::steering_bound)
      .def_readonly("entanglement_bound",
                    &gqc::UnifiedSignature::entanglement_bound)
      .def_readonly("verdict", &gqc::UnifiedSignature::verdict)
      .def_readonly("boundary", &gqc::UnifiedSignature::boundary);

  py::class_<gqc::ThresholdSet>(m, "ThresholdSet")
      .def_readonly("r_ent", &gqc::ThresholdSet::r_ent)
      .def_readonly("r_steer_ab", &gqc::ThresholdSet::r_steer_ab)
      .def_readonly("r_steer_ba", &gqc::ThresholdSet::r_steer_ba)
      .def_readonly("r_qt_duan", &gqc::ThresholdSet::r_qt_duan)
      .def_readonly("r_st_duan", &gqc::ThresholdSet::r_st_duan);

  py::class_<gqc::TeleportReport>(m, "TeleportReport")
      .def_readonly("fidelity_sym", &gqc::TeleportReport::fidelity_sym)
      .def_readonly("qt_sym", &gqc::TeleportReport::qt_sym)
      .def_readonly("secure", &gqc::TeleportReport::secure)
      .def_readonly("direction", &gqc::TeleportReport::direction)
      .def_readonly("gbar", &gqc::TeleportReport::gbar)
      .def_readonly("condition_residual",
                    &gqc::TeleportReport::condition_residual)
      .def_readonly("f_g", &gqc::TeleportReport::f_g);

  py::class_<gqc::AxisSpec>(m, "AxisSpec")
      .def(py::init<double, double, int>(), py::arg("lo"), py::arg("hi"),
           py::arg("steps"))
      .def_readwrite("lo", &gqc::AxisSpec::lo)
      .def_readwrite("hi", &gqc::AxisSpec::hi)
      .def_readwrite("steps", &gqc::AxisSpec::steps);

  py::class_<gqc::ScanSpec>(m, "ScanSpec")
      .def(py::init<>())
      .def_readwrite("mode", &gqc::ScanSpec::mode)
      .def_readwrite("fixed", &gqc::ScanSpec::fixed)
      .def_readwrite("axis1", &gqc::ScanSpec::axis1)
      .def_readwrite("axis2", &gqc::ScanSpec::axis2)
      .def_readwrite("quantities", &gqc::ScanSpec::quantities);

  py::class_<gqc::ScanResult>(m, "ScanResult")
      .def_readonly("spec", &gqc::ScanResult::spec)
      .def_readonly("axis1_values", &gqc::ScanResult::axis1_values)
      .def_readonly("axis2_values", &gqc::ScanResult::axis2_values)
      .def_readonly("labels", &gqc::ScanResult::labels)
      .def_readonly("boundary_cells", &gqc::ScanResult::boundary_cells)
      .def_readonly("unphysical_cells", &gqc::ScanResult::unphysical_cells)
      .def("field", &gqc::ScanResult::field, py::arg("quantity"),
           py::return_value_policy::copy);

  py::class_<gqc::CrossingPoint>(m, "CrossingPoint")
      .def_readonly("axis1", &gqc::CrossingPoint::axis1)
      .def_readonly("axis2", &gqc::CrossingPoint::axis2);

  m.def("sts_covariance", &gqc::sts_covariance, py::arg("params"));
  m.def(
      "sts_covariance",
      [](double r, double na, double nb) {
        return gqc::sts_covariance({r, na, nb});
      },
      py::arg("r"), py::arg("na"), py::arg("nb"));
  m.def("symplectic_spectrum", &gqc::symplectic_spectrum, py::arg("cm"));
  m.def("is_physical", &gqc::is_physical, py::arg("cm"));

  m.def("ent_ppt", &gqc::ent_ppt, py::arg("cm"));
  m.def("ent_gain", &gqc::ent_gain, py::arg("cm"), py::arg("g"), py::arg("dir"));
  m.def("optimal_gain_sym", &gqc::optimal_gain_sym, py::arg("cm"), py::arg("dir"));
  m.def("duan", &gqc::duan, py::arg("cm"));
  m.def("steering",
        py::overload_cast<const gqc::CovarianceMatrix&, gqc::Direction, double>(
            &gqc::steering),
        py::arg("cm"), py::arg("dir"), py::arg("g"));
  m.def("steering",
        py::overload_cast<const gqc::CovarianceMatrix&, gqc::Direction>(
            &gqc::steering),
        py::arg("cm"), py::arg("dir"));
  m.def("discord", &gqc::discord, py::arg("cm"), py::arg("dir"));
  m.def("entropy_f", &gqc::entropy_f, py::arg("x"));
  m.def("report", &gqc::report, py::arg("cm"));

  m.def("classify", &gqc::classify, py::arg("cm"));
  m.def("unified_signature", &gqc::unified_signature, py::arg("cm"), py::arg("dir"));

  m.def("closed_form_thresholds", &gqc::closed_form_thresholds, py::arg("na"),
        py::arg("nb"));
  m.def("bisection_threshold", &gqc::bisection_threshold, py::arg("na"),
        py::arg("nb"), py::arg("criterion"), py::arg("r_max") = 10.0);

  m.def("run_scan", &gqc::run_scan, py::arg("spec"));
  m.def("extract_boundary", &gqc::extract_boundary, py::arg("result"),
        py::arg("quantity"), py::arg("level"));
  m.def("scan_csv", &gqc::scan_csv, py::arg("result"));
  m.def("scan_json",
        [](const gqc::ScanResult& result) { return gqc::scan_json(result).dump(2); },
        py::arg("result"));

  m.def("teleport_report", &gqc::teleport_report, py::arg("cm"));
  m.def("secure_teleport_check", &gqc::secure_teleport_check, py::arg("cm"));

  m.def("label_token", &gqc::label_token, py::arg("label"));
  m.def("quantity_token", &gqc::quantity_token, py::arg("quantity"));

  m.attr("__version__") = "1.0.0";
}
