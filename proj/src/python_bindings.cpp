#include "casimir_sso/core.hpp"
#include "casimir_sso/cp.hpp"
#include "casimir_sso/cylinder.hpp"
#include "casimir_sso/greens.hpp"
#include "casimir_sso/mse.hpp"
#include "casimir_sso/plates.hpp"
#include "casimir_sso/sphere.hpp"
#include "casimir_sso/statics.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace csso;

namespace {

MaterialModel make_material(const std::string& kind, double a, double b, double mu) {
  if (kind == "fixed") return MaterialModel::fixed(a, mu);
  if (kind == "drude") return MaterialModel::drude(a, b, mu);
  if (kind == "plasma") return MaterialModel::plasma(a, mu);
  if (kind == "pc") return MaterialModel::perfect_conductor();
  throw std::invalid_argument("material kind must be fixed|drude|plasma|pc");
}

MseOrder make_order(py::object o) {
  if (o.is_none()) return MseOrder::exact();
  auto t = o.cast<std::pair<int, int>>();
  return MseOrder::kl(t.first, t.second);
}

}  // namespace

PYBIND11_MODULE(_casimir_sso, m) {
  m.doc() = "Casimir and Casimir-Polder interactions from surface scattering operators";

  py::class_<MediumResponse>(m, "MediumResponse")
      .def(py::init<double, double>(), py::arg("eps"), py::arg("mu") = 1.0)
      .def_readonly("eps", &MediumResponse::eps)
      .def_readonly("mu", &MediumResponse::mu);

  py::class_<MaterialModel>(m, "MaterialModel")
      .def_static("fixed", &MaterialModel::fixed, py::arg("eps"), py::arg("mu") = 1.0)
      .def_static("drude", &MaterialModel::drude, py::arg("omega_p_eV"), py::arg("gamma_eV"),
                  py::arg("mu") = 1.0)
      .def_static("plasma", &MaterialModel::plasma, py::arg("omega_p_eV"), py::arg("mu") = 1.0)
      .def_static("perfect_conductor", &MaterialModel::perfect_conductor)
      .def("evaluate", [](const MaterialModel& mm, double kappa) {
        const auto r = mm.evaluate(kappa);
        return std::make_pair(r.eps, r.mu);
      });

  py::class_<EnergyBreakdown>(m, "EnergyBreakdown")
      .def_readonly("total", &EnergyBreakdown::total)
      .def_readonly("tail_estimate", &EnergyBreakdown::tail_estimate)
      .def_readonly("converged", &EnergyBreakdown::converged)
      .def_property_readonly("terms", [](const EnergyBreakdown& e) {
        std::vector<std::tuple<int, double, double>> out;
        for (const auto& t : e.terms) out.emplace_back(t.n, t.kappa, t.value);
        return out;
      });

  m.attr("hbar_c_eV_nm") = hbar_c_eV_nm;
  m.def("matsubara_grid", &matsubara_grid, py::arg("temperature_K"), py::arg("n_max"));
  m.def("evaluate_material", [](const MaterialModel& mm, double kappa) {
    const auto r = mm.evaluate(kappa);
    return std::make_pair(r.eps, r.mu);
  });
  m.def("scalar_green", &scalar_green, py::arg("separation"), py::arg("kappa"), py::arg("medium"));
  m.def(
      "green_block",
      [](const std::string& label, const Eigen::Vector3d& dr, double kappa, const MediumResponse& med) {
        GreenBlockLabel lab;
        if (label == "EE") lab = GreenBlockLabel::EE;
        else if (label == "HH") lab = GreenBlockLabel::HH;
        else if (label == "HE") lab = GreenBlockLabel::HE;
        else if (label == "EH") lab = GreenBlockLabel::EH;
        else throw std::invalid_argument("label must be EE|HH|HE|EH");
        return green_block(lab, dr, kappa, med);
      },
      py::arg("label"), py::arg("dr"), py::arg("kappa"), py::arg("medium"));

  m.def(
      "plate_self_eigs",
      [](double k, double kappa, double eps, double mu) {
        return plate_self_eigs(k, kappa, MediumResponse::vacuum(), MediumResponse(eps, mu));
      },
      py::arg("k"), py::arg("kappa"), py::arg("eps"), py::arg("mu") = 1.0);

  m.def(
      "lifshitz_energy_per_area",
      [](const MaterialModel& b1, const MaterialModel& b2, double d, double T) {
        PlateConfig cfg;
        cfg.body1 = b1;
        cfg.body2 = b2;
        cfg.distance = d;
        cfg.thermal = (T > 0) ? Thermal::kelvin(T) : Thermal::zero();
        return lifshitz_energy_per_area(cfg);
      },
      py::arg("body1"), py::arg("body2"), py::arg("distance_nm"), py::arg("temperature_K") = 0.0);

  m.def(
      "mse_energy_per_area",
      [](const MaterialModel& b1, const MaterialModel& b2, double d, double T, py::object order) {
        PlateConfig cfg;
        cfg.body1 = b1;
        cfg.body2 = b2;
        cfg.distance = d;
        cfg.thermal = (T > 0) ? Thermal::kelvin(T) : Thermal::zero();
        return mse_energy_per_area(cfg, make_order(order));
      },
      py::arg("body1"), py::arg("body2"), py::arg("distance_nm"), py::arg("temperature_K") = 0.0,
      py::arg("order") = py::none());

  m.def(
      "casimir_force_per_area",
      [](const MaterialModel& b1, const MaterialModel& b2, double d, double T, py::object order) {
        PlateConfig cfg;
        cfg.body1 = b1;
        cfg.body2 = b2;
        cfg.distance = d;
        cfg.thermal = (T > 0) ? Thermal::kelvin(T) : Thermal::zero();
        return casimir_force_per_area(cfg, make_order(order));
      },
      py::arg("body1"), py::arg("body2"), py::arg("distance_nm"), py::arg("temperature_K") = 0.0,
      py::arg("order") = py::none());

  m.def(
      "sphere_eigs",
      [](int l, double kappaR, const std::string& kind, double a, double b, double mu) {
        SphereConfig cfg;
        cfg.material = make_material(kind, a, b, mu);
        return sphere_eigs(l, kappaR, cfg);
      },
      py::arg("l"), py::arg("kappaR"), py::arg("kind") = "fixed", py::arg("a") = 4.0,
      py::arg("b") = 0.0, py::arg("mu") = 1.0);

  m.def(
      "sphere_sso_block",
      [](int l, double kappaR, double eps, double mu, const std::string& method) {
        SphereConfig cfg;
        cfg.material = MaterialModel::fixed(eps, mu);
        return sphere_sso_block(l, kappaR, cfg,
                                method == "quadrature" ? SphereMethod::Quadrature
                                                       : SphereMethod::AdditionTheorem)
            .block;
      },
      py::arg("l"), py::arg("kappaR"), py::arg("eps"), py::arg("mu") = 1.0,
      py::arg("method") = "addition");

  m.def("high_freq_eig_limit", [](double eps, double mu) {
    return high_freq_eig_limit(MediumResponse::vacuum(), MediumResponse(eps, mu));
  });

  py::class_<TBlock>(m, "TBlock")
      .def_readonly("m", &TBlock::m)
      .def_readonly("entries_scaled", &TBlock::entries_scaled)
      .def_readonly("log_scale", &TBlock::log_scale)
      .def("hh", &TBlock::hh)
      .def("he", &TBlock::he)
      .def("eh", &TBlock::eh)
      .def("ee", &TBlock::ee);

  m.def(
      "t_exact",
      [](int mm, double kappaR, double kzR, double eps, double mu) {
        CylinderConfig cfg;
        cfg.material = MaterialModel::fixed(eps, mu);
        return t_exact(mm, kappaR, kzR, cfg);
      },
      py::arg("m"), py::arg("kappaR"), py::arg("kzR"), py::arg("eps"), py::arg("mu") = 1.0);

  m.def(
      "mse_t",
      [](int mm, double kappaR, double kzR, double eps, double mu, int p) {
        CylinderConfig cfg;
        cfg.material = MaterialModel::fixed(eps, mu);
        return mse_t(mm, kappaR, kzR, cfg, p);
      },
      py::arg("m"), py::arg("kappaR"), py::arg("kzR"), py::arg("eps"), py::arg("mu") = 1.0,
      py::arg("p") = 3);

  m.def(
      "cyl_eigs",
      [](int mm, double kappaR, double kzR, double eps, double mu) {
        CylinderConfig cfg;
        cfg.material = MaterialModel::fixed(eps, mu);
        return cyl_eigs(mm, kappaR, kzR, cfg);
      },
      py::arg("m"), py::arg("kappaR"), py::arg("kzR"), py::arg("eps"), py::arg("mu") = 1.0);

  m.def(
      "static_sphere_eigs",
      [](int l_max, double contrast, int n_theta) {
        return static_sphere_eigs(l_max, StaticContrast(contrast), n_theta);
      },
      py::arg("l_max"), py::arg("contrast"), py::arg("n_theta") = 32);

  py::class_<GammaCoincident>(m, "GammaCoincident")
      .def_readonly("ee_xx", &GammaCoincident::ee_xx)
      .def_readonly("ee_zz", &GammaCoincident::ee_zz)
      .def_readonly("hh_xx", &GammaCoincident::hh_xx)
      .def_readonly("hh_zz", &GammaCoincident::hh_zz);

  m.def(
      "gamma_plate_coincident",
      [](double z0, double kappa, const MaterialModel& plate, py::object order) {
        return gamma_plate_coincident(z0, kappa, plate, MediumResponse::vacuum(), make_order(order));
      },
      py::arg("z0"), py::arg("kappa"), py::arg("plate"), py::arg("order") = py::none());

  m.def(
      "cp_energy",
      [](double alpha0, double omega_a_eV, double z0, const MaterialModel& plate, double T,
         py::object order) {
        Polarizability p = omega_a_eV > 0 ? Polarizability::electric_eV(alpha0, omega_a_eV)
                                          : Polarizability{alpha0, 0.0, 0.0, 0.0};
        return cp_energy(p, z0, plate, (T > 0) ? Thermal::kelvin(T) : Thermal::zero(),
                         make_order(order));
      },
      py::arg("alpha0"), py::arg("omega_a_eV"), py::arg("z0_nm"), py::arg("plate"),
      py::arg("temperature_K") = 0.0, py::arg("order") = py::none());
}
