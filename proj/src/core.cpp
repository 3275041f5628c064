#include "casimir_sso/core.hpp"

namespace csso {

MaterialModel MaterialModel::fixed(double eps, double mu) {
  if (!(eps > 0.0) || !(mu > 0.0)) throw std::invalid_argument("fixed material requires eps, mu > 0");
  MaterialModel m;
  m.kind_ = Kind::Fixed;
  m.eps_ = eps;
  m.mu_ = mu;
  return m;
}

MaterialModel MaterialModel::drude(double omega_p_eV, double gamma_eV, double mu) {
  if (!(omega_p_eV > 0.0) || !(gamma_eV > 0.0) || !(mu > 0.0))
    throw std::invalid_argument("drude parameters must be positive");
  MaterialModel m;
  m.kind_ = Kind::Drude;
  m.omega_p_ = omega_p_eV;
  m.gamma_ = gamma_eV;
  m.mu_ = mu;
  return m;
}

MaterialModel MaterialModel::plasma(double omega_p_eV, double mu) {
  if (!(omega_p_eV > 0.0) || !(mu > 0.0)) throw std::invalid_argument("plasma parameters must be positive");
  MaterialModel m;
  m.kind_ = Kind::Plasma;
  m.omega_p_ = omega_p_eV;
  m.mu_ = mu;
  return m;
}

MaterialModel MaterialModel::perfect_conductor() {
  MaterialModel m;
  m.kind_ = Kind::PerfectConductor;
  return m;
}

MediumResponse MaterialModel::evaluate(double kappa) const {
  if (kappa < 0.0) throw std::invalid_argument("kappa must be >= 0");
  switch (kind_) {
    case Kind::Fixed:
      return MediumResponse(eps_, mu_);
    case Kind::Drude: {
      if (kappa == 0.0)
        throw std::domain_error("Drude permittivity diverges at kappa = 0; use the static formulation");
      const double xi = kappa * hbar_c_eV_nm;
      return MediumResponse(1.0 + omega_p_ * omega_p_ / (xi * (xi + gamma_)), mu_);
    }
    case Kind::Plasma: {
      if (kappa == 0.0)
        throw std::domain_error("plasma permittivity diverges at kappa = 0; use the static formulation");
      const double xi = kappa * hbar_c_eV_nm;
      return MediumResponse(1.0 + omega_p_ * omega_p_ / (xi * xi), mu_);
    }
    case Kind::PerfectConductor:
      throw std::domain_error("perfect conductors have no MediumResponse; use the PC operator path");
  }
  throw std::logic_error("unreachable");
}

double MaterialModel::static_reflection_e(const MediumResponse& bg) const {
  switch (kind_) {
    case Kind::Fixed:
      return (eps_ - bg.eps) / (eps_ + bg.eps);
    case Kind::Drude:
    case Kind::Plasma:
    case Kind::PerfectConductor:
      return 1.0;
  }
  throw std::logic_error("unreachable");
}

double MaterialModel::static_reflection_m(const MediumResponse& bg) const {
  if (kind_ == Kind::PerfectConductor) return -1.0;
  return (mu_ - bg.mu) / (mu_ + bg.mu);
}

ModeIndex ModeIndex::plane_wave(double kpar) {
  if (kpar < 0.0) throw std::invalid_argument("plane-wave mode needs |k_par| >= 0");
  ModeIndex m;
  m.kind = Kind::PlaneWave;
  m.k = kpar;
  return m;
}

ModeIndex ModeIndex::spherical(int l) {
  if (l < 1) throw std::invalid_argument("spherical mode needs l >= 1");
  ModeIndex m;
  m.kind = Kind::Spherical;
  m.l = l;
  return m;
}

ModeIndex ModeIndex::cylindrical(int mm, double kz) {
  if (mm < 0) throw std::invalid_argument("cylindrical mode needs m >= 0");
  ModeIndex m;
  m.kind = Kind::Cylindrical;
  m.m = mm;
  m.kz = kz;
  return m;
}

std::vector<double> matsubara_grid(double temperature_K, int n_max) {
  if (!(temperature_K > 0.0)) throw std::invalid_argument("temperature must be > 0");
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  const double tau = Thermal::kelvin(temperature_K).tau;
  std::vector<double> grid(n_max + 1);
  for (int n = 0; n <= n_max; ++n) grid[n] = n * tau;
  return grid;
}

MediumResponse evaluate_material(const MaterialModel& model, double kappa) { return model.evaluate(kappa); }

}  // namespace csso
