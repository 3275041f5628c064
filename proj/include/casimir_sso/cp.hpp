#pragma once

// Casimir-Polder interaction of a polarizable particle above a plate, exact
// and order-by-order in the number of plate scatterings.
//
// The plate fills z < 0 and the particle sits at height z0; the scattering
// Green tensor at the particle is assembled per transverse mode from the
// plate surface operator and integrated, or taken from the closed-form
// Fresnel representation (oracle path).

#include "casimir_sso/core.hpp"
#include "casimir_sso/quadrature.hpp"

namespace csso {

// Single-oscillator polarizabilities alpha(i xi) = alpha0/(1 + (kappa/kappa_a)^2);
// kappa_a = omega_a/(hbar c) in inverse length units (kappa_a <= 0 means static).
struct Polarizability {
  double alpha0 = 0.0;
  double kappa_a = 0.0;
  double beta0 = 0.0;
  double kappa_b = 0.0;
  double alpha(double kappa) const {
    if (alpha0 == 0.0) return 0.0;
    return (kappa_a > 0.0) ? alpha0 / (1.0 + (kappa / kappa_a) * (kappa / kappa_a)) : alpha0;
  }
  double beta(double kappa) const {
    if (beta0 == 0.0) return 0.0;
    return (kappa_b > 0.0) ? beta0 / (1.0 + (kappa / kappa_b) * (kappa / kappa_b)) : beta0;
  }
  static Polarizability electric_eV(double alpha0, double omega_a_eV);
};

// Diagonal components of the scattering Green tensor at the particle
// position (xx = yy by planar symmetry).
struct GammaCoincident {
  double ee_xx = 0.0, ee_zz = 0.0;
  double hh_xx = 0.0, hh_zz = 0.0;
  double tr_ee() const { return 2.0 * ee_xx + ee_zz; }
  double tr_hh() const { return 2.0 * hh_xx + hh_zz; }
};

// Surface-operator route: per mode G0 (1-K11)^{-1} M, with the inverse
// truncated at Neumann order l when order is not exact.
GammaCoincident gamma_plate_coincident(double z0, double kappa, const MaterialModel& plate,
                                       const MediumResponse& medium0 = MediumResponse::vacuum(),
                                       const MseOrder& order = MseOrder::exact(),
                                       const QuadratureConfig& quad = {});

// Independent reflection-integral representation built from r_TM, r_TE.
GammaCoincident gamma_plate_fresnel(double z0, double kappa, const MaterialModel& plate,
                                    const MediumResponse& medium0 = MediumResponse::vacuum(),
                                    const QuadratureConfig& quad = {});

// Casimir-Polder energy; n = 0 enters through the static image term.
EnergyBreakdown cp_energy(const Polarizability& particle, double z0, const MaterialModel& plate,
                          const Thermal& thermal, const MseOrder& order = MseOrder::exact(),
                          const MediumResponse& medium0 = MediumResponse::vacuum(),
                          const QuadratureConfig& quad = {}, int n_max = 100000);

}  // namespace csso
