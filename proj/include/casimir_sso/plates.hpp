#pragma once

// Plane-wave backend for two parallel plates.
//
// Geometry and basis: body 1 fills z < 0 (outward normal +z), body 2 fills
// z > d (normal -z).  Per mode the transverse wavevector is fixed at
// k_par = (k, 0) (the per-mode log-determinant is rotation invariant) and the
// tangential directions are (x, y), so blocks are ordered (Ex, Ey, Hx, Hy).

#include "casimir_sso/core.hpp"
#include "casimir_sso/mse.hpp"
#include "casimir_sso/quadrature.hpp"

#include <Eigen/Dense>

namespace csso {

struct PlateConfig {
  MediumResponse medium0 = MediumResponse::vacuum();
  MaterialModel body1 = MaterialModel::fixed(1.0, 1.0);
  MaterialModel body2 = MaterialModel::fixed(1.0, 1.0);
  double distance = 1.0;
  Thermal thermal = Thermal::zero();
  QuadratureConfig quad{};
  int n_max = 100000;
};

// Which bodies get the Neumann-truncated inverse in the expanded energy;
// Body1Only matches the convention of applying the intra-body order to the
// dielectric plate while keeping the closed-form inverse on the other one.
enum class Truncation { Body1Only, BothBodies };

inline double plane_wave_s(double eps, double mu, double kappa, double k) {
  return std::sqrt(eps * mu * kappa * kappa + k * k);
}

struct FresnelPair {
  double r_TM, r_TE;
};
FresnelPair fresnel_pair(double k, double kappa, const MediumResponse& m0, const MediumResponse& mat);

// Surface operator blocks (basis above).  body selects the normal: 1 -> +z,
// 2 -> -z.  kappa must be > 0; the n = 0 term goes through the statics module.
PolarizationBlock plate_self_block(int body, double k, double kappa, const MediumResponse& m0,
                                   const MediumResponse& mat);

// Closed-form self eigenvalues (each with algebraic multiplicity two).
std::pair<double, double> plate_self_eigs(double k, double kappa, const MediumResponse& m0,
                                          const MediumResponse& mat);

enum class CrossDirection { ToBody1, ToBody2 };  // ToBody1 = K_12, ToBody2 = K_21
PolarizationBlock plate_cross_block(CrossDirection dir, double k, double kappa, double d,
                                    const MediumResponse& m0, const MediumResponse& receiver);
// Same without the exp(-s0 d) factor.
PolarizationBlock plate_cross_block_scaled(CrossDirection dir, double k, double kappa,
                                           const MediumResponse& m0, const MediumResponse& receiver);

// Per-mode ln det(1 - N) with the exact round trip; media are those of the
// two bodies at this kappa.
double plate_mode_logdet(double k, double kappa, double d, const MediumResponse& m0,
                         const MediumResponse& b1, const MediumResponse& b2);
// Truncated version: ln expanded to k_order+1 powers, inverses truncated at
// Neumann order l.
double plate_mode_logdet_mse(double k, double kappa, double d, const MediumResponse& m0,
                             const MediumResponse& b1, const MediumResponse& b2, int k_order,
                             int l_order, Truncation trunc);

// Energies per unit area in hbar*c/length^3 units (eV/nm^2 once multiplied by
// hbar_c_eV_nm when lengths are nm).  The n = 0 term is always the classical
// static value from the statics module.
EnergyBreakdown lifshitz_energy_per_area(const PlateConfig& cfg);
EnergyBreakdown mse_energy_per_area(const PlateConfig& cfg, const MseOrder& order,
                                    Truncation trunc = Truncation::Body1Only);

// Pressure -dE/dd, same conventions; derivative taken analytically per mode.
EnergyBreakdown casimir_force_per_area(const PlateConfig& cfg, const MseOrder& order,
                                       Truncation trunc = Truncation::Body1Only);

// Perfect-conductor formulation (electric currents only): the flat self
// block vanishes and both scaled cross blocks are -identity.
Eigen::Matrix2d pc_plate_self_block();
Eigen::Matrix2d pc_plate_cross_block_scaled();
EnergyBreakdown pc_plate_energy_per_area(double d, const Thermal& thermal,
                                         const QuadratureConfig& quad = {});
EnergyBreakdown pc_plate_force_per_area(double d, const Thermal& thermal,
                                        const QuadratureConfig& quad = {});

}  // namespace csso
