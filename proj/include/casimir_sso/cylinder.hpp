#pragma once

// Cylindrical backend: exact T-matrix of a magneto-dielectric cylinder,
// per-(m, kz) 4x4 surface-operator blocks, and T-matrix approximants from
// the scattering expansion.
//
// Basis: surface currents on the cylinder are expanded in e^{i(m phi + kz z)}
// modes with tangential directions (z, phi); blocks are ordered
// (E_z, E_phi, H_z, H_phi).  All radial arguments are handled through
// exponentially scaled Bessel functions.

#include "casimir_sso/core.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace csso {

struct CylinderConfig {
  double radius = 1.0;
  MaterialModel material = MaterialModel::fixed(30.0, 1.0);
  MediumResponse medium0 = MediumResponse::vacuum();  // vacuum in the exact T-matrix
};

enum class CylinderMethod { WaveMatching, Quadrature };

// 2x2 T-matrix in polarization space, rows/cols ordered (H, E).  True
// entries are entries_scaled * exp(log_scale); the scaled form stays finite
// and continuous up to kappa R ~ 1e3 where the raw values overflow.
struct TBlock {
  int m = 0;
  Eigen::Matrix2d entries_scaled = Eigen::Matrix2d::Zero();
  double log_scale = 0.0;  // 2 p0 R
  double hh() const { return entries_scaled(0, 0) * std::exp(log_scale); }
  double he() const { return entries_scaled(0, 1) * std::exp(log_scale); }
  double eh() const { return entries_scaled(1, 0) * std::exp(log_scale); }
  double ee() const { return entries_scaled(1, 1) * std::exp(log_scale); }
};

TBlock t_exact(int m, double kappaR, double kzR, const CylinderConfig& cfg);

PolarizationBlock cyl_sso_block(int m, double kappaR, double kzR, const CylinderConfig& cfg,
                                CylinderMethod method = CylinderMethod::WaveMatching);

std::array<std::complex<double>, 4> cyl_eigs(int m, double kappaR, double kzR,
                                             const CylinderConfig& cfg);

// T-matrix approximant from Gamma = G0 (sum_{q<=p} K11^q) M projected onto
// cylindrical waves; p < 0 selects the exact inverse.
TBlock mse_t(int m, double kappaR, double kzR, const CylinderConfig& cfg, int p);

}  // namespace csso
