#pragma once

// Spherical backend: per-l 4x4 surface-operator blocks for a single
// magneto-dielectric or perfectly conducting sphere.
//
// Basis: per (l, m) channel the tangential directions are Phi = r x grad Y
// (direction 1) and Psi = r grad Y (direction 2), both normalized; block rows
// and columns are ordered (E_Phi, E_Psi, H_Phi, H_Psi).  Blocks are
// independent of the azimuthal index m.

#include "casimir_sso/core.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace csso {

struct SphereConfig {
  double radius = 1.0;
  MaterialModel material = MaterialModel::fixed(4.0, 1.0);
  MediumResponse medium0 = MediumResponse::vacuum();
};

enum class SphereMethod { AdditionTheorem, Quadrature };

struct SphericalBlock {
  int l = 1;
  PolarizationBlock block;
};

SphericalBlock sphere_sso_block(int l, double kappaR, const SphereConfig& cfg,
                                SphereMethod method = SphereMethod::AdditionTheorem);

std::array<std::complex<double>, 4> sphere_eigs(int l, double kappaR, const SphereConfig& cfg);

// kappa -> infinity eigenvalue, +-(sqrt(eps1 mu1) - sqrt(eps0 mu0)) /
// sqrt((mu1+mu0)(eps1+eps0)); the positive branch is returned.
double high_freq_eig_limit(const MediumResponse& medium0, const MediumResponse& medium1);

// Perfect-conductor block (electric currents only), basis (Phi, Psi); the
// result is diag(2a, -2a) with a = -(1/2) d/dx [x^2 i_l(x) k_l(x)].
Eigen::Matrix2d pc_sphere_block(int l, double kappaR);

}  // namespace csso
