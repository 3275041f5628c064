#pragma once

// Zero-frequency (n = 0) formulation: surface-charge double-layer kernels,
// the sphere spectrum from a dense Nystrom discretization, the classical
// plate term and the static Casimir-Polder term.

#include "casimir_sso/core.hpp"
#include "casimir_sso/quadrature.hpp"

#include <Eigen/Dense>

#include <variant>
#include <vector>

namespace csso {

// (chi_0 - chi_sigma)/(chi_0 + chi_sigma) for chi = eps or mu.
struct StaticContrast {
  double value = 0.0;
  explicit StaticContrast(double v) : value(v) {
    if (!(std::abs(v) < 1.0)) throw std::invalid_argument("|contrast| must be < 1 for positive permittivities");
  }
  static StaticContrast electric(const MediumResponse& bg, const MaterialModel& body) {
    return StaticContrast(-body.static_reflection_e(bg));
  }
  static StaticContrast magnetic(const MediumResponse& bg, const MaterialModel& body) {
    return StaticContrast(-body.static_reflection_m(bg));
  }
};

struct SurfaceChargeDensity {
  Eigen::Matrix<double, Eigen::Dynamic, 3> nodes;  // quadrature nodes on the surface
  Eigen::VectorXd weights;                         // positive, sum = surface area
  Eigen::VectorXd values;
};

struct SphereShape {
  double radius = 1.0;
};
// One transverse Fourier mode of a parallel-plate pair; values hold the two
// per-plate mode amplitudes.
struct PlanePairShape {
  double distance = 1.0;
  double k = 0.0;
};
using StaticShape = std::variant<SphereShape, PlanePairShape>;

// Product Gauss-Legendre (cos theta) x uniform phi grid on a sphere.
SurfaceChargeDensity make_sphere_grid(int n_theta, double radius);

// Nystrom application of the double-layer kernel 2*contrast*d_n(u) g0(u-u'),
// with the exact row-sum identity absorbing the weak singularity.
SurfaceChargeDensity static_kernel_apply(const StaticShape& shape, const StaticContrast& contrast,
                                         const SurfaceChargeDensity& charge);

// Per-l eigenvalues of the static sphere kernel, grouped by the 2l+1
// spherical-harmonic degeneracy of the Nystrom spectrum.
std::vector<double> static_sphere_eigs(int l_max, const StaticContrast& contrast, int n_theta = 64);

// Raw (non-symmetrized) Nystrom spectrum, for reality checks.
std::vector<std::complex<double>> static_sphere_spectrum_raw(const StaticContrast& contrast,
                                                             int n_theta);

// Classical n = 0 Casimir energy per area between two plates,
//   (k_B T/2) sum_{p=j,m} Int k dk/(2 pi) ln(1 - r1 r2 e^{-2 k d}),
// with r = (chi - chi0)/(chi + chi0).  The reflection products are passed in
// directly; tau supplies k_B T = tau/(2 pi).
double static_plate_n0_energy(double re1, double rm1, double re2, double rm2, double d, double tau,
                              const QuadratureConfig& cfg = {});

// d/d(d) of the above (for the force path), same conventions.
double static_plate_n0_energy_dderiv(double re1, double rm1, double re2, double rm2, double d,
                                     double tau, const QuadratureConfig& cfg = {});

// Truncated versions keeping log powers j <= k+1 (plate static self-kernel
// vanishes, so the intra-body order is irrelevant at n = 0).
double static_plate_n0_energy_mse(double re1, double rm1, double re2, double rm2, double d,
                                  double tau, int k_order, const QuadratureConfig& cfg = {});
double static_plate_n0_energy_mse_dderiv(double re1, double rm1, double re2, double rm2, double d,
                                         double tau, int k_order, const QuadratureConfig& cfg = {});

// Static image-type scattering tensor above a half-space: components of
// Gamma-tilde at height z0, xx = yy = r/(32 pi z0^3), zz = r/(16 pi z0^3).
struct StaticGamma {
  double ee_xx, ee_zz, hh_xx, hh_zz;
};
StaticGamma static_gamma_plate(double z0, double re, double rm);

// n = 0 Casimir-Polder term, -2 pi k_B T [alpha(0) tr Gtilde^{EE} + beta(0) tr Gtilde^{HH}].
double static_cp_n0(double alpha0, double beta0, double z0, double re, double rm, double tau);

}  // namespace csso
