#pragma once

// Free-space scalar Green function at imaginary frequency and the four 3x3
// blocks of the 6x6 Green tensor,
//   g_q(r) = exp(-q r)/(4 pi r),  q = kappa sqrt(eps mu),
//   G^{EE} = (1/(eps kappa)) (grad grad - q^2 1) g     (difference argument)
//   G^{HH} = (1/(mu  kappa)) (grad grad - q^2 1) g
//   G^{HE} v = grad g x v,  G^{EH} = -G^{HE}.
// All derivatives are closed forms; finite differences are test-only.

#include "casimir_sso/core.hpp"

#include <Eigen/Dense>

namespace csso {

enum class GreenBlockLabel { EE, HH, HE, EH };

double scalar_green(double separation, double kappa, const MediumResponse& medium);

// Radial derivatives of g at separation r for wavenumber q = kappa*sqrt(eps mu).
struct ScalarGreenDerivs {
  double g;    //  e^{-qr}/(4 pi r)
  double gp;   //  dg/dr
  double gpp;  //  d2g/dr2
};
ScalarGreenDerivs scalar_green_derivs(double q, double r);

Eigen::Vector3d grad_scalar_green(const Eigen::Vector3d& dr, double q);
Eigen::Matrix3d hessian_scalar_green(const Eigen::Vector3d& dr, double q);

// Green tensor block as a function of dr = r - r'.
Eigen::Matrix3d green_block(GreenBlockLabel label, const Eigen::Vector3d& dr, double kappa,
                            const MediumResponse& medium);

// Numerically stable combinations of two media entering the C1 kernels:
//   d0 = g1 - g0
//   d1 = q1 g1 - q0 g0
//   d2 = q1^2 g1 - q0^2 g0
// evaluated with expm1 so the leading 1/r singularities cancel exactly.
struct GreenDifference {
  double d0, d1, d2;
};
GreenDifference green_difference(double q0, double q1, double r);

// skew matrix [w]_x with [w]_x v = w x v
Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& w);

}  // namespace csso
