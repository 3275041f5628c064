#include "casimir_sso/greens.hpp"

#include <cmath>
#include <stdexcept>

namespace csso {

double scalar_green(double separation, double kappa, const MediumResponse& medium) {
  if (!(separation > 0.0)) throw std::domain_error("scalar_green requires separation > 0");
  const double q = kappa * std::sqrt(medium.eps * medium.mu);
  return std::exp(-q * separation) / (4.0 * M_PI * separation);
}

ScalarGreenDerivs scalarGreenDerivsImpl(double q, double r) {
  const double g = std::exp(-q * r) / (4.0 * M_PI * r);
  ScalarGreenDerivs d;
  d.g = g;
  d.gp = -(q + 1.0 / r) * g;
  d.gpp = (q * q + 2.0 * q / r + 2.0 / (r * r)) * g;
  return d;
}

ScalarGreenDerivs scalar_green_derivs(double q, double r) {
  if (!(r > 0.0)) throw std::domain_error("scalar_green_derivs requires r > 0");
  return scalarGreenDerivsImpl(q, r);
}

Eigen::Vector3d grad_scalar_green(const Eigen::Vector3d& dr, double q) {
  const double r = dr.norm();
  const auto d = scalar_green_derivs(q, r);
  return (d.gp / r) * dr;
}

Eigen::Matrix3d hessian_scalar_green(const Eigen::Vector3d& dr, double q) {
  const double r = dr.norm();
  const auto d = scalar_green_derivs(q, r);
  const Eigen::Vector3d n = dr / r;
  return (d.gpp - d.gp / r) * (n * n.transpose()) + (d.gp / r) * Eigen::Matrix3d::Identity();
}

Eigen::Matrix3d green_block(GreenBlockLabel label, const Eigen::Vector3d& dr, double kappa,
                            const MediumResponse& medium) {
  const double r = dr.norm();
  if (!(r > 0.0)) throw std::domain_error("green_block requires |dr| > 0");
  const double q = kappa * std::sqrt(medium.eps * medium.mu);
  switch (label) {
    case GreenBlockLabel::EE: {
      if (kappa <= 0.0) throw std::domain_error("EE block carries 1/kappa; static limit handled elsewhere");
      const double g = std::exp(-q * r) / (4.0 * M_PI * r);
      return (hessian_scalar_green(dr, q) - q * q * g * Eigen::Matrix3d::Identity()) /
             (medium.eps * kappa);
    }
    case GreenBlockLabel::HH: {
      if (kappa <= 0.0) throw std::domain_error("HH block carries 1/kappa; static limit handled elsewhere");
      const double g = std::exp(-q * r) / (4.0 * M_PI * r);
      return (hessian_scalar_green(dr, q) - q * q * g * Eigen::Matrix3d::Identity()) /
             (medium.mu * kappa);
    }
    case GreenBlockLabel::HE:
      return cross_matrix(grad_scalar_green(dr, q));
    case GreenBlockLabel::EH:
      return -cross_matrix(grad_scalar_green(dr, q));
  }
  throw std::logic_error("unreachable");
}

GreenDifference green_difference(double q0, double q1, double r) {
  if (!(r > 0.0)) throw std::domain_error("green_difference requires r > 0");
  const double pref = std::exp(-q0 * r) / (4.0 * M_PI * r);
  const double em1 = std::expm1(-(q1 - q0) * r);
  const double dq = q1 - q0;
  GreenDifference d;
  d.d0 = pref * em1;
  d.d1 = pref * (q1 * em1 + dq);
  d.d2 = pref * (q1 * q1 * em1 + (q1 + q0) * dq);
  return d;
}

Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& w) {
  Eigen::Matrix3d m;
  m << 0.0, -w.z(), w.y(), w.z(), 0.0, -w.x(), -w.y(), w.x(), 0.0;
  return m;
}

}  // namespace csso
