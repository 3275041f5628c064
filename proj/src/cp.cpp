#include "casimir_sso/cp.hpp"

#include "casimir_sso/mse.hpp"
#include "casimir_sso/plates.hpp"
#include "casimir_sso/statics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace csso {

Polarizability Polarizability::electric_eV(double alpha0, double omega_a_eV) {
  Polarizability p;
  p.alpha0 = alpha0;
  p.kappa_a = omega_a_eV / hbar_c_eV_nm;
  return p;
}

namespace {

using cd = std::complex<double>;
constexpr cd I1(0.0, 1.0);

// plain (unconjugated) cross product; Eigen's cross() conjugates complex operands
Eigen::Vector3cd cross_c(const Eigen::Vector3cd& a, const Eigen::Vector3cd& b) {
  return Eigen::Vector3cd(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
                          a(0) * b(1) - a(1) * b(0));
}

MediumResponse plate_response(const MaterialModel& m, double kappa) {
  if (m.is_perfect_conductor()) return MediumResponse(1e16, 1e-16);
  return m.evaluate(kappa);
}

// Per-mode diagonal of Gamma at the particle: columns (xx, yy, zz) for EE and
// HH, at k_par = (k, 0); the x/y average is taken by the caller.
struct ModeGamma {
  double ee[3];
  double hh[3];
};

ModeGamma gamma_mode(double k, double kappa, double z0, const MediumResponse& m0,
                     const MediumResponse& m1, int l_order /* <0 exact */) {
  const double s0 = plane_wave_s(m0.eps, m0.mu, kappa, k);
  const double q02 = m0.eps * m0.mu * kappa * kappa;
  const double gu = std::exp(-s0 * z0) / (2.0 * s0);
  const Eigen::Vector3cd grad_up(I1 * k, 0.0, -s0);  // field at z0 from the sheet
  const Eigen::Vector3cd grad_sheet(I1 * k, 0.0, s0);  // field on the sheet from z0

  Eigen::Matrix<cd, 3, 4> G0E = Eigen::Matrix<cd, 3, 4>::Zero();
  Eigen::Matrix<cd, 3, 4> G0H = Eigen::Matrix<cd, 3, 4>::Zero();
  for (int a = 0; a < 2; ++a) {
    Eigen::Vector3cd ea = Eigen::Vector3cd::Zero();
    ea(a) = 1.0;
    const Eigen::Vector3cd dd = (grad_up * (grad_up.transpose() * ea) - q02 * ea) * gu;
    const Eigen::Vector3cd cc = cross_c(grad_up, ea) * gu;
    G0E.col(a) = dd / (m0.eps * kappa);
    G0E.col(2 + a) = -cc;
    G0H.col(a) = cc;
    G0H.col(2 + a) = dd / (m0.mu * kappa);
  }
  Eigen::Matrix<cd, 4, 3> ME = Eigen::Matrix<cd, 4, 3>::Zero();
  Eigen::Matrix<cd, 4, 3> MH = Eigen::Matrix<cd, 4, 3>::Zero();
  const Eigen::Vector3cd ez(0.0, 0.0, 1.0);
  for (int b = 0; b < 3; ++b) {
    Eigen::Vector3cd eb = Eigen::Vector3cd::Zero();
    eb(b) = 1.0;
    const Eigen::Vector3cd GEEs = (grad_sheet * (grad_sheet.transpose() * eb) - q02 * eb) * gu / (m0.eps * kappa);
    const Eigen::Vector3cd GHHs = (grad_sheet * (grad_sheet.transpose() * eb) - q02 * eb) * gu / (m0.mu * kappa);
    const Eigen::Vector3cd GHEs = cross_c(grad_sheet, eb) * gu;
    const Eigen::Vector3cd GEHs = -GHEs;
    ME.block<2, 1>(0, b) = (2.0 * m0.mu / (m0.mu + m1.mu)) * cross_c(ez, GHEs).head<2>();
    ME.block<2, 1>(2, b) = (-2.0 * m0.eps / (m0.eps + m1.eps)) * cross_c(ez, GEEs).head<2>();
    MH.block<2, 1>(0, b) = (2.0 * m0.mu / (m0.mu + m1.mu)) * cross_c(ez, GHHs).head<2>();
    MH.block<2, 1>(2, b) = (-2.0 * m0.eps / (m0.eps + m1.eps)) * cross_c(ez, GEHs).head<2>();
  }
  const PolarizationBlock K11 = plate_self_block(1, k, kappa, m0, m1);
  PolarizationBlock S;
  if (l_order < 0) {
    S = (PolarizationBlock::Identity() - K11).partialPivLu().solve(PolarizationBlock::Identity());
  } else {
    S = neumann_inverse(K11, l_order);
  }
  const Eigen::Matrix3cd GE = G0E * S.cast<cd>() * ME;
  const Eigen::Matrix3cd GH = G0H * S.cast<cd>() * MH;
  ModeGamma out;
  for (int i = 0; i < 3; ++i) {
    out.ee[i] = GE(i, i).real();
    out.hh[i] = GH(i, i).real();
  }
  return out;
}

GammaCoincident integrate_gamma(double z0, double kappa, const MediumResponse& m0,
                                const MediumResponse& m1, int l_order, const QuadratureConfig& quad,
                                bool fresnel, const MaterialModel* plate) {
  GammaCoincident g;
  const double keff = std::max(kappa, 1.0 / (2.0 * z0));
  for (int comp = 0; comp < 4; ++comp) {
    auto f = [&](double k) {
      double val;
      if (!fresnel) {
        const ModeGamma mg = gamma_mode(k, kappa, z0, m0, m1, l_order);
        switch (comp) {
          case 0: val = 0.5 * (mg.ee[0] + mg.ee[1]); break;
          case 1: val = mg.ee[2]; break;
          case 2: val = 0.5 * (mg.hh[0] + mg.hh[1]); break;
          default: val = mg.hh[2]; break;
        }
      } else {
        const double s0 = plane_wave_s(m0.eps, m0.mu, kappa, k);
        const auto fr = fresnel_pair(k, kappa, m0, plate_response(*plate, kappa));
        const double ex = std::exp(-2.0 * s0 * z0) / (2.0 * s0);
        const double q02 = m0.eps * m0.mu * kappa * kappa;
        // reflected dyad diag: xx from TM (-s0^2/q0^2) and TE (yy),
        // zz from TM (k^2/q0^2); prefactor -q0^2/(chi kappa)
        const double prefE = -q02 / (m0.eps * kappa);
        const double prefH = -q02 / (m0.mu * kappa);
        const double xx_tm = -s0 * s0 / q02, zz_tm = -k * k / q02;
        switch (comp) {
          case 0: val = 0.5 * prefE * (fr.r_TM * xx_tm + fr.r_TE) * ex; break;
          case 1: val = prefE * fr.r_TM * zz_tm * ex; break;
          case 2: val = 0.5 * prefH * (fr.r_TE * xx_tm + fr.r_TM) * ex; break;
          default: val = prefH * fr.r_TE * zz_tm * ex; break;
        }
      }
      return k * val / (2.0 * M_PI);
    };
    const double v = integrate_semi_infinite(f, keff, quad).value;
    switch (comp) {
      case 0: g.ee_xx = v; break;
      case 1: g.ee_zz = v; break;
      case 2: g.hh_xx = v; break;
      default: g.hh_zz = v; break;
    }
  }
  return g;
}

}  // namespace

GammaCoincident gamma_plate_coincident(double z0, double kappa, const MaterialModel& plate,
                                       const MediumResponse& medium0, const MseOrder& order,
                                       const QuadratureConfig& quad) {
  if (!(z0 > 0.0)) throw std::invalid_argument("z0 must be > 0");
  if (!(kappa > 0.0)) throw std::domain_error("gamma_plate_coincident needs kappa > 0");
  const MediumResponse m1 = plate_response(plate, kappa);
  const int l_order = order.is_exact ? -1 : order.l;
  return integrate_gamma(z0, kappa, medium0, m1, l_order, quad, false, nullptr);
}

GammaCoincident gamma_plate_fresnel(double z0, double kappa, const MaterialModel& plate,
                                    const MediumResponse& medium0, const QuadratureConfig& quad) {
  if (!(z0 > 0.0)) throw std::invalid_argument("z0 must be > 0");
  if (!(kappa > 0.0)) throw std::domain_error("gamma_plate_fresnel needs kappa > 0");
  const MediumResponse m1 = plate_response(plate, kappa);
  return integrate_gamma(z0, kappa, medium0, m1, -1, quad, true, &plate);
}

EnergyBreakdown cp_energy(const Polarizability& particle, double z0, const MaterialModel& plate,
                          const Thermal& thermal, const MseOrder& order,
                          const MediumResponse& medium0, const QuadratureConfig& quad, int n_max) {
  if (!(z0 > 0.0)) throw std::invalid_argument("z0 must be > 0");
  const double re = plate.static_reflection_e(medium0);
  const double rm = plate.static_reflection_m(medium0);
  auto term = [&](double kappa) -> double {
    if (kappa == 0.0) {
      // static image term; the 1/2 Matsubara weight turns this into the
      // classical -2 pi k_B T [alpha(0) tr Gtilde_EE + beta(0) tr Gtilde_HH]
      const auto g = static_gamma_plate(z0, re, rm);
      return -4.0 * M_PI * (particle.alpha(0.0) * (2.0 * g.ee_xx + g.ee_zz) +
                            particle.beta(0.0) * (2.0 * g.hh_xx + g.hh_zz));
    }
    const auto g = gamma_plate_coincident(z0, kappa, plate, medium0, order, quad);
    return -4.0 * M_PI * kappa * (particle.alpha(kappa) * g.tr_ee() + particle.beta(kappa) * g.tr_hh());
  };
  if (thermal.is_zero()) {
    EnergyBreakdown out;
    auto r = zero_temperature_integral(term, quad, 1.0 / (2.0 * z0));
    out.total = r.value;
    out.tail_estimate = r.error_estimate;
    out.converged = r.converged;
    return out;
  }
  return matsubara_sum(term, thermal.tau, quad, n_max);
}

}  // namespace csso
