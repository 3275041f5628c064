#include "casimir_sso/plates.hpp"

#include "casimir_sso/statics.hpp"

#include <cmath>
#include <stdexcept>

namespace csso {

FresnelPair fresnel_pair(double k, double kappa, const MediumResponse& m0, const MediumResponse& mat) {
  if (kappa == 0.0) {
    return {(mat.eps - m0.eps) / (mat.eps + m0.eps), (mat.mu - m0.mu) / (mat.mu + m0.mu)};
  }
  const double s0 = plane_wave_s(m0.eps, m0.mu, kappa, k);
  const double s1 = plane_wave_s(mat.eps, mat.mu, kappa, k);
  return {(mat.eps * s0 - m0.eps * s1) / (mat.eps * s0 + m0.eps * s1),
          (mat.mu * s0 - m0.mu * s1) / (mat.mu * s0 + m0.mu * s1)};
}

PolarizationBlock plate_self_block(int body, double k, double kappa, const MediumResponse& m0,
                                   const MediumResponse& mat) {
  if (!(kappa > 0.0))
    throw std::domain_error("plate self block is singular at kappa = 0; use the statics module");
  if (body != 1 && body != 2) throw std::invalid_argument("body must be 1 or 2");
  const double s0 = plane_wave_s(m0.eps, m0.mu, kappa, k);
  const double s1 = plane_wave_s(mat.eps, mat.mu, kappa, k);
  const double eta = (body == 1) ? 1.0 : -1.0;  // surface normal +z or -z
  Eigen::Matrix2d EH;
  EH << 0.0, kappa * (m0.eps * m0.mu / s0 - mat.eps * mat.mu / s1), (s1 - s0) / kappa, 0.0;
  EH *= eta / (m0.mu + mat.mu);
  const Eigen::Matrix2d HE = -(m0.mu + mat.mu) / (m0.eps + mat.eps) * EH;
  PolarizationBlock B = PolarizationBlock::Zero();
  B.block<2, 2>(0, 2) = EH;
  B.block<2, 2>(2, 0) = HE;
  return B;
}

std::pair<double, double> plate_self_eigs(double k, double kappa, const MediumResponse& m0,
                                          const MediumResponse& mat) {
  if (!(kappa > 0.0)) throw std::domain_error("plate self eigenvalues need kappa > 0");
  const double s0 = plane_wave_s(m0.eps, m0.mu, kappa, k);
  const double s1 = plane_wave_s(mat.eps, mat.mu, kappa, k);
  const double rad = (s1 - s0) * (mat.eps * mat.mu * s0 - m0.eps * m0.mu * s1) /
                     (s0 * s1 * (m0.eps + mat.eps) * (m0.mu + mat.mu));
  if (rad < 0.0) throw std::domain_error("negative radicand in plate eigenvalues: invalid media");
  const double lam = std::sqrt(rad);
  return {lam, -lam};
}

PolarizationBlock plate_cross_block_scaled(CrossDirection dir, double k, double kappa,
                                           const MediumResponse& m0, const MediumResponse& rec) {
  if (!(kappa > 0.0)) throw std::domain_error("cross block needs kappa > 0");
  const double s0 = plane_wave_s(m0.eps, m0.mu, kappa, k);
  const double q02 = m0.eps * m0.mu * kappa * kappa;
  Eigen::Matrix2d A;  // common off-diagonal structure in the (x, y) basis
  A << 0.0, q02, -s0 * s0, 0.0;
  A /= kappa * s0;
  const double sgn = (dir == CrossDirection::ToBody1) ? 1.0 : -1.0;
  PolarizationBlock B = PolarizationBlock::Zero();
  B.block<2, 2>(0, 0) = -m0.mu / (m0.mu + rec.mu) * Eigen::Matrix2d::Identity();
  B.block<2, 2>(2, 2) = -m0.eps / (m0.eps + rec.eps) * Eigen::Matrix2d::Identity();
  B.block<2, 2>(0, 2) = sgn / (m0.mu + rec.mu) * A;
  B.block<2, 2>(2, 0) = -sgn / (m0.eps + rec.eps) * A;
  return B;
}

PolarizationBlock plate_cross_block(CrossDirection dir, double k, double kappa, double d,
                                    const MediumResponse& m0, const MediumResponse& rec) {
  if (!(d > 0.0)) throw std::invalid_argument("distance must be > 0");
  const double s0 = plane_wave_s(m0.eps, m0.mu, kappa, k);
  return std::exp(-s0 * d) * plate_cross_block_scaled(dir, k, kappa, m0, rec);
}

namespace {

struct StaticRefl {
  double re1, rm1, re2, rm2;
};

// Raw n = 0 integrand sums (no k_B T factor); k_order < 0 means the exact log.
double n0_energy_raw(const StaticRefl& sr, double d, const QuadratureConfig& quad, int k_order) {
  double total = 0.0;
  const double prods[2] = {sr.re1 * sr.re2, sr.rm1 * sr.rm2};
  for (double Rp : prods) {
    if (Rp == 0.0) continue;
    auto f = [&](double u) {
      const double N = Rp * std::exp(-u);
      if (k_order < 0) return u * std::log1p(-N) / (2.0 * M_PI);
      double v = 0.0, Nj = 1.0;
      for (int j = 1; j <= k_order + 1; ++j) {
        Nj *= N;
        v -= Nj / j;
      }
      return u * v / (2.0 * M_PI);
    };
    total += integrate(f, 0.0, 60.0, quad).value / (4.0 * d * d);
  }
  return total;
}

// Raw n = 0 part of -dE/dd (again without k_B T).
double n0_force_raw(const StaticRefl& sr, double d, const QuadratureConfig& quad, int k_order) {
  double total = 0.0;
  const double prods[2] = {sr.re1 * sr.re2, sr.rm1 * sr.rm2};
  for (double Rp : prods) {
    if (Rp == 0.0) continue;
    auto f = [&](double u) {
      const double N = Rp * std::exp(-u);
      double v;
      if (k_order < 0) {
        v = u * N / (1.0 - N);
      } else {
        v = 0.0;
        double Nj = 1.0;
        for (int j = 1; j <= k_order + 1; ++j) {
          Nj *= N;
          v += u * Nj;
        }
      }
      return u * v / (2.0 * M_PI);
    };
    total += integrate(f, 0.0, 60.0, quad).value / (4.0 * d * d * d);
  }
  return -total;
}

PolarizationBlock round_trip_scaled(double k, double kappa, const MediumResponse& m0,
                                    const MediumResponse& b1, const MediumResponse& b2, int l_order,
                                    Truncation trunc) {
  const PolarizationBlock K11 = plate_self_block(1, k, kappa, m0, b1);
  const PolarizationBlock K22 = plate_self_block(2, k, kappa, m0, b2);
  const PolarizationBlock K12 = plate_cross_block_scaled(CrossDirection::ToBody1, k, kappa, m0, b1);
  const PolarizationBlock K21 = plate_cross_block_scaled(CrossDirection::ToBody2, k, kappa, m0, b2);
  PolarizationBlock inv1, inv2;
  if (l_order < 0) {
    inv1 = (PolarizationBlock::Identity() - K11).partialPivLu().solve(PolarizationBlock::Identity());
  } else {
    inv1 = neumann_inverse(K11, l_order);
  }
  if (l_order < 0 || trunc == Truncation::Body1Only) {
    inv2 = (PolarizationBlock::Identity() - K22).partialPivLu().solve(PolarizationBlock::Identity());
  } else {
    inv2 = neumann_inverse(K22, l_order);
  }
  return inv1 * K12 * inv2 * K21;
}

double truncated_logdet(const PolarizationBlock& Nt, double x, int k_order) {
  double total = 0.0;
  PolarizationBlock power = PolarizationBlock::Identity();
  double xj = 1.0;
  for (int j = 1; j <= k_order + 1; ++j) {
    power = power * Nt;
    xj *= x;
    total -= xj * power.trace() / j;
  }
  return total;
}

double truncated_force_factor(const PolarizationBlock& Nt, double x, int k_order) {
  double total = 0.0;
  PolarizationBlock power = PolarizationBlock::Identity();
  double xj = 1.0;
  for (int j = 1; j <= k_order + 1; ++j) {
    power = power * Nt;
    xj *= x;
    total += xj * power.trace();
  }
  return total;
}

struct ModeParams {
  const MediumResponse& m0;
  const MediumResponse& b1;
  const MediumResponse& b2;
  double d;
  bool exact;
  int k_order;
  int l_order;
  Truncation trunc;
};

double mode_energy_integrand(double k, double kappa, const ModeParams& p) {
  const double s0 = plane_wave_s(p.m0.eps, p.m0.mu, kappa, k);
  const double x = std::exp(-2.0 * s0 * p.d);
  if (x == 0.0) return 0.0;
  const PolarizationBlock Nt =
      round_trip_scaled(k, kappa, p.m0, p.b1, p.b2, p.exact ? -1 : p.l_order, p.trunc);
  return p.exact ? logdet_one_minus_scaled(Nt, x) : truncated_logdet(Nt, x, p.k_order);
}

double mode_force_integrand(double k, double kappa, const ModeParams& p) {
  const double s0 = plane_wave_s(p.m0.eps, p.m0.mu, kappa, k);
  const double x = std::exp(-2.0 * s0 * p.d);
  if (x == 0.0) return 0.0;
  const PolarizationBlock Nt =
      round_trip_scaled(k, kappa, p.m0, p.b1, p.b2, p.exact ? -1 : p.l_order, p.trunc);
  if (p.exact) {
    Eigen::PartialPivLU<PolarizationBlock> lu(PolarizationBlock::Identity() - x * Nt);
    return -2.0 * s0 * x * lu.solve(Nt).trace();
  }
  return -2.0 * s0 * truncated_force_factor(Nt, x, p.k_order);
}

template <typename ModeFn>
double k_integral(double kappa, double d, const QuadratureConfig& quad, ModeFn&& mode) {
  const double keff = std::max(kappa, 1.0 / d);
  auto integrand = [&](double k) { return k * mode(k) / (2.0 * M_PI); };
  return integrate_semi_infinite(integrand, keff, quad).value;
}

StaticRefl static_refl(const PlateConfig& cfg) {
  return {cfg.body1.static_reflection_e(cfg.medium0), cfg.body1.static_reflection_m(cfg.medium0),
          cfg.body2.static_reflection_e(cfg.medium0), cfg.body2.static_reflection_m(cfg.medium0)};
}

MediumResponse body_response(const MaterialModel& m, double kappa) {
  // The PC limit of the dielectric blocks is the superconducting one,
  // eps -> inf, mu -> 0 at fixed eps*mu = 1.
  if (m.is_perfect_conductor()) return MediumResponse(1e16, 1e-16);
  return m.evaluate(kappa);
}

EnergyBreakdown plate_sum(const PlateConfig& cfg, bool exact, int k_order, int l_order,
                          Truncation trunc, bool force) {
  if (!(cfg.distance > 0.0)) throw std::invalid_argument("distance must be > 0");
  const auto sr = static_refl(cfg);
  const double d = cfg.distance;
  const int n0_order = exact ? -1 : k_order;
  auto term = [&](double kappa) -> double {
    if (kappa == 0.0) {
      return force ? n0_force_raw(sr, d, cfg.quad, n0_order) : n0_energy_raw(sr, d, cfg.quad, n0_order);
    }
    const MediumResponse b1 = body_response(cfg.body1, kappa);
    const MediumResponse b2 = body_response(cfg.body2, kappa);
    ModeParams p{cfg.medium0, b1, b2, d, exact, k_order, l_order, trunc};
    if (force)
      return k_integral(kappa, d, cfg.quad, [&](double k) { return mode_force_integrand(k, kappa, p); });
    return k_integral(kappa, d, cfg.quad, [&](double k) { return mode_energy_integrand(k, kappa, p); });
  };
  if (cfg.thermal.is_zero()) {
    EnergyBreakdown out;
    auto r = zero_temperature_integral(term, cfg.quad, 1.0 / d);
    out.total = r.value;
    out.tail_estimate = r.error_estimate;
    out.converged = r.converged;
    return out;
  }
  return matsubara_sum(term, cfg.thermal.tau, cfg.quad, cfg.n_max);
}

}  // namespace

double plate_mode_logdet(double k, double kappa, double d, const MediumResponse& m0,
                         const MediumResponse& b1, const MediumResponse& b2) {
  ModeParams p{m0, b1, b2, d, true, 0, 0, Truncation::Body1Only};
  return mode_energy_integrand(k, kappa, p);
}

double plate_mode_logdet_mse(double k, double kappa, double d, const MediumResponse& m0,
                             const MediumResponse& b1, const MediumResponse& b2, int k_order,
                             int l_order, Truncation trunc) {
  ModeParams p{m0, b1, b2, d, false, k_order, l_order, trunc};
  return mode_energy_integrand(k, kappa, p);
}

EnergyBreakdown lifshitz_energy_per_area(const PlateConfig& cfg) {
  return plate_sum(cfg, true, 0, 0, Truncation::Body1Only, false);
}

EnergyBreakdown mse_energy_per_area(const PlateConfig& cfg, const MseOrder& order, Truncation trunc) {
  if (order.is_exact) return lifshitz_energy_per_area(cfg);
  return plate_sum(cfg, false, order.k, order.l, trunc, false);
}

EnergyBreakdown casimir_force_per_area(const PlateConfig& cfg, const MseOrder& order, Truncation trunc) {
  if (order.is_exact) return plate_sum(cfg, true, 0, 0, trunc, true);
  return plate_sum(cfg, false, order.k, order.l, trunc, true);
}

Eigen::Matrix2d pc_plate_self_block() { return Eigen::Matrix2d::Zero(); }
Eigen::Matrix2d pc_plate_cross_block_scaled() { return -Eigen::Matrix2d::Identity(); }

EnergyBreakdown pc_plate_energy_per_area(double d, const Thermal& thermal, const QuadratureConfig& quad) {
  if (!(d > 0.0)) throw std::invalid_argument("distance must be > 0");
  // The round trip is exp(-2 s0 d) times the identity: both polarizations
  // contribute ln(1 - e^{-2 s0 d}) per mode.
  auto term = [&](double kappa) {
    auto integrand = [&](double k) {
      const double s0 = std::sqrt(kappa * kappa + k * k);
      return 2.0 * k * std::log1p(-std::exp(-2.0 * s0 * d)) / (2.0 * M_PI);
    };
    return integrate_semi_infinite(integrand, std::max(kappa, 1.0 / d), quad).value;
  };
  if (thermal.is_zero()) {
    EnergyBreakdown out;
    auto r = zero_temperature_integral(term, quad, 1.0 / d);
    out.total = r.value;
    out.tail_estimate = r.error_estimate;
    out.converged = r.converged;
    return out;
  }
  return matsubara_sum(term, thermal.tau, quad);
}

EnergyBreakdown pc_plate_force_per_area(double d, const Thermal& thermal, const QuadratureConfig& quad) {
  if (!(d > 0.0)) throw std::invalid_argument("distance must be > 0");
  auto term = [&](double kappa) {
    auto integrand = [&](double k) {
      const double s0 = std::sqrt(kappa * kappa + k * k);
      const double x = std::exp(-2.0 * s0 * d);
      return -2.0 * k * 2.0 * s0 * x / (1.0 - x) / (2.0 * M_PI);
    };
    return integrate_semi_infinite(integrand, std::max(kappa, 1.0 / d), quad).value;
  };
  if (thermal.is_zero()) {
    EnergyBreakdown out;
    auto r = zero_temperature_integral(term, quad, 1.0 / d);
    out.total = r.value;
    out.tail_estimate = r.error_estimate;
    out.converged = r.converged;
    return out;
  }
  return matsubara_sum(term, thermal.tau, quad);
}

}  // namespace csso
