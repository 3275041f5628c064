#include "casimir_sso/cylinder.hpp"

#include "casimir_sso/bessel.hpp"
#include "casimir_sso/greens.hpp"
#include "casimir_sso/mse.hpp"
#include "casimir_sso/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace csso {

namespace {

using cd = std::complex<double>;
using Vec3c = Eigen::Vector3cd;
constexpr cd I1(0.0, 1.0);

MediumResponse cyl_response(const CylinderConfig& cfg, double kappaR) {
  if (cfg.material.is_perfect_conductor()) return MediumResponse(1e16, 1e-16);
  return cfg.material.evaluate(kappaR / cfg.radius);
}

// Cylindrical vector waves at rho = R = 1 from scaled radial functions.
// Components are (rho, phi, z); d* are d/drho.  The e^{-x}/e^{+x} scale of
// K/I is absorbed into the expansion coefficients.
struct WaveVals {
  Vec3c M, N, L, dM, dN, dL;
};

WaveVals wave_vals(int m, double kz, double q, bool outgoing) {
  const double p = std::sqrt(q * q + kz * kz);
  const double x = p;  // R = 1
  double Z, Zp;
  if (outgoing) {
    Z = bessel::cyl_k_scaled(m, x);
    Zp = bessel::cyl_k_scaled_prime(m, x);
  } else {
    Z = bessel::cyl_i_scaled(m, x);
    Zp = bessel::cyl_i_scaled_prime(m, x);
  }
  const double Zpp = (1.0 + m * m / (x * x)) * Z - Zp / x;  // modified Bessel ODE
  const double ps = Z, dps = p * Zp, ddps = p * p * Zpp;
  WaveVals w;
  const cd im = I1 * static_cast<double>(m);
  w.M << im * ps, -dps, 0.0;
  w.dM << im * (dps - ps), -ddps, 0.0;
  w.N << I1 * kz * dps / q, -(m * kz) * ps / q, -(p * p) * ps / q;
  w.dN << I1 * kz * ddps / q, -(m * kz) * (dps - ps) / q, -(p * p) * dps / q;
  w.L << dps / q, im * ps / q, I1 * kz * ps / q;
  w.dL << ddps / q, im * (dps - ps) / q, I1 * kz * dps / q;
  return w;
}

// Coefficients of the single layer of density (z or phi) e^{i(m phi + kz z)}
// in (M, N, L) waves: outgoing outside (scaled by e^{-x}), regular inside
// (scaled by e^{+x}).
struct LayerCoeffs {
  Eigen::Vector3cd c;  // outside
  Eigen::Vector3cd d;  // inside
};

LayerCoeffs single_layer(int m, double kz, double q, int pol /*0=z, 1=phi*/) {
  const WaveVals K = wave_vals(m, kz, q, true);
  const WaveVals I = wave_vals(m, kz, q, false);
  Eigen::Matrix<cd, 6, 6> A = Eigen::Matrix<cd, 6, 6>::Zero();
  Eigen::Matrix<cd, 6, 1> b = Eigen::Matrix<cd, 6, 1>::Zero();
  const Vec3c WK[3] = {K.M, K.N, K.L}, WI[3] = {I.M, I.N, I.L};
  const Vec3c dWK[3] = {K.dM, K.dN, K.dL}, dWI[3] = {I.dM, I.dN, I.dL};
  for (int comp = 0; comp < 3; ++comp) {
    for (int w = 0; w < 3; ++w) {
      A(comp, w) = WK[w](comp);
      A(comp, 3 + w) = -WI[w](comp);
      A(3 + comp, w) = dWK[w](comp);
      A(3 + comp, 3 + w) = -dWI[w](comp);
    }
  }
  b(3 + (pol == 0 ? 2 : 1)) = -1.0;
  // column equilibration: wave amplitudes span many orders of magnitude at
  // high m, which would otherwise wreck the solve
  Eigen::Matrix<double, 6, 1> colscale;
  for (int w = 0; w < 6; ++w) {
    const double s = A.col(w).cwiseAbs().maxCoeff();
    colscale(w) = (s > 0.0) ? 1.0 / s : 1.0;
    A.col(w) *= colscale(w);
  }
  Eigen::Matrix<cd, 6, 1> sol = A.fullPivLu().solve(b);
  sol.array() *= colscale.array();
  LayerCoeffs lc;
  lc.c = sol.head<3>();
  lc.d = sol.tail<3>();
  return lc;
}

// On-surface (averaged) kernels applied to one density: the transverse curl
// layer and the transverse M/N part of the single layer.
struct SurfaceKernels {
  Vec3c curl_avg;   // average of grad x S from both sides
  Vec3c layerT_avg; // average transverse (M, N) part of S
};

SurfaceKernels surface_kernels(int m, double kz, double q, int pol) {
  const auto lc = single_layer(m, kz, q, pol);
  const WaveVals K = wave_vals(m, kz, q, true);
  const WaveVals I = wave_vals(m, kz, q, false);
  SurfaceKernels s;
  const Vec3c curl_out = q * (lc.c(0) * K.N - lc.c(1) * K.M);
  const Vec3c curl_in = q * (lc.d(0) * I.N - lc.d(1) * I.M);
  s.curl_avg = 0.5 * (curl_out + curl_in);
  const Vec3c lt_out = lc.c(0) * K.M + lc.c(1) * K.N;
  const Vec3c lt_in = lc.d(0) * I.M + lc.d(1) * I.N;
  s.layerT_avg = 0.5 * (lt_out + lt_in);
  return s;
}

// rho x v in tangential (z, phi) components
Eigen::Vector2cd ncross(const Vec3c& v) { return Eigen::Vector2cd(v(1), -v(2)); }

Eigen::Matrix4cd block_wave_matching(int m, double kzR, double kappaR, const MediumResponse& m0,
                                     const MediumResponse& m1) {
  const double q0 = kappaR * std::sqrt(m0.eps * m0.mu);
  const double q1 = kappaR * std::sqrt(m1.eps * m1.mu);
  Eigen::Matrix4cd B = Eigen::Matrix4cd::Zero();
  for (int pol = 0; pol < 2; ++pol) {
    const auto s0 = surface_kernels(m, kzR, q0, pol);
    const auto s1 = surface_kernels(m, kzR, q1, pol);
    const Vec3c E0 = -(q0 * q0 / (m0.eps * kappaR)) * s0.layerT_avg;
    const Vec3c E1 = -(q1 * q1 / (m1.eps * kappaR)) * s1.layerT_avg;
    const Vec3c H0 = -(q0 * q0 / (m0.mu * kappaR)) * s0.layerT_avg;
    const Vec3c H1 = -(q1 * q1 / (m1.mu * kappaR)) * s1.layerT_avg;
    B.block<2, 1>(0, pol) = 2.0 / (m0.mu + m1.mu) * ncross(m0.mu * s0.curl_avg - m1.mu * s1.curl_avg);
    B.block<2, 1>(2, pol) = 2.0 / (m0.eps + m1.eps) * ncross(-m0.eps * E0 + m1.eps * E1);
    B.block<2, 1>(0, 2 + pol) = 2.0 / (m0.mu + m1.mu) * ncross(m0.mu * H0 - m1.mu * H1);
    B.block<2, 1>(2, 2 + pol) = 2.0 / (m0.eps + m1.eps) * ncross(m0.eps * s0.curl_avg - m1.eps * s1.curl_avg);
  }
  return B;
}

// --- quadrature route: surface coordinates (w1, w2) = (R dphi, dz) around
// --- u0 = (R, 0, 0); polar patch over the weak singularity, adaptive strips
// --- outside.

struct SectorMats {
  Eigen::Matrix3d EE, EH, HE, HH;
};

SectorMats kernel_sectors_cyl(const Eigen::Vector3d& u0, const Eigen::Vector3d& up, double kappa,
                              const MediumResponse& m0, const MediumResponse& m1) {
  const Eigen::Vector3d dvec = u0 - up;
  const double r = dvec.norm();
  const Eigen::Vector3d n = dvec / r;
  const double q0 = kappa * std::sqrt(m0.eps * m0.mu);
  const double q1 = kappa * std::sqrt(m1.eps * m1.mu);
  const auto d0 = scalar_green_derivs(q0, r);
  const auto d1 = scalar_green_derivs(q1, r);
  const auto dd = green_difference(q0, q1, r);
  SectorMats out;
  out.EE = cross_matrix(2.0 / (m0.mu + m1.mu) * (m0.mu * d0.gp - m1.mu * d1.gp) * n);
  out.HH = cross_matrix(2.0 / (m0.eps + m1.eps) * (m0.eps * d0.gp - m1.eps * d1.gp) * n);
  const double hn = dd.d2 + 3.0 * dd.d1 / r + 3.0 * dd.d0 / (r * r);
  const double hi = -dd.d1 / r - dd.d0 / (r * r);
  const Eigen::Matrix3d dH = hn * (n * n.transpose()) + hi * Eigen::Matrix3d::Identity();
  out.EH = 2.0 / ((m0.mu + m1.mu) * kappa) * (-dH + dd.d2 * Eigen::Matrix3d::Identity());
  out.HE = 2.0 / ((m0.eps + m1.eps) * kappa) * (dH - dd.d2 * Eigen::Matrix3d::Identity());
  return out;
}

Eigen::Matrix4cd integrand_point(double dphi, double dz, int m, double kz, double kappa,
                                 const MediumResponse& m0, const MediumResponse& m1) {
  const Eigen::Vector3d u0(1.0, 0.0, 0.0);
  const Eigen::Vector3d up(std::cos(dphi), std::sin(dphi), dz);
  const auto sec = kernel_sectors_cyl(u0, up, kappa, m0, m1);
  const Eigen::Vector3d zhat(0, 0, 1), phat(-std::sin(dphi), std::cos(dphi), 0);
  const Eigen::Vector3d xhat(1, 0, 0);
  const cd phase = std::exp(I1 * (m * dphi + kz * dz));
  Eigen::Matrix4cd h;
  const Eigen::Vector3d bp[2] = {zhat, phat};
  for (int b = 0; b < 2; ++b) {
    const Eigen::Vector3d vEE = xhat.cross(sec.EE * bp[b]);
    const Eigen::Vector3d vHE = xhat.cross(sec.HE * bp[b]);
    const Eigen::Vector3d vEH = xhat.cross(sec.EH * bp[b]);
    const Eigen::Vector3d vHH = xhat.cross(sec.HH * bp[b]);
    // output tangential components (z, phi) at u0
    h(0, b) = vEE.z() * phase;
    h(1, b) = vEE.y() * phase;
    h(2, b) = vHE.z() * phase;
    h(3, b) = vHE.y() * phase;
    h(0, 2 + b) = vEH.z() * phase;
    h(1, 2 + b) = vEH.y() * phase;
    h(2, 2 + b) = vHH.z() * phase;
    h(3, 2 + b) = vHH.y() * phase;
  }
  return h;
}

Eigen::Matrix4cd block_quadrature(int m, double kzR, double kappaR, const MediumResponse& m0,
                                  const MediumResponse& m1) {
  const double r0 = 0.5;  // polar patch radius in (R dphi, dz) coordinates
  Eigen::Matrix4cd acc = Eigen::Matrix4cd::Zero();
  // polar patch: w = rho_w (cos psi, sin psi)
  {
    const int nr = 140, npsi = 160;
    std::vector<double> xs(nr), ws(nr);
    gauss_legendre(nr, xs.data(), ws.data());
    for (int i = 0; i < nr; ++i) {
      const double rho = 0.5 * (xs[i] + 1.0) * r0;
      const double wr = 0.5 * ws[i] * r0 * rho;  // polar jacobian
      for (int j = 0; j < npsi; ++j) {
        const double psi = 2.0 * M_PI * j / npsi;
        const double w1 = rho * std::cos(psi), w2 = rho * std::sin(psi);
        acc += (wr * 2.0 * M_PI / npsi) *
               integrand_point(w1, w2, m, kzR, kappaR, m0, m1);
      }
    }
  }
  // outer region: adaptive in dz per dphi node, adaptive in dphi
  const double qmin = kappaR * std::min(1.0, std::sqrt(m1.eps * m1.mu) * 0 + 1.0);
  const double zmax = 60.0 / std::max(1e-3, kappaR * std::sqrt(m0.eps * m0.mu)) + 4.0;
  QuadratureConfig qc;
  qc.rel_tol = 1e-11;
  (void)qmin;
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      auto outer_phi = [&](double w1) {
        const double aw = std::abs(w1);
        const double zc = (aw >= r0) ? 0.0 : std::sqrt(r0 * r0 - aw * aw);
        auto fz_re = [&](double w2) {
          return integrand_point(w1, w2, m, kzR, kappaR, m0, m1)(row, col).real();
        };
        double v = 0.0;
        if (zc == 0.0) {
          v += integrate(fz_re, -zmax, zmax, qc).value;
        } else {
          v += integrate(fz_re, zc, zmax, qc).value;
          v += integrate(fz_re, -zmax, -zc, qc).value;
        }
        return v;
      };
      acc(row, col) += cd(integrate(outer_phi, -M_PI, M_PI, qc).value, 0.0);
    }
  }
  return acc;
}

}  // namespace

TBlock t_exact(int m, double kappaR, double kzR, const CylinderConfig& cfg) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (!(kappaR > 0.0)) throw std::invalid_argument("kappaR must be > 0");
  const MediumResponse mat = cyl_response(cfg, kappaR);
  const double eps = mat.eps, mu = mat.mu;
  const double e0 = cfg.medium0.eps, mu0 = cfg.medium0.mu;
  if (std::abs(e0 - 1.0) > 1e-14 || std::abs(mu0 - 1.0) > 1e-14)
    throw std::invalid_argument("the exact cylinder T-matrix assumes a vacuum surrounding");
  const double p0 = std::sqrt(kappaR * kappaR + kzR * kzR);
  const double p1 = std::sqrt(eps * mu * kappaR * kappaR + kzR * kzR);
  const double x0 = p0, x1 = p1;
  const double I0 = bessel::cyl_i_scaled(m, x0), K0v = bessel::cyl_k_scaled(m, x0);
  const double I0p = bessel::cyl_i_scaled_prime(m, x0), K0p = bessel::cyl_k_scaled_prime(m, x0);
  const double I1v = bessel::cyl_i_scaled(m, x1), I1p = bessel::cyl_i_scaled_prime(m, x1);
  const double IP1 = I1p / (x1 * I1v);
  const double IP0 = I0p / (x0 * I0);
  const double KP0 = K0p / (x0 * K0v);
  const double rt = std::sqrt(eps * mu);
  const double Kc = (m * kzR / (rt * kappaR)) * (1.0 / (x1 * x1) - 1.0 / (x0 * x0));
  const double D1 = IP1 - KP0 / eps;
  const double D2 = IP1 - KP0 / mu;
  const double D3 = IP1 - IP0 / eps;
  const double D4 = IP1 - IP0 / mu;
  const double den = D1 * D2 + Kc * Kc;
  TBlock T;
  T.m = m;
  T.log_scale = 2.0 * x0;
  T.entries_scaled(0, 0) = -(I0 / K0v) * (D1 * D4 + Kc * Kc) / den;
  T.entries_scaled(1, 1) = -(I0 / K0v) * (D2 * D3 + Kc * Kc) / den;
  const double the = Kc / (rt * x0 * x0 * K0v * K0v) / den;
  T.entries_scaled(0, 1) = the;
  T.entries_scaled(1, 0) = -the;
  return T;
}

PolarizationBlock cyl_sso_block(int m, double kappaR, double kzR, const CylinderConfig& cfg,
                                CylinderMethod method) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (!(kappaR > 0.0)) throw std::invalid_argument("kappaR must be > 0");
  const MediumResponse m1 = cyl_response(cfg, kappaR);
  const Eigen::Matrix4cd B = (method == CylinderMethod::WaveMatching)
                                 ? block_wave_matching(m, kzR, kappaR, cfg.medium0, m1)
                                 : block_quadrature(m, kzR, kappaR, cfg.medium0, m1);
  const double imax = B.imag().cwiseAbs().maxCoeff();
  const double rmax = std::max(B.real().cwiseAbs().maxCoeff(), 1e-30);
  if (imax > 1e-8 * rmax + 1e-12)
    throw std::runtime_error("cylinder block has an unexpected imaginary part");
  return B.real();
}

std::array<std::complex<double>, 4> cyl_eigs(int m, double kappaR, double kzR,
                                             const CylinderConfig& cfg) {
  return block_eigenvalues(cyl_sso_block(m, kappaR, kzR, cfg));
}

TBlock mse_t(int m, double kappaR, double kzR, const CylinderConfig& cfg, int p) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (!(kappaR > 0.0)) throw std::invalid_argument("kappaR must be > 0");
  const MediumResponse m1 = cyl_response(cfg, kappaR);
  const MediumResponse& m0 = cfg.medium0;
  const double q0 = kappaR * std::sqrt(m0.eps * m0.mu);
  const double p0 = std::sqrt(q0 * q0 + kzR * kzR);

  // A: outgoing-wave content of the exterior field per surface-current basis
  Eigen::Matrix<cd, 2, 4> A = Eigen::Matrix<cd, 2, 4>::Zero();
  for (int pol = 0; pol < 2; ++pol) {
    const auto lc = single_layer(m, kzR, q0, pol);
    A(0, pol) += -(q0 * q0 / (m0.eps * kappaR)) * lc.c(0);
    A(1, pol) += -(q0 * q0 / (m0.eps * kappaR)) * lc.c(1);
    A(0, 2 + pol) += q0 * lc.c(1);
    A(1, 2 + pol) += -q0 * lc.c(0);
  }
  // B: right-hand-side surface fields for incident regular waves (M = H-pol,
  // N = E-pol)
  const WaveVals W = wave_vals(m, kzR, q0, false);
  Eigen::Matrix<cd, 4, 2> Bm = Eigen::Matrix<cd, 4, 2>::Zero();
  {
    const Vec3c Ew[2] = {W.M, W.N};
    const Vec3c Hw[2] = {-(q0 / (kappaR * m0.mu)) * W.N, (q0 / (kappaR * m0.mu)) * W.M};
    for (int c = 0; c < 2; ++c) {
      Bm.block<2, 1>(0, c) = (2.0 * m0.mu / (m0.mu + m1.mu)) * ncross(Hw[c]);
      Bm.block<2, 1>(2, c) = (-2.0 * m0.eps / (m0.eps + m1.eps)) * ncross(Ew[c]);
    }
  }
  const Eigen::Matrix4cd K = block_wave_matching(m, kzR, kappaR, m0, m1);
  Eigen::Matrix4cd S;
  if (p < 0) {
    S = (Eigen::Matrix4cd::Identity() - K).fullPivLu().solve(Eigen::Matrix4cd::Identity());
  } else {
    S = Eigen::Matrix4cd::Identity();
    Eigen::Matrix4cd P = Eigen::Matrix4cd::Identity();
    for (int q = 0; q < p; ++q) {
      P = P * K;
      S += P;
    }
  }
  Eigen::Matrix2cd Traw = A * S * Bm;
  Eigen::Matrix2d D;
  D << 1.0, 0.0, 0.0, -1.0;  // wave-convention conjugation, frozen against t_exact
  const Eigen::Matrix2cd Tc = D * Traw * D;
  TBlock T;
  T.m = m;
  T.log_scale = 2.0 * p0;
  T.entries_scaled = Tc.real();
  const double imax = Tc.imag().cwiseAbs().maxCoeff();
  if (imax > 1e-8 * std::max(1e-30, Tc.real().cwiseAbs().maxCoeff()) + 1e-12)
    throw std::runtime_error("mse_t produced an unexpected imaginary part");
  return T;
}

}  // namespace csso
