#include "casimir_sso/sphere.hpp"

#include "casimir_sso/bessel.hpp"
#include "casimir_sso/greens.hpp"
#include "casimir_sso/mse.hpp"
#include "casimir_sso/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace csso {

namespace {

using bessel::sph_i_scaled;
using bessel::sph_i_scaled_prime;
using bessel::sph_k_scaled;
using bessel::sph_k_scaled_prime;

// a(x) = -(1/2) d/dx [x^2 i_l(x) k_l(x)]; all products of scaled pairs.
double a_radial(int l, double x) {
  const double ik = sph_i_scaled(l, x) * sph_k_scaled(l, x);
  const double dik =
      sph_i_scaled_prime(l, x) * sph_k_scaled(l, x) + sph_i_scaled(l, x) * sph_k_scaled_prime(l, x);
  return -0.5 * (2.0 * x * ik + x * x * dik);
}

double P_radial(int l, double x) { return x * x * x * sph_i_scaled(l, x) * sph_k_scaled(l, x); }

double Q_radial(int l, double x) {
  const double Di = sph_i_scaled_prime(l, x) + sph_i_scaled(l, x) / x;
  const double Dk = sph_k_scaled_prime(l, x) + sph_k_scaled(l, x) / x;
  return x * x * x * Di * Dk;
}

MediumResponse sphere_response(const SphereConfig& cfg, double kappaR) {
  if (cfg.material.is_perfect_conductor()) return MediumResponse(1e16, 1e-16);
  return cfg.material.evaluate(kappaR / cfg.radius);
}

PolarizationBlock block_addition(int l, double y, const MediumResponse& m0, const MediumResponse& m1) {
  const double x0 = y * std::sqrt(m0.eps * m0.mu);
  const double x1 = y * std::sqrt(m1.eps * m1.mu);
  const double aE = 2.0 / (m0.mu + m1.mu) * (m0.mu * a_radial(l, x0) - m1.mu * a_radial(l, x1));
  const double aH = 2.0 / (m0.eps + m1.eps) * (m0.eps * a_radial(l, x0) - m1.eps * a_radial(l, x1));
  const double Pb = P_radial(l, x0) - P_radial(l, x1);
  const double Qb = Q_radial(l, x0) - Q_radial(l, x1);
  const double bm = 2.0 / ((m0.mu + m1.mu) * y);
  const double be = 2.0 / ((m0.eps + m1.eps) * y);
  PolarizationBlock B;
  B << aE, 0, 0, bm * Qb,
       0, -aE, bm * Pb, 0,
       0, -be * Qb, aH, 0,
       -be * Pb, 0, 0, -aH;
  return B;
}

// --- quadrature route: 1D integral over the relative polar angle with the
// --- t = sin(gamma/2) substitution; vector harmonics summed explicitly.

struct Vsh {
  Eigen::Vector3d phi;  // r x grad Y / nu
  Eigen::Vector3d psi;  // grad_s Y / nu
};

// Associated Legendre values P_l^m(ct) (no Condon-Shortley in the stored
// sign; we fold signs into the recurrences consistently).
void legendre_column(int lmax, int m, double ct, double st, std::vector<double>& P) {
  P.assign(lmax + 1, 0.0);
  if (m > lmax) return;
  double pmm = 1.0;
  for (int i = 1; i <= m; ++i) pmm *= -(2.0 * i - 1.0) * st;
  P[m] = pmm;
  if (m + 1 <= lmax) P[m + 1] = ct * (2.0 * m + 1.0) * pmm;
  for (int l = m + 2; l <= lmax; ++l)
    P[l] = ((2.0 * l - 1.0) * ct * P[l - 1] - (l + m - 1.0) * P[l - 2]) / (l - m);
}

// P_l^m / sin(theta) for m >= 1, stable at the poles.
void legendre_over_sin(int lmax, int m, double ct, double st, std::vector<double>& Ps) {
  Ps.assign(lmax + 1, 0.0);
  if (m < 1 || m > lmax) return;
  double pmm = 1.0;  // P_m^m / st = (-1)^m (2m-1)!! st^{m-1}
  for (int i = 1; i <= m; ++i) pmm *= -(2.0 * i - 1.0);
  for (int i = 0; i < m - 1; ++i) pmm *= st;
  Ps[m] = pmm;
  if (m + 1 <= lmax) Ps[m + 1] = ct * (2.0 * m + 1.0) * pmm;
  for (int l = m + 2; l <= lmax; ++l)
    Ps[l] = ((2.0 * l - 1.0) * ct * Ps[l - 1] - (l + m - 1.0) * Ps[l - 2]) / (l - m);
}

double norm_lm(int l, int m) {
  double logfact = 0.0;
  for (int i = l - m + 1; i <= l + m; ++i) logfact += std::log(static_cast<double>(i));
  return std::sqrt((2.0 * l + 1.0) / (4.0 * M_PI) * std::exp(-logfact));
}

// Real vector spherical harmonics of degree l at (theta, phi); 2l+1 pairs
// (m = 0, then cos/sin branches for m = 1..l).
void vsh_all(int l, double theta, double phi, std::vector<Vsh>& out) {
  out.clear();
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  const Eigen::Vector3d th_hat(ct * cp, ct * sp, -st);
  const Eigen::Vector3d ph_hat(-sp, cp, 0.0);
  const Eigen::Vector3d r_hat(st * cp, st * sp, ct);
  const double nu = std::sqrt(static_cast<double>(l) * (l + 1));
  std::vector<double> P1, Ps;
  for (int m = 0; m <= l; ++m) {
    if (m == 0) {
      // dP_l/dtheta = P_l^1 (Condon-Shortley), stable at the poles
      legendre_column(l, 1, ct, st, P1);
      const double tau = (l >= 1) ? P1[l] : 0.0;
      const double N = norm_lm(l, 0);
      Vsh v;
      v.psi = N * tau / nu * th_hat;
      v.phi = r_hat.cross(v.psi);
      out.push_back(v);
      continue;
    }
    legendre_over_sin(l, m, ct, st, Ps);
    const double pi_f = m * Ps[l];  // m P_l^m / sin(theta)
    const double tau = l * ct * Ps[l] - (l + m) * ((l - 1 >= m) ? Ps[l - 1] : 0.0);
    const double N = std::sqrt(2.0) * norm_lm(l, m);
    const double cm = std::cos(m * phi), sm = std::sin(m * phi);
    Vsh vc, vs;
    vc.psi = N / nu * (tau * cm * th_hat - pi_f * sm * ph_hat);
    vc.phi = r_hat.cross(vc.psi);
    vs.psi = N / nu * (tau * sm * th_hat + pi_f * cm * ph_hat);
    vs.phi = r_hat.cross(vs.psi);
    out.push_back(vc);
    out.push_back(vs);
  }
}

// Kernel dyadics between two sphere points, built from the stable media
// differences; returns the four sector matrices M such that the block action
// is n(u) x (M v(u')).
struct KernelSectors {
  Eigen::Matrix3d EE, EH, HE, HH;
};

KernelSectors kernel_sectors(const Eigen::Vector3d& u, const Eigen::Vector3d& up, double kappa,
                             const MediumResponse& m0, const MediumResponse& m1) {
  const Eigen::Vector3d dvec = u - up;
  const double r = dvec.norm();
  const Eigen::Vector3d n = dvec / r;
  const double q0 = kappa * std::sqrt(m0.eps * m0.mu);
  const double q1 = kappa * std::sqrt(m1.eps * m1.mu);
  const auto d0 = scalar_green_derivs(q0, r);
  const auto d1 = scalar_green_derivs(q1, r);
  const auto dd = green_difference(q0, q1, r);
  KernelSectors out;
  // EE: (2/(mu0+mu1)) (mu0 grad g0 - mu1 grad g1) x .
  {
    const double w = 2.0 / (m0.mu + m1.mu) * (m0.mu * d0.gp - m1.mu * d1.gp);
    out.EE = cross_matrix(w * n);
  }
  // HH: (2/(eps0+eps1)) (eps0 grad g0 - eps1 grad g1) x .
  {
    const double w = 2.0 / (m0.eps + m1.eps) * (m0.eps * d0.gp - m1.eps * d1.gp);
    out.HH = cross_matrix(w * n);
  }
  // Hessian difference H1 - H0 in stable difference form
  const double hn = dd.d2 + 3.0 * dd.d1 / r + 3.0 * dd.d0 / (r * r);       // nn coefficient
  const double hi = -dd.d1 / r - dd.d0 / (r * r);                          // identity coefficient
  const Eigen::Matrix3d dH = hn * (n * n.transpose()) + hi * Eigen::Matrix3d::Identity();
  // EH: (2/((mu0+mu1) kappa)) [ (H0 - H1) + d2 * 1 ]
  out.EH = 2.0 / ((m0.mu + m1.mu) * kappa) * (-dH + dd.d2 * Eigen::Matrix3d::Identity());
  // HE: (2/((eps0+eps1) kappa)) [ (H1 - H0) - d2 * 1 ]
  out.HE = 2.0 / ((m0.eps + m1.eps) * kappa) * (dH - dd.d2 * Eigen::Matrix3d::Identity());
  return out;
}

PolarizationBlock block_quadrature(int l, double y, const MediumResponse& m0, const MediumResponse& m1) {
  const double theta_u = 1.0;  // generic observation point
  const Eigen::Vector3d u(std::sin(theta_u), 0.0, std::cos(theta_u));
  const Eigen::Vector3d e1(std::cos(theta_u), 0.0, -std::sin(theta_u));
  const Eigen::Vector3d e2(0.0, 1.0, 0.0);
  const double beta = 0.37;  // generic cone azimuth, keeps the path off the poles
  std::vector<Vsh> vu;
  vsh_all(l, theta_u, 0.0, vu);

  const int n_nodes = 240;
  std::vector<double> xs(n_nodes), ws(n_nodes);
  gauss_legendre(n_nodes, xs.data(), ws.data());

  Eigen::Matrix4d acc = Eigen::Matrix4d::Zero();
  std::vector<Vsh> vup;
  for (int i = 0; i < n_nodes; ++i) {
    const double t = 0.5 * (xs[i] + 1.0);
    const double wt = 0.5 * ws[i] * 4.0 * t;  // sin(gamma) dgamma = 4 t dt
    const double gamma = 2.0 * std::asin(std::min(t, 1.0));
    const Eigen::Vector3d up = std::cos(gamma) * u +
                               std::sin(gamma) * (std::cos(beta) * e1 + std::sin(beta) * e2);
    const double thp = std::acos(std::clamp(up.z(), -1.0, 1.0));
    const double php = std::atan2(up.y(), up.x());
    vsh_all(l, thp, php, vup);
    const auto sec = kernel_sectors(u, up, y, m0, m1);
    Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
    for (size_t md = 0; md < vu.size(); ++md) {
      const Eigen::Vector3d bu[2] = {vu[md].phi, vu[md].psi};
      const Eigen::Vector3d bp[2] = {vup[md].phi, vup[md].psi};
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          h(a, b) += bu[a].dot(u.cross(sec.EE * bp[b]));
          h(a, 2 + b) += bu[a].dot(u.cross(sec.EH * bp[b]));
          h(2 + a, b) += bu[a].dot(u.cross(sec.HE * bp[b]));
          h(2 + a, 2 + b) += bu[a].dot(u.cross(sec.HH * bp[b]));
        }
      }
    }
    acc += wt * h;
  }
  return (8.0 * M_PI * M_PI / (2.0 * l + 1.0)) * acc;
}

}  // namespace

SphericalBlock sphere_sso_block(int l, double kappaR, const SphereConfig& cfg, SphereMethod method) {
  if (l < 1) throw std::invalid_argument("sphere blocks need l >= 1");
  if (!(kappaR > 0.0)) throw std::invalid_argument("kappaR must be > 0");
  const MediumResponse m1 = sphere_response(cfg, kappaR);
  SphericalBlock out;
  out.l = l;
  out.block = (method == SphereMethod::AdditionTheorem)
                  ? block_addition(l, kappaR, cfg.medium0, m1)
                  : block_quadrature(l, kappaR, cfg.medium0, m1);
  return out;
}

std::array<std::complex<double>, 4> sphere_eigs(int l, double kappaR, const SphereConfig& cfg) {
  return block_eigenvalues(sphere_sso_block(l, kappaR, cfg).block);
}

double high_freq_eig_limit(const MediumResponse& m0, const MediumResponse& m1) {
  return (std::sqrt(m1.eps * m1.mu) - std::sqrt(m0.eps * m0.mu)) /
         std::sqrt((m1.mu + m0.mu) * (m1.eps + m0.eps));
}

Eigen::Matrix2d pc_sphere_block(int l, double kappaR) {
  if (l < 1) throw std::invalid_argument("pc sphere block needs l >= 1");
  if (!(kappaR > 0.0)) throw std::invalid_argument("kappaR must be > 0");
  const double a = a_radial(l, kappaR);
  Eigen::Matrix2d B = Eigen::Matrix2d::Zero();
  B(0, 0) = 2.0 * a;
  B(1, 1) = -2.0 * a;
  return B;
}

}  // namespace csso
