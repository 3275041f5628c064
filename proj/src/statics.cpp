#include "casimir_sso/statics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csso {

SurfaceChargeDensity make_sphere_grid(int n_theta, double radius) {
  if (n_theta < 4) throw std::invalid_argument("need at least 4 polar nodes");
  const int n_phi = 2 * n_theta;
  std::vector<double> x(n_theta), w(n_theta);
  gauss_legendre(n_theta, x.data(), w.data());
  SurfaceChargeDensity s;
  s.nodes.resize(n_theta * n_phi, 3);
  s.weights.resize(n_theta * n_phi);
  s.values = Eigen::VectorXd::Zero(n_theta * n_phi);
  const double wphi = 2.0 * M_PI / n_phi;
  int idx = 0;
  for (int i = 0; i < n_theta; ++i) {
    const double ct = x[i];
    const double st = std::sqrt(1.0 - ct * ct);
    for (int j = 0; j < n_phi; ++j) {
      const double phi = j * wphi;
      s.nodes.row(idx) << radius * st * std::cos(phi), radius * st * std::sin(phi), radius * ct;
      s.weights(idx) = w[i] * wphi * radius * radius;
      ++idx;
    }
  }
  return s;
}

namespace {

// A_ij = w_j k(u_i, u_j) for i != j; the diagonal absorbs the weakly singular
// part through the exact Gauss identity  Int_S k(u, u') ds' = -contrast.
Eigen::MatrixXd nystrom_matrix(const SurfaceChargeDensity& grid, double contrast, double radius) {
  const int n = static_cast<int>(grid.weights.size());
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d ui = grid.nodes.row(i);
    const Eigen::Vector3d ni = ui / radius;
    double offsum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const Eigen::Vector3d d = ui - Eigen::Vector3d(grid.nodes.row(j));
      const double r = d.norm();
      const double kernel = 2.0 * contrast * (-ni.dot(d) / (4.0 * M_PI * r * r * r));
      A(i, j) = grid.weights(j) * kernel;
      offsum += A(i, j);
    }
    A(i, i) = -contrast - offsum;
  }
  return A;
}

}  // namespace

SurfaceChargeDensity static_kernel_apply(const StaticShape& shape, const StaticContrast& contrast,
                                         const SurfaceChargeDensity& charge) {
  if (std::holds_alternative<SphereShape>(shape)) {
    const double R = std::get<SphereShape>(shape).radius;
    const int n = static_cast<int>(charge.weights.size());
    if (charge.values.size() != n || charge.nodes.rows() != n)
      throw std::invalid_argument("charge layout does not match its grid");
    const double area = charge.weights.sum();
    if (std::abs(area - 4.0 * M_PI * R * R) > 1e-6 * 4.0 * M_PI * R * R)
      throw std::invalid_argument("under-resolved discretization: weights do not sum to the sphere area");
    SurfaceChargeDensity out = charge;
    const Eigen::MatrixXd A = nystrom_matrix(charge, contrast.value, R);
    out.values = A * charge.values;
    return out;
  }
  const auto& pp = std::get<PlanePairShape>(shape);
  if (charge.values.size() != 2) throw std::invalid_argument("plane-pair mode needs two amplitudes");
  // Cross double layer between the planes in the transverse Fourier
  // representation; the flat self kernel vanishes.
  const double c = contrast.value * std::exp(-pp.k * pp.distance);
  SurfaceChargeDensity out = charge;
  out.values(0) = c * charge.values(1);
  out.values(1) = c * charge.values(0);
  return out;
}

std::vector<double> static_sphere_eigs(int l_max, const StaticContrast& contrast, int n_theta) {
  if (l_max < 0) throw std::invalid_argument("l_max must be >= 0");
  const double R = 1.0;
  const auto grid = make_sphere_grid(n_theta, R);
  Eigen::MatrixXd A = nystrom_matrix(grid, contrast.value, R);
  // A = K W is similar to the symmetric W^{1/2} K W^{1/2}; solve that instead.
  const int n = static_cast<int>(grid.weights.size());
  Eigen::VectorXd sw = grid.weights.array().sqrt();
  Eigen::MatrixXd S(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) S(i, j) = A(i, j) * sw(i) / sw(j);
  S = 0.5 * (S + S.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues();
  // sort by descending modulus and group by the 2l+1 degeneracy
  std::vector<double> sorted(ev.data(), ev.data() + ev.size());
  std::sort(sorted.begin(), sorted.end(), [](double a, double b) { return std::abs(a) > std::abs(b); });
  std::vector<double> lambda;
  size_t pos = 0;
  for (int l = 0; l <= l_max; ++l) {
    const int degeneracy = 2 * l + 1;
    if (pos + degeneracy > sorted.size()) throw std::runtime_error("resolution too low for requested l_max");
    double mean = 0.0;
    for (int d = 0; d < degeneracy; ++d) mean += sorted[pos + d];
    mean /= degeneracy;
    for (int d = 0; d < degeneracy; ++d) {
      if (std::abs(sorted[pos + d] - mean) > 0.05 * std::abs(mean) + 1e-6)
        throw std::runtime_error("degeneracy mismatch in the Nystrom spectrum; refine the grid");
    }
    lambda.push_back(mean);
    pos += degeneracy;
  }
  return lambda;
}

std::vector<std::complex<double>> static_sphere_spectrum_raw(const StaticContrast& contrast,
                                                             int n_theta) {
  const auto grid = make_sphere_grid(n_theta, 1.0);
  const Eigen::MatrixXd A = nystrom_matrix(grid, contrast.value, 1.0);
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
  std::vector<std::complex<double>> out(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out[i] = es.eigenvalues()(i);
  return out;
}

namespace {

double n0_mode_sum(double re1, double rm1, double re2, double rm2, double d, int k_order,
                   bool deriv, const QuadratureConfig& cfg) {
  // Int k dk/(2 pi) f(ln or deriv) summed over the two polarization channels;
  // substitution u = 2 k d.
  double total = 0.0;
  const double products[2] = {re1 * re2, rm1 * rm2};
  for (double Rp : products) {
    if (Rp == 0.0) continue;
    auto f = [&](double u) {
      const double ex = std::exp(-u);
      const double N = Rp * ex;
      double val;
      if (k_order < 0) {
        val = deriv ? (2.0 / (2.0 * d)) * u * N / (1.0 - N) : std::log1p(-N);
      } else {
        val = 0.0;
        double Nj = 1.0;
        for (int j = 1; j <= k_order + 1; ++j) {
          Nj *= N;
          val += deriv ? (2.0 / (2.0 * d)) * u * Nj : -Nj / j;
        }
      }
      return u * val / (2.0 * M_PI);
    };
    auto r = integrate(f, 0.0, 60.0, cfg);
    total += r.value / (4.0 * d * d);
  }
  return total;
}

}  // namespace

double static_plate_n0_energy(double re1, double rm1, double re2, double rm2, double d, double tau,
                              const QuadratureConfig& cfg) {
  if (!(d > 0.0)) throw std::invalid_argument("distance must be > 0");
  if (tau == 0.0) return 0.0;
  const double kBT = tau / (2.0 * M_PI);
  return 0.5 * kBT * n0_mode_sum(re1, rm1, re2, rm2, d, -1, false, cfg);
}

double static_plate_n0_energy_dderiv(double re1, double rm1, double re2, double rm2, double d,
                                     double tau, const QuadratureConfig& cfg) {
  if (tau == 0.0) return 0.0;
  const double kBT = tau / (2.0 * M_PI);
  return 0.5 * kBT * n0_mode_sum(re1, rm1, re2, rm2, d, -1, true, cfg);
}

double static_plate_n0_energy_mse(double re1, double rm1, double re2, double rm2, double d,
                                  double tau, int k_order, const QuadratureConfig& cfg) {
  if (tau == 0.0) return 0.0;
  const double kBT = tau / (2.0 * M_PI);
  return 0.5 * kBT * n0_mode_sum(re1, rm1, re2, rm2, d, k_order, false, cfg);
}

double static_plate_n0_energy_mse_dderiv(double re1, double rm1, double re2, double rm2, double d,
                                         double tau, int k_order, const QuadratureConfig& cfg) {
  if (tau == 0.0) return 0.0;
  const double kBT = tau / (2.0 * M_PI);
  return 0.5 * kBT * n0_mode_sum(re1, rm1, re2, rm2, d, k_order, true, cfg);
}

StaticGamma static_gamma_plate(double z0, double re, double rm) {
  if (!(z0 > 0.0)) throw std::invalid_argument("z0 must be > 0");
  const double z3 = z0 * z0 * z0;
  StaticGamma g;
  g.ee_xx = re / (32.0 * M_PI * z3);
  g.ee_zz = re / (16.0 * M_PI * z3);
  g.hh_xx = rm / (32.0 * M_PI * z3);
  g.hh_zz = rm / (16.0 * M_PI * z3);
  return g;
}

double static_cp_n0(double alpha0, double beta0, double z0, double re, double rm, double tau) {
  if (tau == 0.0) return 0.0;
  const double kBT = tau / (2.0 * M_PI);
  const auto g = static_gamma_plate(z0, re, rm);
  const double trE = 2.0 * g.ee_xx + g.ee_zz;
  const double trH = 2.0 * g.hh_xx + g.hh_zz;
  return -2.0 * M_PI * kBT * (alpha0 * trE + beta0 * trH);
}

}  // namespace csso
