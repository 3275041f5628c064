#include "casimir_sso/mse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csso {

PolarizationBlock neumann_inverse(const PolarizationBlock& K, int order) {
  if (order < 0) throw std::invalid_argument("Neumann order must be >= 0");
  PolarizationBlock sum = PolarizationBlock::Identity();
  PolarizationBlock power = PolarizationBlock::Identity();
  for (int p = 0; p < order; ++p) {
    power = power * K;
    sum += power;
  }
  return sum;
}

namespace {

PolarizationBlock solve_one_minus(const PolarizationBlock& K, const PolarizationBlock& rhs,
                                  const char* which) {
  Eigen::PartialPivLU<PolarizationBlock> lu(PolarizationBlock::Identity() - K);
  const double det = lu.determinant();
  if (!std::isfinite(det) || std::abs(det) < 1e-300) {
    throw std::runtime_error(std::string("1 - K is singular for body ") + which);
  }
  return lu.solve(rhs);
}

}  // namespace

RoundTripResult round_trip(const PolarizationBlock& K11, const PolarizationBlock& K12,
                           const PolarizationBlock& K22, const PolarizationBlock& K21,
                           const MseOrder& inner) {
  RoundTripResult out;
  if (inner.is_exact) {
    out.matrix = solve_one_minus(K11, K12, "1") * solve_one_minus(K22, K21, "2");
  } else {
    out.matrix = neumann_inverse(K11, inner.l) * K12 * neumann_inverse(K22, inner.l) * K21;
  }
  out.logdet_one_minus = logdet_one_minus_scaled(out.matrix, 1.0);
  return out;
}

double logdet_one_minus_scaled(const PolarizationBlock& N, double x) {
  if (x == 0.0) return 0.0;
  const double scale = x * N.cwiseAbs().maxCoeff();
  if (scale < 0.2) {
    // tr ln(1 - xN) = -sum_j x^j tr(N^j)/j, no cancellation for small x
    double total = 0.0;
    PolarizationBlock power = PolarizationBlock::Identity();
    double xj = 1.0;
    for (int j = 1; j <= 60; ++j) {
      power = power * N;
      xj *= x;
      const double term = -xj * power.trace() / j;
      total += term;
      if (std::abs(term) < 1e-17 * std::abs(total) + 1e-300) break;
    }
    return total;
  }
  Eigen::PartialPivLU<PolarizationBlock> lu(PolarizationBlock::Identity() - x * N);
  const double det = lu.determinant();
  if (!(det > 0.0)) throw std::runtime_error("det(1 - N) <= 0: non-physical input or divergent series");
  return std::log(det);
}

EnergyBreakdown matsubara_sum(const std::function<double(double)>& term, double tau,
                              const QuadratureConfig& cfg, int n_max) {
  if (!(tau > 0.0)) throw std::invalid_argument("matsubara_sum requires tau > 0");
  const double kBT = tau / (2.0 * M_PI);
  EnergyBreakdown out;
  const double t0 = kBT * term(0.0);
  out.terms.push_back({0, 0.0, t0});
  double total = 0.5 * t0;
  int small_streak = 0;
  double last = std::abs(t0);
  out.converged = false;
  for (int n = 1; n <= n_max; ++n) {
    const double kappa = n * tau;
    const double tn = kBT * term(kappa);
    out.terms.push_back({n, kappa, tn});
    total += tn;
    last = std::abs(tn);
    if (last <= cfg.rel_tol * std::abs(total)) {
      if (++small_streak >= 3) {
        out.converged = true;
        break;
      }
    } else {
      small_streak = 0;
    }
  }
  out.total = total;
  out.tail_estimate = last;
  return out;
}

IntegralResult zero_temperature_integral(const std::function<double(double)>& term,
                                         const QuadratureConfig& cfg, double scale) {
  auto r = integrate_semi_infinite(term, scale, cfg);
  r.value /= 2.0 * M_PI;
  r.error_estimate /= 2.0 * M_PI;
  return r;
}

std::array<std::complex<double>, 4> block_eigenvalues(const PolarizationBlock& K) {
  if (!K.allFinite()) throw std::invalid_argument("block_eigenvalues requires finite entries");
  Eigen::EigenSolver<PolarizationBlock> es(K, false);
  std::array<std::complex<double>, 4> ev;
  for (int i = 0; i < 4; ++i) ev[i] = es.eigenvalues()(i);
  std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-12 * (ma + mb)) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return ev;
}

}  // namespace csso
