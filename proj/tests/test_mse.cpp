#include <doctest.h>

#include <initializer_list>

#include "casimir_sso/mse.hpp"

#include <cmath>
#include <random>

using namespace csso;

namespace {
PolarizationBlock random_contraction(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PolarizationBlock K;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) K(i, j) = u(rng);
  // rescale to the requested spectral radius
  const auto ev = block_eigenvalues(K);
  return K * (radius / std::abs(ev[0]));
}
}  // namespace

TEST_CASE("Neumann sums") {
  PolarizationBlock Z = PolarizationBlock::Zero();
  CHECK((neumann_inverse(Z, 7) - PolarizationBlock::Identity()).cwiseAbs().maxCoeff() == 0.0);
  std::mt19937_64 rng(11);
  const auto K = random_contraction(rng, 0.6);
  CHECK((neumann_inverse(K, 1) - (PolarizationBlock::Identity() + K)).cwiseAbs().maxCoeff() == 0.0);
  // l = 60 against the direct solve
  const PolarizationBlock exact =
      (PolarizationBlock::Identity() - K).partialPivLu().solve(PolarizationBlock::Identity());
  CHECK((neumann_inverse(K, 60) - exact).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(21);
  const auto K11 = random_contraction(rng, 0.5);
  const auto K22 = random_contraction(rng, 0.4);
  const auto K21 = random_contraction(rng, 0.3);
  SUBCASE("decoupled bodies") {
    const auto r = round_trip(K11, PolarizationBlock::Zero(), K22, K21);
    CHECK(r.matrix.cwiseAbs().maxCoeff() == 0.0);
    CHECK(r.logdet_one_minus == 0.0);
  }
  SUBCASE("no self scattering") {
    const auto K12 = random_contraction(rng, 0.3);
    const auto r = round_trip(PolarizationBlock::Zero(), K12, PolarizationBlock::Zero(), K21,
                              MseOrder::kl(0, 0));
    CHECK((r.matrix - K12 * K21).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("series matches solve at order 60") {
    const auto K12 = random_contraction(rng, 0.3);
    const auto exact = round_trip(K11, K12, K22, K21);
    const auto trunc = round_trip(K11, K12, K22, K21, MseOrder::kl(0, 60));
    CHECK((exact.matrix - trunc.matrix).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("scaled logdet avoids cancellation") {
  std::mt19937_64 rng(31);
  const auto N = random_contraction(rng, 0.8);
  // tiny x: series route must match ln det computed in extended precision,
  // i.e. -x tr N to leading order
  const double x = 1e-12;
  const double v = logdet_one_minus_scaled(N, x);
  CHECK(v == doctest::Approx(-x * N.trace()).epsilon(1e-10));
  // moderate x: against direct LU
  const double x2 = 0.7;
  const double det = (PolarizationBlock::Identity() - x2 * N).determinant();
  CHECK(logdet_one_minus_scaled(N, x2) == doctest::Approx(std::log(det)).epsilon(1e-12));
}

TEST_CASE("Matsubara summation") {
  QuadratureConfig cfg;
  SUBCASE("zero term") {
    const auto e = matsubara_sum([](double) { return 0.0; }, 1.0, cfg);
    CHECK(e.total == 0.0);
    CHECK(e.converged);
  }
  SUBCASE("geometric series closed form") {
    // term(kappa) = exp(-kappa d): total = kBT (1/2 + q/(1-q)), q = e^{-tau d}
    const double tau = 0.8, d = 1.7;
    cfg.rel_tol = 1e-14;
    const auto e = matsubara_sum([d](double kappa) { return std::exp(-kappa * d); }, tau, cfg, 100000);
    const double q = std::exp(-tau * d);
    const double expected = tau / (2.0 * M_PI) * (0.5 + q / (1.0 - q));
    CHECK(e.total == doctest::Approx(expected).epsilon(1e-12));
    CHECK(e.converged);
    // weighted-sum invariant: total = 0.5 value(0) + sum values
    double acc = 0.5 * e.terms[0].value;
    for (size_t i = 1; i < e.terms.size(); ++i) acc += e.terms[i].value;
    CHECK(e.total == doctest::Approx(acc).epsilon(1e-15));
  }
  SUBCASE("tightening the tolerance moves the total by less than the tail") {
    // holds when successive terms decay quickly, so the last included term
    // bounds the remaining mass
    const double tau = 3.5, d = 0.9;
    cfg.rel_tol = 1e-6;
    const auto a = matsubara_sum([d](double k) { return std::exp(-k * d); }, tau, cfg);
    cfg.rel_tol = 5e-7;
    const auto b = matsubara_sum([d](double k) { return std::exp(-k * d); }, tau, cfg);
    CHECK(std::abs(b.total - a.total) <= a.tail_estimate + 1e-18);
  }
  SUBCASE("unconverged flag when n_max is hit") {
    const auto e = matsubara_sum([](double) { return 1.0; }, 1.0, cfg, 50);
    CHECK_FALSE(e.converged);
  }
}

TEST_CASE("zero-temperature integral") {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  CHECK(zero_temperature_integral([](double) { return 0.0; }, cfg).value == 0.0);
  // (1/2pi) Int e^{-kappa} = 1/(2 pi)
  const auto r = zero_temperature_integral([](double k) { return std::exp(-k); }, cfg);
  CHECK(r.value == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-10));
  // map cross-check: t/(1-t) vs sinh
  const auto a = integrate_semi_infinite([](double k) { return std::exp(-k) * std::cos(k); }, 1.0, cfg);
  const auto b =
      integrate_semi_infinite_sinh([](double k) { return std::exp(-k) * std::cos(k); }, 1.0, cfg);
  CHECK(a.value == doctest::Approx(b.value).epsilon(1e-9));
}

TEST_CASE("block eigenvalues") {
  CHECK(block_eigenvalues(PolarizationBlock::Identity())[3] == std::complex<double>(1.0, 0.0));
  PolarizationBlock A = PolarizationBlock::Zero();
  A(0, 1) = 0.7;
  A(1, 0) = -0.7;
  const auto ev = block_eigenvalues(A);
  CHECK(std::abs(ev[0] - std::complex<double>(0.0, 0.7)) < 1e-14);
  CHECK(std::abs(ev[1] - std::complex<double>(0.0, -0.7)) < 1e-14);
  CHECK(std::abs(ev[2]) < 1e-14);
  CHECK(std::abs(ev[3]) < 1e-14);
}
