#include <doctest.h>

#include <initializer_list>

#include "casimir_sso/core.hpp"

#include <cmath>
#include <random>

using namespace csso;

TEST_CASE("fixed material passes its constants through") {
  const auto m = MaterialModel::fixed(2.0, 1.0);
  for (double kappa : {0.0, 0.3, 10.0}) {
    const auto r = m.evaluate(kappa);
    CHECK(r.eps == 2.0);
    CHECK(r.mu == 1.0);
  }
}

TEST_CASE("Drude model along the imaginary axis") {
  const auto au = MaterialModel::drude(9.0, 0.035);
  // xi = 1 eV: eps = 1 + 81/(1*1.035)
  const double kappa_1eV = 1.0 / hbar_c_eV_nm;
  CHECK(au.evaluate(kappa_1eV).eps == doctest::Approx(79.260869565217391).epsilon(1e-12));
  // high-frequency tail
  CHECK(au.evaluate(1e4).eps == doctest::Approx(1.0).epsilon(1e-4));
  CHECK_THROWS_AS(au.evaluate(0.0), std::domain_error);
}

TEST_CASE("perfect conductor has no medium response") {
  CHECK_THROWS_AS(MaterialModel::perfect_conductor().evaluate(1.0), std::domain_error);
  CHECK(MaterialModel::perfect_conductor().static_reflection_e(MediumResponse::vacuum()) == 1.0);
}

TEST_CASE("material response stays positive") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uw(0.1, 20.0), ug(0.001, 1.0), uk(1e-6, 1e2);
  for (int i = 0; i < 200; ++i) {
    const auto m = MaterialModel::drude(uw(rng), ug(rng));
    const auto r = m.evaluate(uk(rng));
    CHECK(r.eps > 0.0);
    CHECK(r.mu > 0.0);
  }
}

TEST_CASE("Matsubara grid") {
  const auto g = matsubara_grid(300.0, 6);
  CHECK(g[0] == 0.0);
  // 2 pi k_B T/(hbar c) at 300 K with CODATA constants
  CHECK(g[1] == doctest::Approx(0.00082316622332809494).epsilon(1e-14));
  const auto g2 = matsubara_grid(600.0, 6);
  for (int n = 1; n <= 6; ++n) CHECK(g2[n] == doctest::Approx(2.0 * g[n]).epsilon(1e-15));
  // uniform spacing to machine precision
  for (int n = 1; n <= 5; ++n)
    CHECK(g[n + 1] - g[n] == doctest::Approx(g[1]).epsilon(1e-14));
  CHECK_THROWS_AS(matsubara_grid(0.0, 3), std::invalid_argument);
}

TEST_CASE("type validation") {
  CHECK_THROWS_AS(MediumResponse(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Wavenumber(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(MseOrder::kl(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(ModeIndex::spherical(0), std::invalid_argument);
}
