#include <doctest.h>

#include <initializer_list>

#include "casimir_sso/plates.hpp"
#include "casimir_sso/statics.hpp"

#include <cmath>
#include <complex>

using namespace csso;

TEST_CASE("static kernel on the sphere") {
  const StaticContrast c(-0.5);  // eps = 3 in vacuum
  SUBCASE("constant charge is an eigenfunction with eigenvalue -contrast") {
    auto grid = make_sphere_grid(24, 1.0);
    grid.values.setOnes();
    const auto out = static_kernel_apply(SphereShape{1.0}, c, grid);
    for (int i = 0; i < out.values.size(); ++i)
      CHECK(out.values(i) == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("zero contrast gives zero") {
    auto grid = make_sphere_grid(12, 1.0);
    grid.values.setRandom();
    const auto out = static_kernel_apply(SphereShape{1.0}, StaticContrast(0.0), grid);
    CHECK(out.values.cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("weights sum to the surface area") {
    const auto grid = make_sphere_grid(16, 2.0);
    CHECK(grid.weights.sum() == doctest::Approx(16.0 * M_PI).epsilon(1e-12));
    CHECK(grid.weights.minCoeff() > 0.0);
  }
}

TEST_CASE("sphere spectrum: reality, bound, refinement") {
  const StaticContrast c(-0.5);
  SUBCASE("raw Nystrom eigenvalues are real") {
    for (int nt : {12, 20}) {
      double worst = 0.0;
      for (const auto& ev : static_sphere_spectrum_raw(c, nt))
        worst = std::max(worst, std::abs(ev.imag()));
      CHECK(worst < 1e-8);
    }
  }
  SUBCASE("grouped spectrum approaches -contrast/(2l+1)") {
    const auto lam = static_sphere_eigs(4, c, 32);
    // l = 0 carries the Gauss mode at exactly -contrast: the uniform charge
    // has no interior field, so the strict bound starts at l = 1
    CHECK(lam[0] == doctest::Approx(0.5).epsilon(1e-12));
    for (int l = 1; l <= 4; ++l) {
      CHECK(std::abs(lam[l]) < 0.5);
      CHECK(lam[l] == doctest::Approx(0.5 / (2 * l + 1)).epsilon(5e-3));
    }
    // |lambda_l| decreases beyond l = 2
    for (int l = 2; l < 4; ++l) CHECK(std::abs(lam[l + 1]) < std::abs(lam[l]));
  }
  SUBCASE("bound violations shrink with refinement") {
    const auto coarse = static_sphere_eigs(3, c, 16);
    const auto fine = static_sphere_eigs(3, c, 32);
    for (int l = 1; l <= 3; ++l) {
      const double exact = 0.5 / (2 * l + 1);
      CHECK(std::abs(fine[l] - exact) < std::abs(coarse[l] - exact) + 1e-12);
    }
  }
}

TEST_CASE("plane-pair mode application") {
  const StaticContrast c(0.4);
  SurfaceChargeDensity mode;
  mode.values.resize(2);
  mode.values << 1.0, 0.0;
  const auto out = static_kernel_apply(PlanePairShape{2.0, 0.7}, c, mode);
  CHECK(out.values(0) == 0.0);  // flat self kernel vanishes
  CHECK(out.values(1) == doctest::Approx(0.4 * std::exp(-1.4)).epsilon(1e-14));
}

TEST_CASE("classical plate term") {
  const double tau = 0.05, d = 1.0;
  SUBCASE("zero contrast") {
    CHECK(static_plate_n0_energy(0.0, 0.0, 0.0, 0.0, d, tau) == 0.0);
  }
  SUBCASE("equals the n = 0 Matsubara term of the Lifshitz sum") {
    PlateConfig cfg;
    cfg.body1 = MaterialModel::fixed(4.0, 1.0);
    cfg.body2 = MaterialModel::fixed(9.0, 1.0);
    cfg.distance = d;
    cfg.thermal = Thermal{tau};
    const auto e = lifshitz_energy_per_area(cfg);
    const double n0 = 0.5 * e.terms[0].value;
    const double st = static_plate_n0_energy(3.0 / 5.0, 0.0, 8.0 / 10.0, 0.0, d, tau);
    CHECK(st == doctest::Approx(n0).epsilon(1e-10));
  }
  SUBCASE("PEC limit recovers the zeta(3) result per polarization") {
    const double kBT = tau / (2.0 * M_PI);
    const double exact = -kBT * 1.2020569031595943 / (16.0 * M_PI * d * d);
    const double eps = 1e8;
    const double r = (eps - 1.0) / (eps + 1.0);
    CHECK(static_plate_n0_energy(r, 0.0, r, 0.0, d, tau) == doctest::Approx(exact).epsilon(1e-4));
  }
  SUBCASE("finite-frequency formulation at kappa = 1e-6/d matches") {
    const MediumResponse vac = MediumResponse::vacuum();
    const MediumResponse b1(4.0, 1.0), b2(9.0, 1.0);
    const double kappa = 1e-6 / d;
    QuadratureConfig qc;
    auto int_mode = [&](double k) {
      return k * plate_mode_logdet(k, kappa, d, vac, b1, b2) / (2.0 * M_PI);
    };
    const double finite = integrate_semi_infinite(int_mode, 1.0 / d, qc).value;
    auto int_static = [&](double k) {
      const double ex = std::exp(-2.0 * k * d);
      return k * std::log1p(-(3.0 / 5.0) * (8.0 / 10.0) * ex) / (2.0 * M_PI);
    };
    const double stat = integrate_semi_infinite(int_static, 1.0 / d, qc).value;
    CHECK(finite == doctest::Approx(stat).epsilon(1e-4));
  }
}

TEST_CASE("static Casimir-Polder term") {
  SUBCASE("zero polarizability / zero contrast") {
    CHECK(static_cp_n0(0.0, 0.0, 1.0, 1.0, 0.0, 0.1) == 0.0);
    CHECK(static_cp_n0(1.0, 0.0, 1.0, 0.0, 0.0, 0.1) == 0.0);
  }
  SUBCASE("PEC plate scales as z^-3") {
    // log-log fit of tr Gamma-tilde over a decade
    double sum_x = 0, sum_y = 0, sum_xx = 0, sum_xy = 0;
    int n = 0;
    for (double z : {1.0, 2.0, 4.0, 8.0}) {
      const auto g = static_gamma_plate(z, 1.0, -1.0);
      const double x = std::log(z), y = std::log(2.0 * g.ee_xx + g.ee_zz);
      sum_x += x;
      sum_y += y;
      sum_xx += x * x;
      sum_xy += x * y;
      ++n;
    }
    const double slope = (n * sum_xy - sum_x * sum_y) / (n * sum_xx - sum_x * sum_x);
    CHECK(slope == doctest::Approx(-3.0).epsilon(0.01 / 3.0));
  }
}
