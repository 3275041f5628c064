#include <doctest.h>

#include <initializer_list>

#include "casimir_sso/cylinder.hpp"
#include "casimir_sso/mse.hpp"
#include "casimir_sso/sphere.hpp"

#include <algorithm>
#include <cmath>

using namespace csso;

namespace {
CylinderConfig make_cfg(double eps, double mu = 1.0) {
  CylinderConfig cfg;
  cfg.material = MaterialModel::fixed(eps, mu);
  return cfg;
}
}  // namespace

TEST_CASE("exact T-matrix identities") {
  const auto cfg = make_cfg(30.0);
  SUBCASE("zero contrast scatters nothing") {
    const auto T = t_exact(1, 1.0, 1.0, make_cfg(1.0));
    CHECK(T.entries_scaled.cwiseAbs().maxCoeff() < 1e-16);
  }
  SUBCASE("HE = -EH exactly") {
    for (double kz : {0.3, 1.0, 2.5}) {
      const auto T = t_exact(2, 0.7, kz, cfg);
      CHECK(T.entries_scaled(0, 1) == -T.entries_scaled(1, 0));
    }
  }
  SUBCASE("m = 0 and kz = 0 decouple the polarizations") {
    CHECK(t_exact(0, 1.0, 1.0, cfg).entries_scaled(0, 1) == 0.0);
    CHECK(t_exact(3, 1.0, 0.0, cfg).entries_scaled(0, 1) == 0.0);
  }
  SUBCASE("regression against the arbitrary-precision evaluation") {
    const auto T = t_exact(1, 1.0, 1.0, cfg);
    const double s = std::exp(T.log_scale);
    CHECK(T.entries_scaled(0, 0) * s == doctest::Approx(1.220201695344951).epsilon(1e-10));
    CHECK(T.entries_scaled(1, 1) * s == doctest::Approx(-2.0458370490629805).epsilon(1e-10));
    CHECK(T.entries_scaled(0, 1) * s == doctest::Approx(-0.31698481976282191).epsilon(1e-10));
  }
  SUBCASE("scaled path is finite and continuous up to kappa R = 1e3") {
    double prev = 0.0;
    bool first = true;
    for (double kr : {900.0, 950.0, 1000.0}) {
      const auto T = t_exact(1, kr, 1.0, cfg);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(std::isfinite(T.entries_scaled(i, j)));
      if (!first) CHECK(std::abs(T.entries_scaled(0, 0) - prev) < 0.2 * std::abs(prev));
      prev = T.entries_scaled(0, 0);
      first = false;
    }
  }
}

TEST_CASE("surface-operator block") {
  SUBCASE("zero contrast") {
    CHECK(cyl_sso_block(1, 1.0, 1.0, make_cfg(1.0)).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("wave matching vs quadrature") {
    const auto a = cyl_sso_block(1, 1.0, 1.0, make_cfg(4.0), CylinderMethod::WaveMatching);
    const auto q = cyl_sso_block(1, 1.0, 1.0, make_cfg(4.0), CylinderMethod::Quadrature);
    CHECK((a - q).cwiseAbs().maxCoeff() < 1e-8);
    const auto a2 = cyl_sso_block(0, 0.8, 1.3, make_cfg(30.0), CylinderMethod::WaveMatching);
    const auto q2 = cyl_sso_block(0, 0.8, 1.3, make_cfg(30.0), CylinderMethod::Quadrature);
    CHECK((a2 - q2).cwiseAbs().maxCoeff() < 1e-8);
  }
  SUBCASE("pairing and moduli below one") {
    double maxmod = 0.0, worst = 0.0;
    for (int m : {0, 1, 2, 5, 10}) {
      for (double kr : {0.05, 0.5, 2.0}) {
        for (double kz : {0.0, 0.7, 2.0}) {
          auto ev = cyl_eigs(m, kr, kz, make_cfg(40.0, 3.0));
          std::array<std::complex<double>, 4> neg;
          for (int i = 0; i < 4; ++i) neg[i] = -ev[i];
          auto key = [](auto x, auto y) {
            return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
          };
          std::sort(ev.begin(), ev.end(), key);
          std::sort(neg.begin(), neg.end(), key);
          for (int i = 0; i < 4; ++i) {
            worst = std::max(worst, std::abs(ev[i] - neg[i]));
            maxmod = std::max(maxmod, std::abs(ev[i]));
          }
        }
      }
    }
    CHECK(worst < 1e-8);
    CHECK(maxmod < 1.0);
  }
  SUBCASE("high-frequency limit independent of m and kz") {
    const double lim = std::abs(high_freq_eig_limit(MediumResponse::vacuum(), MediumResponse(4.0, 1.0)));
    for (int m : {0, 1, 2}) {
      for (double kz : {0.0, 1.0, 2.0}) {
        const auto ev = cyl_eigs(m, 100.0, kz, make_cfg(4.0));
        for (const auto& e : ev) CHECK(std::abs(std::abs(e) - lim) < 1e-2);
      }
    }
  }
}

TEST_CASE("scattering-expansion T-matrix") {
  const auto cfg = make_cfg(30.0);
  SUBCASE("zero contrast at every order") {
    for (int p : {0, 3, 10})
      CHECK(mse_t(1, 1.0, 1.0, make_cfg(1.0), p).entries_scaled.cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("exact-inverse extraction reproduces t_exact") {
    for (const auto& [m, kr, kz] : {std::tuple{0, 0.9, 0.4}, {1, 1.0, 1.0}, {2, 1.7, 2.0}}) {
      const auto Tm = mse_t(m, kr, kz, cfg, -1);
      const auto Te = t_exact(m, kr, kz, cfg);
      CHECK((Tm.entries_scaled - Te.entries_scaled).cwiseAbs().maxCoeff() <
            1e-10 * Te.entries_scaled.cwiseAbs().maxCoeff());
    }
  }
  SUBCASE("polarization coupling vanishes iff m kz = 0") {
    CHECK(std::abs(mse_t(0, 1.0, 1.5, cfg, 5).entries_scaled(0, 1)) < 1e-14);
    CHECK(std::abs(mse_t(2, 1.0, 0.0, cfg, 5).entries_scaled(0, 1)) < 1e-14);
    CHECK(std::abs(mse_t(1, 1.0, 1.0, cfg, 5).entries_scaled(0, 1)) > 1e-4);
  }
  SUBCASE("p = 40 matches away from the m = 0 static corner") {
    for (const auto& [m, kr, kz] : {std::tuple{0, 1.5, 1.0}, {1, 0.5, 0.5}, {2, 1.0, 2.0}}) {
      const auto Tm = mse_t(m, kr, kz, cfg, 40);
      const auto Te = t_exact(m, kr, kz, cfg);
      CHECK((Tm.entries_scaled - Te.entries_scaled).cwiseAbs().maxCoeff() <
            1e-6 * Te.entries_scaled.cwiseAbs().maxCoeff());
    }
  }
}
