#include "casimir_sso/selfcheck.hpp"

#include "casimir_sso/bessel.hpp"
#include "casimir_sso/cp.hpp"
#include "casimir_sso/cylinder.hpp"
#include "casimir_sso/greens.hpp"
#include "casimir_sso/mse.hpp"
#include "casimir_sso/plates.hpp"
#include "casimir_sso/sphere.hpp"
#include "casimir_sso/statics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

namespace csso {

namespace {

struct Failure {
  bool ok = true;
  std::ostringstream msg;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (msg.tellp() > 0) msg << "; ";
      msg << what;
    }
  }
};

CheckResult finish(const char* name, Failure& f) {
  return {name, f.ok, f.ok ? "ok" : f.msg.str()};
}

CheckResult check_bessel() {
  Failure f;
  // spot values against 30-digit arbitrary-precision references
  f.expect(std::abs(bessel::cyl_i_scaled(0, 1.0) - 0.46575960759364044) < 1e-14, "I0s(1)");
  f.expect(std::abs(bessel::cyl_k_scaled(5, 2.0) - 69.686550876076751) < 1e-10 * 70, "K5s(2)");
  f.expect(std::abs(bessel::sph_i_scaled(1, 1.0) - 0.13533528323661269) < 1e-14, "i1s(1)");
  f.expect(std::abs(bessel::sph_k_scaled(2, 0.2) - 455.0) < 1e-9 * 455, "k2s(0.2)");
  // Wronskian i_l k_l' - i_l' k_l = -1/x^2
  for (double x : {0.3, 2.0, 40.0}) {
    for (int l : {0, 1, 5}) {
      const double w = bessel::sph_i_scaled(l, x) * bessel::sph_k_scaled_prime(l, x) -
                       bessel::sph_i_scaled_prime(l, x) * bessel::sph_k_scaled(l, x);
      f.expect(std::abs(w + 1.0 / (x * x)) < 1e-12 / (x * x) + 1e-15, "sph wronskian");
    }
    const double wc = bessel::cyl_i_scaled(3, x) * bessel::cyl_k_scaled_prime(3, x) -
                      bessel::cyl_i_scaled_prime(3, x) * bessel::cyl_k_scaled(3, x);
    f.expect(std::abs(wc + 1.0 / x) < 1e-12 / x + 1e-15, "cyl wronskian");
  }
  return finish("bessel", f);
}

CheckResult check_greens() {
  Failure f;
  const MediumResponse med(2.0, 1.5);
  const double kappa = 0.8;
  const Eigen::Vector3d dr(0.3, -0.2, 0.5);
  const auto he = green_block(GreenBlockLabel::HE, dr, kappa, med);
  const auto eh = green_block(GreenBlockLabel::EH, dr, kappa, med);
  f.expect((he + eh).norm() < 1e-15, "EH = -HE");
  const auto ee = green_block(GreenBlockLabel::EE, dr, kappa, med);
  const auto ee_flip = green_block(GreenBlockLabel::EE, -dr, kappa, med);
  f.expect((ee - ee_flip.transpose()).norm() < 1e-14 * ee.norm(), "EE reciprocity");
  // Helmholtz residual by 4th-order finite differences
  const double q = kappa * std::sqrt(med.eps * med.mu);
  const double h = 1e-2;
  auto g = [&](const Eigen::Vector3d& r) { return std::exp(-q * r.norm()) / (4.0 * M_PI * r.norm()); };
  double lap = 0.0;
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d e = Eigen::Vector3d::Zero();
    e(i) = h;
    lap += (-g(dr + 2 * e) + 16 * g(dr + e) - 30 * g(dr) + 16 * g(dr - e) - g(dr - 2 * e)) /
           (12 * h * h);
  }
  f.expect(std::abs(lap - q * q * g(dr)) < 1e-6 * std::abs(q * q * g(dr)), "Helmholtz residual");
  return finish("greens", f);
}

CheckResult check_plates() {
  Failure f;
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> ue(1.0, 80.0), uk(0.05, 5.0), um(1.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 60; ++i) {
    const MediumResponse m0 = MediumResponse::vacuum();
    const MediumResponse b1(ue(rng), um(rng)), b2(ue(rng), um(rng));
    const double kappa = uk(rng), k = uk(rng), d = 1.0;
    const double a = plate_mode_logdet(k, kappa, d, m0, b1, b2);
    const double s0 = plane_wave_s(1, 1, kappa, k);
    const auto f1 = fresnel_pair(k, kappa, m0, b1);
    const auto f2 = fresnel_pair(k, kappa, m0, b2);
    const double ex = std::exp(-2.0 * s0 * d);
    const double b = std::log1p(-f1.r_TM * f2.r_TM * ex) + std::log1p(-f1.r_TE * f2.r_TE * ex);
    worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-30));
  }
  f.expect(worst < 1e-10, "per-mode logdet vs Fresnel, worst rel " + std::to_string(worst));
  // closed-form eigenvalues vs the matrix spectrum
  const auto lam = plate_self_eigs(1.0, 1.0, MediumResponse::vacuum(), MediumResponse(2.0, 1.0));
  const auto ev = block_eigenvalues(plate_self_block(1, 1.0, 1.0, MediumResponse::vacuum(),
                                                     MediumResponse(2.0, 1.0)));
  f.expect(std::abs(ev[0].real() - lam.first) < 1e-12, "plate eigs closed form");
  f.expect(std::abs(lam.first - 0.15398158263948262) < 1e-12, "plate eig reference value");
  return finish("plates", f);
}

CheckResult check_sphere() {
  Failure f;
  SphereConfig cfg;
  cfg.material = MaterialModel::fixed(4.0, 1.0);
  const auto Ba = sphere_sso_block(1, 1.0, cfg, SphereMethod::AdditionTheorem).block;
  const auto Bq = sphere_sso_block(1, 1.0, cfg, SphereMethod::Quadrature).block;
  f.expect((Ba - Bq).cwiseAbs().maxCoeff() < 1e-8, "addition vs quadrature");
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ue(1.0, 100.0), ulk(-2.0, 2.0);
  double maxmod = 0.0, pairing = 0.0;
  for (int i = 0; i < 60; ++i) {
    const int l = 1 + static_cast<int>(i % 6);
    cfg.material = MaterialModel::fixed(ue(rng), 1.0 + (i % 3));
    const double kr = std::pow(10.0, ulk(rng));
    const auto ev = sphere_eigs(l, kr, cfg);
    for (const auto& e : ev) maxmod = std::max(maxmod, std::abs(e));
    std::array<std::complex<double>, 4> neg;
    for (int j = 0; j < 4; ++j) neg[j] = -ev[j];
    std::sort(neg.begin(), neg.end(), [](auto a, auto b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    auto pos = ev;
    std::sort(pos.begin(), pos.end(), [](auto a, auto b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    for (int j = 0; j < 4; ++j) pairing = std::max(pairing, std::abs(pos[j] - neg[j]));
  }
  f.expect(maxmod < 1.0, "sphere |eig| < 1");
  f.expect(pairing < 1e-8, "sphere eigenvalue pairing");
  const double lim = high_freq_eig_limit(MediumResponse::vacuum(), MediumResponse(4.0, 1.0));
  cfg.material = MaterialModel::fixed(4.0, 1.0);
  const auto ev = sphere_eigs(2, 100.0, cfg);
  f.expect(std::abs(std::abs(ev[0]) - lim) < 1e-2, "high-frequency limit");
  return finish("sphere", f);
}

CheckResult check_cylinder() {
  Failure f;
  CylinderConfig cfg;
  cfg.material = MaterialModel::fixed(30.0, 1.0);
  const auto T = t_exact(1, 1.0, 1.0, cfg);
  f.expect(std::abs(T.entries_scaled(0, 1) + T.entries_scaled(1, 0)) < 1e-15, "T^{HE} = -T^{EH}");
  const auto T0 = t_exact(0, 1.0, 1.0, cfg);
  f.expect(T0.entries_scaled(0, 1) == 0.0, "m = 0 decoupling");
  const auto Tm = mse_t(1, 1.0, 1.0, cfg, -1);
  f.expect((Tm.entries_scaled - T.entries_scaled).cwiseAbs().maxCoeff() <
               1e-10 * T.entries_scaled.cwiseAbs().maxCoeff(),
           "exact-inverse extraction matches T");
  auto ev = cyl_eigs(1, 0.9, 0.7, cfg);
  std::array<std::complex<double>, 4> neg;
  for (int j = 0; j < 4; ++j) neg[j] = -ev[j];
  auto key = [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  };
  std::sort(ev.begin(), ev.end(), key);
  std::sort(neg.begin(), neg.end(), key);
  double pairing = 0.0;
  for (int j = 0; j < 4; ++j) pairing = std::max(pairing, std::abs(ev[j] - neg[j]));
  f.expect(pairing < 1e-8, "cylinder pairing");
  return finish("cylinder", f);
}

CheckResult check_statics() {
  Failure f;
  const auto lam = static_sphere_eigs(3, StaticContrast(-0.5), 24);
  f.expect(std::abs(lam[0] - 0.5) < 1e-10, "l=0 Gauss mode");
  for (size_t l = 1; l < lam.size(); ++l) {
    f.expect(std::abs(lam[l]) < 0.5, "bound |lambda| < |contrast|");
    f.expect(std::abs(lam[l] - 0.5 / (2.0 * l + 1.0)) < 2e-3, "spectrum -c/(2l+1)");
  }
  const double tau = 0.1;
  const double e0 = static_plate_n0_energy(0.5, 0.0, 0.8, 0.0, 1.0, tau);
  // kappa -> 0 limit of the Fresnel integrand for the same reflections
  QuadratureConfig qc;
  auto fres = [&](double k) {
    return k * std::log1p(-0.5 * 0.8 * std::exp(-2.0 * k)) / (2.0 * M_PI);
  };
  const double ref = 0.5 * (tau / (2.0 * M_PI)) * integrate(fres, 0.0, 40.0, qc).value;
  f.expect(std::abs(e0 - ref) < 1e-12 * std::abs(ref) + 1e-18, "plate n0 vs Fresnel static limit");
  return finish("statics", f);
}

CheckResult check_cp() {
  Failure f;
  const auto gs = gamma_plate_coincident(1.3, 0.9, MaterialModel::fixed(4.0, 2.0));
  const auto gf = gamma_plate_fresnel(1.3, 0.9, MaterialModel::fixed(4.0, 2.0));
  const double scale = std::abs(gf.ee_xx) + std::abs(gf.ee_zz);
  f.expect(std::abs(gs.ee_xx - gf.ee_xx) < 1e-9 * scale, "gamma xx vs oracle");
  f.expect(std::abs(gs.ee_zz - gf.ee_zz) < 1e-9 * scale, "gamma zz vs oracle");
  f.expect(std::abs(gs.hh_xx - gf.hh_xx) < 1e-9 * scale, "gamma hh vs oracle");
  return finish("cp", f);
}

CheckResult check_null() {
  Failure f;
  // zero contrast kills every block and energy
  const auto B = plate_self_block(1, 0.7, 0.9, MediumResponse::vacuum(), MediumResponse::vacuum());
  f.expect(B.cwiseAbs().maxCoeff() < 1e-15, "plate self null");
  SphereConfig sc;
  sc.material = MaterialModel::fixed(1.0, 1.0);
  f.expect(sphere_sso_block(1, 1.0, sc).block.cwiseAbs().maxCoeff() < 1e-15, "sphere null");
  CylinderConfig cc;
  cc.material = MaterialModel::fixed(1.0, 1.0);
  f.expect(cyl_sso_block(1, 1.0, 1.0, cc).cwiseAbs().maxCoeff() < 1e-15, "cylinder null");
  const auto T = t_exact(1, 1.0, 1.0, cc);
  f.expect(T.entries_scaled.cwiseAbs().maxCoeff() < 1e-15, "T null");
  return finish("zero-contrast", f);
}

}  // namespace

std::vector<CheckResult> run_selfcheck() {
  std::vector<CheckResult> out;
  out.push_back(check_bessel());
  out.push_back(check_greens());
  out.push_back(check_plates());
  out.push_back(check_sphere());
  out.push_back(check_cylinder());
  out.push_back(check_statics());
  out.push_back(check_cp());
  out.push_back(check_null());
  return out;
}

}  // namespace csso
