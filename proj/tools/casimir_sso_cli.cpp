// Command-line front end: plate energies and forces, sphere/cylinder
// spectra, the exact cylinder T-matrix, Casimir-Polder energies, the static
// sphere spectrum and the invariant selfcheck.
//
// Units: in SI mode lengths carry an {nm, um, m} suffix, temperatures are in
// kelvin, energies per area are reported in eV/nm^2 and forces in eV/nm^3.
// In dimensionless mode (--units dimensionless) all lengths are in an
// arbitrary unit L, --temperature is read as tau = 2 pi k_B T/(hbar c) in
// 1/L, and results are in hbar*c = 1 units.

#include "casimir_sso/core.hpp"
#include "casimir_sso/cp.hpp"
#include "casimir_sso/cylinder.hpp"
#include "casimir_sso/mse.hpp"
#include "casimir_sso/plates.hpp"
#include "casimir_sso/selfcheck.hpp"
#include "casimir_sso/sphere.hpp"
#include "casimir_sso/statics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

int worker_count() {
  if (const char* env = std::getenv("CASIMIR_SSO_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// CSV field quoting (RFC-4180 style); numbers never need it but headers may.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  json meta;  // config echo and flags
};

void emit(const Table& t, const std::string& format, const std::string& path) {
  std::ostringstream os;
  if (format == "csv") {
    for (size_t i = 0; i < t.header.size(); ++i)
      os << (i ? "," : "") << csv_field(t.header[i]);
    os << "\n";
    for (const auto& r : t.rows) {
      for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << fmt(r[i]);
      os << "\n";
    }
  } else {
    json j;
    j["version"] = kVersion;
    j["config"] = t.meta;
    j["columns"] = t.header;
    j["rows"] = json::array();
    for (const auto& r : t.rows) j["rows"].push_back(r);
    os << j.dump(2) << "\n";
  }
  if (path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(path);
    f << os.str();
  }
}

struct UnitsMode {
  bool si = true;
};

double parse_length(const std::string& s, const UnitsMode& units) {
  if (!units.si) return std::stod(s);
  std::string num = s, suffix;
  for (size_t i = 0; i < s.size(); ++i) {
    if (std::isalpha(static_cast<unsigned char>(s[i]))) {
      num = s.substr(0, i);
      suffix = s.substr(i);
      break;
    }
  }
  const double v = std::stod(num);
  if (suffix.empty() || suffix == "nm") return v;
  if (suffix == "um") return v * 1e3;
  if (suffix == "m") return v * 1e9;
  throw CLI::ValidationError("length", "unknown unit suffix '" + suffix + "' (use nm, um, m)");
}

csso::Thermal parse_thermal(double temperature, const UnitsMode& units) {
  if (temperature == 0.0) return csso::Thermal::zero();
  if (units.si) return csso::Thermal::kelvin(temperature);
  return csso::Thermal{temperature};
}

csso::MseOrder parse_order(const std::string& s) {
  if (s == "exact") return csso::MseOrder::exact();
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("order", "expected 'exact' or 'k,l'");
  return csso::MseOrder::kl(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
}

struct MaterialFlags {
  double eps = 1.0, mu = 1.0;
  std::string drude;   // "wp,gamma" in eV
  std::string plasma;  // "wp" in eV
  bool pc = false;
  csso::MaterialModel build() const {
    if (pc) return csso::MaterialModel::perfect_conductor();
    if (!drude.empty()) {
      const auto comma = drude.find(',');
      if (comma == std::string::npos)
        throw CLI::ValidationError("drude", "expected 'omega_p,gamma' in eV");
      return csso::MaterialModel::drude(std::stod(drude.substr(0, comma)),
                                        std::stod(drude.substr(comma + 1)), mu);
    }
    if (!plasma.empty()) return csso::MaterialModel::plasma(std::stod(plasma), mu);
    return csso::MaterialModel::fixed(eps, mu);
  }
  void add_options(CLI::App* cmd, int idx) {
    const std::string n = std::to_string(idx);
    cmd->add_option("--eps" + n, eps, "relative permittivity of body " + n);
    cmd->add_option("--mu" + n, mu, "relative permeability of body " + n);
    cmd->add_option("--drude" + n, drude, "Drude model 'omega_p,gamma' in eV for body " + n);
    cmd->add_option("--plasma" + n, plasma, "plasma model 'omega_p' in eV for body " + n);
    cmd->add_flag("--pc" + n, pc, "perfect conductor for body " + n);
  }
};

json material_echo(const MaterialFlags& m) {
  json j;
  if (m.pc)
    j["model"] = "perfect_conductor";
  else if (!m.drude.empty())
    j["model"] = "drude:" + m.drude;
  else if (!m.plasma.empty())
    j["model"] = "plasma:" + m.plasma;
  else {
    j["model"] = "fixed";
    j["eps"] = m.eps;
    j["mu"] = m.mu;
  }
  return j;
}

int breakdown_rows(const csso::EnergyBreakdown& e, double unit, Table& t) {
  double cum = 0.0;
  for (const auto& term : e.terms) {
    const double v = (term.n == 0 ? 0.5 : 1.0) * term.value * unit;
    cum += v;
    t.rows.push_back({static_cast<double>(term.n), term.kappa, v, cum});
  }
  return e.converged ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir and Casimir-Polder interactions from surface scattering operators"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "flat key=value configuration file; flags override");
  app.require_subcommand(1);

  std::string format = "csv", output;
  std::string units_str = "si";
  app.add_option("--format", format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output, "output path (default stdout)");
  app.add_option("--units", units_str, "units mode: si or dimensionless")
      ->check(CLI::IsMember({"si", "dimensionless"}));

  // ---- plates / plates-sweep ----
  MaterialFlags mat1, mat2;
  std::string distance_str = "100nm", order_str = "exact", trunc_str = "body1";
  double temperature = 300.0;
  double rel_tol = 1e-9;
  bool want_force = false;
  auto add_plate_common = [&](CLI::App* cmd) {
    mat1.add_options(cmd, 1);
    mat2.add_options(cmd, 2);
    cmd->add_option("--temperature", temperature, "temperature in K (0 = T = 0); tau in 1/L when dimensionless");
    cmd->add_option("--order", order_str, "'exact' or 'k,l'");
    cmd->add_option("--truncation", trunc_str, "Neumann truncation side: body1 or both")
        ->check(CLI::IsMember({"body1", "both"}));
    cmd->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
    cmd->add_flag("--force", want_force, "report the force (pressure) instead of the energy");
  };
  auto* plates_cmd = app.add_subcommand("plates", "two-plate energy/force per unit area");
  plates_cmd->add_option("--distance", distance_str, "plate separation (nm/um/m suffix in SI mode)");
  add_plate_common(plates_cmd);

  auto* sweep_cmd = app.add_subcommand("plates-sweep", "two-plate energy over a distance grid");
  std::string dmin_str = "100nm", dmax_str = "1um";
  int sweep_num = 16;
  sweep_cmd->add_option("--dmin", dmin_str, "smallest separation");
  sweep_cmd->add_option("--dmax", dmax_str, "largest separation");
  sweep_cmd->add_option("--num", sweep_num, "number of (log-spaced) grid points");
  add_plate_common(sweep_cmd);

  // ---- sphere-eigs ----
  auto* sph_cmd = app.add_subcommand("sphere-eigs", "sphere surface-operator eigenvalues");
  MaterialFlags smat;
  smat.eps = 4.0;
  int sph_lmax = 3;
  double sph_kr = 1.0;
  std::string sph_method = "addition";
  sph_cmd->add_option("--lmax", sph_lmax, "largest partial wave");
  sph_cmd->add_option("--kappaR", sph_kr, "rescaled imaginary frequency kappa R");
  sph_cmd->add_option("--method", sph_method, "addition or quadrature")
      ->check(CLI::IsMember({"addition", "quadrature"}));
  smat.add_options(sph_cmd, 1);

  // ---- cylinder-eigs ----
  auto* cyl_cmd = app.add_subcommand("cylinder-eigs", "cylinder surface-operator eigenvalues");
  MaterialFlags cmat;
  cmat.eps = 30.0;
  int cyl_mmax = 2;
  double cyl_kr = 1.0, cyl_kz = 1.0;
  cyl_cmd->add_option("--mmax", cyl_mmax, "largest azimuthal index");
  cyl_cmd->add_option("--kappaR", cyl_kr, "rescaled imaginary frequency kappa R");
  cyl_cmd->add_option("--kzR", cyl_kz, "rescaled axial wavevector kz R");
  cmat.add_options(cyl_cmd, 1);

  // ---- cylinder-tmatrix ----
  auto* tm_cmd = app.add_subcommand("cylinder-tmatrix", "exact cylinder T-matrix elements");
  MaterialFlags tmat;
  tmat.eps = 30.0;
  int tm_m = 0;
  double tm_kr = 1.0, tm_kz = 1.0;
  int tm_p = -2;  // -2: exact only; >= -1 adds the MSE approximant
  tm_cmd->add_option("--m", tm_m, "azimuthal index");
  tm_cmd->add_option("--kappaR", tm_kr, "rescaled imaginary frequency");
  tm_cmd->add_option("--kzR", tm_kz, "rescaled axial wavevector");
  tm_cmd->add_option("--mse-order", tm_p, "also report the scattering-expansion approximant of this order");
  tmat.add_options(tm_cmd, 1);

  // ---- cp-plate ----
  auto* cp_cmd = app.add_subcommand("cp-plate", "Casimir-Polder energy above a plate");
  MaterialFlags cpmat;
  cpmat.eps = 2.0;
  double alpha0 = 1.0, omega_a = 5.0, beta0 = 0.0, omega_b = 0.0;
  std::string z0_str = "100nm";
  double cp_temperature = 0.0;
  std::string cp_order_str = "exact";
  cp_cmd->add_option("--alpha0", alpha0, "static electric polarizability (volume units, L^3)");
  cp_cmd->add_option("--omega-a", omega_a, "electric resonance in eV (0 = static)");
  cp_cmd->add_option("--beta0", beta0, "static magnetic polarizability");
  cp_cmd->add_option("--omega-b", omega_b, "magnetic resonance in eV (0 = static)");
  cp_cmd->add_option("--z0", z0_str, "particle height above the plate");
  cp_cmd->add_option("--temperature", cp_temperature, "temperature in K (0 = T = 0)");
  cp_cmd->add_option("--order", cp_order_str, "'exact' or 'k,l' (l = plate scatterings)");
  cpmat.add_options(cp_cmd, 1);

  // ---- static-eigs ----
  auto* st_cmd = app.add_subcommand("static-eigs", "static sphere kernel spectrum");
  double st_eps = 3.0;
  int st_lmax = 6, st_ntheta = 32;
  st_cmd->add_option("--eps1", st_eps, "body permittivity (vacuum background)");
  st_cmd->add_option("--lmax", st_lmax, "largest multipole");
  st_cmd->add_option("--ntheta", st_ntheta, "polar resolution of the Nystrom grid");

  auto* self_cmd = app.add_subcommand("selfcheck", "run the invariant suites");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage/input errors exit 1
  }

  UnitsMode units{units_str == "si"};
  const double energy_area_unit = units.si ? csso::hbar_c_eV_nm : 1.0;  // eV/nm^2 per (1/nm^3)

  try {
    if (plates_cmd->parsed() || sweep_cmd->parsed()) {
      csso::PlateConfig cfg;
      cfg.body1 = mat1.build();
      cfg.body2 = mat2.build();
      cfg.thermal = parse_thermal(temperature, units);
      cfg.quad.rel_tol = rel_tol;
      const auto order = parse_order(order_str);
      const auto trunc = (trunc_str == "both") ? csso::Truncation::BothBodies : csso::Truncation::Body1Only;
      json meta;
      meta["body1"] = material_echo(mat1);
      meta["body2"] = material_echo(mat2);
      meta["temperature"] = temperature;
      meta["order"] = order_str;
      meta["truncation"] = trunc_str;
      meta["units"] = units_str;
      meta["quantity"] = want_force ? "force_per_area" : "energy_per_area";

      int rc = 0;
      Table t;
      if (plates_cmd->parsed()) {
        cfg.distance = parse_length(distance_str, units);
        meta["distance"] = cfg.distance;
        const auto e = want_force ? casimir_force_per_area(cfg, order, trunc)
                                  : mse_energy_per_area(cfg, order, trunc);
        t.header = {"n", "kappa_n", "term", "cumulative"};
        t.meta = meta;
        rc = breakdown_rows(e, energy_area_unit, t);
        t.rows.push_back({-1.0, 0.0, e.total * energy_area_unit, e.total * energy_area_unit});
        meta["total"] = e.total * energy_area_unit;
        meta["converged"] = e.converged;
        t.meta = meta;
      } else {
        const double dmin = parse_length(dmin_str, units);
        const double dmax = parse_length(dmax_str, units);
        if (!(dmax > dmin) || sweep_num < 2) throw CLI::ValidationError("sweep", "need dmax > dmin, num >= 2");
        meta["dmin"] = dmin;
        meta["dmax"] = dmax;
        meta["num"] = sweep_num;
        t.header = {"distance", "value", "converged"};
        t.rows.resize(sweep_num);
        std::atomic<bool> all_ok{true};
        parallel_for(sweep_num, [&](int i) {
          csso::PlateConfig local = cfg;
          local.distance = dmin * std::pow(dmax / dmin, static_cast<double>(i) / (sweep_num - 1));
          const auto e = want_force ? casimir_force_per_area(local, order, trunc)
                                    : mse_energy_per_area(local, order, trunc);
          if (!e.converged) all_ok = false;
          t.rows[i] = {local.distance, e.total * energy_area_unit, e.converged ? 1.0 : 0.0};
        });
        rc = all_ok ? 0 : 2;
        meta["converged"] = all_ok.load();
        t.meta = meta;
      }
      emit(t, format, output);
      return rc;
    }

    if (sph_cmd->parsed()) {
      csso::SphereConfig cfg;
      cfg.material = smat.build();
      const auto method = (sph_method == "addition") ? csso::SphereMethod::AdditionTheorem
                                                     : csso::SphereMethod::Quadrature;
      Table t;
      t.header = {"l", "kappaR", "re1", "im1", "re2", "im2", "re3", "im3", "re4", "im4"};
      t.meta["material"] = material_echo(smat);
      t.meta["kappaR"] = sph_kr;
      t.meta["method"] = sph_method;
      for (int l = 1; l <= sph_lmax; ++l) {
        const auto b = sphere_sso_block(l, sph_kr, cfg, method);
        const auto ev = csso::block_eigenvalues(b.block);
        t.rows.push_back({static_cast<double>(l), sph_kr, ev[0].real(), ev[0].imag(), ev[1].real(),
                          ev[1].imag(), ev[2].real(), ev[2].imag(), ev[3].real(), ev[3].imag()});
      }
      emit(t, format, output);
      return 0;
    }

    if (cyl_cmd->parsed()) {
      csso::CylinderConfig cfg;
      cfg.material = cmat.build();
      Table t;
      t.header = {"m", "kappaR", "kzR", "re1", "im1", "re2", "im2", "re3", "im3", "re4", "im4"};
      t.meta["material"] = material_echo(cmat);
      for (int m = 0; m <= cyl_mmax; ++m) {
        const auto ev = csso::cyl_eigs(m, cyl_kr, cyl_kz, cfg);
        t.rows.push_back({static_cast<double>(m), cyl_kr, cyl_kz, ev[0].real(), ev[0].imag(),
                          ev[1].real(), ev[1].imag(), ev[2].real(), ev[2].imag(), ev[3].real(),
                          ev[3].imag()});
      }
      emit(t, format, output);
      return 0;
    }

    if (tm_cmd->parsed()) {
      csso::CylinderConfig cfg;
      cfg.material = tmat.build();
      const auto T = csso::t_exact(tm_m, tm_kr, tm_kz, cfg);
      json j;
      j["version"] = kVersion;
      j["config"] = {{"m", tm_m}, {"kappaR", tm_kr}, {"kzR", tm_kz}, {"material", material_echo(tmat)}};
      j["log_scale"] = T.log_scale;
      j["THH_scaled"] = T.entries_scaled(0, 0);
      j["TEE_scaled"] = T.entries_scaled(1, 1);
      j["THE_scaled"] = T.entries_scaled(0, 1);
      j["TEH_scaled"] = T.entries_scaled(1, 0);
      const double s = std::exp(T.log_scale);
      j["THH"] = T.entries_scaled(0, 0) * s;
      j["TEE"] = T.entries_scaled(1, 1) * s;
      j["THE"] = T.entries_scaled(0, 1) * s;
      j["TEH"] = T.entries_scaled(1, 0) * s;
      if (tm_p >= -1) {
        const auto Tm = csso::mse_t(tm_m, tm_kr, tm_kz, cfg, tm_p);
        j["mse_order"] = tm_p;
        j["THH_mse_scaled"] = Tm.entries_scaled(0, 0);
        j["TEE_mse_scaled"] = Tm.entries_scaled(1, 1);
        j["THE_mse_scaled"] = Tm.entries_scaled(0, 1);
        j["TEH_mse_scaled"] = Tm.entries_scaled(1, 0);
      }
      std::ostringstream os;
      os << j.dump(2) << "\n";
      if (output.empty())
        std::cout << os.str();
      else
        std::ofstream(output) << os.str();
      return 0;
    }

    if (cp_cmd->parsed()) {
      csso::Polarizability p;
      p.alpha0 = alpha0;
      p.kappa_a = omega_a > 0 ? omega_a / csso::hbar_c_eV_nm : 0.0;
      p.beta0 = beta0;
      p.kappa_b = omega_b > 0 ? omega_b / csso::hbar_c_eV_nm : 0.0;
      const double z0 = parse_length(z0_str, units);
      const auto thermal = parse_thermal(cp_temperature, units);
      const auto e = csso::cp_energy(p, z0, cpmat.build(), thermal, parse_order(cp_order_str));
      const double unit = units.si ? csso::hbar_c_eV_nm : 1.0;  // eV per (1/nm)
      Table t;
      t.header = {"n", "kappa_n", "term", "cumulative"};
      t.meta["z0"] = z0;
      t.meta["alpha0"] = alpha0;
      t.meta["material"] = material_echo(cpmat);
      t.meta["temperature"] = cp_temperature;
      const int rc = breakdown_rows(e, unit, t);
      t.rows.push_back({-1.0, 0.0, e.total * unit, e.total * unit});
      t.meta["total"] = e.total * unit;
      t.meta["converged"] = e.converged;
      emit(t, format, output);
      return rc;
    }

    if (st_cmd->parsed()) {
      const auto contrast = csso::StaticContrast((1.0 - st_eps) / (1.0 + st_eps));
      const auto lam = csso::static_sphere_eigs(st_lmax, contrast, st_ntheta);
      Table t;
      t.header = {"l", "lambda", "bound"};
      t.meta["eps1"] = st_eps;
      t.meta["contrast"] = contrast.value;
      t.meta["ntheta"] = st_ntheta;
      for (size_t l = 0; l < lam.size(); ++l)
        t.rows.push_back({static_cast<double>(l), lam[l], std::abs(contrast.value)});
      emit(t, format, output);
      return 0;
    }

    if (self_cmd->parsed()) {
      const auto results = csso::run_selfcheck();
      bool all = true;
      for (const auto& r : results) {
        std::printf("%-14s %s%s%s\n", r.suite.c_str(), r.pass ? "PASS" : "FAIL",
                    r.pass ? "" : ": ", r.pass ? "" : r.detail.c_str());
        all = all && r.pass;
      }
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
