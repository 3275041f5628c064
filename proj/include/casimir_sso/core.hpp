#pragma once

// Shared value types and unit conventions.
//
// The library works in natural units hbar = c = k_B = 1 with one length unit
// chosen by the caller; wavenumbers are in inverse length units, energies in
// hbar*c / length.  Dispersive material models (Drude, plasma) fix the length
// unit to nanometers through hbar*c = 197.3269804 eV nm; constant-epsilon
// models are unit-agnostic.  Temperature enters only through the first
// Matsubara wavenumber tau = 2 pi k_B T / (hbar c).

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace csso {

inline constexpr double hbar_c_eV_nm = 197.3269804;   // CODATA
inline constexpr double k_B_eV_per_K = 8.617333262e-5;

struct Wavenumber {
  double kappa = 0.0;  // xi/c, inverse length, >= 0
  explicit Wavenumber(double k) : kappa(k) {
    if (!(k >= 0.0) || !std::isfinite(k)) throw std::invalid_argument("Wavenumber must be finite and >= 0");
  }
};

struct MediumResponse {
  double eps = 1.0;
  double mu = 1.0;
  MediumResponse() = default;
  MediumResponse(double e, double m) : eps(e), mu(m) {
    if (!(e > 0.0) || !(m > 0.0)) throw std::invalid_argument("MediumResponse requires eps > 0 and mu > 0");
  }
  static MediumResponse vacuum() { return MediumResponse(1.0, 1.0); }
};

// Material models along the imaginary frequency axis.  Drude and plasma
// parameters are in eV; evaluation converts kappa [1/nm] to xi = kappa*hbar*c.
class MaterialModel {
 public:
  enum class Kind { Fixed, Drude, Plasma, PerfectConductor };

  static MaterialModel fixed(double eps, double mu = 1.0);
  static MaterialModel drude(double omega_p_eV, double gamma_eV, double mu = 1.0);
  static MaterialModel plasma(double omega_p_eV, double mu = 1.0);
  static MaterialModel perfect_conductor();

  Kind kind() const { return kind_; }
  bool is_perfect_conductor() const { return kind_ == Kind::PerfectConductor; }

  // epsilon(i xi), mu at kappa [1/nm].  Throws for PerfectConductor and for
  // Drude at kappa = 0 (static limit handled by the statics module).
  MediumResponse evaluate(double kappa) const;

  // Static electric/magnetic reflection amplitudes against a background,
  // r_e(0) = (eps(0) - eps0)/(eps(0) + eps0); Drude/plasma/PC give 1.
  double static_reflection_e(const MediumResponse& bg) const;
  double static_reflection_m(const MediumResponse& bg) const;

  double omega_p_eV() const { return omega_p_; }
  double gamma_eV() const { return gamma_; }

 private:
  Kind kind_ = Kind::Fixed;
  double eps_ = 1.0, mu_ = 1.0;
  double omega_p_ = 0.0, gamma_ = 0.0;
};

struct CustomCoefficients {
  // Per-body interior/exterior coefficient pairs acting on (E, H) components.
  double ci_E = 1.0, ci_H = 1.0, ce_E = 1.0, ce_H = 1.0;
};

// Coefficient choice for the surface operators; C1 is the weakly singular
// formulation used throughout the backends, C2 kept for block construction.
struct CoefficientChoice {
  enum class Kind { C1, C2, Custom } kind = Kind::C1;
  CustomCoefficients custom{};
  static CoefficientChoice c1() { return {}; }
  static CoefficientChoice c2() { return {Kind::C2, {}}; }
};

// Expansion order (k, l): 2(k+1) inter-body scatterings, l intra-body
// scatterings; exact() selects the closed-form inverse everywhere.
struct MseOrder {
  bool is_exact = true;
  int k = 0;
  int l = 0;
  static MseOrder exact() { return {}; }
  static MseOrder kl(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("MseOrder indices must be >= 0");
    return {false, k, l};
  }
};

struct ModeIndex {
  enum class Kind { PlaneWave, Spherical, Cylindrical } kind = Kind::PlaneWave;
  double k = 0.0;   // |k_par| for plane waves
  int l = 1;        // spherical index
  int m = 0;        // cylindrical azimuthal index
  double kz = 0.0;  // cylindrical axial wavevector
  static ModeIndex plane_wave(double kpar);
  static ModeIndex spherical(int l);
  static ModeIndex cylindrical(int m, double kz);
};

// 4x4 block of a surface scattering operator for one mode.  Row/column order
// is (E1, E2, H1, H2) over two orthonormal tangential directions; each
// backend documents its choice of directions 1 and 2.
using PolarizationBlock = Eigen::Matrix4d;

struct EnergyBreakdown {
  struct Term {
    int n;
    double kappa;
    double value;  // contribution before the 1/2 weight at n = 0
  };
  std::vector<Term> terms;
  double total = 0.0;          // 0.5*value(0) + sum_{n>=1} value(n)
  double tail_estimate = 0.0;  // magnitude of the last included term
  bool converged = true;
};

// Thermal state: tau = 2 pi k_B T/(hbar c) in inverse length units; tau = 0
// selects the zero-temperature integral.
struct Thermal {
  double tau = 0.0;
  static Thermal zero() { return {0.0}; }
  static Thermal kelvin(double T) {
    if (T < 0.0) throw std::invalid_argument("temperature must be >= 0");
    return {2.0 * M_PI * k_B_eV_per_K * T / hbar_c_eV_nm};  // 1/nm
  }
  bool is_zero() const { return tau == 0.0; }
  double k_B_T() const { return tau / (2.0 * M_PI); }  // in hbar*c/length units
};

// kappa_n = 2 pi n k_B T/(hbar c) for n = 0..n_max, in 1/nm.
std::vector<double> matsubara_grid(double temperature_K, int n_max);

MediumResponse evaluate_material(const MaterialModel& model, double kappa);

}  // namespace csso
