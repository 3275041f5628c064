#include "casimir_sso/bessel.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

namespace csso::bessel {

namespace {

void disable_gsl_abort() {
  static std::once_flag flag;
  std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

double checked(int status, const gsl_sf_result& r, const char* what, int order, double x) {
  if (status != GSL_SUCCESS && status != GSL_EUNDRFLW) {
    throw std::domain_error(std::string(what) + " failed (order " + std::to_string(order) +
                            ", x=" + std::to_string(x) + "): " + gsl_strerror(status));
  }
  return r.val;
}

}  // namespace

double cyl_i_scaled(int m, double x) {
  disable_gsl_abort();
  gsl_sf_result r;
  int status = gsl_sf_bessel_In_scaled_e(m, x, &r);
  return checked(status, r, "In_scaled", m, x);
}

double cyl_k_scaled(int m, double x) {
  disable_gsl_abort();
  gsl_sf_result r;
  int status = gsl_sf_bessel_Kn_scaled_e(m, x, &r);
  return checked(status, r, "Kn_scaled", m, x);
}

double cyl_i_scaled_prime(int m, double x) {
  // I_m' = (I_{m-1} + I_{m+1})/2; I_{-n} = I_n.
  const int ml = (m - 1 < 0) ? 1 - m : m - 1;
  return 0.5 * (cyl_i_scaled(ml, x) + cyl_i_scaled(m + 1, x));
}

double cyl_k_scaled_prime(int m, double x) {
  // K_m' = -(K_{m-1} + K_{m+1})/2; K_{-n} = K_n.
  const int ml = (m - 1 < 0) ? 1 - m : m - 1;
  return -0.5 * (cyl_k_scaled(ml, x) + cyl_k_scaled(m + 1, x));
}

double sph_i_scaled(int l, double x) {
  disable_gsl_abort();
  gsl_sf_result r;
  int status = gsl_sf_bessel_il_scaled_e(l, x, &r);
  return checked(status, r, "il_scaled", l, x);
}

double sph_k_scaled(int l, double x) {
  disable_gsl_abort();
  gsl_sf_result r;
  int status = gsl_sf_bessel_kl_scaled_e(l, x, &r);
  // GSL normalizes k_l = sqrt(pi/(2x)) K_{l+1/2}; we use sqrt(2/(pi x)).
  return (2.0 / M_PI) * checked(status, r, "kl_scaled", l, x);
}

double sph_i_scaled_prime(int l, double x) {
  // i_l'(x) = i_{l-1}(x) - (l+1)/x i_l(x); i_{-1}(x) = cosh(x)/x -> scaled (1+e^{-2x})/(2x).
  double ilm1;
  if (l == 0) {
    ilm1 = (1.0 + std::exp(-2.0 * x)) / (2.0 * x);
  } else {
    ilm1 = sph_i_scaled(l - 1, x);
  }
  return ilm1 - (l + 1) / x * sph_i_scaled(l, x);
}

double sph_k_scaled_prime(int l, double x) {
  // k_l'(x) = -k_{l-1}(x) - (l+1)/x k_l(x); k_{-1}(x) = k_0(x) in this normalization.
  const double klm1 = (l == 0) ? sph_k_scaled(0, x) : sph_k_scaled(l - 1, x);
  return -klm1 - (l + 1) / x * sph_k_scaled(l, x);
}

double cyl_i(int m, double x) { return cyl_i_scaled(m, x) * std::exp(x); }
double cyl_k(int m, double x) { return cyl_k_scaled(m, x) * std::exp(-x); }

}  // namespace csso::bessel
