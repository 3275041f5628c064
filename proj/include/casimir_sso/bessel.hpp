#pragma once

// Exponentially scaled modified Bessel functions, cylindrical and spherical.
// All evaluations in the library go through this component so that products
// like I_m(x) K_m(x) stay finite for arguments up to x ~ 1e3 and beyond.
//
// Conventions:
//   cyl_i_scaled(m, x) = e^{-x} I_m(x)
//   cyl_k_scaled(m, x) = e^{+x} K_m(x)
//   sph_i_scaled(l, x) = e^{-x} i_l(x),  i_l(x) = sqrt(pi/(2x)) I_{l+1/2}(x)
//   sph_k_scaled(l, x) = e^{+x} k_l(x),  k_l(x) = sqrt(2/(pi x)) K_{l+1/2}(x)
// so that k_0(x) = e^{-x}/x and i_l(x) k_l(x) = sph_i_scaled * sph_k_scaled.
// Derivatives are with respect to x and carry the same scaling factor as the
// function itself (i.e. cyl_i_scaled_prime = e^{-x} I_m'(x)).

namespace csso::bessel {

double cyl_i_scaled(int m, double x);
double cyl_k_scaled(int m, double x);
double cyl_i_scaled_prime(int m, double x);
double cyl_k_scaled_prime(int m, double x);

double sph_i_scaled(int l, double x);
double sph_k_scaled(int l, double x);
double sph_i_scaled_prime(int l, double x);
double sph_k_scaled_prime(int l, double x);

// Unscaled variants; overflow/underflow for large x is the caller's problem.
double cyl_i(int m, double x);
double cyl_k(int m, double x);

}  // namespace csso::bessel
