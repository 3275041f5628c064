#pragma once

// Basis-agnostic block-operator algebra: Neumann sums, round-trip operator
// and its log-determinant, Matsubara summation and the zero-temperature
// frequency integral.

#include "casimir_sso/core.hpp"
#include "casimir_sso/quadrature.hpp"

#include <array>
#include <complex>
#include <functional>

namespace csso {

// sum_{p=0}^{l} K^p; order 0 is the identity.
PolarizationBlock neumann_inverse(const PolarizationBlock& K, int order);

struct RoundTripResult {
  PolarizationBlock matrix;      // N
  double logdet_one_minus = 0.0; // ln det(1 - N)
};

// N = inv(1-K11) K12 inv(1-K22) K21 with exact inverses, or the order-l
// Neumann truncation of both inverses.
RoundTripResult round_trip(const PolarizationBlock& K11, const PolarizationBlock& K12,
                           const PolarizationBlock& K22, const PolarizationBlock& K21,
                           const MseOrder& inner = MseOrder::exact());

// ln det(1 - x*N) evaluated without cancellation for small x (series) and by
// LU otherwise; throws if det(1 - x N) <= 0.
double logdet_one_minus_scaled(const PolarizationBlock& N, double x);

// k_B T [ 1/2 term(0) + sum_{n>=1} term(n tau) ] with k_B T = tau/(2 pi) in
// natural units.  term(0) must already be the static-path value.  The sum is
// truncated once |term| < rel_tol * |partial sum| three times in a row.
EnergyBreakdown matsubara_sum(const std::function<double(double)>& term, double tau,
                              const QuadratureConfig& cfg = {}, int n_max = 100000);

// (1/(2 pi)) Integral_0^inf dkappa term(kappa); scale sets the t/(1-t) map.
IntegralResult zero_temperature_integral(const std::function<double(double)>& term,
                                         const QuadratureConfig& cfg = {}, double scale = 1.0);

// Eigenvalues of a real 4x4 block, sorted by descending modulus, then by
// descending real part, then descending imaginary part.
std::array<std::complex<double>, 4> block_eigenvalues(const PolarizationBlock& K);

}  // namespace csso
