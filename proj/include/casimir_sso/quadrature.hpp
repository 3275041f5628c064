#pragma once

// Adaptive quadrature helpers used by the mode integrals.

#include <functional>

namespace csso {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_subdivisions = 15;  // adaptive bisection depth
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  operator double() const { return value; }
};

// Adaptive Gauss-Kronrod on a finite interval.
IntegralResult integrate(const std::function<double(double)>& f, double a, double b,
                         const QuadratureConfig& cfg = {});

// Integral over [0, inf) via the map x = scale * t/(1-t).
IntegralResult integrate_semi_infinite(const std::function<double(double)>& f, double scale,
                                       const QuadratureConfig& cfg = {});

// Same integral via x = scale * sinh(u), u in [0, u_max); used as the
// cross-check map in tests.
IntegralResult integrate_semi_infinite_sinh(const std::function<double(double)>& f, double scale,
                                            const QuadratureConfig& cfg = {});

// Double-exponential rule for integrands with endpoint singularities.
IntegralResult integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b,
                                   const QuadratureConfig& cfg = {});

// Classical Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, double* nodes, double* weights);

}  // namespace csso
