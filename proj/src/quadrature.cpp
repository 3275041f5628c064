#include "casimir_sso/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <stdexcept>

namespace csso {

IntegralResult integrate(const std::function<double(double)>& f, double a, double b,
                         const QuadratureConfig& cfg) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  IntegralResult r;
  double l1 = 0.0;
  r.value = GK::integrate(f, a, b, cfg.max_subdivisions, cfg.rel_tol, &r.error_estimate, &l1);
  r.converged = r.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value)) * 10.0 ||
                r.error_estimate <= cfg.abs_tol;
  return r;
}

IntegralResult integrate_semi_infinite(const std::function<double(double)>& f, double scale,
                                       const QuadratureConfig& cfg) {
  if (!(scale > 0.0)) throw std::invalid_argument("integration scale must be > 0");
  auto mapped = [&f, scale](double t) {
    const double om = 1.0 - t;
    const double x = scale * t / om;
    return f(x) * scale / (om * om);
  };
  return integrate(mapped, 0.0, 1.0, cfg);
}

IntegralResult integrate_semi_infinite_sinh(const std::function<double(double)>& f, double scale,
                                            const QuadratureConfig& cfg) {
  if (!(scale > 0.0)) throw std::invalid_argument("integration scale must be > 0");
  auto mapped = [&f, scale](double u) {
    const double x = scale * std::sinh(u);
    return f(x) * scale * std::cosh(u);
  };
  // exp decay of the physical integrands makes u ~ 40 plenty
  return integrate(mapped, 0.0, 40.0, cfg);
}

IntegralResult integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b,
                                   const QuadratureConfig& cfg) {
  boost::math::quadrature::tanh_sinh<double> ts;
  IntegralResult r;
  double err = 0.0, l1 = 0.0;
  r.value = ts.integrate(f, a, b, cfg.rel_tol, &err, &l1);
  r.error_estimate = err * std::abs(r.value);
  r.converged = err <= cfg.rel_tol * 100.0;
  return r;
}

void gauss_legendre(int n, double* nodes, double* weights) {
  // Newton iteration on Legendre polynomials; standard and deterministic.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

}  // namespace csso
