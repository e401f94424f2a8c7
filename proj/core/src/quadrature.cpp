#include "cohgeom/quadrature.hpp"

#include <memory>
#include <numbers>

#include <gsl/gsl_integration.h>

#include "cohgeom/errors.hpp"

namespace cohgeom {

QuadratureRule gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw UsageError("gauss_legendre needs at least one node");
  const std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
      gsl_integration_glfixed_table_alloc(n), &gsl_integration_glfixed_table_free);
  if (!table) throw NumericalError("gauss_legendre: could not build the rule");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) gsl_integration_glfixed_point(a, b, i, &rule.nodes[i], &rule.weights[i], table.get());
  return rule;
}

Complex integrate_disk(const std::function<Complex(Complex)>& f, std::size_t radial_order, std::size_t angular_points) {
  if (angular_points == 0) throw UsageError("integrate_disk needs angular points");
  const QuadratureRule radial = gauss_legendre(radial_order, 0.0, 1.0);
  const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(angular_points);
  Complex total = 0.0;
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double r = radial.nodes[i];
    Complex ring = 0.0;
    for (std::size_t a = 0; a < angular_points; ++a) ring += f(std::polar(r, dtheta * static_cast<double>(a)));
    total += radial.weights[i] * r * dtheta * ring;
  }
  return total;
}

}  // namespace cohgeom
