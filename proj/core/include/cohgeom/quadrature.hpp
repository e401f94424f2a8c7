#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cohgeom/types.hpp"

namespace cohgeom {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(std::size_t n, double a, double b);

/// Integral over the unit disk (Lebesgue measure dx dy): Gauss-Legendre in
/// the radius times the trapezoid rule in the angle.
Complex integrate_disk(const std::function<Complex(Complex)>& f, std::size_t radial_order,
                       std::size_t angular_points);

}  // namespace cohgeom
