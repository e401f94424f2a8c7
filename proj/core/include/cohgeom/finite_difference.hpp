#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cohgeom/types.hpp"

namespace cohgeom {

inline constexpr double kDefaultFirstDerivativeStep = 1e-4;
inline constexpr double kDefaultSecondDerivativeStep = 1e-3;
/// Curvature differentiates a metric that is itself a difference quotient, so
/// the outer stencil is wider to keep roundoff from being amplified.
inline constexpr double kDefaultCurvatureStep = 1e-2;

using RealFunction = std::function<double(std::span<const double>)>;

/// Partial derivatives of a vector-valued map by central differences with one
/// Richardson level: (4 D(h/2) - D(h)) / 3. Column a holds d map / d x_a.
std::vector<ComplexVector> central_jacobian(const ParameterMap& map, std::span<const double> x, double step);

/// Real Hessian of f by central differences with one Richardson level.
/// Throws NumericalError if f is non-finite at any stencil point.
Eigen::MatrixXd central_hessian(const RealFunction& f, std::span<const double> x, double step);

/// d^2 f / dzeta^i dzetabar^j from a real Hessian in interleaved coordinates:
/// (1/4) [f_xixj + f_yiyj + i (f_xiyj - f_yixj)].
Eigen::MatrixXcd complex_hessian(const Eigen::MatrixXd& real_hessian);

}  // namespace cohgeom
