#include "cohgeom/finite_difference.hpp"

#include <cmath>
#include <string>

#include "cohgeom/errors.hpp"

namespace cohgeom {

namespace {

void require_step(double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw UsageError("finite-difference step must be positive");
}

ComplexVector central_difference(const ParameterMap& map, std::vector<double>& x, std::size_t a, double h) {
  const double x0 = x[a];
  x[a] = x0 + h;
  const StateVector plus = map(x);
  x[a] = x0 - h;
  const StateVector minus = map(x);
  x[a] = x0;
  if (plus.size() != minus.size()) throw NumericalError("map changed dimension across the stencil");
  return (plus.amplitudes() - minus.amplitudes()) / (2.0 * h);
}

Eigen::MatrixXd hessian_at_step(const RealFunction& f, std::vector<double>& x, double h, double center) {
  const std::size_t n = x.size();
  Eigen::MatrixXd H(n, n);
  auto eval = [&](std::size_t a, double da, std::size_t b, double db) {
    const double xa = x[a];
    const double xb = x[b];
    x[a] += da;
    x[b] += db;
    const double value = f(x);
    x[a] = xa;
    x[b] = xb;
    if (!std::isfinite(value)) throw NumericalError("function is not finite near the evaluation point");
    return value;
  };
  for (std::size_t a = 0; a < n; ++a) {
    H(a, a) = (eval(a, h, a, 0.0) - 2.0 * center + eval(a, -h, a, 0.0)) / (h * h);
    for (std::size_t b = a + 1; b < n; ++b) {
      const double mixed = (eval(a, h, b, h) - eval(a, h, b, -h) - eval(a, -h, b, h) + eval(a, -h, b, -h)) / (4.0 * h * h);
      H(a, b) = mixed;
      H(b, a) = mixed;
    }
  }
  return H;
}

}  // namespace

std::vector<ComplexVector> central_jacobian(const ParameterMap& map, std::span<const double> x, double step) {
  require_step(step);
  std::vector<double> point(x.begin(), x.end());
  std::vector<ComplexVector> columns;
  columns.reserve(point.size());
  for (std::size_t a = 0; a < point.size(); ++a) {
    const ComplexVector coarse = central_difference(map, point, a, step);
    const ComplexVector fine = central_difference(map, point, a, 0.5 * step);
    columns.push_back((4.0 * fine - coarse) / 3.0);
  }
  return columns;
}

Eigen::MatrixXd central_hessian(const RealFunction& f, std::span<const double> x, double step) {
  require_step(step);
  std::vector<double> point(x.begin(), x.end());
  const double center = f(point);
  if (!std::isfinite(center)) throw NumericalError("function is not finite at the evaluation point");
  const Eigen::MatrixXd coarse = hessian_at_step(f, point, step, center);
  const Eigen::MatrixXd fine = hessian_at_step(f, point, 0.5 * step, center);
  return (4.0 * fine - coarse) / 3.0;
}

Eigen::MatrixXcd complex_hessian(const Eigen::MatrixXd& H) {
  if (H.rows() != H.cols() || H.rows() % 2 != 0) throw UsageError("complex_hessian needs an even square matrix");
  const Eigen::Index k = H.rows() / 2;
  Eigen::MatrixXcd C(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      C(i, j) = 0.25 * Complex(H(2 * i, 2 * j) + H(2 * i + 1, 2 * j + 1), H(2 * i, 2 * j + 1) - H(2 * i + 1, 2 * j));
    }
  }
  return C;
}

}  // namespace cohgeom
