#include "cohgeom/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cohgeom/errors.hpp"
#include "cohgeom/projective.hpp"

namespace cohgeom {

MetricTensor::MetricTensor(Eigen::MatrixXcd g) : g_(std::move(g)) {
  if (g_.rows() == 0 || g_.rows() != g_.cols()) throw UsageError("MetricTensor needs a nonempty square matrix");
  if (!g_.allFinite()) throw NumericalError("MetricTensor entries must be finite");
  const double scale = std::max(1.0, g_.cwiseAbs().maxCoeff());
  const double asymmetry = (g_ - g_.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-10 * scale) {
    throw NumericalError("MetricTensor is not Hermitian (deviation " + std::to_string(asymmetry) + ")");
  }
  g_ = 0.5 * (g_ + g_.adjoint()).eval();
}

MetricTensor MetricTensor::from_real_form(const Eigen::MatrixXd& G) {
  if (G.rows() != G.cols() || G.rows() == 0 || G.rows() % 2 != 0) {
    throw UsageError("from_real_form needs a 2k x 2k matrix");
  }
  const Eigen::Index k = G.rows() / 2;
  Eigen::MatrixXcd g(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const double re = 0.25 * (G(2 * i, 2 * j) + G(2 * i + 1, 2 * j + 1));
      const double im = 0.25 * (G(2 * i, 2 * j + 1) - G(2 * i + 1, 2 * j));
      g(i, j) = Complex(re, im);
    }
  }
  return MetricTensor(std::move(g));
}

Eigen::MatrixXd MetricTensor::real_form() const {
  const Eigen::Index k = g_.rows();
  Eigen::MatrixXd G(2 * k, 2 * k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const double a = g_(i, j).real();
      const double b = g_(i, j).imag();
      G(2 * i, 2 * j) = 2.0 * a;
      G(2 * i + 1, 2 * j + 1) = 2.0 * a;
      G(2 * i, 2 * j + 1) = 2.0 * b;
      G(2 * i + 1, 2 * j) = -2.0 * b;
    }
  }
  return G;
}

double MetricTensor::line_element(const ComplexVector& dzeta) const {
  if (dzeta.size() != g_.rows()) throw UsageError("line_element: direction has the wrong dimension");
  // sum_ij g_ij dz^i conj(dz^j)
  const Complex q = (dzeta.transpose() * g_ * dzeta.conjugate()).value();
  return 2.0 * q.real();
}

double MetricTensor::determinant() const { return g_.determinant().real(); }

double fs_distance(const StateVector& v, const StateVector& w) {
  if (v.size() != w.size()) throw UsageError("fs_distance: dimension mismatch");
  if (v.is_zero() || w.is_zero()) throw UsageError("fs_distance: zero vector");
  const ComplexVector a = v.amplitudes().normalized();
  const ComplexVector b = w.amplitudes().normalized();
  const Complex overlap = a.dot(b);
  // atan2 keeps precision for nearly equal rays, where acos would not
  const double sine = (b - overlap * a).norm();
  return 2.0 * std::atan2(sine, std::abs(overlap));
}

MetricTensor fs_metric_chart(const ChartPoint& zeta) {
  const double r2 = zeta.squared_norm();
  const Eigen::Index k = zeta.coords.size();
  if (k == 0) throw UsageError("fs_metric_chart needs k >= 1");
  const Eigen::MatrixXcd outer = zeta.coords.conjugate() * zeta.coords.transpose();
  const Eigen::MatrixXcd g = 2.0 * ((1.0 + r2) * Eigen::MatrixXcd::Identity(k, k) - outer) / ((1.0 + r2) * (1.0 + r2));
  return MetricTensor(g);
}

MetricTensor hyperbolic_metric_chart(const ChartPoint& zeta) {
  const double r2 = zeta.squared_norm();
  const Eigen::Index k = zeta.coords.size();
  if (k == 0) throw UsageError("hyperbolic_metric_chart needs k >= 1");
  if (!(r2 < 1.0)) throw DomainError("hyperbolic_metric_chart: point lies outside the unit ball");
  const Eigen::MatrixXcd outer = zeta.coords.conjugate() * zeta.coords.transpose();
  const Eigen::MatrixXcd g = 2.0 * ((1.0 - r2) * Eigen::MatrixXcd::Identity(k, k) + outer) / ((1.0 - r2) * (1.0 - r2));
  return MetricTensor(g);
}

MetricTensor kahler_metric(const KahlerPotential& potential, const ChartPoint& zeta, double step) {
  const RealFunction f = [&](std::span<const double> x) { return potential(deinterleave(x)); };
  const Eigen::MatrixXd H = central_hessian(f, interleave(zeta.coords), step);
  return MetricTensor(0.5 * complex_hessian(H));
}

Eigen::MatrixXd pullback_metric(const ParameterMap& map, std::span<const double> params,
                                const InnerProductSpace& space, double step) {
  const StateVector z = map(params);
  if (z.size() != space.dim()) {
    throw UsageError("pullback_metric: map image has dimension " + std::to_string(z.size()) + ", space has " +
                     std::to_string(space.dim()));
  }
  const std::vector<ComplexVector> d = central_jacobian(map, params, step);

  const Eigen::VectorXd signs = Eigen::Map<const Eigen::VectorXi>(space.signs().data(), static_cast<Eigen::Index>(space.dim())).cast<double>();
  auto ip = [&](const ComplexVector& u, const ComplexVector& v) { return u.dot(signs.asDiagonal() * v); };

  const double zz = ip(z.amplitudes(), z.amplitudes()).real();
  if (std::abs(zz) <= 1e-13 * z.amplitudes().squaredNorm()) {
    throw NumericalError("pullback_metric: degenerate image, <z,z> = " + std::to_string(zz));
  }
  const double sign = space.is_definite() ? 4.0 : -4.0;
  const std::size_t m = d.size();
  std::vector<Complex> zd(m);
  for (std::size_t a = 0; a < m; ++a) zd[a] = ip(z.amplitudes(), d[a]);

  Eigen::MatrixXd G(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      const Complex numerator = zz * ip(d[a], d[b]) - std::conj(zd[a]) * zd[b];
      G(a, b) = sign * numerator.real() / (zz * zz);
      G(b, a) = G(a, b);
    }
  }
  return G;
}

ParameterMap on_real_coordinates(HolomorphicMap map) {
  return [map = std::move(map)](std::span<const double> x) { return map(deinterleave(x)); };
}

MetricField pullback_metric_field(HolomorphicMap map, InnerProductSpace space, double step) {
  return [real_map = on_real_coordinates(std::move(map)), space = std::move(space), step](const ChartPoint& zeta) {
    return MetricTensor::from_real_form(pullback_metric(real_map, interleave(zeta.coords), space, step));
  };
}

double scalar_curvature(const MetricField& field, const ChartPoint& zeta, double step) {
  const MetricTensor g = field(zeta);
  const double det0 = g.determinant();
  if (!(det0 > 0.0)) throw NumericalError("scalar_curvature: singular metric at the evaluation point");

  const RealFunction log_det = [&](std::span<const double> x) {
    const double det = field(ChartPoint{deinterleave(x), zeta.patch}).determinant();
    if (!(det > 0.0)) throw NumericalError("scalar_curvature: singular metric near the evaluation point");
    return std::log(det);
  };
  const Eigen::MatrixXcd ddbar = complex_hessian(central_hessian(log_det, interleave(zeta.coords), step));
  const Eigen::MatrixXcd contracted = g.entries().inverse() * ddbar;
  return -2.0 * contracted.trace().real();
}

double max_abs_deviation(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("max_abs_deviation: shape mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace cohgeom
