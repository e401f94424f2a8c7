#pragma once

#include <functional>
#include <span>
#include <string_view>

#include <Eigen/Dense>

#include "cohgeom/finite_difference.hpp"
#include "cohgeom/types.hpp"

namespace cohgeom {

/// Hermitian metric g_{i jbar} at a chart point. The real line element is
///   ds^2 = 2 Re sum_{ij} g_{i jbar} dzeta^i conj(dzeta^j),
/// so a line element written "ds^2 = c dzetabar dzeta" corresponds to g = c / 2.
class MetricTensor {
 public:
  static constexpr std::string_view convention = "ds^2 = 2 Re sum_ij g_ij dzeta^i conj(dzeta^j)";

  /// Throws NumericalError unless g is square and Hermitian to 1e-10 relative.
  explicit MetricTensor(Eigen::MatrixXcd g);

  /// Builds g from a real symmetric metric in interleaved coordinates
  /// (Re z1, Im z1, ...). Exact inverse of real_form() on Hermitian-type metrics.
  static MetricTensor from_real_form(const Eigen::MatrixXd& real_metric);

  [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(g_.rows()); }
  [[nodiscard]] const Eigen::MatrixXcd& entries() const noexcept { return g_; }
  [[nodiscard]] Complex operator()(std::size_t i, std::size_t j) const {
    return g_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// Real 2k x 2k quadratic form of ds^2 in interleaved coordinates.
  [[nodiscard]] Eigen::MatrixXd real_form() const;
  [[nodiscard]] double line_element(const ComplexVector& dzeta) const;
  [[nodiscard]] MetricTensor scaled(double factor) const { return MetricTensor(g_ * factor); }
  [[nodiscard]] double determinant() const;

 private:
  Eigen::MatrixXcd g_;
};

using MetricField = std::function<MetricTensor(const ChartPoint&)>;
using KahlerPotential = std::function<double(const ComplexVector&)>;
using HolomorphicMap = std::function<StateVector(const ComplexVector&)>;

/// Fubini-Study distance 2 arccos sqrt(|<v,w>|^2 / (<v,v><w,w>)) in [0, pi].
double fs_distance(const StateVector& v, const StateVector& w);

/// Fubini-Study metric 4[(1+|z|^2)|dz|^2 - |zbar.dz|^2]/(1+|z|^2)^2.
MetricTensor fs_metric_chart(const ChartPoint& zeta);

/// Hyperbolic metric 4[(1-|z|^2)|dz|^2 + |zbar.dz|^2]/(1-|z|^2)^2 on the unit
/// ball. Throws DomainError outside it.
MetricTensor hyperbolic_metric_chart(const ChartPoint& zeta);

/// Kahler metric ds^2 = d^2K/dzeta^i dzetabar^j dzeta^i dzetabar^j by finite differences.
MetricTensor kahler_metric(const KahlerPotential& potential, const ChartPoint& zeta,
                           double step = kDefaultSecondDerivativeStep);

/// Real metric induced on the parameters of `map` by the ambient projective
/// metric of `space`:
///   definite:   G_ab =  4 Re[<z,z><d_a z,d_b z> - <d_a z,z><z,d_b z>] / <z,z>^2
///   indefinite: G_ab = -4 Re[ same, with the signed product ] / <z,z>^2
/// Throws NumericalError if <z,z> vanishes at params.
Eigen::MatrixXd pullback_metric(const ParameterMap& map, std::span<const double> params,
                                const InnerProductSpace& space, double step = kDefaultFirstDerivativeStep);

/// Adapts a map on complex chart coordinates to interleaved real parameters.
ParameterMap on_real_coordinates(HolomorphicMap map);

/// Hermitian metric field induced by a holomorphic chart map.
MetricField pullback_metric_field(HolomorphicMap map, InnerProductSpace space,
                                  double step = kDefaultFirstDerivativeStep);

/// Kahler scalar curvature R = -2 g^{i jbar} d_i d_jbar ln det g (unit sphere: 2).
/// Throws NumericalError if the metric is singular near zeta.
double scalar_curvature(const MetricField& field, const ChartPoint& zeta, double step = kDefaultCurvatureStep);

/// Largest absolute entry of a - b.
double max_abs_deviation(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace cohgeom
