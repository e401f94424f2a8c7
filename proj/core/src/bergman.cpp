#include "cohgeom/bergman.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "cohgeom/coherent.hpp"
#include "cohgeom/errors.hpp"
#include "cohgeom/quadrature.hpp"
#include "ipow.hpp"

namespace cohgeom {

namespace {

void require_disk(Complex z, const char* who) {
  if (!(std::abs(z) < 1.0)) throw DomainError(std::string(who) + ": point lies outside the unit disk");
}

}  // namespace

Complex bergman_basis(unsigned n, Complex zeta) {
  if (n < 1) throw UsageError("bergman_basis needs n >= 1");
  return std::sqrt(n / std::numbers::pi) * detail::ipow(zeta, n - 1);
}

Complex bergman_kernel(Complex zeta, Complex chi, std::optional<unsigned> terms) {
  require_disk(zeta, "bergman_kernel");
  require_disk(chi, "bergman_kernel");
  if (!terms) {
    const Complex d = 1.0 - zeta * std::conj(chi);
    return 1.0 / (std::numbers::pi * d * d);
  }
  // sum_n (n / pi) (zeta conj(chi))^{n-1}
  const Complex w = zeta * std::conj(chi);
  Complex power = 1.0;
  Complex sum = 0.0;
  for (unsigned n = 1; n <= *terms; ++n) {
    sum += static_cast<double>(n) * power;
    power *= w;
  }
  return sum / std::numbers::pi;
}

double bergman_metric(Complex zeta, double step) {
  require_disk(zeta, "bergman_metric");
  const RealFunction log_kernel = [](std::span<const double> x) {
    const Complex z(x[0], x[1]);
    if (!(std::abs(z) < 1.0)) return std::numeric_limits<double>::quiet_NaN();
    return std::log(bergman_kernel(z, z).real());
  };
  const double point[2] = {zeta.real(), zeta.imag()};
  const Eigen::MatrixXd H = central_hessian(log_kernel, point, step);
  return complex_hessian(H)(0, 0).real();
}

double poincare_disk_coefficient(Complex zeta) {
  require_disk(zeta, "poincare_disk_coefficient");
  const double d = 1.0 - std::norm(zeta);
  return 4.0 / (d * d);
}

double resolution_of_identity_residual(unsigned N, std::size_t order) {
  if (N < 1) throw UsageError("resolution_of_identity_residual needs N >= 1");
  if (order < 1) throw UsageError("resolution_of_identity_residual needs order >= 1");
  const QuadratureRule polar = gauss_legendre(order, -1.0, 1.0);  // in cos(theta)
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(order);
  Eigen::MatrixXcd frame = Eigen::MatrixXcd::Zero(N + 1, N + 1);
  for (std::size_t i = 0; i < polar.nodes.size(); ++i) {
    const double theta = std::acos(polar.nodes[i]);
    for (std::size_t a = 0; a < order; ++a) {
      const ComplexVector psi = su2_state(theta, dphi * static_cast<double>(a), N).amplitudes();
      frame += (polar.weights[i] * dphi) * (psi * psi.adjoint());
    }
  }
  frame *= (N + 1) / (4.0 * std::numbers::pi);
  const Eigen::MatrixXcd residual = frame - Eigen::MatrixXcd::Identity(N + 1, N + 1);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(residual, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace cohgeom
