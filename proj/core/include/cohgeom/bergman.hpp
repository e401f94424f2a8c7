#pragma once

#include <optional>

#include "cohgeom/finite_difference.hpp"
#include "cohgeom/types.hpp"

namespace cohgeom {

/// Orthonormal basis of holomorphic L^2 functions on the unit disk:
/// sqrt(n / pi) zeta^{n-1}, n >= 1.
Complex bergman_basis(unsigned n, Complex zeta);

/// Bergman kernel K(zeta, conj chi). With `terms` it is the truncated series
/// sum_{n<=terms} phi_n(zeta) conj(phi_n(chi)); without, the closed form
/// 1 / (pi (1 - zeta conj(chi))^2). Throws DomainError off the disk.
Complex bergman_kernel(Complex zeta, Complex chi, std::optional<unsigned> terms = std::nullopt);

/// Coefficient of dzetabar dzeta in d^2/dzetabar dzeta ln K(zeta, conj zeta),
/// by finite differences. Analytically 2 / (1 - |zeta|^2)^2.
double bergman_metric(Complex zeta, double step = kDefaultSecondDerivativeStep);

/// Coefficient 4 / (1 - |zeta|^2)^2 of the Poincare-disk line element.
double poincare_disk_coefficient(Complex zeta);

/// Operator-norm distance between (N+1)/(4 pi) int |theta,phi><theta,phi| dOmega
/// and the identity, using `order` Gauss-Legendre nodes in cos(theta) and
/// `order` trapezoid points in phi.
double resolution_of_identity_residual(unsigned N, std::size_t order);

}  // namespace cohgeom
