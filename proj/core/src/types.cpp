#include "cohgeom/types.hpp"

#include <algorithm>
#include <numeric>

#include "cohgeom/errors.hpp"

namespace cohgeom {

StateVector::StateVector(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) throw UsageError("StateVector needs at least one amplitude");
  if (!amps_.allFinite()) throw DomainError("StateVector amplitudes must be finite");
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(Eigen::Map<const ComplexVector>(amplitudes.begin(), static_cast<Eigen::Index>(amplitudes.size()))) {}

StateVector StateVector::scaled(Complex factor) const { return StateVector(amps_ * factor); }

bool StateVector::is_zero() const noexcept { return (amps_.array() == Complex(0.0)).all(); }

InnerProductSpace::InnerProductSpace(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw UsageError("InnerProductSpace needs dim >= 1");
  for (int s : signs_) {
    if (s != 1 && s != -1) throw UsageError("signature entries must be +1 or -1");
  }
}

InnerProductSpace InnerProductSpace::definite(std::size_t dim) { return InnerProductSpace(std::vector<int>(dim, 1)); }

InnerProductSpace InnerProductSpace::hyperbolic(std::size_t dim) {
  std::vector<int> signs(dim, 1);
  if (!signs.empty()) signs.front() = -1;
  return InnerProductSpace(std::move(signs));
}

std::size_t InnerProductSpace::positive_count() const noexcept {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), 1));
}

MultiIndex::MultiIndex(std::vector<unsigned> occupations)
    : occ_(std::move(occupations)), degree_(std::accumulate(occ_.begin(), occ_.end(), 0u)) {}

MultiIndex::MultiIndex(std::initializer_list<unsigned> occupations)
    : MultiIndex(std::vector<unsigned>(occupations)) {}

std::vector<double> interleave(const ComplexVector& z) {
  std::vector<double> x(2 * static_cast<std::size_t>(z.size()));
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    x[2 * i] = z(i).real();
    x[2 * i + 1] = z(i).imag();
  }
  return x;
}

ComplexVector deinterleave(std::span<const double> x) {
  if (x.size() % 2 != 0) throw UsageError("interleaved coordinates must have even length");
  ComplexVector z(static_cast<Eigen::Index>(x.size() / 2));
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = Complex(x[2 * i], x[2 * i + 1]);
  return z;
}

}  // namespace cohgeom
