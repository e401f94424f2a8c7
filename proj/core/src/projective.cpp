#include "cohgeom/projective.hpp"

#include <algorithm>
#include <string>

#include "cohgeom/errors.hpp"

namespace cohgeom {

Complex inner_product(const StateVector& v, const StateVector& w, const InnerProductSpace& space) {
  if (v.size() != w.size() || v.size() != space.dim()) {
    throw UsageError("inner_product: dimensions " + std::to_string(v.size()) + ", " + std::to_string(w.size()) +
                     ", " + std::to_string(space.dim()) + " differ");
  }
  Complex sum = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) sum += static_cast<double>(space.sign(j)) * std::conj(v[j]) * w[j];
  return sum;
}

Complex inner_product(const StateVector& v, const StateVector& w) {
  if (v.size() != w.size()) throw UsageError("inner_product: dimension mismatch");
  return v.amplitudes().dot(w.amplitudes());  // Eigen conjugates the left operand
}

double pseudo_norm(const StateVector& v, const InnerProductSpace& space) {
  return inner_product(v, v, space).real();
}

double overlap_deficit(const StateVector& v, const StateVector& w) {
  if (v.is_zero() || w.is_zero()) throw UsageError("overlap of a zero vector");
  const double vv = v.amplitudes().squaredNorm();
  const double ww = w.amplitudes().squaredNorm();
  const double overlap = std::norm(inner_product(v, w)) / (vv * ww);
  return std::max(0.0, 1.0 - overlap);
}

bool projectively_equal(const StateVector& v, const StateVector& w, double tol) {
  return overlap_deficit(v, w) <= tol;
}

ChartPoint to_inhomogeneous(const StateVector& v, std::size_t patch) {
  if (patch >= v.size()) throw UsageError("to_inhomogeneous: patch index out of range");
  const Complex pivot = v[patch];
  if (pivot == Complex(0.0)) throw ChartError("coordinate " + std::to_string(patch) + " vanishes");
  ChartPoint point{ComplexVector(static_cast<Eigen::Index>(v.size() - 1)), patch};
  Eigen::Index out = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j != patch) point.coords(out++) = v[j] / pivot;
  }
  return point;
}

StateVector to_homogeneous(const ChartPoint& point) {
  const std::size_t n = point.dim() + 1;
  if (point.patch >= n) throw UsageError("to_homogeneous: patch index out of range");
  ComplexVector z(static_cast<Eigen::Index>(n));
  Eigen::Index in = 0;
  for (std::size_t j = 0; j < n; ++j) z(static_cast<Eigen::Index>(j)) = (j == point.patch) ? Complex(1.0) : point.coords(in++);
  return StateVector(std::move(z));
}

}  // namespace cohgeom
