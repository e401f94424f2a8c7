#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cohgeom {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

/// Homogeneous coordinates of a (projective) state: a fixed-length list of
/// finite complex amplitudes.
class StateVector {
 public:
  explicit StateVector(ComplexVector amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes);

  [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  [[nodiscard]] const ComplexVector& amplitudes() const noexcept { return amps_; }
  [[nodiscard]] Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

  [[nodiscard]] StateVector scaled(Complex factor) const;
  /// Euclidean norm, independent of any signature.
  [[nodiscard]] double euclidean_norm() const noexcept { return amps_.norm(); }
  [[nodiscard]] bool is_zero() const noexcept;

 private:
  ComplexVector amps_;
};

/// C^dim with the Hermitian form sum_j sign_j conj(v_j) w_j.
class InnerProductSpace {
 public:
  explicit InnerProductSpace(std::vector<int> signs);

  /// All-plus signature.
  static InnerProductSpace definite(std::size_t dim);
  /// Signature (-,+,...,+): the ambient space of CH^{dim-1}.
  static InnerProductSpace hyperbolic(std::size_t dim);

  [[nodiscard]] std::size_t dim() const noexcept { return signs_.size(); }
  [[nodiscard]] const std::vector<int>& signs() const noexcept { return signs_; }
  [[nodiscard]] int sign(std::size_t axis) const { return signs_.at(axis); }
  [[nodiscard]] std::size_t positive_count() const noexcept;
  [[nodiscard]] std::size_t negative_count() const noexcept { return dim() - positive_count(); }
  [[nodiscard]] bool is_definite() const noexcept { return negative_count() == 0; }

  friend bool operator==(const InnerProductSpace&, const InnerProductSpace&) = default;

 private:
  std::vector<int> signs_;
};

/// Occupation numbers (n_1 ... n_M) labelling a Fock / symmetric-tensor
/// basis element. The degree is the total occupation.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> occupations);
  MultiIndex(std::initializer_list<unsigned> occupations);

  [[nodiscard]] std::size_t size() const noexcept { return occ_.size(); }
  [[nodiscard]] unsigned degree() const noexcept { return degree_; }
  [[nodiscard]] unsigned operator[](std::size_t j) const { return occ_.at(j); }
  [[nodiscard]] const std::vector<unsigned>& occupations() const noexcept { return occ_; }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.occ_ == b.occ_; }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.occ_ <=> b.occ_;
  }

 private:
  std::vector<unsigned> occ_;
  unsigned degree_ = 0;
};

/// Inhomogeneous coordinates z^j / z^patch (j != patch) on the patch where
/// the homogeneous coordinate `patch` is nonzero.
struct ChartPoint {
  ComplexVector coords;
  std::size_t patch = 0;

  [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(coords.size()); }
  [[nodiscard]] double squared_norm() const noexcept { return coords.squaredNorm(); }

  static ChartPoint origin(std::size_t k) { return {ComplexVector::Zero(static_cast<Eigen::Index>(k)), 0}; }
};

/// A family of states over m real parameters.
using ParameterMap = std::function<StateVector(std::span<const double>)>;

/// Packs complex chart coordinates as (Re z1, Im z1, Re z2, Im z2, ...).
std::vector<double> interleave(const ComplexVector& z);
ComplexVector deinterleave(std::span<const double> x);

}  // namespace cohgeom
