#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cohgeom/types.hpp"

namespace cohgeom {

/// Truncated Fock-space vector over M modes, storing every sector of total
/// occupation 0..cutoff. Sector n is a vector in multi_index_basis(M, n) order.
class FockState {
 public:
  FockState(std::size_t modes, unsigned cutoff);
  FockState(std::size_t modes, std::vector<ComplexVector> sectors, double truncation_mass = 0.0);

  static FockState vacuum(std::size_t modes, unsigned cutoff);
  static FockState basis(const MultiIndex& occupation, unsigned cutoff);

  [[nodiscard]] std::size_t modes() const noexcept { return modes_; }
  [[nodiscard]] unsigned cutoff() const noexcept { return static_cast<unsigned>(sectors_.size() - 1); }
  [[nodiscard]] const ComplexVector& sector(unsigned n) const { return sectors_.at(n); }
  [[nodiscard]] const std::vector<ComplexVector>& sectors() const noexcept { return sectors_; }
  [[nodiscard]] Complex amplitude(const MultiIndex& idx) const;

  /// Sum of |amplitude|^2 dropped by operations that pushed weight past the cutoff.
  [[nodiscard]] double truncation_mass() const noexcept { return truncation_mass_; }
  [[nodiscard]] double squared_norm() const;
  [[nodiscard]] std::size_t total_size() const;

  /// All sectors concatenated, lowest first.
  [[nodiscard]] StateVector flatten() const;
  /// Labels matching flatten().
  [[nodiscard]] std::vector<MultiIndex> labels() const;

  [[nodiscard]] FockState operator-(const FockState& other) const;
  [[nodiscard]] FockState scaled(Complex factor) const;

 private:
  std::size_t modes_;
  std::vector<ComplexVector> sectors_;
  double truncation_mass_ = 0.0;
};

enum class Ladder { create, annihilate };

/// Elementary ladder operator on mode `mode` (0-based):
///   create:     |..n_j..> -> sqrt(n_j+1) |..n_j+1..>  (weight above the cutoff is dropped)
///   annihilate: |..n_j..> -> sqrt(n_j)   |..n_j-1..>
FockState ladder_apply(Ladder kind, std::size_t mode, const FockState& psi);

/// Degree-N block of psi (unnormalized), in multi_index_basis order.
StateVector n_sector_projection(const FockState& psi, unsigned N);

/// Bargmann function sum_idx conj(psi_idx) prod_j eta_j^{n_j} / sqrt(n_j!),
/// i.e. the symmetric-tensor series conj(xi) + conj(xi_a) eta^a
/// + conj(xi_ab) eta^a eta^b / sqrt(2!) + ...
Complex bargmann_eval(const FockState& psi, std::span<const Complex> eta);

}  // namespace cohgeom
