#include "cohgeom/fock.hpp"

#include <cmath>
#include <string>

#include "cohgeom/combinatorics.hpp"
#include "cohgeom/errors.hpp"

namespace cohgeom {

FockState::FockState(std::size_t modes, unsigned cutoff) : modes_(modes) {
  if (modes == 0) throw UsageError("FockState needs at least one mode");
  sectors_.reserve(cutoff + 1);
  for (unsigned n = 0; n <= cutoff; ++n) {
    sectors_.push_back(ComplexVector::Zero(static_cast<Eigen::Index>(sector_size(modes, n))));
  }
}

FockState::FockState(std::size_t modes, std::vector<ComplexVector> sectors, double truncation_mass)
    : modes_(modes), sectors_(std::move(sectors)), truncation_mass_(truncation_mass) {
  if (modes == 0) throw UsageError("FockState needs at least one mode");
  if (sectors_.empty()) throw UsageError("FockState needs at least the vacuum sector");
  for (unsigned n = 0; n < sectors_.size(); ++n) {
    if (static_cast<std::size_t>(sectors_[n].size()) != sector_size(modes, n)) {
      throw UsageError("FockState: sector " + std::to_string(n) + " has the wrong size");
    }
  }
}

FockState FockState::vacuum(std::size_t modes, unsigned cutoff) {
  FockState psi(modes, cutoff);
  psi.sectors_[0](0) = 1.0;
  return psi;
}

FockState FockState::basis(const MultiIndex& occupation, unsigned cutoff) {
  if (occupation.degree() > cutoff) throw UsageError("FockState::basis: occupation exceeds cutoff");
  FockState psi(occupation.size(), cutoff);
  psi.sectors_[occupation.degree()](static_cast<Eigen::Index>(multi_index_rank(occupation))) = 1.0;
  return psi;
}

Complex FockState::amplitude(const MultiIndex& idx) const {
  if (idx.size() != modes_) throw UsageError("FockState::amplitude: wrong number of modes");
  if (idx.degree() > cutoff()) return 0.0;
  return sectors_[idx.degree()](static_cast<Eigen::Index>(multi_index_rank(idx)));
}

double FockState::squared_norm() const {
  double sum = 0.0;
  for (const auto& s : sectors_) sum += s.squaredNorm();
  return sum;
}

std::size_t FockState::total_size() const {
  std::size_t n = 0;
  for (const auto& s : sectors_) n += static_cast<std::size_t>(s.size());
  return n;
}

StateVector FockState::flatten() const {
  ComplexVector out(static_cast<Eigen::Index>(total_size()));
  Eigen::Index offset = 0;
  for (const auto& s : sectors_) {
    out.segment(offset, s.size()) = s;
    offset += s.size();
  }
  return StateVector(std::move(out));
}

std::vector<MultiIndex> FockState::labels() const {
  std::vector<MultiIndex> out;
  out.reserve(total_size());
  for (unsigned n = 0; n <= cutoff(); ++n) {
    auto sector = multi_index_basis(modes_, n);
    out.insert(out.end(), sector.begin(), sector.end());
  }
  return out;
}

FockState FockState::operator-(const FockState& other) const {
  if (other.modes_ != modes_ || other.sectors_.size() != sectors_.size()) {
    throw UsageError("FockState difference needs equal modes and cutoff");
  }
  std::vector<ComplexVector> diff(sectors_.size());
  for (std::size_t n = 0; n < sectors_.size(); ++n) diff[n] = sectors_[n] - other.sectors_[n];
  return FockState(modes_, std::move(diff));
}

FockState FockState::scaled(Complex factor) const {
  std::vector<ComplexVector> out(sectors_.size());
  for (std::size_t n = 0; n < sectors_.size(); ++n) out[n] = sectors_[n] * factor;
  return FockState(modes_, std::move(out), truncation_mass_ * std::norm(factor));
}

FockState ladder_apply(Ladder kind, std::size_t mode, const FockState& psi) {
  if (mode >= psi.modes()) {
    throw UsageError("ladder_apply: mode " + std::to_string(mode) + " out of range for " +
                     std::to_string(psi.modes()) + " modes");
  }
  const unsigned cutoff = psi.cutoff();
  std::vector<ComplexVector> out;
  out.reserve(cutoff + 1);
  for (unsigned n = 0; n <= cutoff; ++n) out.push_back(ComplexVector::Zero(psi.sector(n).size()));
  double dropped = psi.truncation_mass();

  for (unsigned n = 0; n <= cutoff; ++n) {
    const auto labels = multi_index_basis(psi.modes(), n);
    const ComplexVector& block = psi.sector(n);
    for (std::size_t r = 0; r < labels.size(); ++r) {
      const Complex amp = block(static_cast<Eigen::Index>(r));
      if (amp == Complex(0.0)) continue;
      std::vector<unsigned> occ = labels[r].occupations();
      if (kind == Ladder::create) {
        const double factor = std::sqrt(static_cast<double>(occ[mode] + 1));
        if (n == cutoff) {
          dropped += std::norm(factor * amp);
          continue;
        }
        ++occ[mode];
        out[n + 1](static_cast<Eigen::Index>(multi_index_rank(MultiIndex(std::move(occ))))) += factor * amp;
      } else {
        if (occ[mode] == 0) continue;
        const double factor = std::sqrt(static_cast<double>(occ[mode]));
        --occ[mode];
        out[n - 1](static_cast<Eigen::Index>(multi_index_rank(MultiIndex(std::move(occ))))) += factor * amp;
      }
    }
  }
  return FockState(psi.modes(), std::move(out), dropped);
}

StateVector n_sector_projection(const FockState& psi, unsigned N) {
  if (N > psi.cutoff()) {
    throw UsageError("n_sector_projection: sector " + std::to_string(N) + " exceeds cutoff " +
                     std::to_string(psi.cutoff()));
  }
  return StateVector(psi.sector(N));
}

Complex bargmann_eval(const FockState& psi, std::span<const Complex> eta) {
  if (eta.size() != psi.modes()) throw UsageError("bargmann_eval: eta must have one entry per mode");
  // eta_j^n / sqrt(n!) built incrementally
  std::vector<std::vector<Complex>> scaled_powers(eta.size(), std::vector<Complex>(psi.cutoff() + 1));
  for (std::size_t j = 0; j < eta.size(); ++j) {
    scaled_powers[j][0] = 1.0;
    for (unsigned n = 1; n <= psi.cutoff(); ++n) {
      scaled_powers[j][n] = scaled_powers[j][n - 1] * eta[j] / std::sqrt(static_cast<double>(n));
    }
  }
  Complex value = 0.0;
  for (unsigned n = 0; n <= psi.cutoff(); ++n) {
    const auto labels = multi_index_basis(psi.modes(), n);
    const ComplexVector& block = psi.sector(n);
    for (std::size_t r = 0; r < labels.size(); ++r) {
      Complex term = std::conj(block(static_cast<Eigen::Index>(r)));
      for (std::size_t j = 0; j < eta.size(); ++j) term *= scaled_powers[j][labels[r][j]];
      value += term;
    }
  }
  return value;
}

}  // namespace cohgeom
