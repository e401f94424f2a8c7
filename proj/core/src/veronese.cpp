#include "cohgeom/veronese.hpp"

#include <cmath>
#include <string>

#include "cohgeom/combinatorics.hpp"
#include "cohgeom/errors.hpp"
#include "cohgeom/projective.hpp"

namespace cohgeom {

namespace {

// powers[j][n] = p_j^n for n <= degree
std::vector<std::vector<Complex>> power_table(const StateVector& p, unsigned degree) {
  std::vector<std::vector<Complex>> powers(p.size(), std::vector<Complex>(degree + 1));
  for (std::size_t j = 0; j < p.size(); ++j) {
    powers[j][0] = 1.0;
    for (unsigned n = 1; n <= degree; ++n) powers[j][n] = powers[j][n - 1] * p[j];
  }
  return powers;
}

}  // namespace

VeroneseMap::VeroneseMap(std::size_t base_dim, unsigned degree) : base_dim_(base_dim), degree_(degree) {
  if (base_dim < 2) throw UsageError("veronese: base dimension k+1 must be >= 2");
  if (degree < 1) throw UsageError("veronese: degree must be >= 1");
  labels_ = multi_index_basis(base_dim, degree);
  coefficients_.reserve(labels_.size());
  for (const auto& idx : labels_) coefficients_.push_back(std::sqrt(multinomial_real(idx)));
}

StateVector VeroneseMap::operator()(const StateVector& p) const {
  if (p.size() != base_dim_) {
    throw UsageError("veronese: expected " + std::to_string(base_dim_) + " coordinates, got " + std::to_string(p.size()));
  }
  if (p.is_zero()) throw UsageError("veronese: zero vector has no image");
  const auto powers = power_table(p, degree_);
  ComplexVector image(static_cast<Eigen::Index>(labels_.size()));
  for (std::size_t r = 0; r < labels_.size(); ++r) {
    Complex monomial = coefficients_[r];
    for (std::size_t j = 0; j < base_dim_; ++j) monomial *= powers[j][labels_[r][j]];
    image(static_cast<Eigen::Index>(r)) = monomial;
  }
  return StateVector(std::move(image));
}

ParameterMap VeroneseMap::on_chart() const {
  return [map = *this](std::span<const double> x) {
    const ComplexVector zeta = deinterleave(x);
    return map(to_homogeneous(ChartPoint{zeta, 0}));
  };
}

StateVector veronese_embed(const StateVector& p, unsigned degree) { return VeroneseMap(p.size(), degree)(p); }

std::vector<MultiIndex> veronese_labels(std::size_t base_dim, unsigned degree) {
  return multi_index_basis(base_dim, degree);
}

std::uint64_t target_dimension(std::uint64_t k, unsigned degree) {
  if (k < 1) throw UsageError("target_dimension needs k >= 1");
  if (degree < 1) throw UsageError("target_dimension needs N >= 1");
  return binomial(k + degree, k) - 1;
}

std::vector<std::uint64_t> hierarchy_chain(std::uint64_t k0, unsigned depth) {
  if (k0 < 1 || depth < 1) throw UsageError("hierarchy_chain needs k0 >= 1 and depth >= 1");
  std::vector<std::uint64_t> chain{k0};
  for (unsigned i = 0; i < depth; ++i) chain.push_back(target_dimension(chain.back(), 2));
  return chain;
}

InnerProductSpace image_signature(const InnerProductSpace& base, unsigned degree) {
  if (degree < 1) throw UsageError("image_signature needs N >= 1");
  const auto labels = multi_index_basis(base.dim(), degree);
  std::vector<int> signs;
  signs.reserve(labels.size());
  for (const auto& idx : labels) {
    int s = 1;
    for (std::size_t j = 0; j < base.dim(); ++j) {
      if (base.sign(j) < 0 && idx[j] % 2 == 1) s = -s;
    }
    signs.push_back(s);
  }
  return InnerProductSpace(std::move(signs));
}

EmbeddingWitness non_embeddability_witness(const StateVector& p) {
  if (p.size() != 2) throw UsageError("non_embeddability_witness takes a CH^1 point (s, t)");
  const auto ch1 = InnerProductSpace::hyperbolic(2);
  if (std::abs(pseudo_norm(p, ch1) + 1.0) > 1e-9) {
    throw UsageError("non_embeddability_witness: point is not on the pseudo-sphere -|s|^2 + |t|^2 = -1");
  }
  const StateVector image = veronese_embed(p, 2);
  return {-1.0, pseudo_norm(image, InnerProductSpace::hyperbolic(3))};
}

}  // namespace cohgeom
