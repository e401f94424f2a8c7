#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cohgeom/types.hpp"

namespace cohgeom {

/// Degree-N Veronese map C^{k+1} -> C^{C(N+k,k)}. The component labelled by
/// idx (in multi_index_basis(k+1, N) order) is sqrt(multinomial(N, idx)) *
/// prod_j p_j^{n_j}, so <E(p), E(q)> = <p, q>^N for any signature.
StateVector veronese_embed(const StateVector& p, unsigned degree);

/// Labels of the image components, in output order.
std::vector<MultiIndex> veronese_labels(std::size_t base_dim, unsigned degree);

/// C(N+k, k) - 1: the projective dimension of the image of CP^k.
std::uint64_t target_dimension(std::uint64_t k, unsigned degree);

/// [k0, d1, d2, ...] with d_{i+1} = target_dimension(d_i, 2).
std::vector<std::uint64_t> hierarchy_chain(std::uint64_t k0, unsigned depth);

/// Signature induced on the image: the axis idx carries prod_j sign_j^{n_j}.
InnerProductSpace image_signature(const InnerProductSpace& base, unsigned degree);

struct EmbeddingWitness {
  double expected;  ///< pseudo-norm a CH^2 point must have
  double actual;    ///< pseudo-norm of the degree-2 image under (-,+,+)
};

/// Degree-2 image of a CH^1 point (-|p0|^2 + |p1|^2 = -1) evaluated against
/// the CH^2 convention. actual != expected whenever p1 != 0.
EmbeddingWitness non_embeddability_witness(const StateVector& p);

/// The Veronese map as a callable on homogeneous coordinates.
class VeroneseMap {
 public:
  VeroneseMap(std::size_t base_dim, unsigned degree);

  StateVector operator()(const StateVector& p) const;

  [[nodiscard]] std::size_t base_dim() const noexcept { return base_dim_; }
  [[nodiscard]] unsigned degree() const noexcept { return degree_; }
  [[nodiscard]] std::size_t image_dim() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::vector<MultiIndex>& labels() const noexcept { return labels_; }

  /// Chart form: interleaved real coordinates of zeta in C^k mapped to
  /// E((1, zeta)), ready for pullback_metric.
  [[nodiscard]] ParameterMap on_chart() const;

 private:
  std::size_t base_dim_;
  unsigned degree_;
  std::vector<MultiIndex> labels_;
  std::vector<double> coefficients_;
};

}  // namespace cohgeom
