#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cohgeom/types.hpp"

namespace cohgeom {

/// Exact binomial coefficient; throws OverflowError if it does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// N! / prod(n_j!) exactly. Throws UsageError if degree(idx) != N.
std::uint64_t multinomial(unsigned N, const MultiIndex& idx);

/// Floating-point multinomial for amplitude coefficients where the exact
/// value may not fit in 64 bits.
double multinomial_real(const MultiIndex& idx);

/// Number of multi-indices of length M and degree N: C(N+M-1, M-1).
std::size_t sector_size(std::size_t M, unsigned N);

/// All multi-indices of length M and degree N in lexicographically
/// descending order, e.g. M=2, N=2 -> (2,0),(1,1),(0,2).
std::vector<MultiIndex> multi_index_basis(std::size_t M, unsigned N);

/// Position of idx inside multi_index_basis(idx.size(), idx.degree()).
std::size_t multi_index_rank(const MultiIndex& idx);

}  // namespace cohgeom
