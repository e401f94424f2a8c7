#include "cohgeom/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cohgeom/errors.hpp"

namespace cohgeom {

namespace {
// Intermediate products of two 64-bit values.
__extension__ using Wide = unsigned __int128;
}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // c * (n - k + i) / i stays exact because c = C(n-k+i-1, i-1).
    c = c * (n - k + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      throw OverflowError("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t multinomial(unsigned N, const MultiIndex& idx) {
  if (idx.degree() != N) {
    throw UsageError("multinomial: degree " + std::to_string(idx.degree()) + " != " + std::to_string(N));
  }
  // N!/prod n_j! = prod_j C(n_1 + ... + n_j, n_j)
  Wide result = 1;
  std::uint64_t partial = 0;
  for (unsigned n : idx.occupations()) {
    partial += n;
    result *= binomial(partial, n);
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw OverflowError("multinomial exceeds 64 bits at degree " + std::to_string(N));
    }
  }
  return static_cast<std::uint64_t>(result);
}

double multinomial_real(const MultiIndex& idx) {
  double result = 1.0;
  unsigned partial = 0;
  for (unsigned n : idx.occupations()) {
    for (unsigned i = 1; i <= n; ++i) result *= static_cast<double>(partial + i) / i;
    partial += n;
  }
  return result;
}

std::size_t sector_size(std::size_t M, unsigned N) {
  if (M == 0) throw UsageError("sector_size needs M >= 1");
  return static_cast<std::size_t>(binomial(N + M - 1, M - 1));
}

namespace {

void enumerate(std::size_t pos, unsigned remaining, std::vector<unsigned>& current, std::vector<MultiIndex>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  for (unsigned v = remaining + 1; v-- > 0;) {
    current[pos] = v;
    enumerate(pos + 1, remaining - v, current, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_index_basis(std::size_t M, unsigned N) {
  if (M == 0) throw UsageError("multi_index_basis needs M >= 1");
  std::vector<MultiIndex> out;
  out.reserve(sector_size(M, N));
  std::vector<unsigned> current(M, 0);
  enumerate(0, N, current, out);
  return out;
}

std::size_t multi_index_rank(const MultiIndex& idx) {
  const std::size_t M = idx.size();
  if (M == 0) throw UsageError("multi_index_rank of an empty index");
  std::size_t rank = 0;
  unsigned remaining = idx.degree();
  for (std::size_t pos = 0; pos + 1 < M; ++pos) {
    const unsigned v = idx[pos];
    // every index with a larger entry at `pos` (same prefix) comes first
    for (unsigned u = v + 1; u <= remaining; ++u) rank += sector_size(M - pos - 1, remaining - u);
    remaining -= v;
  }
  return rank;
}

}  // namespace cohgeom
