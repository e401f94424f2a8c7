#pragma once

// Hand-rolled generators and independent oracles shared by the test binaries.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cohgeom/types.hpp"

namespace testing_support {

using cohgeom::Complex;
using cohgeom::ComplexVector;
using cohgeom::StateVector;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex complex(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale)}; }

  ComplexVector vector(std::size_t n, double scale = 1.0) {
    ComplexVector v(static_cast<Eigen::Index>(n));
    for (auto& c : v) c = complex(scale);
    return v;
  }
  StateVector state(std::size_t n, double scale = 1.0) {
    ComplexVector v;
    do v = vector(n, scale);
    while (v.norm() < 1e-3);
    return StateVector(v);
  }
  // Uniform in the ball of the given radius.
  ComplexVector ball(std::size_t n, double radius) {
    ComplexVector v;
    do v = vector(n, radius);
    while (v.norm() > radius);
    return v;
  }
  Complex unit_phase() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Runs `body` on `cases` generated inputs; a failure reports the case number.
inline void for_all(std::size_t cases, std::uint64_t seed, const std::function<void(Gen&)>& body) {
  Gen gen(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    SCOPED_TRACE("case " + std::to_string(i) + " seed " + std::to_string(seed));
    body(gen);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

// ---- oracles: deliberately computed along a different path from the library

/// N! / prod n_j! through lgamma.
inline double multinomial_oracle(const std::vector<unsigned>& n) {
  unsigned N = 0;
  double log_den = 0.0;
  for (unsigned k : n) {
    N += k;
    log_den += std::lgamma(k + 1.0);
  }
  return std::exp(std::lgamma(N + 1.0) - log_den);
}

/// Pascal's triangle.
inline std::uint64_t binomial_oracle(unsigned n, unsigned k) {
  std::vector<std::vector<std::uint64_t>> row(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (unsigned i = 0; i <= n; ++i) {
    row[i][0] = 1;
    for (unsigned j = 1; j <= i; ++j) row[i][j] = row[i - 1][j - 1] + (j <= i - 1 ? row[i - 1][j] : 0);
  }
  return k > n ? 0 : row[n][k];
}

/// All occupation tuples of length M and degree N, in descending lexicographic order,
/// by filtering every tuple in [0,N]^M.
inline std::vector<std::vector<unsigned>> tuples_oracle(std::size_t M, unsigned N) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> t(M, 0);
  while (true) {
    unsigned sum = 0;
    for (unsigned x : t) sum += x;
    if (sum == N) out.push_back(t);
    std::size_t i = 0;
    while (i < M && t[i] == N) t[i++] = 0;
    if (i == M) break;
    ++t[i];
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// sqrt(multinomial) prod p_j^{n_j} for one tuple, with std::pow on each factor.
inline Complex veronese_component_oracle(const StateVector& p, const std::vector<unsigned>& n) {
  Complex c = std::sqrt(multinomial_oracle(n));
  for (std::size_t j = 0; j < n.size(); ++j)
    for (unsigned r = 0; r < n[j]; ++r) c *= p[j];
  return c;
}

inline double max_abs(const ComplexVector& a, const ComplexVector& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline double relative_error(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace testing_support
