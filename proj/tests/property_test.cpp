// Invariants checked over generated inputs.

#include "cohgeom/coherent.hpp"
#include "cohgeom/combinatorics.hpp"
#include "cohgeom/fock.hpp"
#include "cohgeom/metric.hpp"
#include "cohgeom/projective.hpp"
#include "cohgeom/veronese.hpp"
#include "support.hpp"

using namespace cohgeom;
using namespace testing_support;

namespace {

InnerProductSpace random_signature(Gen& gen, std::size_t n) {
  std::vector<int> s(n);
  for (int& x : s) x = gen.integer(0, 1) == 0 ? -1 : 1;
  return InnerProductSpace(s);
}

StateVector scale(const StateVector& v, Complex c) { return StateVector(c * v.amplitudes()); }

}  // namespace

// ---------------------------------------------------------------- projective core

TEST(Properties, InnerProductIsSesquilinearAndHermitian) {
  for_all(100, 101, [](Gen& gen) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    const InnerProductSpace eta = random_signature(gen, n);
    const StateVector u = gen.state(n), v = gen.state(n), w = gen.state(n);
    const Complex a = gen.complex(2.0), b = gen.complex(2.0);
    const StateVector mix(a * v.amplitudes() + b * w.amplitudes());
    const Complex lhs = inner_product(mix, u, eta);
    const Complex rhs = std::conj(a) * inner_product(v, u, eta) + std::conj(b) * inner_product(w, u, eta);
    EXPECT_LT(std::abs(lhs - rhs), 1e-12);
    EXPECT_LT(std::abs(inner_product(u, v, eta) - std::conj(inner_product(v, u, eta))), 1e-14);
  });
}

TEST(Properties, DefiniteNormIsPositive) {
  for_all(100, 102, [](Gen& gen) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    const StateVector v = gen.state(n);
    const Complex nn = inner_product(v, v, InnerProductSpace::definite(n));
    EXPECT_GT(nn.real(), 0.0);
    EXPECT_EQ(nn.imag(), 0.0);
  });
}

TEST(Properties, ProjectiveEqualityIsAnEquivalence) {
  for_all(100, 103, [](Gen& gen) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    const StateVector v = gen.state(n);
    Complex l, m;
    do l = gen.complex(3.0);
    while (std::abs(l) < 0.1);
    do m = gen.complex(3.0);
    while (std::abs(m) < 0.1);
    const StateVector w = scale(v, l), u = scale(w, m);
    EXPECT_TRUE(projectively_equal(v, v));
    EXPECT_TRUE(projectively_equal(v, w));
    EXPECT_TRUE(projectively_equal(w, v));
    EXPECT_TRUE(projectively_equal(w, u));
    EXPECT_TRUE(projectively_equal(v, u));
    if (n > 1) {
      // Perturbing one coordinate only, by a fixed amount, leaves the ray.
      ComplexVector x = v.amplitudes();
      x(0) += 0.5 * x.norm();
      x(1) -= 0.5 * x.norm();
      EXPECT_FALSE(projectively_equal(v, StateVector(x)));
    }
  });
}

TEST(Properties, ChartRoundTrip) {
  for_all(100, 104, [](Gen& gen) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 5));
    const StateVector v = gen.state(n);
    std::size_t patch = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(v[i]) > std::abs(v[patch])) patch = i;
    EXPECT_TRUE(projectively_equal(to_homogeneous(to_inhomogeneous(v, patch)), v, 1e-12));
  });
}

TEST(Properties, BasisSizeIsStarsAndBars) {
  for (std::size_t M = 1; M <= 6; ++M)
    for (unsigned N = 0; N <= 8; ++N)
      EXPECT_EQ(multi_index_basis(M, N).size(), binomial_oracle(N + static_cast<unsigned>(M) - 1, static_cast<unsigned>(M) - 1));
}

TEST(Properties, MultinomialTheorem) {
  for (std::size_t M = 1; M <= 4; ++M)
    for (unsigned N = 0; N <= 10; ++N) {
      std::uint64_t sum = 0, power = 1;
      for (const auto& idx : multi_index_basis(M, N)) sum += multinomial(N, idx);
      for (unsigned i = 0; i < N; ++i) power *= M;
      EXPECT_EQ(sum, power) << M << " " << N;
    }
}

// ---------------------------------------------------------------- veronese

TEST(Properties, VeroneseIsHomogeneousOfDegreeN) {
  for_all(100, 105, [](Gen& gen) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 4));
    const unsigned N = static_cast<unsigned>(gen.integer(1, 6));
    const StateVector p = gen.state(n);
    const Complex l = gen.complex(1.5);
    if (std::abs(l) < 1e-3) return;
    const ComplexVector lhs = veronese_embed(scale(p, l), N).amplitudes();
    const ComplexVector rhs = std::pow(l, static_cast<int>(N)) * veronese_embed(p, N).amplitudes();
    EXPECT_LT((lhs - rhs).norm() / std::max(1.0, rhs.norm()), 1e-12);
  });
}

TEST(Properties, VeronesePowersTheInnerProductInAnySignature) {
  for_all(100, 106, [](Gen& gen) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 4));
    const unsigned N = static_cast<unsigned>(gen.integer(1, 6));
    const InnerProductSpace eta = random_signature(gen, n);
    const StateVector p = gen.state(n), q = gen.state(n);
    const Complex want = std::pow(inner_product(p, q, eta), static_cast<int>(N));
    const Complex got = inner_product(veronese_embed(p, N), veronese_embed(q, N), image_signature(eta, N));
    // Cancelling terms are bounded by (|p||q|)^N.
    const double size = std::pow(p.amplitudes().norm() * q.amplitudes().norm(), N);
    EXPECT_LT(std::abs(got - want) / std::max(1.0, size), 1e-13);
  });
}

TEST(Properties, LinearEmbeddingIsTheIdentityDimension) {
  for (std::uint64_t k = 1; k <= 50; ++k) EXPECT_EQ(target_dimension(k, 1), k);
}

TEST(Properties, ImageSignatureCountsAddUp) {
  for_all(50, 107, [](Gen& gen) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    const unsigned N = static_cast<unsigned>(gen.integer(1, 6));
    const InnerProductSpace image = image_signature(random_signature(gen, n), N);
    EXPECT_EQ(image.positive_count() + image.negative_count(), binomial_oracle(N + static_cast<unsigned>(n) - 1, N));
    EXPECT_EQ(image.dim(), multi_index_basis(n, N).size());
  });
}

// ---------------------------------------------------------------- coherent states

TEST(Properties, FiniteFamiliesAreUnitVectors) {
  for_all(100, 108, [](Gen& gen) {
    const unsigned N = static_cast<unsigned>(gen.integer(1, 10));
    const double th = gen.uniform(0.0, std::numbers::pi), ph = gen.uniform(0.0, 2 * std::numbers::pi);
    EXPECT_NEAR(su2_state(th, ph, N).amplitudes().squaredNorm(), 1.0, 1e-12);
    const StateVector s3 = su3_state(th, gen.uniform(0.0, std::numbers::pi), gen.uniform(0.0, 6.28), ph, N);
    EXPECT_NEAR(s3.amplitudes().squaredNorm(), 1.0, 1e-12);
    const StateVector sk = suk_state(gen.state(static_cast<std::size_t>(gen.integer(2, 4))), N);
    EXPECT_NEAR(sk.amplitudes().squaredNorm(), 1.0, 1e-12);
  });
}

TEST(Properties, Su2IsTheVeroneseImageOfTheBlochSpinor) {
  for_all(100, 109, [](Gen& gen) {
    const unsigned N = static_cast<unsigned>(gen.integer(1, 8));
    const double th = gen.uniform(0.0, std::numbers::pi), ph = gen.uniform(0.0, 2 * std::numbers::pi);
    const StateVector spinor{std::cos(th / 2), std::sin(th / 2) * std::polar(1.0, ph)};
    // Both sides are in descending order of the first occupation.
    EXPECT_LT(max_abs(su2_state(th, ph, N).amplitudes(), veronese_embed(spinor, N).amplitudes()), 1e-13);
  });
}

TEST(Properties, GlauberNormIsOneUpToTheTail) {
  for_all(30, 110, [](Gen& gen) {
    const std::size_t M = static_cast<std::size_t>(gen.integer(1, 3));
    std::vector<Complex> a(M);
    for (auto& x : a) x = gen.complex(1.0);
    const FockState psi = glauber_state(a, default_glauber_cutoff(a));
    EXPECT_NEAR(psi.squared_norm(), 1.0, 1e-10);
  });
}

TEST(Properties, CanonicalCommutators) {
  for_all(20, 111, [](Gen& gen) {
    const std::size_t M = static_cast<std::size_t>(gen.integer(1, 3));
    const unsigned cutoff = 8;
    std::vector<ComplexVector> sectors;
    for (unsigned n = 0; n <= cutoff; ++n)
      sectors.push_back(n + 2 <= cutoff ? gen.vector(sector_size(M, n)) : ComplexVector::Zero(static_cast<Eigen::Index>(sector_size(M, n))));
    const FockState psi(M, sectors);
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = 0; j < M; ++j) {
        const FockState lhs = ladder_apply(Ladder::annihilate, i, ladder_apply(Ladder::create, j, psi)) -
                              ladder_apply(Ladder::create, j, ladder_apply(Ladder::annihilate, i, psi));
        const FockState diff = i == j ? lhs - psi : lhs;
        EXPECT_LT(diff.squared_norm(), 1e-24) << i << "," << j;
        // [a_i, a_j] = 0
        const FockState aa = ladder_apply(Ladder::annihilate, i, ladder_apply(Ladder::annihilate, j, psi)) -
                             ladder_apply(Ladder::annihilate, j, ladder_apply(Ladder::annihilate, i, psi));
        EXPECT_LT(aa.squared_norm(), 1e-24);
      }
  });
}

TEST(Properties, IndefinitePseudoNormIsASignOfN) {
  for_all(200, 112, [](Gen& gen) {
    const unsigned N = static_cast<unsigned>(gen.integer(1, 10));
    const double tau = gen.uniform(0.0, 3.0), phi = gen.uniform(0.0, 2 * std::numbers::pi);
    const StateVector v = indefinite_su11_state(tau, phi, N);
    const double want = N % 2 == 0 ? 1.0 : -1.0;
    // Measured against the positive-definite mass that cancels.
    const double got = pseudo_norm(v, indefinite_su11_space(N));
    EXPECT_LT(std::abs(got - want) / v.amplitudes().squaredNorm(), 1e-12);
  });
}

TEST(Properties, GlauberSectorsAreSukStates) {
  for_all(40, 113, [](Gen& gen) {
    const std::size_t M = static_cast<std::size_t>(gen.integer(2, 3));
    const unsigned N = static_cast<unsigned>(gen.integer(1, 6));
    const StateVector p = gen.state(M);
    std::vector<Complex> a(p.amplitudes().begin(), p.amplitudes().end());
    const StateVector block = n_sector_projection(glauber_state(a, 6), N);
    EXPECT_LT(overlap_deficit(block, suk_state(p, N)), 1e-12);
  });
}

// ---------------------------------------------------------------- geometry

TEST(Properties, FsDistanceIsAMetricOnRays) {
  for_all(100, 114, [](Gen& gen) {
    const StateVector u = gen.state(4), v = gen.state(4), w = gen.state(4);
    EXPECT_NEAR(fs_distance(u, v), fs_distance(v, u), 1e-14);
    EXPECT_LE(fs_distance(u, w), fs_distance(u, v) + fs_distance(v, w) + 1e-12);
    EXPECT_GE(fs_distance(u, v), 0.0);
    EXPECT_LE(fs_distance(u, v), std::numbers::pi + 1e-15);
    Complex c;
    do c = gen.complex(3.0);
    while (std::abs(c) < 0.1);
    EXPECT_NEAR(fs_distance(scale(u, c), v), fs_distance(u, v), 1e-12);
  });
}

TEST(Properties, ChartMetricIsTheKahlerMetricOfItsPotential) {
  const KahlerPotential K = [](const ComplexVector& z) { return 4 * std::log1p(z.squaredNorm()); };
  for_all(100, 115, [&](Gen& gen) {
    const std::size_t k = static_cast<std::size_t>(gen.integer(1, 3));
    const ChartPoint p{gen.vector(k, 1.5), 0};
    EXPECT_LT((kahler_metric(K, p).entries() - fs_metric_chart(p).entries()).cwiseAbs().maxCoeff(), 1e-6);
  });
}

TEST(Properties, KahlerMetricIsLinearInThePotential) {
  const KahlerPotential K = [](const ComplexVector& z) { return std::log1p(z.squaredNorm()); };
  for_all(50, 116, [&](Gen& gen) {
    const double c = gen.uniform(0.1, 10.0);
    const KahlerPotential cK = [&](const ComplexVector& z) { return c * K(z); };
    const ChartPoint p{gen.vector(2), 0};
    EXPECT_LT((kahler_metric(cK, p).entries() - c * kahler_metric(K, p).entries()).cwiseAbs().maxCoeff(), 1e-6 * c);
  });
}

TEST(Properties, CurvatureScalesInverselyWithTheMetric) {
  for_all(20, 117, [](Gen& gen) {
    const double c = gen.uniform(0.5, 8.0);
    const MetricField scaled = [c](const ChartPoint& p) { return fs_metric_chart(p).scaled(c); };
    const ChartPoint p{gen.vector(2), 0};
    EXPECT_NEAR(scalar_curvature(scaled, p), scalar_curvature(fs_metric_chart, p) / c, 1e-4);
  });
}
