#include "cohgeom/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cohgeom/combinatorics.hpp"
#include "cohgeom/errors.hpp"
#include "cohgeom/projective.hpp"
#include "cohgeom/veronese.hpp"
#include "ipow.hpp"

namespace cohgeom {

namespace {

double squared_modulus(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& c : v) s += std::norm(c);
  return s;
}

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) throw DomainError(std::string(name) + " must be finite");
}

}  // namespace

FockState glauber_state(std::span<const Complex> a, unsigned cutoff) {
  if (a.empty()) throw UsageError("glauber_state needs at least one mode");
  const std::size_t modes = a.size();
  // c[j][n] = a_j^n / sqrt(n!)
  std::vector<std::vector<Complex>> c(modes, std::vector<Complex>(cutoff + 1));
  for (std::size_t j = 0; j < modes; ++j) {
    c[j][0] = 1.0;
    for (unsigned n = 1; n <= cutoff; ++n) c[j][n] = c[j][n - 1] * a[j] / std::sqrt(static_cast<double>(n));
  }
  const double prefactor = std::exp(-0.5 * squared_modulus(a));

  std::vector<ComplexVector> sectors;
  sectors.reserve(cutoff + 1);
  for (unsigned n = 0; n <= cutoff; ++n) {
    const auto labels = multi_index_basis(modes, n);
    ComplexVector block(static_cast<Eigen::Index>(labels.size()));
    for (std::size_t r = 0; r < labels.size(); ++r) {
      Complex amp = prefactor;
      for (std::size_t j = 0; j < modes; ++j) amp *= c[j][labels[r][j]];
      block(static_cast<Eigen::Index>(r)) = amp;
    }
    sectors.push_back(std::move(block));
  }
  return FockState(modes, std::move(sectors));
}

unsigned default_glauber_cutoff(std::span<const Complex> a) {
  double max_sq = 0.0;
  for (const Complex& c : a) max_sq = std::max(max_sq, std::norm(c));
  return 20u + static_cast<unsigned>(std::ceil(5.0 * max_sq));
}

StateVector su2_state(double theta, double phi, unsigned N) {
  if (N < 1) throw UsageError("su2_state needs N >= 1");
  const double c = std::cos(0.5 * theta);
  const Complex s = std::sin(0.5 * theta) * std::polar(1.0, phi);
  ComplexVector out(N + 1);
  for (unsigned j = 0; j <= N; ++j) {
    out(j) = std::sqrt(static_cast<double>(binomial(N, j))) * detail::ipow(c, N - j) * detail::ipow(s, j);
  }
  return StateVector(std::move(out));
}

StateVector su3_state(double theta, double vphi, double xi, double eta, unsigned N) {
  if (N < 1) throw UsageError("su3_state needs N >= 1");
  const double st = std::sin(0.5 * theta);
  const StateVector base{Complex(st * std::cos(0.5 * vphi)), st * std::sin(0.5 * vphi) * std::polar(1.0, xi),
                         std::cos(0.5 * theta) * std::polar(1.0, eta)};
  return veronese_embed(base, N);
}

std::pair<unsigned, unsigned> su3_label(const MultiIndex& idx) {
  if (idx.size() != 3) throw UsageError("su3_label needs a three-mode index");
  return {idx[0] + idx[1], idx[0]};
}

MultiIndex su3_index(unsigned N, unsigned k, unsigned l) {
  if (l > k || k > N) throw UsageError("su3_index needs 0 <= l <= k <= N");
  return MultiIndex{l, k - l, N - k};
}

StateVector suk_state(const StateVector& p, unsigned N) {
  if (p.is_zero()) throw UsageError("suk_state: zero vector");
  const double norm_sq = p.amplitudes().squaredNorm();
  return veronese_embed(p, N).scaled(std::pow(norm_sq, -0.5 * N));
}

StateVector su11_perelomov(Complex xi, std::size_t cutoff) {
  if (cutoff < 1) throw UsageError("su11_perelomov needs cutoff >= 1");
  if (!(std::abs(xi) < 1.0)) throw DomainError("su11_perelomov needs |xi| < 1");
  ComplexVector out(static_cast<Eigen::Index>(cutoff));
  Complex power = 1.0;
  for (std::size_t n = 1; n <= cutoff; ++n) {
    out(static_cast<Eigen::Index>(n - 1)) = std::sqrt(static_cast<double>(n)) * power;
    power *= xi;
  }
  return StateVector(std::move(out));
}

std::size_t default_su11_cutoff(double modulus) {
  if (!(modulus < 1.0) || modulus < 0.0) throw DomainError("default_su11_cutoff needs 0 <= |xi| < 1");
  if (modulus <= 0.7) return 200;
  if (modulus <= 0.9) return 400;
  // smallest n whose tail term n r^{2(n-1)} is negligible against (1-r^2)^{-2}
  const double r2 = modulus * modulus;
  const double total = 1.0 / ((1.0 - r2) * (1.0 - r2));
  std::size_t n = 400;
  while (static_cast<double>(n) * std::pow(r2, static_cast<double>(n - 1)) > 1e-17 * total) n += 100;
  return n;
}

FockState su1k_state(std::span<const Complex> xi, unsigned degree_cutoff) {
  if (xi.empty()) throw UsageError("su1k_state needs k >= 1");
  if (!(squared_modulus(xi) < 1.0)) throw DomainError("su1k_state needs sum |xi_j|^2 < 1");
  const std::size_t k = xi.size();
  std::vector<std::vector<Complex>> powers(k, std::vector<Complex>(degree_cutoff + 1));
  for (std::size_t j = 0; j < k; ++j) {
    powers[j][0] = 1.0;
    for (unsigned n = 1; n <= degree_cutoff; ++n) powers[j][n] = powers[j][n - 1] * xi[j];
  }
  std::vector<ComplexVector> sectors;
  sectors.reserve(degree_cutoff + 1);
  for (unsigned n = 0; n <= degree_cutoff; ++n) {
    const auto labels = multi_index_basis(k, n);
    ComplexVector block(static_cast<Eigen::Index>(labels.size()));
    const double grade = std::sqrt(static_cast<double>(n + 1));
    for (std::size_t r = 0; r < labels.size(); ++r) {
      Complex amp = grade * std::sqrt(multinomial_real(labels[r]));
      for (std::size_t j = 0; j < k; ++j) amp *= powers[j][labels[r][j]];
      block(static_cast<Eigen::Index>(r)) = amp;
    }
    sectors.push_back(std::move(block));
  }
  return FockState(k, std::move(sectors));
}

StateVector indefinite_su11_state(double tau, double phi, unsigned N) {
  if (N < 1) throw UsageError("indefinite_su11_state needs N >= 1");
  const double ch = std::cosh(0.5 * tau);
  const Complex sh = std::sinh(0.5 * tau) * std::polar(1.0, phi);
  ComplexVector out(N + 1);
  for (unsigned j = 0; j <= N; ++j) {
    out(j) = std::sqrt(static_cast<double>(binomial(N, j))) * detail::ipow(ch, j) * detail::ipow(sh, N - j);
  }
  return StateVector(std::move(out));
}

InnerProductSpace indefinite_su11_space(unsigned N) { return image_signature(InnerProductSpace({1, -1}), N); }

Su2Params::Su2Params(double theta_, double phi_) : theta(theta_), phi(phi_) {
  require_finite(theta, "theta");
  require_finite(phi, "phi");
  if (theta < 0.0 || theta > std::numbers::pi) throw DomainError("SU(2): theta must lie in [0, pi]");
}

Su3Params::Su3Params(double theta_, double vphi_, double xi_, double eta_)
    : theta(theta_), vphi(vphi_), xi(xi_), eta(eta_) {
  for (double v : {theta, vphi, xi, eta}) require_finite(v, "SU(3) angle");
  if (theta < 0.0 || theta > std::numbers::pi) throw DomainError("SU(3): theta must lie in [0, pi]");
  if (vphi < 0.0 || vphi > std::numbers::pi) throw DomainError("SU(3): vphi must lie in [0, pi]");
}

SukParams::SukParams(StateVector point_) : point(std::move(point_)) {
  if (point.size() < 2) throw UsageError("SU(k+1): point needs k+1 >= 2 coordinates");
  if (point.is_zero()) throw UsageError("SU(k+1): zero vector");
}

Su11Params::Su11Params(Complex xi_) : xi(xi_) {
  if (!(std::abs(xi) < 1.0)) throw DomainError("SU(1,1): |xi| must be < 1");
}

Su1kParams::Su1kParams(std::vector<Complex> xi_) : xi(std::move(xi_)) {
  if (xi.empty()) throw UsageError("SU(1,k): xi needs k >= 1 entries");
  if (!(squared_modulus(xi) < 1.0)) throw DomainError("SU(1,k): sum |xi_j|^2 must be < 1");
}

IndefiniteSu11Params::IndefiniteSu11Params(double tau_, double phi_) : tau(tau_), phi(phi_) {
  require_finite(tau, "tau");
  require_finite(phi, "phi");
}

namespace {

unsigned require_degree(unsigned level) {
  if (level < 1) throw UsageError("finite coherent-state families need N >= 1");
  return level;
}

std::vector<MultiIndex> number_labels(std::size_t count) {
  std::vector<MultiIndex> labels;
  labels.reserve(count);
  for (unsigned n = 0; n < count; ++n) labels.push_back(MultiIndex{n});
  return labels;
}

struct Builder {
  unsigned level;

  LabelledState operator()(const GlauberParams& p) const {
    const unsigned cutoff = level > 0 ? level : default_glauber_cutoff(p.a);
    const FockState psi = glauber_state(p.a, cutoff);
    return {psi.flatten(), psi.labels(), InnerProductSpace::definite(psi.total_size())};
  }
  LabelledState operator()(const Su2Params& p) const {
    const unsigned N = require_degree(level);
    return {su2_state(p.theta, p.phi, N), veronese_labels(2, N), InnerProductSpace::definite(N + 1)};
  }
  LabelledState operator()(const Su3Params& p) const {
    const unsigned N = require_degree(level);
    StateVector v = su3_state(p.theta, p.vphi, p.xi, p.eta, N);
    const std::size_t dim = v.size();
    return {std::move(v), veronese_labels(3, N), InnerProductSpace::definite(dim)};
  }
  LabelledState operator()(const SukParams& p) const {
    const unsigned N = require_degree(level);
    StateVector v = suk_state(p.point, N);
    const std::size_t dim = v.size();
    return {std::move(v), veronese_labels(p.point.size(), N), InnerProductSpace::definite(dim)};
  }
  LabelledState operator()(const Su11Params& p) const {
    const std::size_t cutoff = level > 0 ? level : default_su11_cutoff(std::abs(p.xi));
    return {su11_perelomov(p.xi, cutoff), number_labels(cutoff), InnerProductSpace::definite(cutoff)};
  }
  LabelledState operator()(const Su1kParams& p) const {
    const unsigned degree =
        level > 0 ? level : static_cast<unsigned>(default_su11_cutoff(std::sqrt(squared_modulus(p.xi))));
    const FockState psi = su1k_state(p.xi, degree);
    return {psi.flatten(), psi.labels(), InnerProductSpace::definite(psi.total_size())};
  }
  LabelledState operator()(const IndefiniteSu11Params& p) const {
    const unsigned N = require_degree(level);
    return {indefinite_su11_state(p.tau, p.phi, N), veronese_labels(2, N), indefinite_su11_space(N)};
  }
};

}  // namespace

LabelledState make_coherent_state(const CoherentParameters& params, unsigned level) {
  return std::visit(Builder{level}, params);
}

}  // namespace cohgeom
