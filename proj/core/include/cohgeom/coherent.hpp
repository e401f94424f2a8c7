#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "cohgeom/fock.hpp"
#include "cohgeom/types.hpp"

namespace cohgeom {

/// M-mode Glauber state, amplitude exp(-|a|^2/2) prod_j a_j^{n_j}/sqrt(n_j!)
/// for every occupation of total degree <= cutoff.
FockState glauber_state(std::span<const Complex> a, unsigned cutoff);
/// 20 + ceil(5 max_j |a_j|^2).
unsigned default_glauber_cutoff(std::span<const Complex> a);

/// sum_j sqrt(C(N,j)) cos(theta/2)^{N-j} (sin(theta/2) e^{i phi})^j |j>.
StateVector su2_state(double theta, double phi, unsigned N);

/// Degree-N Veronese image of (sin(theta/2)cos(vphi/2), sin(theta/2)sin(vphi/2)e^{i xi},
/// cos(theta/2)e^{i eta}), in canonical multi-index order over (s,t,u).
StateVector su3_state(double theta, double vphi, double xi, double eta, unsigned N);

/// Double-sum label (k, l) of a canonical (n_s, n_t, n_u) index:
/// l = n_s, k - l = n_t, N - k = n_u.
std::pair<unsigned, unsigned> su3_label(const MultiIndex& idx);
MultiIndex su3_index(unsigned N, unsigned k, unsigned l);

/// veronese_embed(p, N) / <p,p>^{N/2}.
StateVector suk_state(const StateVector& p, unsigned N);

/// Components sqrt(n) xi^{n-1}, n = 1..cutoff. Throws DomainError if |xi| >= 1.
StateVector su11_perelomov(Complex xi, std::size_t cutoff);
/// 200 for |xi| <= 0.7, 400 for |xi| <= 0.9, beyond that from the tail bound.
std::size_t default_su11_cutoff(double modulus);

/// Graded vector whose degree-n block is sqrt(n+1) xi^{(a} ... xi^{b)}:
/// components sqrt(n+1) sqrt(multinomial(n, idx)) prod_j xi_j^{n_j}.
FockState su1k_state(std::span<const Complex> xi, unsigned degree_cutoff);

/// sum_j sqrt(C(N,j)) cosh(tau/2)^j (sinh(tau/2) e^{i phi})^{N-j} |j>.
/// Component j is the monomial t^{N-j} s^j over the ordered base
/// (t, s) = (sinh(tau/2) e^{i phi}, cosh(tau/2)) with signs (+,-).
StateVector indefinite_su11_state(double tau, double phi, unsigned N);
/// Signature matching indefinite_su11_state's component order.
InnerProductSpace indefinite_su11_space(unsigned N);

// Parameters of every family, validated at construction.

struct GlauberParams {
  std::vector<Complex> a;
};
struct Su2Params {
  double theta = 0.0;
  double phi = 0.0;
  Su2Params(double theta, double phi);
};
struct Su3Params {
  double theta = 0.0;
  double vphi = 0.0;
  double xi = 0.0;
  double eta = 0.0;
  Su3Params(double theta, double vphi, double xi, double eta);
};
struct SukParams {
  StateVector point;
  explicit SukParams(StateVector point);
};
struct Su11Params {
  Complex xi;
  explicit Su11Params(Complex xi);
};
struct Su1kParams {
  std::vector<Complex> xi;
  explicit Su1kParams(std::vector<Complex> xi);
};
struct IndefiniteSu11Params {
  double tau = 0.0;
  double phi = 0.0;
  IndefiniteSu11Params(double tau, double phi);
};

using CoherentParameters =
    std::variant<GlauberParams, Su2Params, Su3Params, SukParams, Su11Params, Su1kParams, IndefiniteSu11Params>;

/// A constructed state with its component labels and the signature it lives in.
struct LabelledState {
  StateVector state;
  std::vector<MultiIndex> labels;
  InnerProductSpace space;
};

/// `level` is N for the finite families and the cutoff for Glauber,
/// SU(1,1) (length) and SU(1,k) (degree); 0 selects the default cutoff.
LabelledState make_coherent_state(const CoherentParameters& params, unsigned level);

}  // namespace cohgeom
