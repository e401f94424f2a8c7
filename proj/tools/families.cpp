#include "families.hpp"

#include "cohgeom/coherent.hpp"
#include "cohgeom/errors.hpp"
#include "cohgeom/fock.hpp"
#include "cohgeom/projective.hpp"
#include "cohgeom/veronese.hpp"

namespace cohgeom::cli {

namespace {

std::vector<std::string> complex_names(const std::string& stem, std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::string suffix = k == 1 ? "" : std::to_string(i);
    names.push_back("re_" + stem + suffix);
    names.push_back("im_" + stem + suffix);
  }
  return names;
}

std::span<const Complex> as_span(const ComplexVector& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

Family from_chart(std::vector<std::string> parameters, HolomorphicMap chart) {
  Family f{std::move(parameters), on_real_coordinates(chart), InnerProductSpace::definite(1), chart};
  const std::vector<double> origin(f.parameters.size(), 0.0);
  f.space = InnerProductSpace::definite(f.map(origin).size());
  return f;
}

}  // namespace

std::vector<std::string> family_names() {
  return {"veronese", "suk", "su2", "su3", "glauber", "su11", "su1k", "indefinite-su11"};
}

Family make_family(const FamilySpec& spec) {
  const unsigned N = spec.degree;
  const std::size_t k = spec.k;
  if (k == 0) throw UsageError("family dimension k must be positive");
  if (N == 0) throw UsageError("degree N must be positive");

  if (spec.name == "veronese") {
    const VeroneseMap E(k + 1, N);
    return from_chart(complex_names("z", k), [E](const ComplexVector& z) { return E(to_homogeneous(ChartPoint{z, 0})); });
  }
  if (spec.name == "suk") {
    return from_chart(complex_names("z", k),
                      [N](const ComplexVector& z) { return suk_state(to_homogeneous(ChartPoint{z, 0}), N); });
  }
  if (spec.name == "glauber") {
    const unsigned cutoff = spec.cutoff == 0 ? 40 : spec.cutoff;
    return from_chart(complex_names("a", k),
                      [cutoff](const ComplexVector& a) { return glauber_state(as_span(a), cutoff).flatten(); });
  }
  if (spec.name == "su11") {
    const std::size_t cutoff = spec.cutoff == 0 ? 200 : spec.cutoff;
    return from_chart(complex_names("xi", 1),
                      [cutoff](const ComplexVector& xi) { return su11_perelomov(xi[0], cutoff); });
  }
  if (spec.name == "su1k") {
    const unsigned degree = spec.cutoff == 0 ? 100 : spec.cutoff;
    return from_chart(complex_names("xi", k),
                      [degree](const ComplexVector& xi) { return su1k_state(as_span(xi), degree).flatten(); });
  }
  if (spec.name == "su2") {
    return {{"theta", "phi"},
            [N](std::span<const double> x) { return su2_state(x[0], x[1], N); },
            InnerProductSpace::definite(N + 1),
            std::nullopt};
  }
  if (spec.name == "su3") {
    return {{"theta", "vphi", "xi", "eta"},
            [N](std::span<const double> x) { return su3_state(x[0], x[1], x[2], x[3], N); },
            InnerProductSpace::definite(static_cast<std::size_t>(N + 1) * (N + 2) / 2),
            std::nullopt};
  }
  if (spec.name == "indefinite-su11") {
    return {{"tau", "phi"},
            [N](std::span<const double> x) { return indefinite_su11_state(x[0], x[1], N); },
            indefinite_su11_space(N),
            std::nullopt};
  }
  throw UsageError("unknown family '" + spec.name + "'");
}

}  // namespace cohgeom::cli
