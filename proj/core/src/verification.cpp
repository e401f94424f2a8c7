#include "cohgeom/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "cohgeom/bergman.hpp"
#include "cohgeom/coherent.hpp"
#include "cohgeom/combinatorics.hpp"
#include "cohgeom/errors.hpp"
#include "cohgeom/fock.hpp"
#include "cohgeom/metric.hpp"
#include "cohgeom/parallel.hpp"
#include "cohgeom/projective.hpp"
#include "cohgeom/quadrature.hpp"
#include "cohgeom/veronese.hpp"

namespace cohgeom {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

VerificationReport make_report(std::string name, std::vector<std::string> coordinates,
                               std::vector<VerificationSample> samples, double tolerance, std::string notes) {
  VerificationReport r;
  r.name = std::move(name);
  r.coordinates = std::move(coordinates);
  r.samples = std::move(samples);
  r.tolerance = tolerance;
  r.notes = std::move(notes);
  for (const auto& s : r.samples) {
    // NaN must never pass.
    if (!(s.deviation <= r.max_deviation)) r.max_deviation = std::isnan(s.deviation) ? kInf : s.deviation;
  }
  r.pass = r.max_deviation <= r.tolerance;
  return r;
}

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::string> complex_coordinate_names(std::size_t k, const std::string& stem = "z") {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) {
    names.push_back("re " + stem + std::to_string(i));
    names.push_back("im " + stem + std::to_string(i));
  }
  return names;
}

// Uniform point in the complex ball of the given radius.
ComplexVector random_ball_point(std::mt19937_64& rng, std::size_t k, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  ComplexVector z(static_cast<Eigen::Index>(k));
  do {
    for (auto& c : z) c = {u(rng), u(rng)};
  } while (z.squaredNorm() > radius * radius);
  return z;
}

ComplexVector random_box_point(std::mt19937_64& rng, std::size_t k, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  ComplexVector z(static_cast<Eigen::Index>(k));
  for (auto& c : z) c = {u(rng), u(rng)};
  return z;
}

using Evaluator = std::function<double(const std::vector<double>&)>;

std::vector<VerificationSample> evaluate_points(std::vector<std::vector<double>> points, const Evaluator& eval) {
  auto deviations = parallel_map(points.size(), [&](std::size_t i) { return eval(points[i]); });
  std::vector<VerificationSample> samples;
  samples.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) samples.push_back({std::move(points[i]), deviations[i]});
  return samples;
}

std::vector<double> with_prefix(double head, const std::vector<double>& rest) {
  std::vector<double> out{head};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

ParameterMap lift_chart_map(HolomorphicMap map) { return on_real_coordinates(std::move(map)); }

StateVector homogeneous_lift(const ComplexVector& zeta) { return to_homogeneous(ChartPoint{zeta, 0}); }

}  // namespace

VerificationReport verify_scaling(unsigned k, unsigned N, std::size_t samples, double tol,
                                  const VerifyOptions& options) {
  if (k < 1 || k > 3) throw UsageError("verify_scaling: k must be 1, 2 or 3");
  if (N < 1 || N > 6) throw UsageError("verify_scaling: N must be in 1..6");
  const double step = options.fd_step.value_or(kDefaultFirstDerivativeStep);

  std::mt19937_64 rng(options.seed);
  std::vector<std::vector<double>> points;
  for (std::size_t s = 0; s < samples; ++s) points.push_back(interleave(random_box_point(rng, k, 1.0)));

  const ParameterMap map = lift_chart_map([N](const ComplexVector& z) { return suk_state(homogeneous_lift(z), N); });
  const auto space = InnerProductSpace::definite(sector_size(k + 1, N));
  auto result = evaluate_points(std::move(points), [&](const std::vector<double>& x) {
    const Eigen::MatrixXd induced = pullback_metric(map, x, space, step);
    const Eigen::MatrixXd expected = fs_metric_chart(ChartPoint{deinterleave(x), 0}).real_form() * N;
    return max_abs_deviation(induced, expected);
  });
  return make_report("scaling k=" + std::to_string(k) + " N=" + std::to_string(N), complex_coordinate_names(k),
                     std::move(result), tol);
}

VerificationReport verify_flatness(std::size_t modes, unsigned cutoff, std::size_t samples, double tol,
                                   const VerifyOptions& options) {
  if (modes < 1) throw UsageError("verify_flatness: need at least one mode");
  const double step = options.fd_step.value_or(kDefaultFirstDerivativeStep);

  std::mt19937_64 rng(options.seed);
  std::vector<std::vector<double>> points;
  if (samples > 0) points.push_back(std::vector<double>(2 * modes, 0.0));
  while (points.size() < samples) points.push_back(interleave(random_ball_point(rng, modes, 0.8)));

  const ParameterMap map = [cutoff](std::span<const double> x) {
    const ComplexVector a = deinterleave(x);
    return glauber_state(std::span<const Complex>(a.data(), static_cast<std::size_t>(a.size())), cutoff).flatten();
  };
  std::size_t total = 0;
  for (unsigned n = 0; n <= cutoff; ++n) total += sector_size(modes, n);
  const auto space = InnerProductSpace::definite(total);
  const Eigen::MatrixXd flat = 4.0 * Eigen::MatrixXd::Identity(2 * modes, 2 * modes);

  auto result = evaluate_points(std::move(points), [&](const std::vector<double>& x) {
    return max_abs_deviation(pullback_metric(map, x, space, step), flat);
  });
  return make_report("flatness M=" + std::to_string(modes), complex_coordinate_names(modes, "a"), std::move(result),
                     tol, "cutoff " + std::to_string(cutoff));
}

std::vector<VerificationReport> verify_su11_metric(std::size_t cutoff, std::size_t samples, double tol,
                                                   const VerifyOptions& options) {
  if (cutoff < 2) throw UsageError("verify_su11_metric: cutoff must be at least 2");
  const double step = options.fd_step.value_or(kDefaultFirstDerivativeStep);
  std::vector<VerificationReport> reports;

  {
    std::mt19937_64 rng(options.seed);
    std::vector<std::vector<double>> points;
    if (samples > 0) points.push_back({0.0, 0.0});
    while (points.size() < samples) points.push_back(interleave(random_ball_point(rng, 1, 0.7)));

    const ParameterMap map = [cutoff](std::span<const double> x) { return su11_perelomov({x[0], x[1]}, cutoff); };
    const auto space = InnerProductSpace::definite(cutoff);
    auto result = evaluate_points(std::move(points), [&](const std::vector<double>& x) {
      const double r2 = x[0] * x[0] + x[1] * x[1];
      const double c = 8.0 / ((1.0 - r2) * (1.0 - r2));
      return max_abs_deviation(pullback_metric(map, x, space, step), c * Eigen::MatrixXd::Identity(2, 2));
    });
    reports.push_back(make_report("su11-metric", complex_coordinate_names(1, "xi"), std::move(result), tol,
                                  "cutoff " + std::to_string(cutoff)));
  }

  {
    // Truncate by total degree; (n+1)^3 0.49^n is negligible well before n = 100.
    const auto degree = static_cast<unsigned>(std::min<std::size_t>(cutoff / 2, 100));
    std::mt19937_64 rng(options.seed + 1);
    std::vector<std::vector<double>> points;
    if (samples > 0) points.push_back(std::vector<double>(4, 0.0));
    while (points.size() < samples) points.push_back(interleave(random_ball_point(rng, 2, 0.7)));

    const ParameterMap map = [degree](std::span<const double> x) {
      const ComplexVector xi = deinterleave(x);
      return su1k_state(std::span<const Complex>(xi.data(), 2), degree).flatten();
    };
    std::size_t total = 0;
    for (unsigned n = 0; n <= degree; ++n) total += sector_size(2, n);
    const auto space = InnerProductSpace::definite(total);
    auto result = evaluate_points(std::move(points), [&](const std::vector<double>& x) {
      const Eigen::MatrixXd expected = 2.0 * hyperbolic_metric_chart(ChartPoint{deinterleave(x), 0}).real_form();
      return max_abs_deviation(pullback_metric(map, x, space, step), expected);
    });
    reports.push_back(make_report("su12-metric", complex_coordinate_names(2, "xi"), std::move(result), tol,
                                  "compared with twice the CH^2 metric; degree cutoff " + std::to_string(degree)));
  }
  return reports;
}

VerificationReport verify_indefinite_scaling(unsigned N, std::size_t samples, double tol,
                                             const VerifyOptions& options) {
  if (N < 1) throw UsageError("verify_indefinite_scaling: N must be positive");
  const double step = options.fd_step.value_or(1e-3);

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> tau_dist(0.05, 2.5);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * kPi);
  std::vector<std::vector<double>> points;
  for (std::size_t s = 0; s < samples; ++s) {
    const double tau = tau_dist(rng);
    points.push_back({tau, phi_dist(rng)});
  }

  const ParameterMap map = [N](std::span<const double> x) { return indefinite_su11_state(x[0], x[1], N); };
  const auto space = indefinite_su11_space(N);
  auto result = evaluate_points(std::move(points), [&](const std::vector<double>& x) {
    const Eigen::MatrixXd induced = pullback_metric(map, x, space, step);
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(2, 2);
    expected(0, 0) = N;
    expected(1, 1) = N * std::sinh(x[0]) * std::sinh(x[0]);
    // The induced form must be positive definite, not merely close to the target.
    if (Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(induced).eigenvalues().minCoeff() <= 0.0) return kInf;
    return max_abs_deviation(induced, expected);
  });
  return make_report("indefinite-scaling N=" + std::to_string(N), {"tau", "phi"}, std::move(result), tol,
                     "difference step " + std::to_string(step));
}

namespace {

using Group = std::vector<VerificationReport> (*)(const SuiteSettings&);

double metric_tol(const SuiteSettings& s, double fallback) { return s.metric_tol.value_or(fallback); }

std::vector<VerificationReport> check_conic(const SuiteSettings& s) {
  const double step = s.options.fd_step.value_or(kDefaultFirstDerivativeStep);
  std::mt19937_64 rng(s.options.seed);
  std::vector<std::vector<double>> points;
  for (std::size_t i = 0; i < s.samples; ++i) points.push_back(interleave(random_box_point(rng, 1, 2.0)));

  const ParameterMap conic = VeroneseMap(2, 2).on_chart();
  const ParameterMap line = lift_chart_map(homogeneous_lift);
  auto result = evaluate_points(std::move(points), [&](const std::vector<double>& x) {
    const Eigen::MatrixXd induced = pullback_metric(conic, x, InnerProductSpace::definite(3), step);
    const Eigen::MatrixXd base = pullback_metric(line, x, InnerProductSpace::definite(2), step);
    return max_abs_deviation(induced, 2.0 * base);
  });
  return {make_report("conic", complex_coordinate_names(1), std::move(result), metric_tol(s, 1e-6),
                      "degree-2 image of CP^1 against twice its own metric")};
}

std::vector<VerificationReport> check_rational(const SuiteSettings& s) {
  const double step = s.options.fd_step.value_or(kDefaultFirstDerivativeStep);
  // Metric fields feeding a curvature stencil use the wider second-derivative step.
  const double curvature_step = s.options.fd_step.value_or(kDefaultSecondDerivativeStep);
  std::mt19937_64 rng(s.options.seed);
  std::vector<std::vector<double>> metric_points;
  std::vector<std::vector<double>> curvature_points;
  for (unsigned n = 1; n <= 6; ++n) {
    for (std::size_t i = 0; i < s.samples; ++i)
      metric_points.push_back(with_prefix(n, interleave(random_box_point(rng, 1, 2.0))));
    for (std::size_t i = 0; i < std::max<std::size_t>(1, s.samples / 5); ++i)
      curvature_points.push_back(with_prefix(n, interleave(random_box_point(rng, 1, 1.5))));
  }

  auto metric = evaluate_points(std::move(metric_points), [&](const std::vector<double>& x) {
    const auto n = static_cast<unsigned>(x[0]);
    const std::vector<double> chart(x.begin() + 1, x.end());
    const Eigen::MatrixXd induced = pullback_metric(VeroneseMap(2, n).on_chart(), chart, InnerProductSpace::definite(n + 1), step);
    return max_abs_deviation(induced, n * fs_metric_chart(ChartPoint{deinterleave(chart), 0}).real_form());
  });
  auto curvature = evaluate_points(std::move(curvature_points), [&](const std::vector<double>& x) {
    const auto n = static_cast<unsigned>(x[0]);
    const VeroneseMap E(2, n);
    const MetricField field =
        pullback_metric_field([E](const ComplexVector& z) { return E(homogeneous_lift(z)); },
                              InnerProductSpace::definite(n + 1), curvature_step);
    const std::vector<double> chart(x.begin() + 1, x.end());
    return std::abs(scalar_curvature(field, ChartPoint{deinterleave(chart), 0}) - 2.0 / n);
  });

  auto names = complex_coordinate_names(1);
  names.insert(names.begin(), "n");
  return {make_report("rational-metric", names, std::move(metric), metric_tol(s, 1e-6), "n = 1..6, n times the CP^1 metric"),
          make_report("rational-curvature", names, std::move(curvature), 1e-4, "scalar curvature 2/n")};
}

std::vector<VerificationReport> check_su2(const SuiteSettings& s) {
  const double step = s.options.fd_step.value_or(kDefaultFirstDerivativeStep);
  std::mt19937_64 rng(s.options.seed);
  std::uniform_real_distribution<double> theta(0.1, kPi - 0.1);
  std::uniform_real_distribution<double> phi(0.0, 2.0 * kPi);
  std::vector<std::vector<double>> points;
  for (unsigned N = 1; N <= 6; ++N)
    for (std::size_t i = 0; i < s.samples; ++i) {
      const double t = theta(rng);
      points.push_back({static_cast<double>(N), t, phi(rng)});
    }

  auto result = evaluate_points(std::move(points), [&](const std::vector<double>& x) {
    const auto N = static_cast<unsigned>(x[0]);
    const ParameterMap map = [N](std::span<const double> p) { return su2_state(p[0], p[1], N); };
    const std::vector<double> angles{x[1], x[2]};
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(2, 2);
    expected(0, 0) = N;
    expected(1, 1) = N * std::sin(x[1]) * std::sin(x[1]);
    return max_abs_deviation(pullback_metric(map, angles, InnerProductSpace::definite(N + 1), step), expected);
  });
  return {make_report("su2-metric", {"N", "theta", "phi"}, std::move(result), metric_tol(s, 1e-6),
                      "N diag(1, sin^2 theta)")};
}

std::vector<VerificationReport> check_scaling(const SuiteSettings& s) {
  std::vector<VerificationReport> out;
  out.push_back(verify_scaling(1, 2, s.samples, metric_tol(s, 1e-6), s.options));
  out.push_back(verify_scaling(2, 2, s.samples, metric_tol(s, 1e-5), s.options));
  out.push_back(verify_scaling(2, 3, s.samples, metric_tol(s, 1e-5), s.options));
  out.push_back(verify_scaling(3, 2, s.samples, metric_tol(s, 1e-5), s.options));
  return out;
}

std::vector<VerificationReport> check_curvature(const SuiteSettings& s) {
  const double curvature_step = s.options.fd_step.value_or(kDefaultSecondDerivativeStep);
  std::mt19937_64 rng(s.options.seed);
  std::vector<std::vector<double>> points;
  const std::size_t count = std::max<std::size_t>(2, s.samples / 4);
  for (unsigned N = 2; N <= 3; ++N)
    for (std::size_t i = 0; i < count; ++i) points.push_back(with_prefix(N, interleave(random_box_point(rng, 2, 0.8))));

  auto field_for = [curvature_step](unsigned N) {
    return pullback_metric_field([N](const ComplexVector& z) { return suk_state(homogeneous_lift(z), N); },
                                 InnerProductSpace::definite(sector_size(3, N)), curvature_step);
  };
  auto result = evaluate_points(points, [&](const std::vector<double>& x) {
    const auto N = static_cast<unsigned>(x[0]);
    const ChartPoint zeta{deinterleave(std::vector<double>(x.begin() + 1, x.end())), 0};
    const double base = scalar_curvature(field_for(1), zeta);
    const double scaled = scalar_curvature(field_for(N), zeta);
    return std::abs(N * scaled - base);
  });
  double base_sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const ChartPoint zeta{deinterleave(std::vector<double>(points[i].begin() + 1, points[i].end())), 0};
    base_sum += scalar_curvature(field_for(1), zeta);
  }
  std::ostringstream notes;
  notes << "N R_N against R_1 on CP^2; mean R_1 = " << base_sum / static_cast<double>(count);
  auto names = complex_coordinate_names(2);
  names.insert(names.begin(), "N");
  return {make_report("cp2-curvature", names, std::move(result), 1e-3, notes.str())};
}

std::vector<VerificationReport> check_flatness(const SuiteSettings& s) {
  return {verify_flatness(1, 40, s.samples, metric_tol(s, 1e-6), s.options),
          verify_flatness(2, 40, s.samples, metric_tol(s, 1e-6), s.options)};
}

std::vector<VerificationReport> check_eigenvalue(const SuiteSettings& s) {
  std::mt19937_64 rng(s.options.seed);
  std::vector<std::vector<double>> points;
  for (std::size_t M = 1; M <= 2; ++M)
    for (std::size_t i = 0; i < s.samples; ++i) {
      const ComplexVector a = random_ball_point(rng, M, 0.8 / std::sqrt(static_cast<double>(M)));
      auto p = interleave(a);
      if (M == 1) p.insert(p.end(), {0.0, 0.0});
      points.push_back(with_prefix(static_cast<double>(M), p));
    }

  auto result = evaluate_points(std::move(points), [](const std::vector<double>& x) {
    const auto M = static_cast<std::size_t>(x[0]);
    const ComplexVector a = deinterleave(std::vector<double>(x.begin() + 1, x.begin() + 1 + 2 * static_cast<long>(M)));
    const FockState psi = glauber_state(std::span<const Complex>(a.data(), M), 20);
    double worst = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
      const FockState residual = ladder_apply(Ladder::annihilate, j, psi) - psi.scaled(a[static_cast<Eigen::Index>(j)]);
      worst = std::max(worst, std::sqrt(residual.squared_norm()));
    }
    return worst;
  });
  return {make_report("annihilation-eigenvalue", {"M", "re a1", "im a1", "re a2", "im a2"}, std::move(result), 1e-8,
                      "|| a_j psi - a_j psi || at cutoff 20")};
}

std::vector<VerificationReport> check_sector(const SuiteSettings& s) {
  std::mt19937_64 rng(s.options.seed);
  std::vector<std::vector<double>> two, three;
  for (std::size_t i = 0; i < s.samples; ++i) {
    ComplexVector a = random_ball_point(rng, 2, 1.0);
    if (std::abs(a[0]) < 1e-3) a[0] = 0.5;
    two.push_back(interleave(a));
    three.push_back(interleave(random_ball_point(rng, 3, 1.0)));
  }

  auto su2_result = evaluate_points(std::move(two), [](const std::vector<double>& x) {
    const ComplexVector a = deinterleave(x);
    const FockState psi = glauber_state(std::span<const Complex>(a.data(), 2), 8);
    const Complex ratio = a[1] / a[0];
    const double theta = 2.0 * std::atan(std::abs(ratio));
    const double phi = std::arg(ratio);
    double worst = 0.0;
    for (unsigned N = 1; N <= 6; ++N)
      worst = std::max(worst, overlap_deficit(n_sector_projection(psi, N), su2_state(theta, phi, N)));
    return worst;
  });
  auto suk_result = evaluate_points(std::move(three), [](const std::vector<double>& x) {
    const ComplexVector a = deinterleave(x);
    const FockState psi = glauber_state(std::span<const Complex>(a.data(), 3), 8);
    double worst = 0.0;
    for (unsigned N = 1; N <= 6; ++N)
      worst = std::max(worst, overlap_deficit(n_sector_projection(psi, N), suk_state(StateVector(a), N)));
    return worst;
  });
  return {make_report("sector-su2", complex_coordinate_names(2, "a"), std::move(su2_result), 1e-10,
                      "N-particle sectors N = 1..6 against su2_state"),
          make_report("sector-suk", complex_coordinate_names(3, "a"), std::move(suk_result), 1e-10,
                      "N-particle sectors N = 1..6 against suk_state")};
}

std::vector<VerificationReport> check_su11(const SuiteSettings& s) {
  return verify_su11_metric(200, s.samples, metric_tol(s, 1e-6), s.options);
}

std::vector<VerificationReport> check_bergman(const SuiteSettings& s) {
  std::vector<VerificationReport> out;

  std::vector<std::vector<double>> pairs;
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned m = 1; m <= 12; ++m) pairs.push_back({static_cast<double>(n), static_cast<double>(m)});
  auto ortho = evaluate_points(std::move(pairs), [](const std::vector<double>& x) {
    const auto n = static_cast<unsigned>(x[0]);
    const auto m = static_cast<unsigned>(x[1]);
    const Complex value = integrate_disk(
        [n, m](Complex z) { return std::conj(bergman_basis(n, z)) * bergman_basis(m, z); }, 24, 32);
    return std::abs(value - (n == m ? 1.0 : 0.0));
  });
  out.push_back(make_report("bergman-orthonormality", {"n", "m"}, std::move(ortho), 1e-8, "n, m <= 12"));

  std::mt19937_64 rng(s.options.seed);
  std::vector<std::vector<double>> points{{0.7, 0.0, 0.7, 0.0}};
  for (std::size_t i = 1; i < s.samples; ++i) {
    auto p = interleave(random_ball_point(rng, 1, 0.7));
    auto q = interleave(random_ball_point(rng, 1, 0.7));
    p.insert(p.end(), q.begin(), q.end());
    points.push_back(p);
  }
  auto series = evaluate_points(points, [](const std::vector<double>& x) {
    const Complex z{x[0], x[1]}, w{x[2], x[3]};
    const Complex closed = bergman_kernel(z, w);
    return std::abs(bergman_kernel(z, w, 300u) - closed) / std::abs(closed);
  });
  out.push_back(make_report("bergman-series", {"re zeta", "im zeta", "re chi", "im chi"}, std::move(series), 1e-8,
                            "300-term series against the closed form, relative"));

  std::vector<std::vector<double>> disk_points;
  if (s.samples > 0) disk_points.push_back({0.0, 0.0});
  while (disk_points.size() < s.samples) disk_points.push_back(interleave(random_ball_point(rng, 1, 0.7)));
  auto ratio = evaluate_points(disk_points, [](const std::vector<double>& x) {
    const Complex z{x[0], x[1]};
    return std::abs(bergman_metric(z) / poincare_disk_coefficient(z) - 0.5);
  });
  out.push_back(make_report("bergman-metric-ratio", complex_coordinate_names(1), std::move(ratio), 1e-8,
                            "d d-bar ln K_B over 1/(1-|zeta|^2)^2 is 1/2 everywhere"));

  auto reproducing = evaluate_points(std::move(disk_points), [](const std::vector<double>& x) {
    const Complex z{x[0], x[1]};
    double worst = 0.0;
    for (unsigned m = 1; m <= 6; ++m) {
      const Complex value =
          integrate_disk([z, m](Complex c) { return bergman_kernel(z, c) * bergman_basis(m, c); }, 64, 96);
      worst = std::max(worst, std::abs(value - bergman_basis(m, z)));
    }
    return worst;
  });
  out.push_back(make_report("bergman-reproducing", complex_coordinate_names(1), std::move(reproducing), 1e-6,
                            "integral of K_B(zeta, chi) u_m(chi) against u_m(zeta), m <= 6"));
  return out;
}

std::vector<VerificationReport> check_indefinite(const SuiteSettings& s) {
  std::vector<VerificationReport> out;

  std::vector<std::vector<double>> degrees;
  for (unsigned N = 1; N <= 10; ++N) degrees.push_back({static_cast<double>(N)});
  auto signature = evaluate_points(degrees, [](const std::vector<double>& x) {
    const auto N = static_cast<unsigned>(x[0]);
    const auto space = image_signature(InnerProductSpace::hyperbolic(2), N);
    // SU(p,q) with p = ceil((N+1)/2), q = floor((N+1)/2).
    const double p = (N + 2) / 2, q = (N + 1) / 2;
    return std::abs(static_cast<double>(space.positive_count()) - p) +
           std::abs(static_cast<double>(space.negative_count()) - q);
  });
  out.push_back(make_report("indefinite-signature", {"N"}, std::move(signature), 0.0,
                            "sign counts of the degree-N image of (-,+)"));

  for (unsigned N = 1; N <= 6; ++N)
    out.push_back(verify_indefinite_scaling(N, s.samples, metric_tol(s, 1e-6), s.options));

  std::mt19937_64 rng(s.options.seed);
  std::uniform_real_distribution<double> tau_dist(0.05, 3.0);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * kPi);
  // Away from tau = 0, where the image pseudo-norm 2 sinh^4(tau/2) - 1 meets -1.
  std::uniform_real_distribution<double> witness_tau(0.5, 3.0);
  std::vector<std::vector<double>> witness_points;
  for (std::size_t i = 0; i < s.samples; ++i) witness_points.push_back({witness_tau(rng), phi_dist(rng)});
  auto witness = evaluate_points(witness_points, [](const std::vector<double>& x) {
    // A point of CH^1 normalised to -|p0|^2 + |p1|^2 = -1.
    const StateVector p{std::cosh(x[0] / 2) * std::polar(1.0, x[1]), std::sinh(x[0] / 2)};
    const EmbeddingWitness w = non_embeddability_witness(p);
    return std::abs(w.actual - w.expected) > 1e-6 ? 0.0 : 1.0;
  });
  out.push_back(make_report("non-embeddability", {"tau", "phi"}, std::move(witness), 0.0,
                            "deviation 1 marks an image that does satisfy the CH^2 constraint"));

  std::vector<std::vector<double>> norm_points;
  for (unsigned N = 1; N <= 10; ++N)
    for (std::size_t i = 0; i < s.samples; ++i) norm_points.push_back({static_cast<double>(N), tau_dist(rng), phi_dist(rng)});
  auto norms = evaluate_points(std::move(norm_points), [](const std::vector<double>& x) {
    const auto N = static_cast<unsigned>(x[0]);
    const StateVector z = indefinite_su11_state(x[1], x[2], N);
    const double expected = N % 2 == 0 ? 1.0 : -1.0;
    // Relative to sum |z_j|^2, the scale on which the signed sum can round.
    return std::abs(pseudo_norm(z, indefinite_su11_space(N)) - expected) / z.amplitudes().squaredNorm();
  });
  out.push_back(make_report("indefinite-pseudo-norm", {"N", "tau", "phi"}, std::move(norms), 1e-12,
                            "(-1)^N, measured relative to the unsigned norm"));
  return out;
}

std::vector<VerificationReport> check_hierarchy(const SuiteSettings&) {
  struct Chain {
    std::uint64_t k0;
    unsigned depth;
    std::vector<std::uint64_t> expected;
  };
  const std::vector<Chain> chains{{1, 4, {1, 2, 5, 20, 230}}, {3, 3, {3, 9, 54, 1539}}, {4, 2, {4, 14, 119}}};
  std::vector<VerificationSample> samples;
  for (const auto& c : chains) {
    const auto got = hierarchy_chain(c.k0, c.depth);
    double mismatches = got.size() == c.expected.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(got.size(), c.expected.size()); ++i) mismatches += got[i] != c.expected[i];
    samples.push_back({{static_cast<double>(c.k0), static_cast<double>(c.depth)}, mismatches});
  }
  const auto su5 = hierarchy_chain(4, 3);
  std::ostringstream notes;
  notes << "SU(5) chain continues to " << su5.back() << "; the value 7497 sometimes quoted does not follow from k -> C(k+2,2)-1";
  return {make_report("hierarchy", {"k0", "depth"}, std::move(samples), 0.0, notes.str())};
}

std::vector<VerificationReport> check_identity(const SuiteSettings&) {
  std::vector<std::vector<double>> degrees;
  for (unsigned N = 1; N <= 8; ++N) degrees.push_back({static_cast<double>(N)});
  auto result = evaluate_points(std::move(degrees), [](const std::vector<double>& x) {
    return resolution_of_identity_residual(static_cast<unsigned>(x[0]), 32);
  });
  return {make_report("resolution-of-identity", {"N"}, std::move(result), 1e-10,
                      "(N+1)/4pi integral of |N;theta,phi><...| over S^2, order 32")};
}

const std::vector<std::pair<std::string, Group>>& groups() {
  static const std::vector<std::pair<std::string, Group>> table{
      {"conic", check_conic},         {"rational", check_rational},   {"su2", check_su2},
      {"scaling", check_scaling},     {"curvature", check_curvature}, {"flatness", check_flatness},
      {"eigenvalue", check_eigenvalue}, {"sector", check_sector},     {"su11", check_su11},
      {"bergman", check_bergman},     {"indefinite", check_indefinite}, {"hierarchy", check_hierarchy},
      {"identity", check_identity},
  };
  return table;
}

}  // namespace

std::vector<std::string> verification_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : groups()) names.push_back(name);
  return names;
}

std::vector<VerificationReport> run_verification(const std::string& name, const SuiteSettings& settings) {
  if (settings.samples == 0) throw UsageError("verification needs at least one sample");
  std::vector<VerificationReport> out;
  for (const auto& [group, fn] : groups()) {
    if (name != "all" && name != group) continue;
    auto reports = fn(settings);
    out.insert(out.end(), std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end()));
  }
  if (out.empty()) throw UsageError("unknown verification: " + name);
  return out;
}

}  // namespace cohgeom
