#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohgeom/finite_difference.hpp"

namespace cohgeom {

struct VerificationSample {
  std::vector<double> point;
  double deviation = 0.0;
};

/// Outcome of checking one identity on a set of sample points.
/// pass == (max_deviation <= tolerance), fixed at construction.
struct VerificationReport {
  std::string name;
  std::vector<std::string> coordinates;  ///< names of the entries of each sample point
  std::vector<VerificationSample> samples;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string notes;
};

VerificationReport make_report(std::string name, std::vector<std::string> coordinates,
                               std::vector<VerificationSample> samples, double tolerance, std::string notes = {});

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Difference step for pullbacks; each check has its own default when unset.
  std::optional<double> fd_step;
};

/// Pullback through suk_state on random CP^k chart points against N times the
/// Fubini-Study metric. k in {1,2,3}, N <= 6.
VerificationReport verify_scaling(unsigned k, unsigned N, std::size_t samples, double tol,
                                  const VerifyOptions& options = {});

/// Pullback through glauber_state (sum |a|^2 <= 0.64) against the flat metric 4 I.
VerificationReport verify_flatness(std::size_t modes, unsigned cutoff, std::size_t samples, double tol,
                                   const VerifyOptions& options = {});

/// SU(1,1) pullback against 8/(1-|xi|^2)^2 I for |xi| <= 0.7, followed by the
/// SU(1,2) pullback against twice the CH^2 metric.
std::vector<VerificationReport> verify_su11_metric(std::size_t cutoff, std::size_t samples, double tol,
                                                   const VerifyOptions& options = {});

/// Indefinite pullback through indefinite_su11_state against N diag(1, sinh^2 tau),
/// tau <= 2.5. Defaults to a 1e-3 difference step: the pseudo-norm cancels
/// terms of size cosh(tau)^N, which amplifies roundoff at smaller steps.
VerificationReport verify_indefinite_scaling(unsigned N, std::size_t samples, double tol,
                                             const VerifyOptions& options = {});

struct SuiteSettings {
  /// Overrides the tolerance of every metric-comparison report.
  std::optional<double> metric_tol;
  std::size_t samples = 20;
  VerifyOptions options;
};

/// Names accepted by run_verification besides "all".
std::vector<std::string> verification_names();

/// Runs one named group of checks (or "all"). Throws UsageError on an unknown name.
std::vector<VerificationReport> run_verification(const std::string& name, const SuiteSettings& settings);

}  // namespace cohgeom
