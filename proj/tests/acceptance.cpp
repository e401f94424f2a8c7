// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Each criterion runs the library's verification groups with 50 samples and
// checks three things: every expected report is present, no report runs at a
// looser tolerance than the criterion allows, and every report passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "cohgeom/errors.hpp"
#include "cohgeom/verification.hpp"
#include "cohgeom/veronese.hpp"

using namespace cohgeom;

namespace {

constexpr std::size_t kSamples = 50;

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> groups;
  std::map<std::string, double> thresholds;  // report name -> loosest allowed tolerance
};

struct Outcome {
  bool pass = true;
  double worst_ratio = 0.0;  // max deviation / tolerance over reports with a nonzero tolerance
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += why;
}

Outcome evaluate(const Criterion& c) {
  Outcome o;
  SuiteSettings settings;
  settings.samples = kSamples;
  std::map<std::string, VerificationReport> seen;
  try {
    for (const auto& group : c.groups)
      for (auto& r : run_verification(group, settings)) seen.emplace(r.name, std::move(r));
  } catch (const std::exception& e) {
    fail(o, std::string("error: ") + e.what());
    return o;
  }
  for (const auto& [name, limit] : c.thresholds) {
    const auto it = seen.find(name);
    if (it == seen.end()) {
      fail(o, "missing report " + name);
      continue;
    }
    const VerificationReport& r = it->second;
    if (r.tolerance > limit) fail(o, name + " tolerance looser than criterion");
    if (!r.pass) fail(o, name + " deviation " + std::to_string(r.max_deviation));
    if (r.tolerance > 0) o.worst_ratio = std::max(o.worst_ratio, r.max_deviation / r.tolerance);
    else if (r.max_deviation != 0) fail(o, name + " expected exact agreement");
  }
  return o;
}

// Exact chains are checked directly as well as through the report.
Outcome hierarchy_extra() {
  Outcome o;
  using Chain = std::vector<std::uint64_t>;
  if (hierarchy_chain(1, 4) != Chain{1, 2, 5, 20, 230}) fail(o, "chain from 1");
  if (hierarchy_chain(3, 3) != Chain{3, 9, 54, 1539}) fail(o, "chain from 3");
  if (hierarchy_chain(4, 2) != Chain{4, 14, 119}) fail(o, "chain from 4");
  if (hierarchy_chain(4, 3).back() != 7259) fail(o, "SU(5) fourth term");
  SuiteSettings s;
  s.samples = 1;
  const auto reports = run_verification("hierarchy", s);
  if (reports.empty() || reports.front().notes.find("7497") == std::string::npos)
    fail(o, "unmatched 7497 not flagged");
  return o;
}

std::vector<Criterion> criteria() {
  std::map<std::string, double> indefinite{{"indefinite-signature", 0.0},
                                           {"non-embeddability", 0.0},
                                           {"indefinite-pseudo-norm", 1e-12}};
  for (int N = 1; N <= 6; ++N) indefinite["indefinite-scaling N=" + std::to_string(N)] = 1e-6;
  return {
      {1, "conic scaling", {"conic"}, {{"conic", 1e-6}}},
      {2, "rational-curve scaling", {"rational"}, {{"rational-metric", 1e-6}, {"rational-curvature", 1e-4}}},
      {3, "SU(2) metric", {"su2"}, {{"su2-metric", 1e-6}}},
      {4,
       "SU(k+1) proposition",
       {"scaling", "curvature"},
       {{"scaling k=2 N=2", 1e-5}, {"scaling k=2 N=3", 1e-5}, {"scaling k=3 N=2", 1e-5}, {"cp2-curvature", 1e-3}}},
      {5, "Glauber flatness", {"flatness"}, {{"flatness M=1", 1e-6}, {"flatness M=2", 1e-6}}},
      {6, "annihilation eigenvalue", {"eigenvalue"}, {{"annihilation-eigenvalue", 1e-8}}},
      {7, "sector decomposition", {"sector"}, {{"sector-su2", 1e-10}}},
      {8, "SU(1,1) and SU(1,2) metrics", {"su11"}, {{"su11-metric", 1e-6}, {"su12-metric", 1e-5}}},
      {9,
       "Bergman suite",
       {"bergman"},
       {{"bergman-orthonormality", 1e-8}, {"bergman-series", 1e-8}, {"bergman-metric-ratio", 1e-8}}},
      {10, "indefinite suite", {"indefinite"}, indefinite},
      {11, "hierarchy", {"hierarchy"}, {{"hierarchy", 0.0}}},
      {12, "resolution of the identity", {"identity"}, {{"resolution-of-identity", 1e-10}}},
  };
}

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = evaluate(c);
    if (c.id == 11) {
      const Outcome extra = hierarchy_extra();
      if (!extra.pass) fail(o, extra.detail);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %-30s worst deviation/tolerance %.2e  %.2fs%s%s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), o.worst_ratio, secs, o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria().size()) - failures, criteria().size());
  return failures == 0 ? 0 : 1;
}
