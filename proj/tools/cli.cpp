#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "args.hpp"
#include "cohgeom/bergman.hpp"
#include "cohgeom/coherent.hpp"
#include "cohgeom/errors.hpp"
#include "cohgeom/metric.hpp"
#include "cohgeom/parallel.hpp"
#include "cohgeom/projective.hpp"
#include "cohgeom/serialization.hpp"
#include "cohgeom/verification.hpp"
#include "cohgeom/veronese.hpp"
#include "families.hpp"

namespace cohgeom::cli {

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Result {
  Json json;
  Table table;
  int code = kExitOk;
};

struct Common {
  std::string format = "json";
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::optional<double> fd_step;
  std::optional<unsigned> cutoff;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

void write_csv(const Table& t, std::ostream& out) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

std::string label_text(const MultiIndex& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " " : "") + std::to_string(idx[i]);
  return s;
}

Table state_table(const StateVector& v, const std::vector<MultiIndex>& labels) {
  Table t{{"label", "re", "im"}, {}};
  for (std::size_t i = 0; i < v.size(); ++i)
    t.rows.push_back({i < labels.size() ? label_text(labels[i]) : std::to_string(i), format_real(v[i].real()),
                      format_real(v[i].imag())});
  return t;
}

Table matrix_table(const Eigen::MatrixXd& m) {
  Table t{{"i", "j", "value"}, {}};
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      t.rows.push_back({std::to_string(i), std::to_string(j), format_real(m(i, j))});
  return t;
}

Table scalar_table(const std::string& name, double value) { return {{name}, {{format_real(value)}}}; }

Json labels_json(const std::vector<MultiIndex>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(to_json(l));
  return out;
}

StateVector state_from_text(const std::string& text, const std::string& flag) {
  const auto values = parse_complex_list(text);
  if (values.empty()) throw UsageError(flag + " needs at least one component");
  ComplexVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return StateVector(std::move(v));
}

ComplexVector chart_from_text(const std::string& text) {
  const auto values = parse_complex_list(text);
  ComplexVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

double real_from_complex(Complex z, const std::string& flag) {
  if (z.imag() != 0.0) throw UsageError(flag + " must be real");
  return z.real();
}

bool is_chart_family(const std::string& name) {
  return name == "veronese" || name == "suk" || name == "glauber" || name == "su11" || name == "su1k";
}

// Chart families take their dimension from the point they are evaluated at.
FamilySpec family_spec(const std::string& name, unsigned degree, const Common& common, std::size_t point_size) {
  FamilySpec spec{name, degree, common.cutoff.value_or(0), 1};
  if (is_chart_family(name)) {
    if (point_size % 2 != 0 || point_size == 0)
      throw UsageError("family '" + name + "' takes interleaved (re, im) chart coordinates");
    spec.k = point_size / 2;
  }
  return spec;
}

void check_point(const Family& f, const std::vector<double>& point) {
  if (point.size() != f.parameters.size())
    throw UsageError("expected " + std::to_string(f.parameters.size()) + " parameters, got " +
                     std::to_string(point.size()));
}

MetricField chart_field(const std::string& name, const Family* family, double inner_step) {
  if (name == "fs") return fs_metric_chart;
  if (name == "hyperbolic") return hyperbolic_metric_chart;
  if (family == nullptr || !family->chart) throw UsageError("curvature needs a holomorphic chart family");
  return pullback_metric_field(*family->chart, family->space, inner_step);
}

double inner_curvature_step(const Common& c) { return c.fd_step.value_or(kDefaultSecondDerivativeStep); }
double pullback_step(const Common& c) { return c.fd_step.value_or(kDefaultFirstDerivativeStep); }

// ---------------------------------------------------------------- commands

struct EmbedArgs {
  std::string p;
  unsigned degree = 1;
  std::string signs;
};

Result cmd_embed(const EmbedArgs& a) {
  const StateVector p = state_from_text(a.p, "--p");
  InnerProductSpace base = InnerProductSpace::definite(p.size());
  if (!a.signs.empty()) {
    std::vector<int> signs;
    for (double s : parse_real_list(a.signs)) signs.push_back(static_cast<int>(s));
    base = InnerProductSpace(std::move(signs));
    if (base.dim() != p.size()) throw UsageError("--signs must match the length of --p");
  }
  const VeroneseMap E(p.size(), a.degree);
  const StateVector image = E(p);
  const InnerProductSpace space = image_signature(base, a.degree);
  Result r;
  r.json = Json{{"degree", a.degree},
                {"labels", labels_json(E.labels())},
                {"state", to_json(image)},
                {"space", to_json(space)},
                {"pseudo_norm", pseudo_norm(image, space)}};
  r.table = state_table(image, E.labels());
  return r;
}

struct CoherentArgs {
  std::string family;
  unsigned degree = 1;
  std::string a, p, xi;
  double theta = 0.0, phi = 0.0, vphi = 0.0, eta = 0.0, tau = 0.0;
};

Result cmd_coherent(const CoherentArgs& c, const Common& common) {
  std::optional<CoherentParameters> params;
  unsigned level = c.degree;
  const unsigned cutoff = common.cutoff.value_or(0);
  if (c.family == "glauber") {
    params = GlauberParams{parse_complex_list(c.a)};
    if (std::get<GlauberParams>(*params).a.empty()) throw UsageError("glauber needs --a");
    level = cutoff;
  } else if (c.family == "su2") {
    params = Su2Params(c.theta, c.phi);
  } else if (c.family == "su3") {
    const auto xi = parse_complex_list(c.xi.empty() ? "0" : c.xi);
    if (xi.size() != 1) throw UsageError("su3 takes a single real --xi angle");
    params = Su3Params(c.theta, c.vphi, real_from_complex(xi[0], "--xi"), c.eta);
  } else if (c.family == "suk") {
    params = SukParams(state_from_text(c.p, "--p"));
  } else if (c.family == "su11") {
    const auto xi = parse_complex_list(c.xi);
    if (xi.size() != 1) throw UsageError("su11 takes a single complex --xi");
    params = Su11Params(xi[0]);
    level = cutoff;
  } else if (c.family == "su1k") {
    params = Su1kParams(parse_complex_list(c.xi));
    level = cutoff;
  } else if (c.family == "indefinite-su11") {
    params = IndefiniteSu11Params(c.tau, c.phi);
  } else {
    throw UsageError("unknown family '" + c.family + "'");
  }
  const LabelledState s = make_coherent_state(*params, level);
  Result r;
  r.json = Json{{"family", c.family},
                {"labels", labels_json(s.labels)},
                {"state", to_json(s.state)},
                {"space", to_json(s.space)},
                {"pseudo_norm", pseudo_norm(s.state, s.space)}};
  r.table = state_table(s.state, s.labels);
  return r;
}

Result cmd_metric(const std::string& chart, const std::string& zeta_text) {
  const ChartPoint zeta{chart_from_text(zeta_text), 0};
  if (zeta.dim() == 0) throw UsageError("--zeta needs at least one coordinate");
  const MetricTensor g = chart == "fs" ? fs_metric_chart(zeta) : hyperbolic_metric_chart(zeta);
  Result r;
  r.json = to_json(g);
  r.table.header = {"i", "j", "re", "im"};
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      r.table.rows.push_back({std::to_string(i), std::to_string(j), format_real(g(i, j).real()), format_real(g(i, j).imag())});
  return r;
}

Result cmd_pullback(const std::string& name, unsigned degree, const std::string& point_text, const Common& common) {
  const auto point = parse_real_list(point_text);
  const Family f = make_family(family_spec(name, degree, common, point.size()));
  check_point(f, point);
  const Eigen::MatrixXd G = pullback_metric(f.map, point, f.space, pullback_step(common));
  Result r;
  r.json = Json{{"family", name}, {"parameters", f.parameters}, {"point", point}, {"metric", to_json(G)}};
  r.table = matrix_table(G);
  return r;
}

Result cmd_curvature(const std::string& name, unsigned degree, const std::string& zeta_text, const Common& common) {
  const ChartPoint zeta{chart_from_text(zeta_text), 0};
  if (zeta.dim() == 0) throw UsageError("--zeta needs at least one coordinate");
  std::optional<Family> family;
  if (name != "fs" && name != "hyperbolic") family = make_family(family_spec(name, degree, common, 2 * zeta.dim()));
  const double R = scalar_curvature(chart_field(name, family ? &*family : nullptr, inner_curvature_step(common)), zeta);
  Result r;
  r.json = Json{{"family", name}, {"zeta", to_json(StateVector(zeta.coords))}, {"curvature", R}};
  r.table = scalar_table("curvature", R);
  return r;
}

Result cmd_distance(const std::string& v, const std::string& w) {
  const double d = fs_distance(state_from_text(v, "--v"), state_from_text(w, "--w"));
  Result r;
  r.json = Json{{"distance", d}};
  r.table = scalar_table("distance", d);
  return r;
}

Result cmd_kernel(const std::string& zeta_text, const std::string& chi_text, std::optional<unsigned> terms) {
  const Complex zeta = parse_complex(zeta_text);
  const Complex chi = parse_complex(chi_text);
  const Complex K = bergman_kernel(zeta, chi, terms);
  Result r;
  r.json = Json{{"zeta", {zeta.real(), zeta.imag()}},
                {"chi", {chi.real(), chi.imag()}},
                {"terms", terms ? Json(*terms) : Json("closed")},
                {"kernel", {{"re", K.real()}, {"im", K.imag()}}}};
  r.table = {{"re", "im"}, {{format_real(K.real()), format_real(K.imag())}}};
  return r;
}

Result cmd_verify(const std::string& name, std::size_t samples, const Common& common, std::ostream& err) {
  SuiteSettings settings;
  settings.metric_tol = common.tol;
  settings.samples = samples;
  settings.options.seed = common.seed;
  settings.options.fd_step = common.fd_step;
  const auto reports = run_verification(name, settings);

  Result r;
  Json list = Json::array();
  bool all = true;
  r.table.header = {"name", "pass", "max_deviation", "tolerance"};
  for (const auto& rep : reports) {
    all = all && rep.pass;
    list.push_back(to_json(rep));
    r.table.rows.push_back({rep.name, rep.pass ? "true" : "false", format_real(rep.max_deviation), format_real(rep.tolerance)});
    if (!rep.pass)
      err << "FAIL " << rep.name << ": max deviation " << rep.max_deviation << " > " << rep.tolerance << '\n';
  }
  r.json = Json{{"pass", all}, {"reports", std::move(list)}};
  r.code = all ? kExitOk : kExitVerificationFailed;
  return r;
}

struct SweepArgs {
  std::string family;
  unsigned degree = 1;
  std::string param;
  std::optional<std::string> values;
  std::optional<double> from, to;
  std::optional<std::size_t> count;
  std::string quantity = "norm";
  std::string point;
  std::string reference;
  std::string entry = "0,0";
};

std::vector<double> sweep_grid(const SweepArgs& s) {
  const bool range = s.from || s.to || s.count;
  if (s.values && range) throw UsageError("give either --values or --from/--to/--count, not both");
  if (s.values) return parse_real_list(*s.values);
  if (!(s.from && s.to && s.count)) throw UsageError("sweep needs --values or all of --from, --to, --count");
  std::vector<double> grid;
  for (std::size_t i = 0; i < *s.count; ++i)
    grid.push_back(*s.count == 1 ? *s.from : *s.from + (*s.to - *s.from) * static_cast<double>(i) / static_cast<double>(*s.count - 1));
  return grid;
}

unsigned positive_integer(double x, const std::string& what) {
  if (!(x >= 1.0) || std::floor(x) != x || x > 1e6) throw UsageError(what + " grid values must be positive integers");
  return static_cast<unsigned>(x);
}

Result cmd_sweep(const SweepArgs& s, const Common& common) {
  static const std::vector<std::string> quantities{"norm", "metric", "curvature", "distance"};
  if (std::find(quantities.begin(), quantities.end(), s.quantity) == quantities.end())
    throw UsageError("--quantity must be norm, metric, curvature or distance");
  if (s.param.empty()) throw UsageError("sweep needs --param");
  const std::vector<double> grid = sweep_grid(s);

  std::vector<double> base = parse_real_list(s.point);
  const Family probe = make_family(family_spec(s.family, s.degree, common, base.empty() ? 2 : base.size()));
  if (base.empty()) base.assign(probe.parameters.size(), 0.0);
  check_point(probe, base);
  std::vector<double> reference = s.reference.empty() ? base : parse_real_list(s.reference);
  check_point(probe, reference);

  const auto entry = parse_real_list(s.entry);
  if (entry.size() != 2 || entry[0] < 0 || entry[1] < 0 || entry[0] >= static_cast<double>(base.size()) ||
      entry[1] >= static_cast<double>(base.size()))
    throw UsageError("--entry must name a metric entry i,j");

  std::optional<std::size_t> slot;
  if (s.param != "N" && s.param != "cutoff") {
    const auto it = std::find(probe.parameters.begin(), probe.parameters.end(), s.param);
    if (it == probe.parameters.end()) throw UsageError("family '" + s.family + "' has no parameter '" + s.param + "'");
    slot = static_cast<std::size_t>(it - probe.parameters.begin());
  }
  for (double v : grid) {
    if (s.param == "N") positive_integer(v, "N");
    if (s.param == "cutoff") positive_integer(v, "cutoff");
  }

  const auto values = parallel_map(grid.size(), [&](std::size_t i) {
    Common row_common = common;
    unsigned degree = s.degree;
    std::vector<double> point = base;
    if (s.param == "N") degree = positive_integer(grid[i], "N");
    else if (s.param == "cutoff") row_common.cutoff = positive_integer(grid[i], "cutoff");
    else point[*slot] = grid[i];
    const Family f = make_family(family_spec(s.family, degree, row_common, point.size()));

    if (s.quantity == "norm") return pseudo_norm(f.map(point), f.space);
    if (s.quantity == "metric") {
      const Eigen::MatrixXd G = pullback_metric(f.map, point, f.space, pullback_step(common));
      return G(static_cast<Eigen::Index>(entry[0]), static_cast<Eigen::Index>(entry[1]));
    }
    if (s.quantity == "curvature")
      return scalar_curvature(chart_field(s.family, &f, inner_curvature_step(common)), ChartPoint{deinterleave(point), 0});
    return fs_distance(f.map(point), f.map(reference));
  });

  Result r;
  Json rows = Json::array();
  r.table.header = {s.param, "value"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rows.push_back(Json{{s.param, grid[i]}, {"value", values[i]}});
    r.table.rows.push_back({format_real(grid[i]), format_real(values[i])});
  }
  r.json = Json{{"family", s.family}, {"quantity", s.quantity}, {"parameter", s.param}, {"rows", std::move(rows)}};
  return r;
}

Result cmd_hierarchy(std::uint64_t k0, unsigned depth) {
  const auto chain = hierarchy_chain(k0, depth);
  Result r;
  r.json = chain;
  r.table.header = {"step", "k"};
  for (std::size_t i = 0; i < chain.size(); ++i) r.table.rows.push_back({std::to_string(i), std::to_string(chain[i])});
  return r;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherent states as Veronese embeddings: states, metrics, curvature and checks", "cohgeom"};
  app.require_subcommand(1);

  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", common.seed, "Seed for sampled checks");
  app.add_option("--tol", common.tol, "Tolerance for metric comparisons")->envname("COHGEOM_TOL");
  app.add_option("--fd-step", common.fd_step, "Finite-difference step")->envname("COHGEOM_FD_STEP");
  app.add_option("--cutoff", common.cutoff, "Truncation for glauber, su11 and su1k");
  app.add_option("--config", "JSON file of flag values; flags on the command line win");

  auto sub = [&app](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  EmbedArgs embed;
  auto* embed_cmd = sub("embed", "Veronese image of a homogeneous point");
  embed_cmd->add_option("--p", embed.p, "Homogeneous coordinates, comma-separated a+bi")->required();
  embed_cmd->add_option("-N,--degree", embed.degree, "Degree")->check(CLI::PositiveNumber);
  embed_cmd->add_option("--signs", embed.signs, "Signature of the base, e.g. -1,1");

  CoherentArgs coh;
  auto* coh_cmd = sub("coherent", "Construct a coherent state");
  coh_cmd->add_option("--family", coh.family, "glauber|su2|su3|suk|su11|su1k|indefinite-su11")->required();
  coh_cmd->add_option("-N,--degree", coh.degree, "N for the finite families")->check(CLI::PositiveNumber);
  coh_cmd->add_option("--a", coh.a, "Glauber amplitudes");
  coh_cmd->add_option("--p", coh.p, "Homogeneous point for suk");
  coh_cmd->add_option("--xi", coh.xi, "su11/su1k disk point, or the su3 angle xi");
  coh_cmd->add_option("--theta", coh.theta);
  coh_cmd->add_option("--phi", coh.phi);
  coh_cmd->add_option("--vphi", coh.vphi);
  coh_cmd->add_option("--eta", coh.eta);
  coh_cmd->add_option("--tau", coh.tau);

  std::string chart = "fs", zeta, chi, family, point;
  unsigned degree = 1;
  auto* metric_cmd = sub("metric", "Fubini-Study or hyperbolic metric at a chart point");
  metric_cmd->add_option("--chart", chart)->check(CLI::IsMember({"fs", "hyperbolic"}));
  metric_cmd->add_option("--zeta", zeta, "Chart coordinates")->required();

  auto* pull_cmd = sub("pullback", "Metric induced on the parameters of a family");
  pull_cmd->add_option("--family", family)->required()->check(CLI::IsMember(family_names()));
  pull_cmd->add_option("-N,--degree", degree)->check(CLI::PositiveNumber);
  pull_cmd->add_option("--point", point, "Real parameters, comma-separated")->required();

  auto* curv_cmd = sub("curvature", "Scalar curvature at a chart point");
  curv_cmd->add_option("--family", family, "fs|hyperbolic|veronese|suk|glauber|su11|su1k")->required();
  curv_cmd->add_option("-N,--degree", degree)->check(CLI::PositiveNumber);
  curv_cmd->add_option("--zeta", zeta)->required();

  std::string v, w;
  auto* dist_cmd = sub("distance", "Fubini-Study distance between two states");
  dist_cmd->add_option("--v", v)->required();
  dist_cmd->add_option("--w", w)->required();

  std::optional<unsigned> terms;
  auto* kernel_cmd = sub("kernel", "Bergman kernel of the unit disk");
  kernel_cmd->add_option("--zeta", zeta)->required();
  kernel_cmd->add_option("--chi", chi)->required();
  kernel_cmd->add_option("--terms", terms, "Series terms; closed form when omitted")->check(CLI::PositiveNumber);

  std::string check = "all";
  std::size_t samples = 20;
  auto* verify_cmd = sub("verify", "Run named checks (or all)");
  verify_cmd->add_option("name", check, "all or one of the check groups");
  verify_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);

  SweepArgs sweep;
  auto* sweep_cmd = sub("sweep", "Tabulate a quantity over a parameter grid");
  sweep_cmd->add_option("--family", sweep.family)->required()->check(CLI::IsMember(family_names()));
  sweep_cmd->add_option("-N,--degree", sweep.degree)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--param", sweep.param, "Parameter name, N or cutoff")->required();
  sweep_cmd->add_option("--values", sweep.values, "Explicit grid");
  sweep_cmd->add_option("--from", sweep.from);
  sweep_cmd->add_option("--to", sweep.to);
  sweep_cmd->add_option("--count", sweep.count);
  sweep_cmd->add_option("--quantity", sweep.quantity, "norm|metric|curvature|distance");
  sweep_cmd->add_option("--point", sweep.point, "Base parameters (default zeros)");
  sweep_cmd->add_option("--reference", sweep.reference, "Reference parameters for distance");
  sweep_cmd->add_option("--entry", sweep.entry, "Metric entry i,j");

  std::uint64_t k0 = 1;
  unsigned depth = 1;
  auto* hier_cmd = sub("hierarchy", "Chain of Veronese target dimensions");
  hier_cmd->add_option("--k0", k0)->check(CLI::PositiveNumber);
  hier_cmd->add_option("--depth", depth)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Result result;
  try {
    if (embed_cmd->parsed()) result = cmd_embed(embed);
    else if (coh_cmd->parsed()) result = cmd_coherent(coh, common);
    else if (metric_cmd->parsed()) result = cmd_metric(chart, zeta);
    else if (pull_cmd->parsed()) result = cmd_pullback(family, degree, point, common);
    else if (curv_cmd->parsed()) result = cmd_curvature(family, degree, zeta, common);
    else if (dist_cmd->parsed()) result = cmd_distance(v, w);
    else if (kernel_cmd->parsed()) result = cmd_kernel(zeta, chi, terms);
    else if (verify_cmd->parsed()) result = cmd_verify(check, samples, common, err);
    else if (sweep_cmd->parsed()) result = cmd_sweep(sweep, common);
    else if (hier_cmd->parsed()) result = cmd_hierarchy(k0, depth);
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (common.format == "csv") write_csv(result.table, out);
  else out << result.json.dump() << '\n';
  return result.code;
}

}  // namespace cohgeom::cli
