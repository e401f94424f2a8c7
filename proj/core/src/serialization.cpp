#include "cohgeom/serialization.hpp"

#include <cmath>

#include "cohgeom/errors.hpp"

namespace cohgeom {

namespace {

// JSON has no infinity; report it as a string so the output stays parseable.
Json number(double x) {
  if (std::isfinite(x)) return x + 0.0;  // folds -0.0
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

}  // namespace

Json to_json(const StateVector& v) {
  Json re = Json::array(), im = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    re.push_back(v[i].real());
    im.push_back(v[i].imag());
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

StateVector state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_array() || !j["im"].is_array())
    throw UsageError("state JSON must be {\"re\": [...], \"im\": [...]}");
  const auto& re = j["re"];
  const auto& im = j["im"];
  if (re.size() != im.size()) throw UsageError("state JSON: re and im differ in length");
  ComplexVector z(static_cast<Eigen::Index>(re.size()));
  try {
    for (std::size_t i = 0; i < re.size(); ++i)
      z(static_cast<Eigen::Index>(i)) = {re[i].get<double>(), im[i].get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("state JSON: ") + e.what());
  }
  return StateVector(std::move(z));
}

Json to_json(const MultiIndex& idx) {
  Json out = Json::array();
  for (std::size_t i = 0; i < idx.size(); ++i) out.push_back(idx[i]);
  return out;
}

MultiIndex multi_index_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("multi-index JSON must be an array");
  std::vector<unsigned> occ;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) throw UsageError("multi-index entries must be non-negative integers");
    occ.push_back(e.get<unsigned>());
  }
  return MultiIndex(std::move(occ));
}

Json to_json(const InnerProductSpace& space) {
  return Json{{"signs", space.signs()},
              {"positive", space.positive_count()},
              {"negative", space.negative_count()}};
}

Json to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const MetricTensor& g) {
  const Eigen::MatrixXcd& e = g.entries();
  return Json{{"convention", std::string(MetricTensor::convention)},
              {"re", to_json(Eigen::MatrixXd(e.real()))},
              {"im", to_json(Eigen::MatrixXd(e.imag()))},
              {"real_form", to_json(g.real_form())}};
}

Json to_json(const VerificationReport& report) {
  Json samples = Json::array();
  for (const auto& s : report.samples) samples.push_back(Json{{"point", s.point}, {"deviation", number(s.deviation)}});
  Json out{{"name", report.name},
           {"pass", report.pass},
           {"max_deviation", number(report.max_deviation)},
           {"tolerance", report.tolerance},
           {"coordinates", report.coordinates},
           {"samples", std::move(samples)}};
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

}  // namespace cohgeom
