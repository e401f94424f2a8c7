#pragma once

#include <nlohmann/json.hpp>

#include "cohgeom/metric.hpp"
#include "cohgeom/types.hpp"
#include "cohgeom/verification.hpp"

namespace cohgeom {

using Json = nlohmann::ordered_json;

/// {"re": [...], "im": [...]}
Json to_json(const StateVector& v);
StateVector state_from_json(const Json& j);

/// Plain integer array.
Json to_json(const MultiIndex& idx);
MultiIndex multi_index_from_json(const Json& j);

Json to_json(const InnerProductSpace& space);
Json to_json(const MetricTensor& g);
Json to_json(const Eigen::MatrixXd& m);
Json to_json(const VerificationReport& report);

}  // namespace cohgeom
