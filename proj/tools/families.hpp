#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cohgeom/metric.hpp"
#include "cohgeom/types.hpp"

namespace cohgeom::cli {

struct FamilySpec {
  std::string name;
  unsigned degree = 1;   ///< N for the finite families
  unsigned cutoff = 0;   ///< truncation for glauber, su11, su1k; 0 picks the default
  std::size_t k = 1;     ///< chart dimension for veronese, suk, glauber, su1k
};

/// A parameterized family of states ready for pullback, sweeps and curvature.
struct Family {
  std::vector<std::string> parameters;
  ParameterMap map;
  InnerProductSpace space;
  /// Present when the parameters are interleaved holomorphic chart coordinates.
  std::optional<HolomorphicMap> chart;
};

std::vector<std::string> family_names();

/// Throws UsageError for an unknown name or out-of-range degree.
Family make_family(const FamilySpec& spec);

}  // namespace cohgeom::cli
