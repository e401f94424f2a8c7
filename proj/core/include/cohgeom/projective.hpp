#pragma once

#include "cohgeom/types.hpp"

namespace cohgeom {

inline constexpr double kDefaultProjectiveTol = 1e-9;

/// sum_j sign_j conj(v_j) w_j. Conjugate-linear in v, linear in w.
Complex inner_product(const StateVector& v, const StateVector& w, const InnerProductSpace& space);
/// Same, with the positive-definite product.
Complex inner_product(const StateVector& v, const StateVector& w);
/// <v,v> under `space` (real up to rounding; returned as its real part).
double pseudo_norm(const StateVector& v, const InnerProductSpace& space);

/// 1 - |<v,w>|^2 / (<v,v><w,w>) under the definite product.
double overlap_deficit(const StateVector& v, const StateVector& w);

/// True when v and w are the same ray: overlap_deficit(v, w) <= tol.
bool projectively_equal(const StateVector& v, const StateVector& w, double tol = kDefaultProjectiveTol);

/// Inhomogeneous coordinates on the patch v[patch] != 0.
ChartPoint to_inhomogeneous(const StateVector& v, std::size_t patch = 0);
/// Homogeneous lift with a 1 inserted at `patch`.
StateVector to_homogeneous(const ChartPoint& point);

}  // namespace cohgeom
