#pragma once

#include <array>
#include <vector>

#include "tetratwist/geom.hpp"

namespace tetra {

/// Area of the intersection of two triangles given in a common 2D frame.
double triangle_overlap_area(const std::array<std::array<double, 2>, 3>& t1,
                             const std::array<std::array<double, 2>, 3>& t2);

/// Volume of the intersection of two (convex) tetrahedra, computed by
/// clipping the faces of `a` against the half spaces of `b`. Exact up to
/// floating point; face-to-face contact yields 0.
double tetra_intersection_volume(const Tetrahedron& a, const Tetrahedron& b);

/// Largest pairwise intersection volume over all tetrahedron pairs of the
/// list (0 when no pair interpenetrates).
double max_pairwise_intersection(const std::vector<Tetrahedron>& tets);

}  // namespace tetra
