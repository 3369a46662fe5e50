#ifndef MINKSUM_ORACLE_HPP
#define MINKSUM_ORACLE_HPP

#include <string>
#include <vector>

#include "minksum/lattice.hpp"

namespace minksum {

// Exact point cloud; points are kept sorted and deduplicated.
struct PointCloud {
    int dim = 0;
    std::vector<Vec> points;
};

// All sums v_1 + ... + v_n over the vertices of the inputs, deduplicated.
// The extreme points of a Minkowski sum are sums of input vertices, so
// this cloud determines the sum polytope.
PointCloud vertex_sums(const std::vector<const Polytope*>& inputs);

// Exact convex hull with its full face lattice, by exhaustive facet
// enumeration over point subsets. Coincident candidate hyperplanes are
// merged, so clouds with boundary degeneracies (coplanar points, points
// interior to facets) are handled correctly. Deliberately slow and
// simple: this is the reference the fast pipelines are checked against.
//
// Throws NotFullDimensional when the cloud does not affinely span R^d and
// InvalidArgument past the desk-scale size caps.
Polytope brute_hull(const PointCloud& cloud, const std::string& label = "hull");

// brute_hull(vertex_sums(inputs)): the ground-truth Minkowski sum.
Polytope oracle_minkowski(const std::vector<const Polytope*>& inputs);

}  // namespace minksum

#endif
