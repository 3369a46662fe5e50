#ifndef MINKSUM_PLANAR_HPP
#define MINKSUM_PLANAR_HPP

#include <string>
#include <vector>

#include "minksum/lattice.hpp"

namespace minksum {

// Strictly convex polygon: counter-clockwise vertex ring, every
// consecutive turn strictly left, winding exactly once, no three
// consecutive vertices collinear. At least 3 vertices; flat shapes
// (points, segments) belong to the d-dimensional pipeline instead.
class ConvexPolygon {
  public:
    explicit ConvexPolygon(std::vector<Vec> vertices);

    int size() const { return static_cast<int>(v_.size()); }
    const Vec& vertex(int i) const { return v_[static_cast<size_t>(i)]; }
    // vertex(i+1) - vertex(i), cyclic.
    Vec edge_vector(int i) const {
        return v_[static_cast<size_t>((i + 1) % size())] - v_[static_cast<size_t>(i)];
    }
    const std::vector<Vec>& vertices() const { return v_; }

  private:
    std::vector<Vec> v_;
};

// Counts individual ring advances (support scans and merge steps), to
// check the linear-time behaviour of the planar sweep.
struct PlanarStats {
    long advances = 0;
};

// Exact cross product a.x*b.y - a.y*b.x.
Rational cross2(const Vec& a, const Vec& b);

// Orders directions counter-clockwise starting at `ref`. Returns -1 when
// a comes strictly before b in the sweep, +1 when after, 0 when parallel
// and codirectional. All inputs must be nonzero.
int compare_directions_from(const Vec& ref, const Vec& a, const Vec& b);

// Index of the vertex maximizing dot(vertex, direction), by linear scan.
// When the direction is an outward edge normal the maximum is attained by
// both edge endpoints; the tie-break returns the CCW-first of the two,
// i.e. the edge's source vertex.
int support_vertex_2d(const ConvexPolygon& p, const Vec& direction, PlanarStats* stats = nullptr);

// Minkowski sum of two convex polygons by the edge-angle merge: locate
// the support vertex of P for Q's first edge by linear scan, then advance
// around both rings emitting edges in CCW angular order. Parallel
// codirectional edge pairs are merged into a single output edge.
ConvexPolygon sum_polygons(const ConvexPolygon& p, const ConvexPolygon& q,
                           PlanarStats* stats = nullptr);

// n-way Minkowski sum by a simultaneous merged sweep over all edge rings;
// equals iterated pairwise sums but runs in one pass.
ConvexPolygon sum_polygons_multi(const std::vector<ConvexPolygon>& polys,
                                 PlanarStats* stats = nullptr);

// Conversions between the planar representation and d=2 face lattices.
ConvexPolygon polygon_from_lattice(const Polytope& p);
Polytope lattice_from_polygon(const ConvexPolygon& p, const std::string& label);

}  // namespace minksum

#endif
