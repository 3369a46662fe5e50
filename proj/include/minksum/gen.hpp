#ifndef MINKSUM_GEN_HPP
#define MINKSUM_GEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "minksum/lattice.hpp"
#include "minksum/planar.hpp"

namespace minksum {

// SplitMix64: the fixed generator behind every seeded fixture, so other
// implementations can reproduce them. Constants as published by Steele,
// Lea and Flood; see the README for the exact recurrence.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next();
    long pick(long lo, long hi);  // uniform in [lo, hi]

  private:
    uint64_t state_;
};

struct GenSpec {
    int dim = 3;
    int n_points = 8;
    uint64_t seed = 1;
    long coordinate_bound = 1000;  // integer coordinates drawn from [-B, B]
};

// Convex hull of n_points seeded integer points, as a validated lattice;
// redraws with a derived seed until the hull is full-dimensional.
// Deterministic: equal specs yield bit-identical polytopes.
Polytope random_polytope(const GenSpec& spec);

// Orthogonal rational matrix (rows) with determinant +1, the product of
// one Pythagorean-triple Givens rotation per axis pair. Seed 0 is the
// identity. The inverse is the transpose, exactly.
std::vector<Vec> rotation_matrix(int dim, uint64_t seed);

// Applies a linear map to all vertex coordinates and interior points.
// The combinatorial structure is untouched.
Polytope apply_linear_map(const Polytope& p, const std::vector<Vec>& matrix_rows);

// Rotates by rotation_matrix(ambient_dim, seed): degeneracy-avoidance
// preprocessing for inputs with parallel features, lattice preserved.
Polytope generic_rotate(const Polytope& p, uint64_t seed);

// Strictly convex integer polygon with close to n_edges edges (random
// edge vectors summing to zero, sorted by angle; duplicate directions
// merge). Scales to large n for the planar benchmarks.
ConvexPolygon random_convex_polygon(int n_edges, uint64_t seed, long coordinate_bound);

}  // namespace minksum

#endif
