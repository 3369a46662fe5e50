// Hand-built reference polytopes shared by the test suites. These are
// constructed directly from explicit face lists, independent of the hull
// and sum pipelines they are used to check.
#ifndef MINKSUM_TESTS_FIXTURES_HPP
#define MINKSUM_TESTS_FIXTURES_HPP

#include <vector>

#include "minksum/lattice.hpp"

namespace minksum::fixtures {

inline Vec v2(long x, long y) { return Vec{Rational(x), Rational(y)}; }
inline Vec v3(long x, long y, long z) { return Vec{Rational(x), Rational(y), Rational(z)}; }

// Axis-aligned cuboid [0,a] x [0,b] x [0,c]; f-vector (8, 12, 6).
inline Polytope cuboid(long a = 1, long b = 1, long c = 1) {
    std::vector<Vec> verts;
    for (int bits = 0; bits < 8; ++bits) {
        verts.push_back(v3((bits & 1) ? a : 0, (bits & 2) ? b : 0, (bits & 4) ? c : 0));
    }
    std::vector<FaceSpec> faces;
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            const int diff = i ^ j;
            if (diff == 1 || diff == 2 || diff == 4) {
                faces.push_back({1, {i, j}, std::nullopt});
            }
        }
    }
    for (int axis = 0; axis < 3; ++axis) {
        for (int side = 0; side < 2; ++side) {
            std::vector<int> vs;
            for (int i = 0; i < 8; ++i) {
                if (((i >> axis) & 1) == side) vs.push_back(i);
            }
            faces.push_back({2, vs, std::nullopt});
        }
    }
    return Polytope{assemble_lattice(3, verts, faces), "cuboid"};
}

// conv{0, e1, e2, e3}; f-vector (4, 6, 4).
inline Polytope simplex3() {
    const std::vector<Vec> verts = {v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)};
    std::vector<FaceSpec> faces;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) faces.push_back({1, {i, j}, std::nullopt});
    }
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<int> vs;
        for (int i = 0; i < 4; ++i) {
            if (i != skip) vs.push_back(i);
        }
        faces.push_back({2, vs, std::nullopt});
    }
    return Polytope{assemble_lattice(3, verts, faces), "simplex3"};
}

// Tetrahedron with no axis-aligned structure.
inline Polytope tetra_generic() {
    const std::vector<Vec> verts = {v3(0, 0, 0), v3(7, 1, 2), v3(1, 8, 3), v3(2, 3, 9)};
    std::vector<FaceSpec> faces;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) faces.push_back({1, {i, j}, std::nullopt});
    }
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<int> vs;
        for (int i = 0; i < 4; ++i) {
            if (i != skip) vs.push_back(i);
        }
        faces.push_back({2, vs, std::nullopt});
    }
    return Polytope{assemble_lattice(3, verts, faces), "tetra"};
}

// Convex polygon lattice in R^2 from a CCW vertex ring.
inline Polytope polygon_lattice(const std::vector<Vec>& ring, const std::string& label) {
    std::vector<FaceSpec> faces;
    const int n = static_cast<int>(ring.size());
    for (int i = 0; i < n; ++i) faces.push_back({1, {i, (i + 1) % n}, std::nullopt});
    return Polytope{assemble_lattice(2, ring, faces), label};
}

inline Polytope unit_square() {
    return polygon_lattice({v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)}, "unit square");
}

inline Polytope triangle_t() {
    return polygon_lattice({v2(0, 0), v2(1, 0), v2(0, 1)}, "triangle T");
}

inline Polytope diamond() {
    return polygon_lattice({v2(1, 0), v2(0, 1), v2(-1, 0), v2(0, -1)}, "diamond");
}

inline Polytope point_polytope(Vec p, const std::string& label = "point") {
    return Polytope{assemble_lattice(p.dim(), {p}, {}), label};
}

inline Polytope segment(Vec a, Vec b, const std::string& label = "segment") {
    const int d = a.dim();
    return Polytope{assemble_lattice(d, {a, b}, {}), label};
}

}  // namespace minksum::fixtures

#endif
