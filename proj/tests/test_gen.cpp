#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "minksum/gen.hpp"
#include "minksum/minkd.hpp"

using namespace minksum;
using namespace minksum::fixtures;

TEST_CASE("random_polytope") {
    SUBCASE("planar draw") {
        const Polytope p = random_polytope({2, 6, 1, 100});
        CHECK(p.dim() == 2);
        CHECK(p.lattice.vertices().size() <= 6);
        CHECK(p.lattice.vertices().size() >= 3);
        CHECK(validate_lattice(p.lattice).ok);
    }
    SUBCASE("solid draw") {
        const Polytope p = random_polytope({3, 8, 7, 100});
        CHECK(p.dim() == 3);
        CHECK(validate_lattice(p.lattice).ok);
        CHECK(euler_check(p.lattice));
    }
    SUBCASE("deterministic per seed") {
        const Polytope a = random_polytope({3, 8, 42, 50});
        const Polytope b = random_polytope({3, 8, 42, 50});
        CHECK(a.lattice.vertex_points(a.lattice.vertices()) ==
              b.lattice.vertex_points(b.lattice.vertices()));
        CHECK(lattice_isomorphic(a.lattice, b.lattice));
        const Polytope c = random_polytope({3, 8, 43, 50});
        CHECK(a.lattice.vertex_points(a.lattice.vertices()) !=
              c.lattice.vertex_points(c.lattice.vertices()));
    }
    SUBCASE("bad specs are rejected") {
        CHECK_THROWS_AS(random_polytope({1, 5, 1, 10}), InvalidArgument);
        CHECK_THROWS_AS(random_polytope({3, 3, 1, 10}), InvalidArgument);
    }
}

TEST_CASE("rotation_matrix") {
    SUBCASE("seed zero is the identity") {
        const Polytope cube = cuboid();
        const Polytope same = generic_rotate(cube, 0);
        CHECK(same.lattice.vertex_points(same.lattice.vertices()) ==
              cube.lattice.vertex_points(cube.lattice.vertices()));
    }
    SUBCASE("orthogonal with determinant one") {
        for (int dim : {2, 3, 4}) {
            const auto rows = rotation_matrix(dim, 5);
            CHECK(det(rows) == Rational(1));
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) {
                    CHECK(dot(rows[static_cast<size_t>(i)], rows[static_cast<size_t>(j)]) ==
                          Rational(i == j ? 1 : 0));
                }
            }
        }
    }
    SUBCASE("inverse via transpose restores coordinates") {
        const Polytope cube = cuboid();
        const auto rows = rotation_matrix(3, 11);
        std::vector<Vec> transpose;
        for (int i = 0; i < 3; ++i) {
            Vec row = Vec::zero(3);
            for (int j = 0; j < 3; ++j) row[j] = rows[static_cast<size_t>(j)][i];
            transpose.push_back(std::move(row));
        }
        const Polytope there = apply_linear_map(cube, rows);
        const Polytope back = apply_linear_map(there, transpose);
        CHECK(back.lattice.vertex_points(back.lattice.vertices()) ==
              cube.lattice.vertex_points(cube.lattice.vertices()));
    }
}

TEST_CASE("generic_rotate") {
    const Polytope cube = cuboid();
    const Polytope rotated = generic_rotate(cube, 3);

    SUBCASE("combinatorics preserved, geometry valid") {
        CHECK(rotated.lattice.f_vector() == std::vector<long>{8, 12, 6});
        CHECK(validate_lattice(rotated.lattice).ok);
        CHECK(!lattice_isomorphic(rotated.lattice, cube.lattice));  // coordinates moved
    }
    SUBCASE("no facet of the cube is parallel to a rotated facet") {
        for (int f : cube.lattice.faces_of_dim(2)) {
            const Vec nf = facet_outward_normal(cube.lattice, f);
            for (int g : rotated.lattice.faces_of_dim(2)) {
                const Vec ng = facet_outward_normal(rotated.lattice, g);
                CHECK(rank_of({nf, ng}) == 2);
            }
        }
    }
    SUBCASE("rotation unblocks the degenerate cube pair") {
        CHECK_THROWS_AS(minkowski_sum(cube, cube), DegenerateInput);
        CHECK_NOTHROW(minkowski_sum(cube, rotated));
    }
}

TEST_CASE("random_convex_polygon") {
    const ConvexPolygon p = random_convex_polygon(50, 9, 1000);
    CHECK(p.size() >= 3);
    CHECK(p.size() <= 50);
    CHECK(p.size() >= 40);  // duplicate directions are rare at this bound

    const ConvexPolygon q = random_convex_polygon(50, 9, 1000);
    CHECK(p.vertices() == q.vertices());

    const ConvexPolygon r = random_convex_polygon(50, 10, 1000);
    CHECK(p.vertices() != r.vertices());
}
