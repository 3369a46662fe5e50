#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "minksum/io.hpp"
#include "minksum/minkd.hpp"

using namespace minksum;
using namespace minksum::fixtures;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("round trip preserves lattice and coordinates") {
    const Polytope cube = cuboid();
    const std::string path = temp_path("minksum_io_cube.json");
    save_polytope(cube, path);
    const Polytope back = load_polytope(path);
    CHECK(lattice_isomorphic(back.lattice, cube.lattice));
    CHECK(back.lattice.f_vector() == cube.lattice.f_vector());
    CHECK(back.label == "cuboid");
    std::remove(path.c_str());

    // Faces of a Minkowski sum carry non-centroid interior points; they
    // must survive the trip too.
    const Polytope sum = minkowski_sum(cuboid(), tetra_generic());
    const std::string path2 = temp_path("minksum_io_sum.json");
    save_polytope(sum, path2);
    const Polytope back2 = load_polytope(path2);
    CHECK(lattice_isomorphic(back2.lattice, sum.lattice));
    std::remove(path2.c_str());
}

TEST_CASE("point polytope round trip") {
    const Polytope pt = point_polytope(v3(1, 2, 3));
    const std::string path = temp_path("minksum_io_point.json");
    save_polytope(pt, path);
    const Polytope back = load_polytope(path);
    CHECK(back.dim() == 0);
    CHECK(back.lattice.vertex_point(back.lattice.vertices()[0]) == v3(1, 2, 3));
    std::remove(path.c_str());
}

TEST_CASE("missing interior points are recomputed") {
    const std::string text = R"({
      "format": "minksum-lattice", "version": 1, "dim": 2, "label": "square",
      "vertices": [["0","0"],["1","0"],["1","1"],["0","1"]],
      "faces": [
        {"dim": 1, "vertices": [0,1]},
        {"dim": 1, "vertices": [1,2]},
        {"dim": 1, "vertices": [2,3]},
        {"dim": 1, "vertices": [3,0]}
      ]
    })";
    const Polytope p = parse_polytope_json(text, "test");
    CHECK(validate_lattice(p.lattice).ok);
    for (int e : p.lattice.faces_of_dim(1)) {
        CHECK(p.lattice.node(e).interior_point.has_value());
    }
    CHECK(lattice_isomorphic(p.lattice, unit_square().lattice));
}

TEST_CASE("defective files are rejected") {
    SUBCASE("affinely deficient facet") {
        const std::string text = R"({
          "format": "minksum-lattice", "version": 1, "dim": 2, "label": "bad",
          "vertices": [["0","0"],["1","0"],["2","0"],["0","1"]],
          "faces": [
            {"dim": 1, "vertices": [0,1,2]},
            {"dim": 1, "vertices": [2,3]},
            {"dim": 1, "vertices": [3,0]}
          ]
        })";
        CHECK_THROWS_AS(parse_polytope_json(text, "test"), ValidationFailure);
    }
    SUBCASE("malformed document") {
        CHECK_THROWS_AS(parse_polytope_json("{ not json", "test"), ParseError);
        CHECK_THROWS_AS(parse_polytope_json(R"({"format":"other"})", "test"), ParseError);
        CHECK_THROWS_AS(parse_polytope_json(
                            R"({"format":"minksum-lattice","version":1,"dim":2,
                                "vertices":[[0.5,"0"]],"faces":[]})",
                            "test"),
                        ParseError);
    }
    SUBCASE("bad rational literal") {
        const std::string text = R"({
          "format": "minksum-lattice", "version": 1, "dim": 2, "label": "bad",
          "vertices": [["1/0","0"],["1","0"],["0","1"]], "faces": []
        })";
        CHECK_THROWS_AS(parse_polytope_json(text, "test"), ParseError);
    }
}

TEST_CASE("explicit incidence section") {
    // Triangle with arcs written out; vertex i -> i, face j -> 3 + j.
    std::ostringstream good;
    good << R"({
      "format": "minksum-lattice", "version": 1, "dim": 2, "label": "tri",
      "vertices": [["0","0"],["1","0"],["0","1"]],
      "faces": [
        {"dim": 1, "vertices": [0,1]},
        {"dim": 1, "vertices": [1,2]},
        {"dim": 1, "vertices": [2,0]}
      ],
      "incidences": [[0,3],[1,3],[1,4],[2,4],[2,5],[0,5]]
    })";
    const Polytope p = parse_polytope_json(good.str(), "test");
    CHECK(validate_lattice(p.lattice).ok);
    CHECK(lattice_isomorphic(p.lattice, triangle_t().lattice));

    // Dropping one arc breaks the diamond property and the vertex sets.
    std::ostringstream bad;
    bad << R"({
      "format": "minksum-lattice", "version": 1, "dim": 2, "label": "tri",
      "vertices": [["0","0"],["1","0"],["0","1"]],
      "faces": [
        {"dim": 1, "vertices": [0,1]},
        {"dim": 1, "vertices": [1,2]},
        {"dim": 1, "vertices": [2,0]}
      ],
      "incidences": [[0,3],[1,3],[1,4],[2,4],[2,5]]
    })";
    CHECK_THROWS_AS(parse_polytope_json(bad.str(), "test"), ValidationFailure);
}

TEST_CASE("atomic write replaces content and leaves no temp files") {
    namespace fs = std::filesystem;
    const std::string path = temp_path("minksum_io_atomic.txt");
    atomic_write(path, "first");
    atomic_write(path, "second");
    CHECK(read_file(path) == "second");
    int siblings = 0;
    for (const auto& entry : fs::directory_iterator(fs::path(path).parent_path())) {
        if (entry.path().filename().string().find("minksum_io_atomic") != std::string::npos) {
            ++siblings;
        }
    }
    CHECK(siblings == 1);
    std::remove(path.c_str());
}

TEST_CASE("OFF export of a cube") {
    const std::string off = to_off(cuboid());
    std::istringstream in(off);
    std::string header;
    in >> header;
    CHECK(header == "OFF");
    int nv = 0, nf = 0, ne = 0;
    in >> nv >> nf >> ne;
    CHECK(nv == 8);
    CHECK(nf == 6);
    CHECK(ne == 12);
    for (int i = 0; i < nv; ++i) {
        double x, y, z;
        in >> x >> y >> z;
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
    }
    for (int f = 0; f < nf; ++f) {
        int k;
        in >> k;
        CHECK(k == 4);
        for (int i = 0; i < k; ++i) {
            int idx;
            in >> idx;
            CHECK(idx >= 0);
            CHECK(idx < 8);
        }
    }
    CHECK_THROWS_AS(to_off(unit_square()), InvalidArgument);
}
