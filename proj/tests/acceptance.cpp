// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Every polytope produced by any pipeline here is run through full lattice
// validation and the Euler check, and every pairwise/multi sum at these
// sizes is recomputed in paranoid mode, which re-verifies each accepted
// facet by the exhaustive support test over all vertex sums.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "minksum/gen.hpp"
#include "minksum/io.hpp"
#include "minksum/minkd.hpp"
#include "minksum/multi.hpp"
#include "minksum/oracle.hpp"
#include "minksum/planar.hpp"

using namespace minksum;

namespace {

struct Tally {
    long outputs_validated = 0;
    long support_checked_sums = 0;
    std::vector<std::string> violations;
} tally;

// Full structural+geometric validation plus the Euler check, recorded for
// the structural-invariants criterion.
bool check_output(const Polytope& p, const std::string& what) {
    const ValidationReport report = validate_lattice(p.lattice, ValidationLevel::full);
    const bool euler = euler_check(p.lattice);
    ++tally.outputs_validated;
    if (!report.ok || !euler) {
        std::ostringstream os;
        os << what << ": ";
        if (!report.ok) os << report.violations.size() << " validation violations";
        if (!euler) os << " euler check failed";
        tally.violations.push_back(os.str());
        return false;
    }
    return true;
}

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct PairFixture {
    Polytope p;
    Polytope q;
};

PairFixture make_pair(int dim, int points_p, int points_q, uint64_t seed) {
    PairFixture fx{random_polytope({dim, points_p, seed, 1000}),
                   random_polytope({dim, points_q, seed ^ 0xbf58476d1ce4e5b9ULL, 1000})};
    fx.q = generic_rotate(fx.q, seed + 1000);
    return fx;
}

// ---- criterion 1: oracle equivalence in the plane --------------------

bool criterion_d2(std::string& detail) {
    const int rounds = 200;
    for (int i = 0; i < rounds; ++i) {
        const int np = 6 + i % 9;             // 6..14 vertices requested
        const int nq = 6 + (i * 5 + 3) % 9;
        const PairFixture fx = make_pair(2, np, nq, 10000 + static_cast<uint64_t>(i));

        const Polytope expected = oracle_minkowski({&fx.p, &fx.q});
        if (!check_output(expected, "d2 oracle " + std::to_string(i))) {
            detail = "oracle output invalid at round " + std::to_string(i);
            return false;
        }

        // Planar fast path.
        const ConvexPolygon a = polygon_from_lattice(fx.p);
        const ConvexPolygon b = polygon_from_lattice(fx.q);
        PlanarStats stats;
        const ConvexPolygon sum2d = sum_polygons(a, b, &stats);
        const long budget = 2 * (a.size() + b.size());
        if (stats.advances > budget) {
            detail = "ring advances " + std::to_string(stats.advances) + " exceed 2(n+m) at round " +
                     std::to_string(i);
            return false;
        }
        const Polytope planar = lattice_from_polygon(sum2d, "sum2d");
        if (!check_output(planar, "sum2d " + std::to_string(i)) ||
            !lattice_isomorphic(planar.lattice, expected.lattice)) {
            detail = "planar path differs from oracle at round " + std::to_string(i);
            return false;
        }

        // General pipeline, fast and paranoid.
        const Polytope sum = minkowski_sum(fx.p, fx.q, SumMode::fast);
        if (!check_output(sum, "d2 sum " + std::to_string(i)) ||
            !lattice_isomorphic(sum.lattice, expected.lattice)) {
            detail = "lattice pipeline differs from oracle at round " + std::to_string(i);
            return false;
        }
        const Polytope paranoid = minkowski_sum(fx.p, fx.q, SumMode::paranoid);
        ++tally.support_checked_sums;
        if (!lattice_isomorphic(paranoid.lattice, sum.lattice)) {
            detail = "paranoid output differs at round " + std::to_string(i);
            return false;
        }
    }
    detail = std::to_string(rounds) + " pairs, sum2d + sum vs oracle";
    return true;
}

// ---- criteria 2 and 3: oracle equivalence in R^3 and R^4 -------------

bool criterion_solid(int dim, int rounds, int max_points, uint64_t base_seed,
                     std::string& detail) {
    for (int i = 0; i < rounds; ++i) {
        const int np = dim + 2 + i % (max_points - dim - 1);  // dim+2 .. max_points
        const int nq = dim + 2 + (i * 3 + 1) % (max_points - dim - 1);
        const PairFixture fx = make_pair(dim, np, nq, base_seed + static_cast<uint64_t>(i));

        const Polytope expected = oracle_minkowski({&fx.p, &fx.q});
        const Polytope sum = minkowski_sum(fx.p, fx.q, SumMode::fast);
        if (!check_output(expected, "oracle") || !check_output(sum, "sum") ||
            !lattice_isomorphic(sum.lattice, expected.lattice)) {
            detail = "mismatch at round " + std::to_string(i);
            return false;
        }
        const Polytope paranoid = minkowski_sum(fx.p, fx.q, SumMode::paranoid);
        ++tally.support_checked_sums;
        if (!lattice_isomorphic(paranoid.lattice, sum.lattice)) {
            detail = "paranoid output differs at round " + std::to_string(i);
            return false;
        }
    }
    detail = std::to_string(rounds) + " pairs vs oracle, paranoid agreeing";
    return true;
}

// ---- criterion 4: n-way consistency -----------------------------------

bool criterion_multi(std::string& detail) {
    for (int i = 0; i < 30; ++i) {
        const int dim = i % 2 == 0 ? 2 : 3;
        const int points = dim == 2 ? 5 + i % 3 : 4 + i % 2;
        const uint64_t seed = 40000 + static_cast<uint64_t>(i);
        Polytope a = random_polytope({dim, points, seed, 1000});
        Polytope b = generic_rotate(random_polytope({dim, points, seed + 500, 1000}), seed + 1);
        Polytope c = generic_rotate(random_polytope({dim, points, seed + 900, 1000}), seed + 2);

        const Polytope direct = multi_minkowski_sum({&a, &b, &c}, SumMode::paranoid);
        ++tally.support_checked_sums;
        if (!check_output(direct, "multi " + std::to_string(i))) {
            detail = "invalid multi output at round " + std::to_string(i);
            return false;
        }
        const Polytope left = minkowski_sum(minkowski_sum(a, b), c);
        const Polytope right = minkowski_sum(a, minkowski_sum(b, c));
        const Polytope expected = oracle_minkowski({&a, &b, &c});
        if (!lattice_isomorphic(direct.lattice, left.lattice) ||
            !lattice_isomorphic(direct.lattice, right.lattice) ||
            !lattice_isomorphic(direct.lattice, expected.lattice)) {
            detail = "composition orders disagree at round " + std::to_string(i);
            return false;
        }
    }
    detail = "30 triples vs both pairwise orders and oracle";
    return true;
}

// ---- criterion 5: planar linear time ----------------------------------

bool criterion_planar_linear(std::string& detail) {
    // Instrumented counter at three decades, then wall-clock growth.
    double times[3] = {0, 0, 0};
    long sizes[3] = {0, 0, 0};
    const int decade_n[3] = {1000, 10000, 100000};
    for (int t = 0; t < 3; ++t) {
        const ConvexPolygon a = random_convex_polygon(decade_n[t], 500 + static_cast<uint64_t>(t),
                                                      1000000000L);
        const ConvexPolygon b = random_convex_polygon(decade_n[t], 900 + static_cast<uint64_t>(t),
                                                      1000000000L);
        sizes[t] = a.size() + b.size();
        double best = 1e18;
        for (int rep = 0; rep < 5; ++rep) {
            PlanarStats stats;
            const double start = now_ms();
            const ConvexPolygon sum = sum_polygons(a, b, &stats);
            best = std::min(best, now_ms() - start);
            if (stats.advances > 2 * (a.size() + b.size())) {
                detail = "advance counter exceeded 2(n+m) at n=" + std::to_string(decade_n[t]);
                return false;
            }
            if (sum.size() > a.size() + b.size()) {
                detail = "output larger than n+m";
                return false;
            }
        }
        times[t] = best;
    }
    std::ostringstream os;
    os << "times ms/size: ";
    for (int t = 0; t < 3; ++t) os << times[t] << "/" << sizes[t] << " ";
    for (int t = 1; t < 3; ++t) {
        const double growth = times[t] / times[t - 1];
        const double size_ratio = static_cast<double>(sizes[t]) / static_cast<double>(sizes[t - 1]);
        if (growth > 2.0 * size_ratio || growth < size_ratio / 2.0) {
            detail = os.str() + "- growth " + std::to_string(growth) + " outside the factor-2 band of " +
                     std::to_string(size_ratio);
            return false;
        }
    }
    detail = os.str();
    return true;
}

// ---- criterion 6: pairwise O(nm) scaling and the worst-case fixture ----

// Two polytopes whose sum has quadratically many vertices: circular arcs
// of rational points in orthogonal planes, each thickened by two far-away
// base points. Every arc-vertex pair is supported, so the sum's vertex
// count is close to |P_0| * |Q_0|.
Polytope arc_polytope(bool in_xz, const std::vector<std::pair<long, long>>& slopes,
                      const std::string& label) {
    std::vector<Vec> pts;
    for (auto [num, den] : slopes) {
        // (2t/(1+t^2), (1-t^2)/(1+t^2)): rational points on the unit circle.
        const Rational t(num, den);
        const Rational den2 = Rational(1) + t * t;
        const Rational u = Rational(2) * t / den2;
        const Rational w = (Rational(1) - t * t) / den2;
        if (in_xz) {
            pts.push_back(Vec{u, Rational(0), w});
        } else {
            pts.push_back(Vec{Rational(0), u, w});
        }
    }
    if (in_xz) {
        pts.push_back(Vec{Rational(0), Rational(1), Rational(-2)});
        pts.push_back(Vec{Rational(0), Rational(-1), Rational(-2)});
    } else {
        pts.push_back(Vec{Rational(1), Rational(0), Rational(-2)});
        pts.push_back(Vec{Rational(-1), Rational(0), Rational(-2)});
    }
    std::sort(pts.begin(), pts.end());
    return brute_hull(PointCloud{3, pts}, label);
}

bool criterion_scaling(std::string& detail) {
    // Worst-case stress fixture first.
    const Polytope arc_p = arc_polytope(true, {{0, 1}, {1, 4}, {-1, 4}, {2, 5}, {-2, 5}, {1, 7}, {-1, 7}}, "arc xz");
    const Polytope arc_q = arc_polytope(false, {{0, 1}, {1, 3}, {-1, 3}, {2, 7}, {-2, 7}, {1, 6}, {-1, 6}}, "arc yz");
    if (!check_output(arc_p, "arc fixture p") || !check_output(arc_q, "arc fixture q")) {
        detail = "arc fixture invalid";
        return false;
    }
    const Polytope stress_oracle = oracle_minkowski({&arc_p, &arc_q});
    const Polytope stress = minkowski_sum(arc_p, arc_q, SumMode::paranoid);
    ++tally.support_checked_sums;
    if (!check_output(stress, "stress sum") ||
        !lattice_isomorphic(stress.lattice, stress_oracle.lattice)) {
        detail = "stress fixture sum differs from oracle";
        return false;
    }
    const size_t vp = arc_p.lattice.vertices().size();
    const size_t vq = arc_q.lattice.vertices().size();
    const size_t vs = stress.lattice.vertices().size();
    if (2 * vs < vp * vq) {
        detail = "stress sum has " + std::to_string(vs) + " vertices < 0.5 * " +
                 std::to_string(vp) + " * " + std::to_string(vq);
        return false;
    }

    // Scaling: three size tiers in R^3, candidate-pair count and time.
    const int tiers[3] = {10, 20, 40};
    double times[3];
    double nm[3];
    std::ostringstream os;
    os << "stress " << vs << "/" << vp * vq << " vertices; ";
    for (int t = 0; t < 3; ++t) {
        double best = 1e18;
        double size_product = 0;
        for (int rep = 0; rep < 3; ++rep) {
            const PairFixture fx = make_pair(3, tiers[t], tiers[t], 60000 + static_cast<uint64_t>(t));
            MinkStats stats;
            const double start = now_ms();
            const Polytope sum = minkowski_sum(fx.p, fx.q, SumMode::fast, &stats);
            const double ms = now_ms() - start;
            size_product = static_cast<double>(fx.p.lattice.size()) *
                           static_cast<double>(fx.q.lattice.size());
            if (stats.pairs_tested > size_product) {
                detail = "pairs_tested " + std::to_string(stats.pairs_tested) + " exceeds n*m";
                return false;
            }
            if (rep == 0 && !check_output(sum, "scaling tier")) {
                detail = "invalid sum in scaling tier";
                return false;
            }
            best = std::min(best, ms);
        }
        times[t] = best;
        nm[t] = size_product;
        os << times[t] << "ms/nm=" << static_cast<long>(nm[t]) << " ";
    }
    for (int t = 1; t < 3; ++t) {
        const double growth = times[t] / times[t - 1];
        const double nm_ratio = nm[t] / nm[t - 1];
        if (growth > 3.0 * nm_ratio || growth < nm_ratio / 3.0) {
            detail = os.str() + "- time growth " + std::to_string(growth) +
                     " outside the factor-3 band of nm growth " + std::to_string(nm_ratio);
            return false;
        }
    }
    detail = os.str();
    return true;
}

// ---- criterion 7: structural invariants --------------------------------

bool criterion_invariants(std::string& detail) {
    if (!tally.violations.empty()) {
        detail = tally.violations.front() + " (+" +
                 std::to_string(tally.violations.size() - 1) + " more)";
        return false;
    }
    detail = std::to_string(tally.outputs_validated) + " outputs validated, " +
             std::to_string(tally.support_checked_sums) + " sums support-certified";
    return true;
}

// ---- criterion 8: degeneracy detection ---------------------------------

bool criterion_degeneracy(std::string& detail) {
    // Hand-built axis-aligned cuboid.
    std::vector<Vec> corners;
    for (int bits = 0; bits < 8; ++bits) {
        corners.push_back(Vec{Rational(bits & 1), Rational((bits >> 1) & 1),
                              Rational((bits >> 2) & 1)});
    }
    std::sort(corners.begin(), corners.end());
    const Polytope cube = brute_hull(PointCloud{3, corners}, "cube");

    try {
        minkowski_sum(cube, cube);
        detail = "cube + cube unexpectedly succeeded";
        return false;
    } catch (const DegenerateInput& e) {
        if (e.report.empty()) {
            detail = "empty degeneracy report";
            return false;
        }
    }

    // The oracle handles the degenerate pair directly.
    const Polytope doubled = oracle_minkowski({&cube, &cube});
    if (!check_output(doubled, "cube+cube oracle")) {
        detail = "oracle output for the degenerate pair invalid";
        return false;
    }
    const std::vector<long> f = doubled.lattice.f_vector();
    if (f != std::vector<long>{8, 12, 6}) {
        detail = "oracle f-vector for cube+cube is off";
        return false;
    }

    // After a generic rotation the pipeline succeeds and matches.
    const Polytope rotated = generic_rotate(cube, 3);
    const Polytope sum = minkowski_sum(cube, rotated, SumMode::paranoid);
    ++tally.support_checked_sums;
    const Polytope expected = oracle_minkowski({&cube, &rotated});
    if (!check_output(sum, "cube+rotated") ||
        !lattice_isomorphic(sum.lattice, expected.lattice)) {
        detail = "rotated pair does not match the oracle";
        return false;
    }
    detail = "report raised, rotated pair matches oracle, f = (8,12,6)";
    return true;
}

// ---- criterion 9: cuboid ground truth ----------------------------------

bool criterion_cuboid(std::string& detail) {
    std::vector<Vec> corners;
    for (int bits = 0; bits < 8; ++bits) {
        corners.push_back(Vec{Rational(bits & 1), Rational((bits >> 1) & 1),
                              Rational((bits >> 2) & 1)});
    }
    std::sort(corners.begin(), corners.end());
    const Polytope cube = brute_hull(PointCloud{3, corners}, "cuboid");
    if (cube.lattice.f_vector() != std::vector<long>{8, 12, 6}) {
        detail = "cuboid f-vector is not (8, 12, 6)";
        return false;
    }

    const Vec shift{Rational(7), Rational(-3), Rational(5)};
    const Polytope point{assemble_lattice(3, {shift}, {}), "q"};
    const Polytope sum = minkowski_sum(cube, point, SumMode::paranoid);
    ++tally.support_checked_sums;
    if (!check_output(sum, "cuboid+point")) {
        detail = "translated cuboid invalid";
        return false;
    }
    if (sum.lattice.f_vector() != std::vector<long>{8, 12, 6}) {
        detail = "translated cuboid f-vector is off";
        return false;
    }
    std::vector<Vec> got = sum.lattice.vertex_points(sum.lattice.vertices());
    std::vector<Vec> want;
    for (const Vec& c : corners) want.push_back(c + shift);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) {
        detail = "translated vertex coordinates differ";
        return false;
    }
    detail = "f = (8,12,6); cuboid + point reproduced exactly";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence, d=2 (sum2d + sum, 200 pairs)", criterion_d2},
        {2, "oracle equivalence, d=3 (60 pairs)",
         [](std::string& d) { return criterion_solid(3, 60, 10, 20000, d); }},
        {3, "oracle equivalence, d=4 (15 pairs)",
         [](std::string& d) { return criterion_solid(4, 15, 7, 30000, d); }},
        {4, "multi consistency (30 triples, d=2,3)", criterion_multi},
        {5, "planar linear time", criterion_planar_linear},
        {6, "pairwise O(nm) scaling + worst-case fixture", criterion_scaling},
        {7, "structural invariants on all outputs", criterion_invariants},
        {8, "degeneracy detection and rotation workaround", criterion_degeneracy},
        {9, "cuboid ground truth", criterion_cuboid},
    };

    int passed = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        const double start = now_ms();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = (now_ms() - start) / 1000.0;
        std::printf("[%d] %-52s %s  (%.1f s)%s%s\n", c.id, c.name, ok ? "PASS" : "FAIL", secs,
                    detail.empty() ? "" : " - ", detail.c_str());
        std::fflush(stdout);
        if (ok) ++passed;
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
