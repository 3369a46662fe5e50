#include "minksum/planar.hpp"

#include <algorithm>

namespace minksum {

namespace {

// 0 for directions in [0, pi) measured from (1,0), 1 for [pi, 2pi).
int half_turn(const Vec& u) {
    const int sy = u[1].sign();
    if (sy > 0 || (sy == 0 && u[0].sign() > 0)) return 0;
    return 1;
}

// Position of u in the CCW sweep starting at ref: 0 codirectional with
// ref, 1 strictly within the first half turn, 2 opposite, 3 beyond.
int sweep_class(const Vec& ref, const Vec& u) {
    const int c = cross2(ref, u).sign();
    if (c > 0) return 1;
    if (c < 0) return 3;
    return dot(ref, u).sign() > 0 ? 0 : 2;
}

}  // namespace

Rational cross2(const Vec& a, const Vec& b) {
    return a[0] * b[1] - a[1] * b[0];
}

int compare_directions_from(const Vec& ref, const Vec& a, const Vec& b) {
    const int ca = sweep_class(ref, a);
    const int cb = sweep_class(ref, b);
    if (ca != cb) return ca < cb ? -1 : 1;
    if (ca == 0 || ca == 2) return 0;  // both parallel to ref, same side
    return -cross2(a, b).sign();
}

ConvexPolygon::ConvexPolygon(std::vector<Vec> vertices) : v_(std::move(vertices)) {
    std::vector<std::string> problems;
    if (v_.size() < 3) {
        problems.push_back("polygon needs at least 3 vertices, got " + std::to_string(v_.size()));
        throw ValidationFailure(std::move(problems));
    }
    for (const Vec& p : v_) {
        if (p.dim() != 2) {
            problems.push_back("polygon vertex " + p.str() + " is not planar");
            throw ValidationFailure(std::move(problems));
        }
    }
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (edge_vector(i).is_zero()) {
            problems.push_back("repeated vertex at index " + std::to_string(i));
        } else if (cross2(edge_vector(i), edge_vector((i + 1) % n)).sign() <= 0) {
            problems.push_back("ring is not strictly convex CCW at index " + std::to_string(i));
        }
    }
    if (problems.empty()) {
        // All strict left turns; winding must still be exactly one. Count
        // cyclic descents in the absolute direction order: a simple convex
        // CCW ring has exactly one.
        int descents = 0;
        for (int i = 0; i < n; ++i) {
            const Vec a = edge_vector(i);
            const Vec b = edge_vector((i + 1) % n);
            const int ha = half_turn(a);
            const int hb = half_turn(b);
            const bool ascending = ha != hb ? ha < hb : cross2(a, b).sign() > 0;
            if (!ascending) ++descents;
        }
        if (descents != 1) {
            problems.push_back("ring winds " + std::to_string(descents) + " times");
        }
    }
    if (!problems.empty()) throw ValidationFailure(std::move(problems));
}

int support_vertex_2d(const ConvexPolygon& p, const Vec& direction, PlanarStats* stats) {
    if (direction.dim() != 2) throw DimensionMismatch("support_vertex_2d: direction must be planar");
    if (direction.is_zero()) throw InvalidArgument("support_vertex_2d: zero direction");
    const int n = p.size();
    Rational best = dot(p.vertex(0), direction);
    std::vector<int> argmax = {0};
    for (int i = 1; i < n; ++i) {
        const Rational val = dot(p.vertex(i), direction);
        if (val > best) {
            best = val;
            argmax = {i};
        } else if (val == best) {
            argmax.push_back(i);
        }
    }
    if (stats) stats->advances += n;
    if (argmax.size() == 1) return argmax[0];
    if (argmax.size() == 2) {
        // The direction is normal to an edge; return the edge's source.
        if (argmax[1] == argmax[0] + 1) return argmax[0];
        if (argmax[0] == 0 && argmax[1] == n - 1) return n - 1;
    }
    throw Error("support_vertex_2d: non-adjacent tie on a strictly convex ring");
}

ConvexPolygon sum_polygons(const ConvexPolygon& p, const ConvexPolygon& q, PlanarStats* stats) {
    const int n = p.size();
    const int m = q.size();
    const Vec ref = q.edge_vector(0);
    const Vec outward{ref[1], -ref[0]};
    int pi = support_vertex_2d(p, outward, stats);
    int qi = 0;

    std::vector<Vec> ring;
    ring.reserve(static_cast<size_t>(n + m));
    Vec pos = p.vertex(pi) + q.vertex(qi);
    int taken_p = 0, taken_q = 0;
    while (taken_p < n || taken_q < m) {
        bool take_p, take_q;
        if (taken_p == n) {
            take_p = false;
            take_q = true;
        } else if (taken_q == m) {
            take_p = true;
            take_q = false;
        } else {
            const int c = compare_directions_from(ref, p.edge_vector(pi), q.edge_vector(qi));
            take_p = c <= 0;
            take_q = c >= 0;
        }
        ring.push_back(pos);
        Vec step = Vec::zero(2);
        if (take_p) {
            step = step + p.edge_vector(pi);
            pi = (pi + 1) % n;
            ++taken_p;
            if (stats) ++stats->advances;
        }
        if (take_q) {
            step = step + q.edge_vector(qi);
            qi = (qi + 1) % m;
            ++taken_q;
            if (stats) ++stats->advances;
        }
        pos = pos + step;
    }
    if (pos != ring.front()) throw Error("sum_polygons: ring failed to close");
    return ConvexPolygon(std::move(ring));
}

ConvexPolygon sum_polygons_multi(const std::vector<ConvexPolygon>& polys, PlanarStats* stats) {
    if (polys.empty()) throw InvalidArgument("sum_polygons_multi of no polygons");
    if (polys.size() == 1) return polys[0];

    const Vec ref{Rational(1), Rational(0)};
    const Vec down{Rational(0), Rational(-1)};
    const size_t k = polys.size();
    std::vector<int> at(k);
    std::vector<int> taken(k, 0);
    Vec pos = Vec::zero(2);
    for (size_t i = 0; i < k; ++i) {
        // Start each ring at its lowest (then CCW-first) vertex, so every
        // ring's edge sequence ascends in the sweep order from `ref`.
        at[i] = support_vertex_2d(polys[i], down, stats);
        pos = pos + polys[i].vertex(at[i]);
    }

    std::vector<Vec> ring;
    while (true) {
        std::vector<size_t> active;
        for (size_t i = 0; i < k; ++i) {
            if (taken[i] < polys[i].size()) active.push_back(i);
        }
        if (active.empty()) break;
        // The angular minimum among the current edges, plus all edges tied
        // with it; parallel codirectional contributions merge into one step.
        std::vector<size_t> chosen = {active[0]};
        for (size_t j = 1; j < active.size(); ++j) {
            const size_t i = active[j];
            const int c = compare_directions_from(ref, polys[i].edge_vector(at[i]),
                                                  polys[chosen[0]].edge_vector(at[chosen[0]]));
            if (c < 0) {
                chosen = {i};
            } else if (c == 0) {
                chosen.push_back(i);
            }
        }
        ring.push_back(pos);
        Vec step = Vec::zero(2);
        for (size_t i : chosen) {
            step = step + polys[i].edge_vector(at[i]);
            at[i] = (at[i] + 1) % polys[i].size();
            ++taken[i];
            if (stats) ++stats->advances;
        }
        pos = pos + step;
    }
    if (pos != ring.front()) throw Error("sum_polygons_multi: ring failed to close");
    return ConvexPolygon(std::move(ring));
}

ConvexPolygon polygon_from_lattice(const Polytope& p) {
    if (p.ambient_dim() != 2 || p.dim() != 2) {
        throw InvalidArgument("polygon_from_lattice: polytope is not a full-dimensional polygon");
    }
    std::vector<Vec> pts = p.lattice.vertex_points(p.lattice.vertices());
    const Vec c = centroid(pts);
    std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
        const Vec u = a - c;
        const Vec w = b - c;
        const int hu = half_turn(u);
        const int hw = half_turn(w);
        if (hu != hw) return hu < hw;
        return cross2(u, w).sign() > 0;
    });
    return ConvexPolygon(std::move(pts));
}

Polytope lattice_from_polygon(const ConvexPolygon& p, const std::string& label) {
    std::vector<FaceSpec> edges;
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
        edges.push_back(FaceSpec{1, {i, (i + 1) % n}, std::nullopt});
    }
    return Polytope{assemble_lattice(2, p.vertices(), edges), label};
}

}  // namespace minksum
