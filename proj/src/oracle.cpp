#include "minksum/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace minksum {

namespace {

// The enumeration below visits all C(N, d) point subsets, so runaway
// inputs have to be rejected up front. These caps comfortably cover the
// test and acceptance workloads.
std::size_t max_cloud_size(int dim) {
    switch (dim) {
        case 2: return 4000;
        case 3: return 500;
        case 4: return 140;
        default: return 48;
    }
}

// Canonical key of the hyperplane (normal, offset) under scaling, so that
// coincident planes found through different subsets collapse to one entry.
std::string plane_key(const Vec& normal, const Rational& offset) {
    Rational scale;
    for (int i = 0; i < normal.dim(); ++i) {
        if (!normal[i].is_zero()) {
            scale = normal[i];
            break;
        }
    }
    std::string key;
    for (int i = 0; i < normal.dim(); ++i) {
        key += (normal[i] / scale).str();
        key += ',';
    }
    key += (offset / scale).str();
    return key;
}

struct HullFacet {
    Vec outward;
    Rational offset;
    std::vector<int> on_cloud;  // cloud indices on the plane, ascending
};

}  // namespace

PointCloud vertex_sums(const std::vector<const Polytope*>& inputs) {
    if (inputs.empty()) throw InvalidArgument("vertex_sums of no polytopes");
    const int d = inputs[0]->ambient_dim();
    for (const Polytope* p : inputs) {
        if (p->ambient_dim() != d) throw DimensionMismatch("vertex_sums: mixed ambient dimensions");
    }

    std::vector<std::vector<Vec>> vertex_lists;
    vertex_lists.reserve(inputs.size());
    for (const Polytope* p : inputs) {
        vertex_lists.push_back(p->lattice.vertex_points(p->lattice.vertices()));
    }

    std::vector<Vec> sums;
    std::vector<size_t> idx(inputs.size(), 0);
    while (true) {
        Vec s = Vec::zero(d);
        for (size_t i = 0; i < idx.size(); ++i) s = s + vertex_lists[i][idx[i]];
        sums.push_back(std::move(s));
        size_t pos = 0;
        while (pos < idx.size()) {
            if (++idx[pos] < vertex_lists[pos].size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) break;
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return PointCloud{d, std::move(sums)};
}

Polytope brute_hull(const PointCloud& cloud, const std::string& label) {
    const int d = cloud.dim;
    const auto& pts = cloud.points;
    const int n = static_cast<int>(pts.size());
    if (d < 2) throw InvalidArgument("brute_hull: dimension must be >= 2");
    if (n == 0) throw InvalidArgument("brute_hull of empty cloud");
    if (pts.size() > max_cloud_size(d)) {
        throw InvalidArgument("brute_hull: cloud of " + std::to_string(n) +
                              " points exceeds the cap for dimension " + std::to_string(d));
    }
    if (static_cast<int>(affine_basis(pts).size()) != d) {
        throw NotFullDimensional("brute_hull: points do not affinely span R^" + std::to_string(d));
    }

    // Every facet hyperplane is spanned by some d of the points. Enumerate
    // all d-subsets and keep the planes with the whole cloud weakly on one
    // side; coincident facet planes found through different subsets merge
    // by canonical key. Interior planes die on the early-exit scan, so no
    // global dedup table is needed.
    std::vector<HullFacet> facets;
    std::unordered_set<std::string> accepted;
    std::vector<int> subset(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) subset[static_cast<size_t>(i)] = i;
    if (n >= d) {
        while (true) {
            do {  // single pass over this subset; break target for skips
                std::vector<Vec> diffs;
                diffs.reserve(static_cast<size_t>(d - 1));
                const Vec& base = pts[static_cast<size_t>(subset[0])];
                for (int i = 1; i < d; ++i) {
                    diffs.push_back(pts[static_cast<size_t>(subset[static_cast<size_t>(i)])] - base);
                }
                Vec normal;
                try {
                    normal = orthogonal_complement_1d(diffs);
                } catch (const DegenerateSpan&) {
                    break;  // subset does not span a hyperplane
                }
                Rational offset = dot(normal, base);

                bool above = false, below = false;
                std::vector<int> on;
                for (int i = 0; i < n && !(above && below); ++i) {
                    const int s = (dot(normal, pts[static_cast<size_t>(i)]) - offset).sign();
                    if (s > 0) above = true;
                    else if (s < 0) below = true;
                    else on.push_back(i);
                }
                if (above && below) break;
                if (!accepted.insert(plane_key(normal, offset)).second) break;
                if (below) {
                    // flip so the cloud lies on the non-positive side
                } else {
                    normal = -normal;
                    offset = -offset;
                }
                facets.push_back(HullFacet{std::move(normal), std::move(offset), std::move(on)});
            } while (false);

            int pos = d - 1;
            while (pos >= 0 && subset[static_cast<size_t>(pos)] == n - d + pos) --pos;
            if (pos < 0) break;
            ++subset[static_cast<size_t>(pos)];
            for (int i = pos + 1; i < d; ++i) {
                subset[static_cast<size_t>(i)] = subset[static_cast<size_t>(i - 1)] + 1;
            }
        }
    }
    if (facets.empty()) throw Error("brute_hull: no facets found");

    // A cloud point is a hull vertex iff the normals of its incident
    // facets span R^d; boundary points interior to a facet fail this.
    std::vector<std::vector<Vec>> incident_normals(static_cast<size_t>(n));
    for (const HullFacet& f : facets) {
        for (int i : f.on_cloud) incident_normals[static_cast<size_t>(i)].push_back(f.outward);
    }
    std::vector<int> vertex_index(static_cast<size_t>(n), -1);
    std::vector<Vec> hull_vertices;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(incident_normals[static_cast<size_t>(i)].size()) < d) continue;
        if (rank_of(incident_normals[static_cast<size_t>(i)]) == d) {
            vertex_index[static_cast<size_t>(i)] = static_cast<int>(hull_vertices.size());
            hull_vertices.push_back(pts[static_cast<size_t>(i)]);
        }
    }
    if (hull_vertices.size() < static_cast<size_t>(d) + 1) {
        throw Error("brute_hull: fewer hull vertices than dimension+1");
    }

    // Faces, layer by layer: k-faces are the dimension-k intersections of
    // (k+1)-faces with facets. Vertex sets use hull vertex indices.
    auto face_points = [&](const std::vector<int>& vs) {
        std::vector<Vec> out;
        out.reserve(vs.size());
        for (int v : vs) out.push_back(hull_vertices[static_cast<size_t>(v)]);
        return out;
    };

    std::vector<std::vector<std::vector<int>>> layers(static_cast<size_t>(d));  // index k
    std::set<std::vector<int>> facet_sets;
    for (const HullFacet& f : facets) {
        std::vector<int> vs;
        for (int i : f.on_cloud) {
            if (vertex_index[static_cast<size_t>(i)] >= 0) {
                vs.push_back(vertex_index[static_cast<size_t>(i)]);
            }
        }
        std::sort(vs.begin(), vs.end());
        if (static_cast<int>(vs.size()) < d) throw Error("brute_hull: facet with too few vertices");
        facet_sets.insert(std::move(vs));
    }
    layers[static_cast<size_t>(d - 1)].assign(facet_sets.begin(), facet_sets.end());

    for (int k = d - 2; k >= 0; --k) {
        std::set<std::vector<int>> next;
        for (const auto& g : layers[static_cast<size_t>(k + 1)]) {
            for (const auto& f : layers[static_cast<size_t>(d - 1)]) {
                std::vector<int> inter;
                std::set_intersection(g.begin(), g.end(), f.begin(), f.end(),
                                      std::back_inserter(inter));
                if (inter.empty() || inter.size() == g.size()) continue;
                if (next.count(inter)) continue;
                if (static_cast<int>(affine_basis(face_points(inter)).size()) == k) {
                    next.insert(std::move(inter));
                }
            }
        }
        layers[static_cast<size_t>(k)].assign(next.begin(), next.end());
    }
    if (layers[0].size() != hull_vertices.size()) {
        throw Error("brute_hull: vertex layer mismatch");
    }

    std::vector<FaceSpec> face_specs;
    for (int k = 1; k <= d - 1; ++k) {
        for (const auto& vs : layers[static_cast<size_t>(k)]) {
            face_specs.push_back(FaceSpec{k, vs, std::nullopt});
        }
    }
    FaceLattice lattice = assemble_lattice(d, hull_vertices, face_specs);
    const ValidationReport report = validate_lattice(lattice, ValidationLevel::full);
    if (!report.ok) throw ValidationFailure(report.violations);
    return Polytope{std::move(lattice), label};
}

Polytope oracle_minkowski(const std::vector<const Polytope*>& inputs) {
    return brute_hull(vertex_sums(inputs), "oracle sum");
}

}  // namespace minksum
