#include "minksum/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace minksum {

namespace {

std::vector<int> sorted_union(const std::vector<std::vector<int>*>& sets) {
    std::vector<int> out;
    for (const auto* s : sets) out.insert(out.end(), s->begin(), s->end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string face_label(const FaceNode& f) {
    return "face " + std::to_string(f.id) + " (dim " + std::to_string(f.dim) + ")";
}

}  // namespace

Vec centroid(const std::vector<Vec>& points) {
    if (points.empty()) throw InvalidArgument("centroid of empty point set");
    Vec acc = Vec::zero(points[0].dim());
    for (const Vec& p : points) acc = acc + p;
    return acc.scaled(Rational(1, static_cast<long>(points.size())));
}

const std::vector<int>& FaceLattice::faces_of_dim(int k) const {
    if (k < -1 || k > top_dim_) {
        throw InvalidArgument("faces_of_dim: k = " + std::to_string(k) +
                              " outside [-1, " + std::to_string(top_dim_) + "]");
    }
    return layers_.at(static_cast<size_t>(k + 1));
}

const Vec& FaceLattice::vertex_point(int vertex_id) const {
    const FaceNode& n = node(vertex_id);
    if (n.dim != 0 || !n.interior_point) {
        throw InvalidArgument("vertex_point: node " + std::to_string(vertex_id) +
                              " is not a vertex");
    }
    return *n.interior_point;
}

std::vector<Vec> FaceLattice::vertex_points(const std::vector<int>& ids) const {
    std::vector<Vec> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(vertex_point(id));
    return out;
}

std::vector<long> FaceLattice::f_vector() const {
    std::vector<long> f;
    for (int k = 0; k < top_dim_; ++k) {
        f.push_back(static_cast<long>(faces_of_dim(k).size()));
    }
    return f;
}

LatticeBuilder::LatticeBuilder(int ambient_dim) : ambient_dim_(ambient_dim) {
    if (ambient_dim < 1) throw InvalidArgument("ambient dimension must be >= 1");
    FaceNode null_face;
    null_face.id = 0;
    null_face.dim = -1;
    nodes_.push_back(std::move(null_face));
}

int LatticeBuilder::add_vertex(Vec point) {
    if (point.dim() != ambient_dim_) {
        throw DimensionMismatch("add_vertex: point dimension " + std::to_string(point.dim()) +
                                " in ambient dimension " + std::to_string(ambient_dim_));
    }
    FaceNode n;
    n.id = static_cast<int>(nodes_.size());
    n.dim = 0;
    n.vertex_ids = {n.id};
    n.interior_point = std::move(point);
    nodes_.push_back(std::move(n));
    return nodes_.back().id;
}

int LatticeBuilder::add_face(int dim, std::optional<Vec> interior_point) {
    if (dim < 1 || dim > ambient_dim_) {
        throw InvalidArgument("add_face: dimension " + std::to_string(dim) +
                              " outside [1, " + std::to_string(ambient_dim_) + "]");
    }
    FaceNode n;
    n.id = static_cast<int>(nodes_.size());
    n.dim = dim;
    n.interior_point = std::move(interior_point);
    nodes_.push_back(std::move(n));
    return nodes_.back().id;
}

void LatticeBuilder::add_arc(int sub_id, int super_id) {
    FaceNode& sub = nodes_.at(static_cast<size_t>(sub_id));
    FaceNode& super = nodes_.at(static_cast<size_t>(super_id));
    if (sub.dim + 1 != super.dim) {
        throw InvalidArgument("add_arc: arc must connect adjacent layers, got dims " +
                              std::to_string(sub.dim) + " and " + std::to_string(super.dim));
    }
    sub.up.push_back(super_id);
    super.down.push_back(sub_id);
}

void LatticeBuilder::remove_arc(int sub_id, int super_id) {
    auto erase_value = [](std::vector<int>& v, int value) {
        v.erase(std::remove(v.begin(), v.end(), value), v.end());
    };
    erase_value(nodes_.at(static_cast<size_t>(sub_id)).up, super_id);
    erase_value(nodes_.at(static_cast<size_t>(super_id)).down, sub_id);
}

void LatticeBuilder::set_interior_point(int id, Vec ip) {
    nodes_.at(static_cast<size_t>(id)).interior_point = std::move(ip);
}

int LatticeBuilder::face_dim(int id) const {
    return nodes_.at(static_cast<size_t>(id)).dim;
}

FaceLattice LatticeBuilder::freeze() {
    FaceLattice lattice;
    lattice.ambient_dim_ = ambient_dim_;
    lattice.nodes_ = nodes_;
    auto& nodes = lattice.nodes_;

    int top_dim = -1;
    for (const FaceNode& n : nodes) top_dim = std::max(top_dim, n.dim);
    lattice.top_dim_ = top_dim;

    // Wire every vertex above the null face.
    for (FaceNode& n : nodes) {
        if (n.dim == 0) {
            n.down.push_back(0);
            nodes[0].up.push_back(n.id);
        }
    }

    std::size_t arc_count = 0;
    for (FaceNode& n : nodes) {
        std::sort(n.up.begin(), n.up.end());
        n.up.erase(std::unique(n.up.begin(), n.up.end()), n.up.end());
        std::sort(n.down.begin(), n.down.end());
        n.down.erase(std::unique(n.down.begin(), n.down.end()), n.down.end());
        arc_count += n.up.size();
    }
    lattice.arc_count_ = arc_count;

    // Layers, in id (construction) order.
    lattice.layers_.assign(static_cast<size_t>(top_dim + 2), {});
    for (const FaceNode& n : nodes) {
        lattice.layers_.at(static_cast<size_t>(n.dim + 1)).push_back(n.id);
    }
    lattice.null_id_ = 0;
    const auto& top_layer = lattice.layers_.back();
    lattice.top_id_ = top_layer.empty() ? -1 : top_layer.front();

    // Vertex sets by upward closure over the down arcs.
    std::vector<int> by_dim;
    for (const FaceNode& n : nodes) by_dim.push_back(n.id);
    std::sort(by_dim.begin(), by_dim.end(),
              [&](int a, int b) { return nodes[static_cast<size_t>(a)].dim < nodes[static_cast<size_t>(b)].dim; });
    for (int id : by_dim) {
        FaceNode& n = nodes[static_cast<size_t>(id)];
        if (n.dim <= 0) continue;
        std::vector<std::vector<int>*> sets;
        for (int sub : n.down) sets.push_back(&nodes[static_cast<size_t>(sub)].vertex_ids);
        n.vertex_ids = sorted_union(sets);
    }

    // Missing interior points: centroid of the face's vertices.
    for (FaceNode& n : nodes) {
        if (n.dim >= 1 && !n.interior_point && !n.vertex_ids.empty()) {
            n.interior_point = centroid(lattice.vertex_points(n.vertex_ids));
        }
    }
    return lattice;
}

LatticeBuilder LatticeBuilder::from(const FaceLattice& lattice) {
    if (lattice.node_count() == 0 || lattice.node(0).dim != -1) {
        throw InvalidArgument("LatticeBuilder::from: lattice has no null face at id 0");
    }
    LatticeBuilder b(lattice.ambient_dim());
    b.nodes_ = lattice.nodes();
    // Strip derived arcs/data that freeze() recomputes.
    for (FaceNode& n : b.nodes_) {
        if (n.dim == 0) {
            auto& d = n.down;
            d.erase(std::remove(d.begin(), d.end(), 0), d.end());
        }
        if (n.dim == -1) n.up.clear();
        if (n.dim >= 1) n.vertex_ids.clear();
    }
    return b;
}

FaceLattice assemble_lattice(int ambient_dim, const std::vector<Vec>& vertex_points,
                             const std::vector<FaceSpec>& faces,
                             const std::vector<std::pair<int, int>>* explicit_arcs) {
    LatticeBuilder builder(ambient_dim);
    const int nv = static_cast<int>(vertex_points.size());
    std::vector<int> id_of(static_cast<size_t>(nv) + faces.size(), -1);
    for (int i = 0; i < nv; ++i) {
        id_of[static_cast<size_t>(i)] = builder.add_vertex(vertex_points[static_cast<size_t>(i)]);
    }
    for (size_t j = 0; j < faces.size(); ++j) {
        id_of[static_cast<size_t>(nv) + j] = builder.add_face(faces[j].dim, faces[j].interior_point);
    }

    const int top_dim = static_cast<int>(affine_basis(vertex_points).size());
    int top_id = -1;
    if (top_dim >= 1) top_id = builder.add_face(top_dim);

    // Sorted vertex-index sets per assemble id, for containment tests.
    auto sorted_set = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    std::vector<std::vector<int>> vset(static_cast<size_t>(nv) + faces.size());
    for (int i = 0; i < nv; ++i) vset[static_cast<size_t>(i)] = {i};
    for (size_t j = 0; j < faces.size(); ++j) {
        vset[static_cast<size_t>(nv) + j] = sorted_set(faces[j].vertex_indices);
    }

    if (explicit_arcs) {
        for (const auto& [sub, super] : explicit_arcs[0]) {
            builder.add_arc(id_of.at(static_cast<size_t>(sub)), id_of.at(static_cast<size_t>(super)));
        }
    } else {
        // Containment between adjacent proper layers.
        for (size_t a = 0; a < vset.size(); ++a) {
            const int dim_a = a < static_cast<size_t>(nv) ? 0 : faces[a - static_cast<size_t>(nv)].dim;
            for (size_t b = static_cast<size_t>(nv); b < vset.size(); ++b) {
                const int dim_b = faces[b - static_cast<size_t>(nv)].dim;
                if (dim_b != dim_a + 1) continue;
                if (std::includes(vset[b].begin(), vset[b].end(),
                                  vset[a].begin(), vset[a].end())) {
                    builder.add_arc(id_of[a], id_of[b]);
                }
            }
        }
    }

    // Wire the top face over every (top_dim - 1)-face, or over the vertices
    // when there are no proper faces of that dimension.
    if (top_id >= 0) {
        bool wired = false;
        for (size_t j = 0; j < faces.size(); ++j) {
            if (faces[j].dim == top_dim - 1) {
                builder.add_arc(id_of[static_cast<size_t>(nv) + j], top_id);
                wired = true;
            }
        }
        if (!wired && top_dim == 1) {
            for (int i = 0; i < nv; ++i) builder.add_arc(id_of[static_cast<size_t>(i)], top_id);
        }
    }
    return builder.freeze();
}

void ValidationReport::fail(std::string message) {
    ok = false;
    if (violations.size() < max_messages) {
        violations.push_back(std::move(message));
    } else {
        ++dropped;
    }
}

namespace {

void validate_structure(const FaceLattice& L, ValidationReport& report) {
    const int top = L.top_dim();
    if (top > L.ambient_dim()) {
        report.fail("top dimension exceeds ambient dimension");
    }

    int null_count = 0;
    int top_count = 0;
    for (const FaceNode& n : L.nodes()) {
        if (n.dim < -1 || n.dim > top) report.fail(face_label(n) + ": dimension out of range");
        if (n.dim == -1) ++null_count;
        if (n.dim == top) ++top_count;
    }
    if (null_count != 1) report.fail("expected exactly one null face, found " + std::to_string(null_count));
    if (top_count != 1) report.fail("expected exactly one top face, found " + std::to_string(top_count));

    for (int k = 0; k <= top; ++k) {
        if (L.faces_of_dim(k).empty()) report.fail("empty layer at dimension " + std::to_string(k));
    }

    auto contains = [](const std::vector<int>& sorted, int v) {
        return std::binary_search(sorted.begin(), sorted.end(), v);
    };

    for (const FaceNode& n : L.nodes()) {
        for (int u : n.up) {
            const FaceNode& s = L.node(u);
            if (s.dim != n.dim + 1) report.fail(face_label(n) + ": up-arc to non-adjacent " + face_label(s));
            if (!contains(s.down, n.id)) report.fail(face_label(n) + ": up-arc to " + std::to_string(u) + " lacks reciprocal down-arc");
        }
        for (int d : n.down) {
            const FaceNode& s = L.node(d);
            if (s.dim != n.dim - 1) report.fail(face_label(n) + ": down-arc to non-adjacent " + face_label(s));
            if (!contains(s.up, n.id)) report.fail(face_label(n) + ": down-arc to " + std::to_string(d) + " lacks reciprocal up-arc");
        }
        if (n.dim < top && n.up.empty()) report.fail(face_label(n) + ": no immediate superface");
        if (n.dim > -1 && n.down.empty()) report.fail(face_label(n) + ": no immediate subface");
    }

    // Diamond property: between a (k-1)-face and an incident (k+1)-face
    // there are exactly two k-faces.
    for (const FaceNode& g : L.nodes()) {
        if (g.dim < 1) continue;
        std::map<int, int> middle_count;
        for (int m : g.down) {
            for (int f : L.node(m).down) ++middle_count[f];
        }
        for (const auto& [f, count] : middle_count) {
            if (count != 2) {
                report.fail("diamond violation between face " + std::to_string(f) + " and " +
                            face_label(g) + ": " + std::to_string(count) + " middle faces");
            }
        }
    }

    // Vertex sets.
    for (const FaceNode& n : L.nodes()) {
        if (n.dim == -1) {
            if (!n.vertex_ids.empty()) report.fail("null face has a nonempty vertex set");
            if (n.interior_point) report.fail("null face carries an interior point");
        } else if (n.dim == 0) {
            if (n.vertex_ids != std::vector<int>{n.id}) report.fail(face_label(n) + ": vertex set of a vertex must be itself");
            if (!n.interior_point) report.fail(face_label(n) + ": vertex lacks its coordinate");
        } else {
            std::vector<std::vector<int>*> sets;
            std::vector<std::vector<int>> copies;
            copies.reserve(n.down.size());
            for (int sub : n.down) copies.push_back(L.node(sub).vertex_ids);
            for (auto& c : copies) sets.push_back(&c);
            if (n.vertex_ids != sorted_union(sets)) {
                report.fail(face_label(n) + ": vertex set differs from union over subfaces");
            }
            if (n.vertex_ids.empty()) report.fail(face_label(n) + ": empty vertex set");
            if (!n.interior_point) report.fail(face_label(n) + ": missing interior point");
        }
    }
    if (L.top_face_id() >= 0) {
        std::vector<int> all = L.faces_of_dim(0);
        std::sort(all.begin(), all.end());
        if (L.node(L.top_face_id()).vertex_ids != all) {
            report.fail("top face vertex set is not the full vertex set");
        }
    }

    std::vector<Vec> coords;
    for (int v : L.faces_of_dim(0)) {
        if (L.node(v).interior_point) coords.push_back(*L.node(v).interior_point);
    }
    std::sort(coords.begin(), coords.end());
    for (size_t i = 1; i < coords.size(); ++i) {
        if (coords[i - 1] == coords[i]) {
            report.fail("duplicate vertex coordinates " + coords[i].str());
            break;
        }
    }
}

void validate_geometry(const FaceLattice& L, ValidationReport& report) {
    for (const FaceNode& f : L.nodes()) {
        if (f.dim < 1) continue;
        if (f.vertex_ids.empty() || !f.interior_point) continue;  // already reported
        const std::vector<Vec> pts = L.vertex_points(f.vertex_ids);
        const std::vector<Vec> basis = affine_basis(pts);
        if (static_cast<int>(basis.size()) != f.dim) {
            report.fail(face_label(f) + ": vertex set has affine dimension " +
                        std::to_string(basis.size()));
            continue;
        }
        if (!in_span(basis, *f.interior_point - pts[0])) {
            report.fail(face_label(f) + ": interior point outside the affine hull");
            continue;
        }
        // Against every immediate subface, the face's other vertices and its
        // interior point must lie strictly on one common side.
        for (int sub_id : f.down) {
            const FaceNode& sub = L.node(sub_id);
            if (sub.dim < 0) continue;
            const std::vector<Vec> sub_pts = L.vertex_points(sub.vertex_ids);
            std::vector<Vec> sub_basis = affine_basis(sub_pts);
            Vec u;
            try {
                u = subspace_normal(basis, sub_basis);
            } catch (const Error& e) {
                report.fail(face_label(f) + " / subface " + std::to_string(sub_id) +
                            ": " + e.what());
                continue;
            }
            const Vec& anchor = sub_pts[0];
            int common = 0;
            bool bad = false;
            for (size_t i = 0; i < f.vertex_ids.size(); ++i) {
                const bool in_sub = std::binary_search(sub.vertex_ids.begin(),
                                                       sub.vertex_ids.end(), f.vertex_ids[i]);
                const int s = dot(u, pts[i] - anchor).sign();
                if (in_sub) {
                    if (s != 0) {
                        report.fail(face_label(f) + ": vertex of subface " +
                                    std::to_string(sub_id) + " off its hyperplane");
                        bad = true;
                        break;
                    }
                } else if (s == 0 || (common != 0 && s != common)) {
                    report.fail(face_label(f) + ": vertices not strictly on one side of subface " +
                                std::to_string(sub_id));
                    bad = true;
                    break;
                } else {
                    common = s;
                }
            }
            if (bad) continue;
            if (common == 0) continue;  // subface exhausts the vertex set; reported elsewhere
            if (dot(u, *f.interior_point - anchor).sign() != common) {
                report.fail(face_label(f) + ": interior point not strictly inside subface " +
                            std::to_string(sub_id) + " hyperplane");
            }
        }
    }
}

}  // namespace

ValidationReport validate_lattice(const FaceLattice& lattice, ValidationLevel level) {
    ValidationReport report;
    validate_structure(lattice, report);
    if (level == ValidationLevel::full && report.ok) {
        validate_geometry(lattice, report);
    }
    return report;
}

bool euler_check(const FaceLattice& lattice) {
    const std::vector<long> f = lattice.f_vector();
    long sum = 0;
    for (size_t k = 0; k < f.size(); ++k) sum += (k % 2 == 0 ? f[k] : -f[k]);
    const long expected = lattice.top_dim() % 2 == 0 ? 0 : 2;
    return sum == expected;
}

bool lattice_isomorphic(const FaceLattice& a, const FaceLattice& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.top_dim() != b.top_dim()) return false;
    if (a.node_count() != b.node_count() || a.arc_count() != b.arc_count()) return false;

    // Canonical vertex numbering by coordinate order.
    auto canonical_vertex_index = [](const FaceLattice& L, std::vector<int>& order) -> bool {
        order = L.vertices();
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            return L.vertex_point(x) < L.vertex_point(y);
        });
        for (size_t i = 1; i < order.size(); ++i) {
            if (L.vertex_point(order[i - 1]) == L.vertex_point(order[i])) return false;
        }
        return true;
    };
    std::vector<int> order_a, order_b;
    if (!canonical_vertex_index(a, order_a) || !canonical_vertex_index(b, order_b)) return false;
    if (order_a.size() != order_b.size()) return false;
    for (size_t i = 0; i < order_a.size(); ++i) {
        if (a.vertex_point(order_a[i]) != b.vertex_point(order_b[i])) return false;
    }

    std::vector<int> canon_a(a.node_count(), -1), canon_b(b.node_count(), -1);
    for (size_t i = 0; i < order_a.size(); ++i) canon_a[static_cast<size_t>(order_a[i])] = static_cast<int>(i);
    for (size_t i = 0; i < order_b.size(); ++i) canon_b[static_cast<size_t>(order_b[i])] = static_cast<int>(i);

    auto face_key = [](const std::vector<int>& canon, const FaceNode& n) {
        std::vector<int> key;
        key.reserve(n.vertex_ids.size());
        for (int v : n.vertex_ids) key.push_back(canon[static_cast<size_t>(v)]);
        std::sort(key.begin(), key.end());
        return key;
    };

    // Match faces by canonical vertex set, per layer.
    std::vector<int> map_ab(a.node_count(), -1);
    for (int k = -1; k <= a.top_dim(); ++k) {
        const auto& la = a.faces_of_dim(k);
        const auto& lb = b.faces_of_dim(k);
        if (la.size() != lb.size()) return false;
        std::map<std::vector<int>, int> index_b;
        for (int id : lb) {
            if (!index_b.emplace(face_key(canon_b, b.node(id)), id).second) return false;
        }
        for (int id : la) {
            auto it = index_b.find(face_key(canon_a, a.node(id)));
            if (it == index_b.end()) return false;
            map_ab[static_cast<size_t>(id)] = it->second;
        }
    }

    // Incidence preservation; arc totals match, so a subset check suffices.
    for (const FaceNode& n : a.nodes()) {
        const FaceNode& image = b.node(map_ab[static_cast<size_t>(n.id)]);
        for (int u : n.up) {
            const int mu = map_ab[static_cast<size_t>(u)];
            if (!std::binary_search(image.up.begin(), image.up.end(), mu)) return false;
        }
    }
    return true;
}

}  // namespace minksum
