#include "minksum/minkd.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace minksum {

namespace detail {

std::vector<int> support_argmax(const Polytope& p, const Vec& direction) {
    const auto& verts = p.lattice.vertices();
    std::vector<int> argmax;
    Rational best;
    for (int v : verts) {
        const Rational val = dot(p.lattice.vertex_point(v), direction);
        if (argmax.empty() || val > best) {
            best = val;
            argmax = {v};
        } else if (val == best) {
            argmax.push_back(v);
        }
    }
    return argmax;
}

SideResult superface_side(const Polytope& p, int face_id, const Vec& normal) {
    const FaceNode& face = p.lattice.node(face_id);
    if (face.up.empty()) return {SideResult::Kind::unconstrained};
    const Vec& anchor = *face.interior_point;
    int common = 0;
    for (int super : face.up) {
        const int s = dot(normal, *p.lattice.node(super).interior_point - anchor).sign();
        if (s == 0) return {SideResult::Kind::zero, 0, super};
        if (common == 0) {
            common = s;
        } else if (s != common) {
            return {SideResult::Kind::mixed};
        }
    }
    return {SideResult::Kind::strict, common};
}

std::vector<std::vector<Vec>> face_bases(const Polytope& p) {
    std::vector<std::vector<Vec>> bases(p.lattice.node_count());
    for (const FaceNode& n : p.lattice.nodes()) {
        if (n.dim >= 1) {
            bases[static_cast<size_t>(n.id)] =
                affine_basis(p.lattice.vertex_points(n.vertex_ids));
        }
    }
    return bases;
}

std::optional<Vec> facet_tuple_normal(const std::vector<const Polytope*>& inputs,
                                      const std::vector<int>& face_ids,
                                      const std::vector<std::vector<std::vector<Vec>>*>& bases,
                                      DegeneracyReport* collect) {
    const int d = inputs[0]->ambient_dim();
    std::vector<Vec> joint;
    joint.reserve(static_cast<size_t>(d - 1));
    for (size_t i = 0; i < inputs.size(); ++i) {
        const auto& b = (*bases[i])[static_cast<size_t>(face_ids[i])];
        joint.insert(joint.end(), b.begin(), b.end());
    }

    Vec normal;
    try {
        normal = orthogonal_complement_1d(joint);
    } catch (const DegenerateSpan&) {
        DegeneracyWitness w{DegeneracyWitness::Kind::deficient_span, face_ids, {}, ""};
        if (collect) {
            collect->add(std::move(w));
            return std::nullopt;
        }
        throw DegenerateSpan("dependent joint affine basis: " + w.to_string());
    }

    int common = 0;
    for (size_t i = 0; i < inputs.size(); ++i) {
        const SideResult r = superface_side(*inputs[i], face_ids[i], normal);
        switch (r.kind) {
            case SideResult::Kind::unconstrained:
                continue;
            case SideResult::Kind::mixed:
                return std::nullopt;
            case SideResult::Kind::zero: {
                DegeneracyWitness w{DegeneracyWitness::Kind::zero_side_sign, face_ids, {},
                                    "superface " + std::to_string(r.zero_superface) +
                                        " of slot " + std::to_string(i)};
                if (collect) {
                    collect->add(std::move(w));
                    return std::nullopt;
                }
                throw ZeroSideSign("superface interior point on the test hyperplane: " +
                                   w.to_string());
            }
            case SideResult::Kind::strict:
                if (common == 0) {
                    common = r.sign;
                } else if (r.sign != common) {
                    return std::nullopt;  // inputs on opposite sides: not a common tangent
                }
        }
    }
    if (common == 0) {
        // Every slot was its polytope's top face; unreachable for sums that
        // affinely span R^d, which the pipelines require.
        throw Error("facet candidate with no orientation constraint");
    }
    return common < 0 ? normal : -normal;
}

Polytope build_sum_lattice(const std::vector<const Polytope*>& inputs,
                           const std::vector<FacetTuple>& facets, const std::string& label) {
    const int d = inputs[0]->ambient_dim();
    LatticeBuilder builder(d);

    Vec top_ip = Vec::zero(d);
    for (const Polytope* p : inputs) {
        top_ip = top_ip + *p->lattice.node(p->lattice.top_face_id()).interior_point;
    }
    const int top_id = builder.add_face(d, std::move(top_ip));

    std::unordered_map<std::vector<int>, int, TupleHash> table;
    std::function<int(const std::vector<int>&)> build = [&](const std::vector<int>& ids) -> int {
        const auto it = table.find(ids);
        if (it != table.end()) return it->second;

        int total_dim = 0;
        Vec ip = Vec::zero(d);
        for (size_t i = 0; i < inputs.size(); ++i) {
            const FaceNode& n = inputs[i]->lattice.node(ids[i]);
            total_dim += n.dim;
            ip = ip + *n.interior_point;
        }
        const int node_id =
            total_dim == 0 ? builder.add_vertex(std::move(ip))
                           : builder.add_face(total_dim, std::move(ip));
        table.emplace(ids, node_id);

        for (size_t i = 0; i < inputs.size(); ++i) {
            const FaceNode& n = inputs[i]->lattice.node(ids[i]);
            if (n.dim < 1) continue;
            std::vector<int> child = ids;
            for (int sub : n.down) {
                child[i] = sub;
                builder.add_arc(build(child), node_id);
            }
        }
        return node_id;
    };

    for (const FacetTuple& facet : facets) {
        builder.add_arc(build(facet.ids), top_id);
    }

    FaceLattice lattice = builder.freeze();
    const ValidationReport report = validate_lattice(lattice, ValidationLevel::structural);
    if (!report.ok) throw ValidationFailure(report.violations);
    return Polytope{std::move(lattice), label};
}

std::vector<Vec> oriented_facet_normals(const Polytope& q, int facet_id) {
    const FaceNode& g = q.lattice.node(facet_id);
    const Vec normal = orthogonal_complement_1d(affine_basis(q.lattice.vertex_points(g.vertex_ids)));
    if (facet_id == q.lattice.top_face_id()) {
        // q is flat: tangent hyperplanes contain all of q, from either side.
        return {normal, -normal};
    }
    const Vec& inner = *q.lattice.node(q.lattice.top_face_id()).interior_point;
    const int side = dot(normal, inner - *g.interior_point).sign();
    if (side == 0) throw Error("oriented_facet_normals: interior point on facet hyperplane");
    return {side < 0 ? normal : -normal};
}

void verify_support_certificate(const std::vector<const Polytope*>& inputs,
                                const FacetTuple& facet) {
    for (size_t i = 0; i < inputs.size(); ++i) {
        const Polytope& p = *inputs[i];
        const FaceNode& face = p.lattice.node(facet.ids[static_cast<size_t>(i)]);
        const std::vector<int> argmax = support_argmax(p, facet.normal);
        if (argmax != face.vertex_ids) {
            throw ValidationFailure(
                {"support certificate failed for slot " + std::to_string(i) + ", face " +
                 std::to_string(face.id) + ": support set does not match the face"});
        }
    }
}

}  // namespace detail

int support_vertex(const Polytope& p, const Vec& direction) {
    if (direction.dim() != p.ambient_dim()) {
        throw DimensionMismatch("support_vertex: direction dimension mismatch");
    }
    if (direction.is_zero()) throw InvalidArgument("support_vertex: zero direction");
    const std::vector<int> argmax = detail::support_argmax(p, direction);
    if (argmax.size() != 1) {
        throw DegenerateTie("support maximum attained by " + std::to_string(argmax.size()) +
                                " vertices",
                            argmax);
    }
    return argmax[0];
}

Vec facet_outward_normal(const FaceLattice& lattice, int facet_id) {
    if (lattice.top_dim() != lattice.ambient_dim()) {
        throw InvalidArgument("facet_outward_normal: polytope is not full-dimensional");
    }
    const FaceNode& facet = lattice.node(facet_id);
    if (facet.dim != lattice.ambient_dim() - 1) {
        throw InvalidArgument("facet_outward_normal: face " + std::to_string(facet_id) +
                              " is not a facet");
    }
    const Vec normal =
        orthogonal_complement_1d(affine_basis(lattice.vertex_points(facet.vertex_ids)));
    const Vec& inner = *lattice.node(lattice.top_face_id()).interior_point;
    const int side = dot(normal, inner - *facet.interior_point).sign();
    if (side == 0) throw Error("facet_outward_normal: interior point on facet hyperplane");
    return side < 0 ? normal : -normal;
}

std::vector<FacetPair> stage1_facets(const Polytope& p, const Polytope& q,
                                     DegeneracyReport* collect, MinkStats* stats) {
    const int d = q.ambient_dim();
    std::vector<FacetPair> out;
    if (q.dim() < d - 1) return out;  // q has no (d-1)-faces

    const long p0 = static_cast<long>(p.lattice.vertices().size());
    for (int g : q.lattice.faces_of_dim(d - 1)) {
        for (const Vec& dir : detail::oriented_facet_normals(q, g)) {
            if (stats) stats->pairs_tested += p0;
            const std::vector<int> argmax = detail::support_argmax(p, dir);
            if (argmax.size() != 1) {
                DegeneracyWitness w{DegeneracyWitness::Kind::tied_support, {-1, g}, argmax, ""};
                if (collect) {
                    collect->add(std::move(w));
                    continue;
                }
                throw DegenerateTie("stage 1 support tie against facet " + std::to_string(g),
                                    argmax);
            }
            out.push_back(FacetPair{argmax[0], g, 0, d - 1, dir});
        }
    }
    return out;
}

std::optional<FacetPair> is_sum_facet(const Polytope& p, int f_id, const Polytope& q, int g_id,
                                      DegeneracyReport* collect) {
    const int d = p.ambient_dim();
    const int df = p.lattice.node(f_id).dim;
    const int dg = q.lattice.node(g_id).dim;
    if (df < 0 || dg < 0 || df + dg != d - 1) {
        throw InvalidArgument("is_sum_facet: face dimensions " + std::to_string(df) + " + " +
                              std::to_string(dg) + " != " + std::to_string(d - 1));
    }
    auto bp = detail::face_bases(p);
    auto bq = detail::face_bases(q);
    const auto normal =
        detail::facet_tuple_normal({&p, &q}, {f_id, g_id}, {&bp, &bq}, collect);
    if (!normal) return std::nullopt;
    return FacetPair{f_id, g_id, df, dg, *normal};
}

namespace {

std::vector<FacetPair> stage2_with_bases(const Polytope& p, const Polytope& q, int k_lo, int k_hi,
                                         std::vector<std::vector<Vec>>& bp,
                                         std::vector<std::vector<Vec>>& bq,
                                         DegeneracyReport* collect, MinkStats* stats) {
    const int d = p.ambient_dim();
    if (k_hi < 0) k_hi = d - 1;
    std::vector<FacetPair> out;
    const std::vector<const Polytope*> inputs = {&p, &q};
    const std::vector<std::vector<std::vector<Vec>>*> bases = {&bp, &bq};
    for (int k = std::max(k_lo, d - 1 - q.dim()); k <= std::min({k_hi, d - 1, p.dim()}); ++k) {
        for (int f : p.lattice.faces_of_dim(k)) {
            for (int g : q.lattice.faces_of_dim(d - 1 - k)) {
                if (stats) ++stats->pairs_tested;
                const auto normal = detail::facet_tuple_normal(inputs, {f, g}, bases, collect);
                if (normal) out.push_back(FacetPair{f, g, k, d - 1 - k, *normal});
            }
        }
    }
    return out;
}

}  // namespace

std::vector<FacetPair> stage2_facets(const Polytope& p, const Polytope& q, int k_lo, int k_hi,
                                     DegeneracyReport* collect, MinkStats* stats) {
    auto bp = detail::face_bases(p);
    auto bq = detail::face_bases(q);
    return stage2_with_bases(p, q, k_lo, k_hi, bp, bq, collect, stats);
}

Polytope stage3_build(const Polytope& p, const Polytope& q, const std::vector<FacetPair>& facets,
                      const std::string& label) {
    std::vector<detail::FacetTuple> tuples;
    tuples.reserve(facets.size());
    for (const FacetPair& f : facets) {
        tuples.push_back(detail::FacetTuple{{f.f_id, f.g_id}, f.normal});
    }
    return detail::build_sum_lattice({&p, &q}, tuples, label);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q, SumMode mode, MinkStats* stats) {
    const int d = p.ambient_dim();
    if (q.ambient_dim() != d) throw DimensionMismatch("minkowski_sum: mixed ambient dimensions");
    if (d < 2) throw InvalidArgument("minkowski_sum: ambient dimension must be >= 2");
    const std::string label = p.label + " + " + q.label;

    // The pipeline builds full-dimensional sums; the only flat sum it
    // accepts is the point + point corner.
    if (p.dim() == 0 && q.dim() == 0) {
        const Vec v = p.lattice.vertex_point(p.lattice.vertices()[0]) +
                      q.lattice.vertex_point(q.lattice.vertices()[0]);
        return Polytope{assemble_lattice(d, {v}, {}), label};
    }
    {
        auto bp = detail::face_bases(p);
        auto bq = detail::face_bases(q);
        std::vector<Vec> joint = bp[static_cast<size_t>(p.lattice.top_face_id())];
        const auto& bq_top = bq[static_cast<size_t>(q.lattice.top_face_id())];
        joint.insert(joint.end(), bq_top.begin(), bq_top.end());
        if (rank_of(joint) < d) {
            throw NotFullDimensional("minkowski_sum: the sum does not span R^" +
                                     std::to_string(d));
        }

        DegeneracyReport report;
        std::vector<FacetPair> facets = stage1_facets(p, q, &report, stats);
        if (d >= 3) {
            for (const FacetPair& swapped : stage1_facets(q, p, &report, stats)) {
                facets.push_back(
                    FacetPair{swapped.g_id, swapped.f_id, d - 1, 0, swapped.normal});
            }
        }
        const int k_hi = d == 2 ? 1 : d - 2;
        const auto rest = stage2_with_bases(p, q, 1, k_hi, bp, bq, &report, stats);
        facets.insert(facets.end(), rest.begin(), rest.end());
        if (!report.empty()) throw DegenerateInput(std::move(report));

        std::set<std::pair<int, int>> seen;
        for (const FacetPair& f : facets) {
            if (!seen.emplace(f.f_id, f.g_id).second) {
                throw Error("minkowski_sum: duplicate facet pair");
            }
        }

        if (mode == SumMode::paranoid) {
            for (const FacetPair& f : facets) {
                detail::verify_support_certificate(
                    {&p, &q}, detail::FacetTuple{{f.f_id, f.g_id}, f.normal});
            }
        }
        return stage3_build(p, q, facets, label);
    }
}

}  // namespace minksum
