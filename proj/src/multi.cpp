#include "minksum/multi.hpp"

#include <algorithm>
#include <set>

namespace minksum {

namespace {

void check_inputs(const std::vector<const Polytope*>& inputs) {
    if (inputs.empty()) throw InvalidArgument("multi sum of no polytopes");
    const int d = inputs[0]->ambient_dim();
    if (d < 2) throw InvalidArgument("multi sum: ambient dimension must be >= 2");
    for (const Polytope* p : inputs) {
        if (p->ambient_dim() != d) throw DimensionMismatch("multi sum: mixed ambient dimensions");
    }
}

std::string joined_label(const std::vector<const Polytope*>& inputs) {
    std::string label;
    for (size_t i = 0; i < inputs.size(); ++i) {
        if (i) label += " + ";
        label += inputs[i]->label;
    }
    return label;
}

}  // namespace

std::vector<FaceTuple> multi_stage1(const std::vector<const Polytope*>& inputs,
                                    DegeneracyReport* collect, MinkStats* stats) {
    check_inputs(inputs);
    const int d = inputs[0]->ambient_dim();
    const size_t n = inputs.size();
    std::vector<FaceTuple> out;

    for (size_t slot = 0; slot < n; ++slot) {
        const Polytope& q = *inputs[slot];
        if (q.dim() < d - 1) continue;
        for (int g : q.lattice.faces_of_dim(d - 1)) {
            for (const Vec& dir : detail::oriented_facet_normals(q, g)) {
                if (stats) ++stats->pairs_tested;
                FaceTuple tuple;
                tuple.ids.assign(n, -1);
                tuple.dims.assign(n, 0);
                tuple.ids[slot] = g;
                tuple.dims[slot] = d - 1;
                tuple.normal = dir;
                bool ok = true;
                for (size_t j = 0; j < n && ok; ++j) {
                    if (j == slot) continue;
                    const std::vector<int> argmax = detail::support_argmax(*inputs[j], dir);
                    if (argmax.size() != 1) {
                        std::vector<int> faces(n, -1);
                        faces[slot] = g;
                        DegeneracyWitness w{DegeneracyWitness::Kind::tied_support, faces, argmax,
                                            "support tie in slot " + std::to_string(j)};
                        if (!collect) {
                            throw DegenerateTie("stage 1 support tie against facet " +
                                                    std::to_string(g) + " of slot " +
                                                    std::to_string(slot),
                                                argmax);
                        }
                        collect->add(std::move(w));
                        ok = false;
                    } else {
                        tuple.ids[j] = argmax[0];
                    }
                }
                if (ok) out.push_back(std::move(tuple));
            }
        }
    }
    return out;
}

std::vector<FaceTuple> multi_stage2(const std::vector<const Polytope*>& inputs,
                                    DegeneracyReport* collect, MinkStats* stats) {
    check_inputs(inputs);
    const int d = inputs[0]->ambient_dim();
    const size_t n = inputs.size();
    std::vector<FaceTuple> out;

    std::vector<std::vector<std::vector<Vec>>> bases;
    std::vector<std::vector<std::vector<Vec>>*> base_ptrs;
    bases.reserve(n);
    for (const Polytope* p : inputs) bases.push_back(detail::face_bases(*p));
    for (auto& b : bases) base_ptrs.push_back(&b);

    // Lexicographic enumeration of compositions (k_1,...,k_n) of d-1 with
    // 0 <= k_i <= dim(P_i). Compositions with a (d-1)-dimensional slot are
    // stage 1's cases and are skipped here.
    std::vector<int> comp(n, 0);
    auto process_composition = [&]() {
        if (*std::max_element(comp.begin(), comp.end()) == d - 1) return;
        std::vector<int> tuple(n);
        auto scan = [&](auto&& self, size_t slot) -> void {
            if (slot == n) {
                if (stats) ++stats->pairs_tested;
                const auto normal = detail::facet_tuple_normal(inputs, tuple, base_ptrs, collect);
                if (normal) out.push_back(FaceTuple{tuple, comp, *normal});
                return;
            }
            for (int f : inputs[slot]->lattice.faces_of_dim(comp[slot])) {
                tuple[slot] = f;
                self(self, slot + 1);
            }
        };
        scan(scan, 0);
    };
    auto enumerate = [&](auto&& self, size_t slot, int remaining) -> void {
        if (slot == n - 1) {
            if (remaining <= inputs[slot]->dim()) {
                comp[slot] = remaining;
                process_composition();
            }
            return;
        }
        const int limit = std::min(remaining, inputs[slot]->dim());
        for (int k = 0; k <= limit; ++k) {
            comp[slot] = k;
            self(self, slot + 1, remaining - k);
        }
    };
    enumerate(enumerate, 0, d - 1);
    return out;
}

Polytope multi_minkowski_sum(const std::vector<const Polytope*>& inputs, SumMode mode,
                             MinkStats* stats) {
    check_inputs(inputs);
    const int d = inputs[0]->ambient_dim();
    const std::string label = joined_label(inputs);

    if (inputs.size() == 1) {
        return Polytope{inputs[0]->lattice, inputs[0]->label};  // deep copy
    }

    bool all_points = true;
    for (const Polytope* p : inputs) all_points = all_points && p->dim() == 0;
    if (all_points) {
        Vec v = Vec::zero(d);
        for (const Polytope* p : inputs) v = v + p->lattice.vertex_point(p->lattice.vertices()[0]);
        return Polytope{assemble_lattice(d, {v}, {}), label};
    }
    {
        std::vector<Vec> joint;
        for (const Polytope* p : inputs) {
            const auto b = affine_basis(p->lattice.vertex_points(p->lattice.vertices()));
            joint.insert(joint.end(), b.begin(), b.end());
        }
        if (rank_of(joint) < d) {
            throw NotFullDimensional("multi sum: the sum does not span R^" + std::to_string(d));
        }
    }

    DegeneracyReport report;
    std::vector<FaceTuple> facets = multi_stage1(inputs, &report, stats);
    const auto rest = multi_stage2(inputs, &report, stats);
    facets.insert(facets.end(), rest.begin(), rest.end());
    if (!report.empty()) throw DegenerateInput(std::move(report));

    std::set<std::vector<int>> seen;
    std::vector<detail::FacetTuple> tuples;
    tuples.reserve(facets.size());
    for (const FaceTuple& f : facets) {
        if (!seen.insert(f.ids).second) throw Error("multi sum: duplicate facet tuple");
        tuples.push_back(detail::FacetTuple{f.ids, f.normal});
    }
    if (mode == SumMode::paranoid) {
        for (const auto& t : tuples) detail::verify_support_certificate(inputs, t);
    }
    return detail::build_sum_lattice(inputs, tuples, label);
}

}  // namespace minksum
