#ifndef MINKSUM_MINKD_HPP
#define MINKSUM_MINKD_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minksum/lattice.hpp"

namespace minksum {

// One facet of P + Q, recorded as its generating face pair together with
// the outward normal of the common tangent hyperplane. Under the
// non-degeneracy assumption dim_f + dim_g = d - 1.
struct FacetPair {
    int f_id;
    int g_id;
    int dim_f;
    int dim_g;
    Vec normal;  // outward
};

struct PairHash {
    std::size_t operator()(const std::pair<int, int>& p) const {
        return std::hash<long long>()((static_cast<long long>(p.first) << 32) ^
                                      static_cast<unsigned int>(p.second));
    }
};

// Table M of the lattice construction: maps a face pair of the inputs to
// the node already built for it in the output, so every pair is realized
// exactly once. Keys absent from the map are the "empty links".
using SumTable = std::unordered_map<std::pair<int, int>, int, PairHash>;

enum class SumMode { fast, paranoid };

struct MinkStats {
    long pairs_tested = 0;  // candidate (f,g) pairs examined across stages
};

// Vertex of p maximizing dot(vertex, direction). A tie means some face of
// dimension >= 1 supports the direction, which violates non-degeneracy
// for the facet directions this is used with, so ties throw DegenerateTie.
int support_vertex(const Polytope& p, const Vec& direction);

// Outward normal of a facet of a full-dimensional polytope: orthogonal
// complement of the facet's affine basis, oriented so the polytope's
// interior point lies strictly on the negative side.
Vec facet_outward_normal(const FaceLattice& lattice, int facet_id);

// Stage 1: pairs every facet g of q with the support vertex of p in g's
// outward direction. Each such pair spans a facet of the sum. With a
// collector, degeneracy witnesses are recorded and the offending
// candidates skipped instead of throwing.
std::vector<FacetPair> stage1_facets(const Polytope& p, const Polytope& q,
                                     DegeneracyReport* collect = nullptr,
                                     MinkStats* stats = nullptr);

// Candidate facet test for a pair with dim f + dim g = d - 1: computes
// the joint normal from the union of the faces' affine bases, then
// requires all immediate-superface interior points of f (within p) and of
// g (within q) to lie strictly on one common side. Returns the facet pair
// with outward normal on success, nothing on honest rejection.
std::optional<FacetPair> is_sum_facet(const Polytope& p, int f_id, const Polytope& q, int g_id,
                                      DegeneracyReport* collect = nullptr);

// Stage 2: scans p_k x q_{d-1-k} for k in [k_lo, k_hi] with is_sum_facet.
// The defaults cover every k in 1..d-1, the full complement of stage 1;
// the minkowski_sum pipeline narrows the range because it also runs
// stage 1 with the roles swapped.
std::vector<FacetPair> stage2_facets(const Polytope& p, const Polytope& q, int k_lo = 1,
                                     int k_hi = -1, DegeneracyReport* collect = nullptr,
                                     MinkStats* stats = nullptr);

// Stage 3: closes a complete facet list downward into the face lattice of
// the sum. From each facet pair the recursion steps to (subface of f, g)
// and (f, subface of g), deduplicating through the SumTable, wiring the
// incidences, and setting interior points to ip(f) + ip(g). The result is
// frozen and structurally validated.
Polytope stage3_build(const Polytope& p, const Polytope& q, const std::vector<FacetPair>& facets,
                      const std::string& label = "sum");

// The full pipeline. In paranoid mode every accepted facet is re-verified
// by the exhaustive support test over all vertices of both inputs.
// Degeneracy witnesses from all stages are aggregated and thrown as
// DegenerateInput; the sum is only built when none were found.
Polytope minkowski_sum(const Polytope& p, const Polytope& q, SumMode mode = SumMode::fast,
                       MinkStats* stats = nullptr);

namespace detail {

struct TupleHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// ids: one face per input slot; normal: outward for the sum facet.
struct FacetTuple {
    std::vector<int> ids;
    Vec normal;
};

// Outcome of the strict one-side test over a face's immediate superfaces.
struct SideResult {
    enum class Kind {
        strict,         // all superface interior points strictly on one side
        unconstrained,  // the face is its polytope's top face (no superfaces)
        mixed,          // superfaces on both sides: honest rejection
        zero,           // a superface interior point on the plane: degeneracy
    };
    Kind kind;
    int sign = 0;            // for strict
    int zero_superface = -1; // for zero
};

SideResult superface_side(const Polytope& p, int face_id, const Vec& normal);

// Affine basis vectors of every face's vertex set, indexed by node id.
std::vector<std::vector<Vec>> face_bases(const Polytope& p);

// Shared candidate test over n slots; bases[i] is face_bases(inputs[i]).
// Returns the outward normal when the tuple generates a facet of the sum.
// Degeneracies are recorded in `collect` when given (returning nothing),
// thrown as DegenerateSpan / ZeroSideSign otherwise.
std::optional<Vec> facet_tuple_normal(const std::vector<const Polytope*>& inputs,
                                      const std::vector<int>& face_ids,
                                      const std::vector<std::vector<std::vector<Vec>>*>& bases,
                                      DegeneracyReport* collect);

// Stage-3 engine shared by the pairwise and n-way pipelines.
Polytope build_sum_lattice(const std::vector<const Polytope*>& inputs,
                           const std::vector<FacetTuple>& facets, const std::string& label);

// Exhaustive support certificate for one accepted facet tuple: for every
// slot, the maximum of dot(. , normal) over the slot's vertices must be
// attained exactly on the face's vertex set.
void verify_support_certificate(const std::vector<const Polytope*>& inputs,
                                const FacetTuple& facet);

std::vector<int> support_argmax(const Polytope& p, const Vec& direction);

// Outward direction(s) of a (d-1)-face: one for a facet of a
// full-dimensional polytope, both orientations when the polytope is flat
// and the face is the polytope itself.
std::vector<Vec> oriented_facet_normals(const Polytope& q, int facet_id);

}  // namespace detail

}  // namespace minksum

#endif
