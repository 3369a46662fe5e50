#ifndef MINKSUM_LATTICE_HPP
#define MINKSUM_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "minksum/linalg.hpp"

namespace minksum {

// One face of a polytope. dim runs from -1 (null face) to the top
// (interior) face. The interior point is a strict relative interior point
// of the face; for vertices it is the vertex coordinate itself, and it is
// absent only on the null face.
struct FaceNode {
    int id = -1;
    int dim = -2;
    std::optional<Vec> interior_point;
    std::vector<int> vertex_ids;  // sorted ids of the 0-faces under this face
    std::vector<int> up;          // immediate superfaces (dim+1), sorted
    std::vector<int> down;        // immediate subfaces (dim-1), sorted
};

// Layered incidence DAG of all faces of a convex polytope, from the null
// face up to the interior face. Immutable after LatticeBuilder::freeze().
//
// top_dim() is the affine dimension of the polytope itself; it equals
// ambient_dim() for full-dimensional polytopes and is smaller for points
// and other flat inputs (a single point has top_dim 0 and its vertex node
// doubles as the interior face).
class FaceLattice {
  public:
    int ambient_dim() const { return ambient_dim_; }
    int top_dim() const { return top_dim_; }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t arc_count() const { return arc_count_; }
    // Complexity parameter used in benchmarks: nodes + incidence arcs.
    std::size_t size() const { return node_count() + arc_count(); }

    const FaceNode& node(int id) const { return nodes_.at(static_cast<size_t>(id)); }
    const std::vector<FaceNode>& nodes() const { return nodes_; }

    // The k-layer, -1 <= k <= top_dim, in stable id order.
    const std::vector<int>& faces_of_dim(int k) const;

    int null_face_id() const { return null_id_; }
    int top_face_id() const { return top_id_; }

    const std::vector<int>& vertices() const { return faces_of_dim(0); }
    const Vec& vertex_point(int vertex_id) const;
    std::vector<Vec> vertex_points(const std::vector<int>& ids) const;

    // (f_0, ..., f_{top_dim - 1}): counts of proper faces per dimension.
    std::vector<long> f_vector() const;

  private:
    friend class LatticeBuilder;
    int ambient_dim_ = 0;
    int top_dim_ = -1;
    int null_id_ = -1;
    int top_id_ = -1;
    std::size_t arc_count_ = 0;
    std::vector<FaceNode> nodes_;
    std::vector<std::vector<int>> layers_;  // index k+1 holds the k-layer
};

struct Polytope {
    FaceLattice lattice;
    std::string label;

    int ambient_dim() const { return lattice.ambient_dim(); }
    int dim() const { return lattice.top_dim(); }
};

// Incremental construction of a FaceLattice. The null face is implicit;
// vertex-to-null arcs are wired automatically at freeze(). Interior points
// left unset are filled with the centroid of the face's vertex set.
class LatticeBuilder {
  public:
    explicit LatticeBuilder(int ambient_dim);

    int add_vertex(Vec point);
    int add_face(int dim, std::optional<Vec> interior_point = std::nullopt);
    void add_arc(int sub_id, int super_id);
    void remove_arc(int sub_id, int super_id);
    void set_interior_point(int id, Vec ip);

    int face_dim(int id) const;

    // Derives vertex sets, layers and missing interior points, and returns
    // the finished lattice. Structural soundness beyond what construction
    // enforces is checked by validate_lattice, not here, so defective
    // lattices can be built deliberately for tests.
    FaceLattice freeze();

    static LatticeBuilder from(const FaceLattice& lattice);

  private:
    int ambient_dim_;
    std::vector<FaceNode> nodes_;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string message);
    static constexpr std::size_t max_messages = 64;
    std::size_t dropped = 0;
};

enum class ValidationLevel {
    structural,  // layers, arcs, gradedness, diamond property, vertex sets
    full,        // structural plus exact geometric checks
};

ValidationReport validate_lattice(const FaceLattice& lattice,
                                  ValidationLevel level = ValidationLevel::full);

// Sum over proper faces of (-1)^k f_k equals 1 - (-1)^top_dim.
bool euler_check(const FaceLattice& lattice);

// Dimension- and incidence-preserving bijection matching faces by their
// vertex coordinate sets. Coordinate-sensitive by design: a translated
// copy is not isomorphic.
bool lattice_isomorphic(const FaceLattice& a, const FaceLattice& b);

// Centroid of a nonempty point set; a strict relative interior point of
// the face spanned by the vertices of any polytope face.
Vec centroid(const std::vector<Vec>& points);

// Declarative description of one proper face for assemble_lattice.
struct FaceSpec {
    int dim = -2;
    std::vector<int> vertex_indices;  // indices into the vertex array
    std::optional<Vec> interior_point;
};

// Builds a lattice from vertex coordinates and proper faces (dimensions
// 1 .. top-1). The top face is created automatically with dimension equal
// to the affine rank of the vertex set; a single vertex with no faces
// yields the point lattice whose vertex doubles as the top face.
//
// Incidence arcs are reconstructed from vertex-set containment between
// adjacent layers unless `explicit_arcs` is given, in which case those
// pairs (using ids: vertex i -> i, face j -> num_vertices + j) are used
// for arcs among vertices and proper faces. Arcs touching the null and
// top faces are always wired automatically. No validation is performed
// here; callers run validate_lattice.
FaceLattice assemble_lattice(int ambient_dim, const std::vector<Vec>& vertex_points,
                             const std::vector<FaceSpec>& faces,
                             const std::vector<std::pair<int, int>>* explicit_arcs = nullptr);

}  // namespace minksum

#endif
