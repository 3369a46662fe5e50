#ifndef MINKSUM_LINALG_HPP
#define MINKSUM_LINALG_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "minksum/rational.hpp"

namespace minksum {

// Point or direction vector in R^d with exact rational coordinates.
class Vec {
  public:
    Vec() = default;
    explicit Vec(std::vector<Rational> coords) : c_(std::move(coords)) {}
    Vec(std::initializer_list<Rational> coords) : c_(coords) {}

    static Vec zero(int dim) { return Vec(std::vector<Rational>(static_cast<size_t>(dim))); }

    int dim() const { return static_cast<int>(c_.size()); }
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Rational& operator[](int i) { return c_[static_cast<size_t>(i)]; }

    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec operator-() const;
    Vec scaled(const Rational& s) const;

    bool operator==(const Vec& o) const { return c_ == o.c_; }
    bool operator!=(const Vec& o) const { return !(*this == o); }
    // Lexicographic; gives a deterministic total order on points.
    bool operator<(const Vec& o) const;

    bool is_zero() const;
    std::string str() const;

    const std::vector<Rational>& coords() const { return c_; }

  private:
    std::vector<Rational> c_;
};

Rational dot(const Vec& a, const Vec& b);

// { x : normal . x = offset }, normal not required to be unit length.
struct Hyperplane {
    Vec normal;
    Rational offset;
};

// Sign of (h.normal . p - h.offset); -1, 0 or +1, decided exactly.
int side_of(const Hyperplane& h, const Vec& p);

// Rank of the span of `rows`, by exact Gaussian elimination.
int rank_of(std::vector<Vec> rows);

// True iff v lies in the linear span of `rows`.
bool in_span(const std::vector<Vec>& rows, const Vec& v);

// Exact determinant of a square matrix given as rows.
Rational det(std::vector<Vec> rows);

// A linearly independent set of difference vectors spanning the affine
// hull of `points`; result size equals the affine dimension. The returned
// vectors are original differences p_i - p_0, picked greedily, so the
// output is deterministic.
std::vector<Vec> affine_basis(const std::vector<Vec>& points);

// Generalized cross product: the 1-dimensional orthogonal complement of
// d-1 vectors in R^d, by cofactor expansion. Sign is unspecified.
// Throws DegenerateSpan when the inputs are linearly dependent.
Vec orthogonal_complement_1d(const std::vector<Vec>& vectors);

// Some nonzero v (dimension `cols`) with rows . v = 0 for every row.
// Throws InvalidArgument when the rows have full column rank.
Vec nullspace_vector(const std::vector<Vec>& rows, int cols);

// A nonzero u in span(space_basis) orthogonal to every vector of
// sub_basis. Requires span(sub_basis) to be a hyperplane inside
// span(space_basis); throws DegenerateSpan otherwise.
Vec subspace_normal(const std::vector<Vec>& space_basis, const std::vector<Vec>& sub_basis);

}  // namespace minksum

#endif
