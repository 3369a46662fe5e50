#include "minksum/linalg.hpp"

#include <sstream>
#include <utility>

namespace minksum {

namespace {

void require_same_dim(const Vec& a, const Vec& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()));
    }
}

// In-place elimination to row echelon form; returns the rank.
int echelonize(std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    const int cols = rows[0].dim();
    int rank = 0;
    for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (!rows[static_cast<size_t>(r)][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(pivot)], rows[static_cast<size_t>(rank)]);
        const Vec& p = rows[static_cast<size_t>(rank)];
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            Vec& row = rows[static_cast<size_t>(r)];
            if (row[col].is_zero()) continue;
            const Rational factor = row[col] / p[col];
            for (int c = col; c < cols; ++c) row[c] -= factor * p[c];
        }
        ++rank;
    }
    return rank;
}

// Reduce v against echelon rows (as produced by echelonize); v becomes the
// residual outside their span.
void reduce_against(const std::vector<Vec>& echelon, Vec& v) {
    for (const Vec& row : echelon) {
        int lead = -1;
        for (int c = 0; c < row.dim(); ++c) {
            if (!row[c].is_zero()) {
                lead = c;
                break;
            }
        }
        if (lead < 0) continue;
        if (v[lead].is_zero()) continue;
        const Rational factor = v[lead] / row[lead];
        for (int c = lead; c < v.dim(); ++c) v[c] -= factor * row[c];
    }
}

}  // namespace

Vec Vec::operator+(const Vec& o) const {
    require_same_dim(*this, o, "vector sum");
    Vec out = *this;
    for (int i = 0; i < dim(); ++i) out[i] += o[i];
    return out;
}

Vec Vec::operator-(const Vec& o) const {
    require_same_dim(*this, o, "vector difference");
    Vec out = *this;
    for (int i = 0; i < dim(); ++i) out[i] -= o[i];
    return out;
}

Vec Vec::operator-() const {
    Vec out = *this;
    for (int i = 0; i < out.dim(); ++i) out[i] = -out[i];
    return out;
}

Vec Vec::scaled(const Rational& s) const {
    Vec out = *this;
    for (int i = 0; i < out.dim(); ++i) out[i] *= s;
    return out;
}

bool Vec::operator<(const Vec& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    for (int i = 0; i < dim(); ++i) {
        if (c_[static_cast<size_t>(i)] != o.c_[static_cast<size_t>(i)]) {
            return c_[static_cast<size_t>(i)] < o.c_[static_cast<size_t>(i)];
        }
    }
    return false;
}

bool Vec::is_zero() const {
    for (const auto& x : c_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::string Vec::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < dim(); ++i) {
        if (i) os << ", ";
        os << c_[static_cast<size_t>(i)].str();
    }
    os << ")";
    return os.str();
}

Rational dot(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "dot");
    Rational acc;
    for (int i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
    return acc;
}

int side_of(const Hyperplane& h, const Vec& p) {
    return (dot(h.normal, p) - h.offset).sign();
}

int rank_of(std::vector<Vec> rows) {
    return echelonize(rows);
}

bool in_span(const std::vector<Vec>& rows, const Vec& v) {
    std::vector<Vec> echelon = rows;
    echelonize(echelon);
    Vec residual = v;
    reduce_against(echelon, residual);
    return residual.is_zero();
}

Rational det(std::vector<Vec> rows) {
    const int n = static_cast<int>(rows.size());
    for (const Vec& r : rows) {
        if (r.dim() != n) throw DimensionMismatch("det: matrix is not square");
    }
    // Closed forms for the small sizes that dominate hull enumeration.
    if (n == 0) return Rational(1);
    if (n == 1) return rows[0][0];
    if (n == 2) return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
    if (n == 3) {
        return rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
               rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
               rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
    }
    Rational result(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!rows[static_cast<size_t>(r)][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(rows[static_cast<size_t>(pivot)], rows[static_cast<size_t>(col)]);
            result = -result;
        }
        const Vec& p = rows[static_cast<size_t>(col)];
        result *= p[col];
        for (int r = col + 1; r < n; ++r) {
            Vec& row = rows[static_cast<size_t>(r)];
            if (row[col].is_zero()) continue;
            const Rational factor = row[col] / p[col];
            for (int c = col; c < n; ++c) row[c] -= factor * p[c];
        }
    }
    return result;
}

std::vector<Vec> affine_basis(const std::vector<Vec>& points) {
    if (points.empty()) throw InvalidArgument("affine_basis of empty point set");
    std::vector<Vec> basis;
    std::vector<Vec> echelon;
    const Vec& origin = points[0];
    for (size_t i = 1; i < points.size(); ++i) {
        Vec diff = points[i] - origin;
        Vec residual = diff;
        reduce_against(echelon, residual);
        if (!residual.is_zero()) {
            basis.push_back(std::move(diff));
            echelon.push_back(std::move(residual));
        }
    }
    return basis;
}

Vec orthogonal_complement_1d(const std::vector<Vec>& vectors) {
    if (vectors.empty()) throw InvalidArgument("orthogonal_complement_1d of empty set");
    const int d = vectors[0].dim();
    if (static_cast<int>(vectors.size()) != d - 1) {
        throw InvalidArgument("orthogonal_complement_1d needs exactly d-1 vectors, got " +
                              std::to_string(vectors.size()) + " in dimension " +
                              std::to_string(d));
    }
    for (const Vec& v : vectors) {
        if (v.dim() != d) throw DimensionMismatch("orthogonal_complement_1d: ragged input");
    }
    Vec normal = Vec::zero(d);
    bool nonzero = false;
    int parity = 1;
    for (int skip = 0; skip < d; ++skip) {
        std::vector<Vec> minor;
        minor.reserve(vectors.size());
        for (const Vec& v : vectors) {
            std::vector<Rational> row;
            row.reserve(static_cast<size_t>(d - 1));
            for (int c = 0; c < d; ++c) {
                if (c != skip) row.push_back(v[c]);
            }
            minor.emplace_back(std::move(row));
        }
        Rational cof = det(std::move(minor));
        if (parity < 0) cof = -cof;
        if (!cof.is_zero()) nonzero = true;
        normal[skip] = std::move(cof);
        parity = -parity;
    }
    if (!nonzero) throw DegenerateSpan("orthogonal_complement_1d: input vectors are dependent");
    return normal;
}

Vec nullspace_vector(const std::vector<Vec>& rows, int cols) {
    std::vector<Vec> echelon = rows;
    for (const Vec& r : echelon) {
        if (r.dim() != cols) throw DimensionMismatch("nullspace_vector: ragged input");
    }
    echelonize(echelon);

    // Identify pivot columns.
    std::vector<int> pivot_col;
    for (const Vec& row : echelon) {
        for (int c = 0; c < cols; ++c) {
            if (!row[c].is_zero()) {
                pivot_col.push_back(c);
                break;
            }
        }
    }
    if (static_cast<int>(pivot_col.size()) == cols) {
        throw InvalidArgument("nullspace_vector: rows have full column rank");
    }
    // First free column; set it to 1 and back-substitute.
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    int free_col = 0;
    while (is_pivot[static_cast<size_t>(free_col)]) ++free_col;

    Vec v = Vec::zero(cols);
    v[free_col] = Rational(1);
    for (int r = static_cast<int>(pivot_col.size()) - 1; r >= 0; --r) {
        const Vec& row = echelon[static_cast<size_t>(r)];
        const int pc = pivot_col[static_cast<size_t>(r)];
        Rational acc;
        for (int c = pc + 1; c < cols; ++c) acc += row[c] * v[c];
        v[pc] = -acc / row[pc];
    }
    return v;
}

Vec subspace_normal(const std::vector<Vec>& space_basis, const std::vector<Vec>& sub_basis) {
    const int k = static_cast<int>(space_basis.size());
    if (k == 0) throw InvalidArgument("subspace_normal: empty space basis");
    if (static_cast<int>(sub_basis.size()) != k - 1) {
        throw DegenerateSpan("subspace_normal: sub-basis is not a hyperplane of the space");
    }
    // Gram system: find coefficients a with (sub_basis . space_basis^T) a = 0.
    std::vector<Vec> gram;
    gram.reserve(sub_basis.size());
    for (const Vec& w : sub_basis) {
        std::vector<Rational> row;
        row.reserve(static_cast<size_t>(k));
        for (const Vec& b : space_basis) row.push_back(dot(w, b));
        gram.emplace_back(std::move(row));
    }
    Vec coeff = k == 1 ? Vec{Rational(1)} : nullspace_vector(gram, k);
    Vec u = Vec::zero(space_basis[0].dim());
    for (int i = 0; i < k; ++i) u = u + space_basis[static_cast<size_t>(i)].scaled(coeff[i]);
    if (u.is_zero()) throw DegenerateSpan("subspace_normal: degenerate configuration");
    for (const Vec& w : sub_basis) {
        if (!dot(u, w).is_zero()) {
            throw DegenerateSpan("subspace_normal: sub-basis not inside the space");
        }
    }
    return u;
}

}  // namespace minksum
