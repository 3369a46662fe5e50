#include "minksum/gen.hpp"

#include <algorithm>

#include "minksum/oracle.hpp"

namespace minksum {

uint64_t SplitMix64::next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long SplitMix64::pick(long lo, long hi) {
    if (lo > hi) throw InvalidArgument("SplitMix64::pick: empty range");
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
}

Polytope random_polytope(const GenSpec& spec) {
    if (spec.dim < 2) throw InvalidArgument("random_polytope: dim must be >= 2");
    if (spec.n_points < spec.dim + 1) {
        throw InvalidArgument("random_polytope: need at least dim+1 points");
    }
    if (spec.coordinate_bound < 1) throw InvalidArgument("random_polytope: bound must be >= 1");

    const std::string label = "gen(d=" + std::to_string(spec.dim) +
                              ",n=" + std::to_string(spec.n_points) +
                              ",seed=" + std::to_string(spec.seed) + ")";
    for (uint64_t attempt = 0; attempt < 64; ++attempt) {
        SplitMix64 rng(spec.seed ^ (attempt * 0xd1b54a32d192ed03ULL));
        std::vector<Vec> pts;
        for (int i = 0; i < spec.n_points; ++i) {
            std::vector<Rational> coords;
            for (int c = 0; c < spec.dim; ++c) {
                coords.emplace_back(rng.pick(-spec.coordinate_bound, spec.coordinate_bound));
            }
            pts.emplace_back(std::move(coords));
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        try {
            Polytope hull = brute_hull(PointCloud{spec.dim, std::move(pts)}, label);
            return hull;
        } catch (const NotFullDimensional&) {
            continue;
        }
    }
    throw GenerationFailed("random_polytope: no full-dimensional draw after 64 attempts");
}

std::vector<Vec> rotation_matrix(int dim, uint64_t seed) {
    if (dim < 1) throw InvalidArgument("rotation_matrix: dim must be >= 1");
    std::vector<Vec> rows;
    for (int i = 0; i < dim; ++i) {
        Vec row = Vec::zero(dim);
        row[i] = Rational(1);
        rows.push_back(std::move(row));
    }
    if (seed == 0) return rows;

    SplitMix64 rng(seed);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            // cos = (m^2-k^2)/(m^2+k^2), sin = 2mk/(m^2+k^2): exact points
            // on the unit circle from a Pythagorean pair m > k >= 1.
            const long m = rng.pick(2, 40);
            const long k = rng.pick(1, m - 1);
            const Rational den(m * m + k * k);
            const Rational c = Rational(m * m - k * k) / den;
            const Rational s = Rational(2 * m * k) / den;
            for (int col = 0; col < dim; ++col) {
                const Rational a = rows[static_cast<size_t>(i)][col];
                const Rational b = rows[static_cast<size_t>(j)][col];
                rows[static_cast<size_t>(i)][col] = c * a - s * b;
                rows[static_cast<size_t>(j)][col] = s * a + c * b;
            }
        }
    }
    return rows;
}

namespace {

Vec mat_vec(const std::vector<Vec>& rows, const Vec& v) {
    std::vector<Rational> out;
    out.reserve(rows.size());
    for (const Vec& r : rows) out.push_back(dot(r, v));
    return Vec(std::move(out));
}

}  // namespace

Polytope apply_linear_map(const Polytope& p, const std::vector<Vec>& matrix_rows) {
    const int d = p.ambient_dim();
    if (static_cast<int>(matrix_rows.size()) != d) {
        throw DimensionMismatch("apply_linear_map: matrix does not match the ambient dimension");
    }
    LatticeBuilder b = LatticeBuilder::from(p.lattice);
    for (const FaceNode& n : p.lattice.nodes()) {
        if (n.interior_point) b.set_interior_point(n.id, mat_vec(matrix_rows, *n.interior_point));
    }
    return Polytope{b.freeze(), p.label};
}

Polytope generic_rotate(const Polytope& p, uint64_t seed) {
    return apply_linear_map(p, rotation_matrix(p.ambient_dim(), seed));
}

ConvexPolygon random_convex_polygon(int n_edges, uint64_t seed, long coordinate_bound) {
    if (n_edges < 3) throw InvalidArgument("random_convex_polygon: need at least 3 edges");
    if (coordinate_bound < 4) throw InvalidArgument("random_convex_polygon: bound too small");

    for (uint64_t attempt = 0; attempt < 32; ++attempt) {
        SplitMix64 rng(seed ^ (attempt * 0x9e3779b97f4a7c15ULL));
        const int n = n_edges;

        // Random edge vectors summing to zero: split two sorted coordinate
        // samples into opposite monotone chains, then pair the deltas.
        auto deltas = [&](void) {
            std::vector<long> xs;
            xs.reserve(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) xs.push_back(rng.pick(0, coordinate_bound));
            std::sort(xs.begin(), xs.end());
            std::vector<long> dx;
            long last_up = xs.front(), last_down = xs.front();
            for (int i = 1; i < n - 1; ++i) {
                if (rng.next() & 1) {
                    dx.push_back(xs[static_cast<size_t>(i)] - last_up);
                    last_up = xs[static_cast<size_t>(i)];
                } else {
                    dx.push_back(last_down - xs[static_cast<size_t>(i)]);
                    last_down = xs[static_cast<size_t>(i)];
                }
            }
            dx.push_back(xs.back() - last_up);
            dx.push_back(last_down - xs.back());
            return dx;
        };
        std::vector<long> dx = deltas();
        std::vector<long> dy = deltas();
        for (size_t i = dy.size(); i > 1; --i) {
            std::swap(dy[i - 1], dy[static_cast<size_t>(rng.pick(0, static_cast<long>(i) - 1))]);
        }

        std::vector<Vec> vectors;
        for (int i = 0; i < n; ++i) {
            if (dx[static_cast<size_t>(i)] == 0 && dy[static_cast<size_t>(i)] == 0) continue;
            vectors.push_back(Vec{Rational(dx[static_cast<size_t>(i)]),
                                  Rational(dy[static_cast<size_t>(i)])});
        }
        if (vectors.size() < 3) continue;

        std::sort(vectors.begin(), vectors.end(), [](const Vec& a, const Vec& b) {
            return compare_directions_from(Vec{Rational(1), Rational(0)}, a, b) < 0;
        });
        // Merge runs of codirectional vectors.
        std::vector<Vec> edges;
        for (const Vec& v : vectors) {
            if (!edges.empty() &&
                compare_directions_from(Vec{Rational(1), Rational(0)}, edges.back(), v) == 0) {
                edges.back() = edges.back() + v;
            } else {
                edges.push_back(v);
            }
        }
        if (edges.size() < 3) continue;

        std::vector<Vec> ring;
        ring.reserve(edges.size());
        Vec pos = Vec::zero(2);
        for (const Vec& e : edges) {
            ring.push_back(pos);
            pos = pos + e;
        }
        try {
            return ConvexPolygon(std::move(ring));
        } catch (const ValidationFailure&) {
            continue;
        }
    }
    throw GenerationFailed("random_convex_polygon: no valid draw after 32 attempts");
}

}  // namespace minksum
