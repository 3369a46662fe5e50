#ifndef MINKSUM_ERRORS_HPP
#define MINKSUM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace minksum {

// Base class for every error thrown by the kernel.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct GenerationFailed : Error {
    using Error::Error;
};

struct NotFullDimensional : Error {
    using Error::Error;
};

// One witness explaining why an input pair/tuple violates the
// non-degeneracy assumption the d-dimensional pipeline relies on.
struct DegeneracyWitness {
    enum class Kind {
        tied_support,    // a support direction is maximized by >= 2 vertices
        deficient_span,  // combined affine bases of a candidate tuple are dependent
        zero_side_sign,  // a superface interior point lies exactly on a test hyperplane
    };

    Kind kind;
    // One face id per input polytope slot; -1 marks slots not involved.
    std::vector<int> face_ids;
    // For tied_support: the ids of the tied vertices.
    std::vector<int> tied_vertex_ids;
    std::string detail;

    std::string to_string() const;
};

struct DegeneracyReport {
    // Per-kind cap, so mass degeneracies of one kind do not crowd the
    // others out of the report.
    static constexpr std::size_t max_witnesses_per_kind = 24;

    std::vector<DegeneracyWitness> witnesses;
    std::size_t dropped = 0;  // witnesses beyond the caps

    bool empty() const { return witnesses.empty(); }
    void add(DegeneracyWitness w);
    std::string to_string() const;

  private:
    std::size_t kind_counts_[3] = {0, 0, 0};
};

// Thrown by support-vertex computation when the maximum is not unique.
struct DegenerateTie : Error {
    std::vector<int> tied_vertex_ids;
    DegenerateTie(const std::string& what, std::vector<int> tied)
        : Error(what), tied_vertex_ids(std::move(tied)) {}
};

// Thrown when vectors expected to be independent are not.
struct DegenerateSpan : Error {
    using Error::Error;
};

// Thrown when a strict side test evaluates to zero.
struct ZeroSideSign : Error {
    using Error::Error;
};

// Aggregate failure of a whole Minkowski-sum run on degenerate input.
struct DegenerateInput : Error {
    DegeneracyReport report;
    explicit DegenerateInput(DegeneracyReport r)
        : Error("degenerate input:\n" + r.to_string()), report(std::move(r)) {}
};

struct ValidationFailure : Error {
    std::vector<std::string> violations;
    explicit ValidationFailure(std::vector<std::string> v)
        : Error(join(v)), violations(std::move(v)) {}

  private:
    static std::string join(const std::vector<std::string>& v);
};

}  // namespace minksum

#endif
