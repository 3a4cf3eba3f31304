#ifndef QCODES_LINEAR_CODE_HPP
#define QCODES_LINEAR_CODE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qcodes/field.hpp"

namespace qcodes {

/// Dense row-major matrix of field element codes.
class Matrix {
  public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elt at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Elt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Elt* row(std::size_t r) const { return a_.data() + r * cols_; }
    Elt* row(std::size_t r) { return a_.data() + r * cols_; }
    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    /// In-place reduction to the (unique) reduced row echelon form; returns
    /// the rank. Rows beyond the rank are zero and can be dropped by the
    /// caller. Uses a bit-packed elimination path over F_2.
    std::size_t rref();
    void drop_rows_below(std::size_t rank);

  private:
    const Field* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elt> a_;
};

/// Linear [n, k] code over a small field, held as a canonical (rref, full
/// row rank) generator matrix, so two codes are equal iff their row spaces
/// are.
class LinearCode {
  public:
    LinearCode() = default;
    LinearCode(const Field& f, std::size_t n) : field_(&f), n_(n), gen_(f, 0, n) {}

    const Field& field() const { return *field_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return gen_.rows(); }
    const Matrix& gen() const { return gen_; }

    static LinearCode from_rows(const Field& f, const std::vector<std::vector<Elt>>& rows);
    static LinearCode from_matrix(Matrix m);

    bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }

  private:
    const Field* field_ = nullptr;
    std::size_t n_ = 0;
    Matrix gen_;
};

LinearCode euclidean_dual(const LinearCode& c);
/// Requires the field size to be a perfect square l^2; the dual under
/// <x,y> = sum x_i y_i^l. Computed as the Euclidean dual of the entrywise
/// l-th-power code.
LinearCode hermitian_dual(const LinearCode& c);
bool is_subcode(const LinearCode& inner, const LinearCode& outer);

/// Exact Gram checks used by tests and duality verification: every pairwise
/// inner product between rows of `a` and rows of `b` vanishes.
bool gram_is_zero_euclidean(const LinearCode& a, const LinearCode& b);
bool gram_is_zero_hermitian(const LinearCode& a, const LinearCode& b);

/// Cyclic code of length n as a monic generator polynomial dividing x^n - 1,
/// with its defining set (exponents whose root-of-unity powers are roots of
/// the generator).
struct CyclicCode {
    const Field* field = nullptr;
    std::size_t n = 0;
    std::vector<Elt> genpoly;  // ascending coefficients, monic
    std::vector<std::uint64_t> defining_set;
    std::size_t dim = 0;
};

/// Validates divisibility and computes the defining set by evaluating at the
/// powers of a fixed primitive n-th root of unity (in the canonical splitting
/// field). If `known_defining_set` is provided it is validated structurally
/// (size = degree) and used instead of root evaluation, which keeps large
/// binary constructions cheap.
CyclicCode cyclic_from_genpoly(const Field& f, std::size_t n, std::vector<Elt> genpoly,
                               std::optional<std::vector<std::uint64_t>> known_defining_set =
                                   std::nullopt);
LinearCode cyclic_to_linear(const CyclicCode& c);

struct DistanceResult {
    bool exact = false;
    std::uint64_t weight = 0;       // exact distance, or best sampled upper bound
    std::uint64_t words_seen = 0;   // projective classes enumerated / samples drawn
};

/// Exact minimum distance when the projective codeword count fits in
/// `budget`; otherwise a sampled upper bound with exact = false. k = 0 is an
/// error (EmptyCode).
DistanceResult min_distance(const LinearCode& c, std::uint64_t budget);

/// Minimum weight among `trials` seeded random nonzero codewords: an upper
/// bound on the distance and a probabilistic certificate that no light word
/// slipped below a claimed bound. Deterministic in (seed, trials), whatever
/// the worker count.
std::uint64_t sample_weights(const LinearCode& c, std::uint64_t trials, std::uint64_t seed);

// Polynomial helpers over small fields (ascending coefficients).
std::vector<Elt> poly_mul(const Field& f, const std::vector<Elt>& a, const std::vector<Elt>& b);
std::pair<std::vector<Elt>, std::vector<Elt>> poly_divmod(const Field& f, std::vector<Elt> a,
                                                          const std::vector<Elt>& b);

}  // namespace qcodes

#endif
