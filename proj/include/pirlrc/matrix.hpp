#pragma once

#include <cstddef>
#include <vector>

#include "pirlrc/field.hpp"

namespace pirlrc {

using Vec = std::vector<Elem>;

/// Result of a row-space membership query. When member is true,
/// coefficients * A equals the queried vector exactly; free variables
/// are canonicalized to zero.
struct MembershipCertificate {
    bool member = false;
    Vec coefficients;  // length = rows of A
};

struct RrefResult;

/// Dense matrix over GF(q). Immutable value semantics; all operations pure.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    Matrix(Field field, std::size_t rows, std::size_t cols, Vec entries);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem v);

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    RrefResult rref() const;
    std::size_t rank() const;

    /// Certificate for v in the row space, with explicit combination coefficients.
    MembershipCertificate row_space_membership(const Vec& v) const;

    /// Rows form a basis of { x : A x^T = 0 }; row count = cols - rank.
    Matrix null_space_basis() const;

    /// Output column i equals input column pi[i] (pull convention).
    Matrix permute_columns(const std::vector<std::size_t>& pi) const;

    /// A * x^T for a length-cols vector x.
    Vec mul_vec(const Vec& x) const;
    /// u * A for a length-rows vector u.
    Vec vec_mul(const Vec& u) const;

    Matrix vstack(const Matrix& below) const;
    Matrix submatrix_cols(const std::vector<std::size_t>& cols) const;

    /// Keeps a row basis: the nonzero rows of the RREF.
    Matrix row_basis() const;

    bool operator==(const Matrix& o) const;

private:
    Field field_;
    std::size_t rows_, cols_;
    Vec a_;
};

struct RrefResult {
    Matrix rref;
    std::size_t rank;
    std::vector<std::size_t> pivot_columns;
    /// transform * input = rref
    Matrix transform;
};

/// |indices| x cols selector matrix whose j-th row is the unit vector
/// at indices[j]. Indices are 0-based, distinct, in range.
Matrix unit_selector(const Field& field, const std::vector<std::size_t>& indices, std::size_t cols);

}  // namespace pirlrc
