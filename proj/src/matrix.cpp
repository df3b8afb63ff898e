#include "pirlrc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace pirlrc {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, Vec entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw std::invalid_argument("entry count != rows*cols");
    for (Elem e : a_) field_.check_element(e);
}

void Matrix::set(std::size_t r, std::size_t c, Elem v) {
    field_.check_element(v);
    a_[r * cols_ + c] = v;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

Vec Matrix::col(std::size_t c) const {
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

RrefResult Matrix::rref() const {
    const Field& f = field_;
    Matrix r = *this;
    // identity transform
    Matrix t(f, rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) t.set(i, i, 1);

    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
        std::size_t sel = lead;
        while (sel < rows_ && r.at(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != lead) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(r.a_[sel * cols_ + j], r.a_[lead * cols_ + j]);
            for (std::size_t j = 0; j < rows_; ++j) std::swap(t.a_[sel * rows_ + j], t.a_[lead * rows_ + j]);
        }
        Elem piv = r.at(lead, c);
        Elem ipiv = f.inv(piv);
        for (std::size_t j = 0; j < cols_; ++j) r.a_[lead * cols_ + j] = f.mul(r.at(lead, j), ipiv);
        for (std::size_t j = 0; j < rows_; ++j) t.a_[lead * rows_ + j] = f.mul(t.at(lead, j), ipiv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == lead) continue;
            Elem factor = r.at(i, c);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                r.a_[i * cols_ + j] = f.sub(r.at(i, j), f.mul(factor, r.at(lead, j)));
            for (std::size_t j = 0; j < rows_; ++j)
                t.a_[i * rows_ + j] = f.sub(t.at(i, j), f.mul(factor, t.at(lead, j)));
        }
        pivots.push_back(c);
        ++lead;
    }
    return RrefResult{std::move(r), pivots.size(), std::move(pivots), std::move(t)};
}

std::size_t Matrix::rank() const { return rref().rank; }

MembershipCertificate Matrix::row_space_membership(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length != matrix cols");
    const Field& f = field_;
    RrefResult rr = rref();
    Vec residual = v;
    Vec u(rows_, 0);
    for (std::size_t idx = 0; idx < rr.rank; ++idx) {
        std::size_t pc = rr.pivot_columns[idx];
        Elem c = residual[pc];
        if (c == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            residual[j] = f.sub(residual[j], f.mul(c, rr.rref.at(idx, j)));
        for (std::size_t j = 0; j < rows_; ++j)
            u[j] = f.add(u[j], f.mul(c, rr.transform.at(idx, j)));
    }
    for (Elem e : residual)
        if (e != 0) return MembershipCertificate{false, {}};
    return MembershipCertificate{true, std::move(u)};
}

Matrix Matrix::null_space_basis() const {
    const Field& f = field_;
    RrefResult rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t pc : rr.pivot_columns) is_pivot[pc] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(f, free_cols.size(), cols_);
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        std::size_t fc = free_cols[b];
        basis.set(b, fc, 1);
        for (std::size_t idx = 0; idx < rr.rank; ++idx)
            basis.set(b, rr.pivot_columns[idx], f.neg(rr.rref.at(idx, fc)));
    }
    return basis;
}

Matrix Matrix::permute_columns(const std::vector<std::size_t>& pi) const {
    if (pi.size() != cols_) throw std::invalid_argument("permutation size != cols");
    std::vector<bool> seen(cols_, false);
    for (std::size_t img : pi) {
        if (img >= cols_ || seen[img]) throw std::invalid_argument("not a permutation of the columns");
        seen[img] = true;
    }
    Matrix out(field_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(r, pi[c]));
    return out;
}

Vec Matrix::mul_vec(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length != cols");
    const Field& f = field_;
    Vec out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        Elem acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = f.add(acc, f.mul(at(r, c), x[c]));
        out[r] = acc;
    }
    return out;
}

Vec Matrix::vec_mul(const Vec& u) const {
    if (u.size() != rows_) throw std::invalid_argument("vector length != rows");
    const Field& f = field_;
    Vec out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (u[r] == 0) continue;
        for (std::size_t c = 0; c < cols_; ++c) out[c] = f.add(out[c], f.mul(u[r], at(r, c)));
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (below.cols_ != cols_ || below.field_ != field_)
        throw std::invalid_argument("vstack shape or field mismatch");
    Vec entries = a_;
    entries.insert(entries.end(), below.a_.begin(), below.a_.end());
    return Matrix(field_, rows_ + below.rows_, cols_, std::move(entries));
}

Matrix Matrix::submatrix_cols(const std::vector<std::size_t>& cols) const {
    Matrix out(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= cols_) throw std::invalid_argument("column index out of range");
            out.set(r, j, at(r, cols[j]));
        }
    return out;
}

Matrix Matrix::row_basis() const {
    RrefResult rr = rref();
    Vec entries;
    entries.reserve(rr.rank * cols_);
    for (std::size_t r = 0; r < rr.rank; ++r) {
        Vec rv = rr.rref.row(r);
        entries.insert(entries.end(), rv.begin(), rv.end());
    }
    return Matrix(field_, rr.rank, cols_, std::move(entries));
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix unit_selector(const Field& field, const std::vector<std::size_t>& indices, std::size_t cols) {
    std::vector<bool> seen(cols, false);
    Matrix out(field, indices.size(), cols);
    for (std::size_t j = 0; j < indices.size(); ++j) {
        std::size_t idx = indices[j];
        if (idx >= cols) throw std::invalid_argument("selector index out of range");
        if (seen[idx]) throw std::invalid_argument("repeated selector index");
        seen[idx] = true;
        out.set(j, idx, 1);
    }
    return out;
}

}  // namespace pirlrc
