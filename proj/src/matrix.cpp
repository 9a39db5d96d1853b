#include "x2alg/matrix.hpp"

#include "x2alg/errors.hpp"

namespace x2alg {

Mat Mat::identity(unsigned p, std::size_t n) {
    Mat m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

Mat Mat::from_rows(unsigned p, std::size_t cols, const std::vector<Vec>& rows) {
    Mat m(p, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            fail(Errc::shape_mismatch, "row length does not match column count");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j] % p;
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j] % p_;
}

void Mat::set_col(std::size_t j, const Vec& v) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i] % p_;
}

bool Mat::operator<(const Mat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return a_ < o.a_;
}

bool Mat::is_zero() const {
    for (unsigned x : a_)
        if (x) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_ || p_ != o.p_)
        fail(Errc::shape_mismatch, "matrix product shape/prime mismatch");
    Mat r(p_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            unsigned aik = at(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = fp::add(r.at(i, j), fp::mul(aik, o.at(k, j), p_), p_);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        fail(Errc::shape_mismatch, "matrix sum shape/prime mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp::add(r.a_[i], o.a_[i], p_);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        fail(Errc::shape_mismatch, "matrix difference shape/prime mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp::sub(r.a_[i], o.a_[i], p_);
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_)
        fail(Errc::shape_mismatch, "matrix apply length mismatch");
    Vec r(rows_, 0);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!v[j]) continue;
        for (std::size_t i = 0; i < rows_; ++i)
            r[i] = fp::add(r[i], fp::mul(at(i, j), v[j] % p_, p_), p_);
    }
    return r;
}

Mat Mat::transpose() const {
    Mat r(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::rref(std::vector<std::size_t>* pivots) const {
    Mat m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && m.at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
        unsigned ipiv = fp::inv(m.at(r, c), p_);
        for (std::size_t j = 0; j < cols_; ++j) m.at(r, j) = fp::mul(m.at(r, j), ipiv, p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            unsigned f = m.at(i, c);
            for (std::size_t j = 0; j < cols_; ++j)
                m.at(i, j) = fp::sub(m.at(i, j), fp::mul(f, m.at(r, j), p_), p_);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

std::size_t Mat::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

Mat Mat::row_basis() const {
    std::vector<std::size_t> piv;
    Mat m = rref(&piv);
    Mat r(p_, piv.size(), cols_);
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = m.at(i, j);
    return r;
}

Mat Mat::nullspace_basis() const {
    std::vector<std::size_t> piv;
    Mat m = rref(&piv);
    std::vector<bool> is_piv(cols_, false);
    for (std::size_t c : piv) is_piv[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_piv[f]) continue;
        Vec v(cols_, 0);
        v[f] = 1 % p_;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = fp::neg(m.at(i, f), p_);
        basis.push_back(std::move(v));
    }
    return from_rows(p_, cols_, basis).row_basis();
}

std::optional<Vec> Mat::solve(const Vec& rhs) const {
    if (rhs.size() != rows_)
        fail(Errc::shape_mismatch, "solve rhs length mismatch");
    Mat aug(p_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = rhs[i] % p_;
    }
    std::vector<std::size_t> piv;
    Mat m = aug.rref(&piv);
    for (std::size_t i = 0; i < piv.size(); ++i)
        if (piv[i] == cols_) return std::nullopt;
    Vec x(cols_, 0);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m.at(i, cols_);
    return x;
}

std::optional<Mat> Mat::solve_matrix(const Mat& rhs) const {
    if (rhs.rows() != rows_ || rhs.prime() != p_)
        fail(Errc::shape_mismatch, "solve_matrix rhs shape/prime mismatch");
    Mat x(p_, cols_, rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        auto xi = solve(rhs.col(j));
        if (!xi) return std::nullopt;
        x.set_col(j, *xi);
    }
    return x;
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_)
        fail(Errc::shape_mismatch, "inverse of non-square matrix");
    return solve_matrix(identity(p_, rows_));
}

std::vector<Vec> all_vectors(unsigned prime, std::size_t len) {
    std::vector<Vec> out;
    Vec v(len, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= prime;
    for (std::size_t t = 0; t < total; ++t) {
        out.push_back(v);
        for (std::size_t i = 0; i < len; ++i) {
            if (++v[i] < prime) break;
            v[i] = 0;
        }
    }
    return out;
}

bool span_contains(const Mat& span, const Vec& v) {
    bool nonzero = false;
    for (unsigned x : v)
        if (x % span.prime()) nonzero = true;
    if (!nonzero) return true;
    Mat ext(span.prime(), span.rows() + 1, span.cols());
    for (std::size_t i = 0; i < span.rows(); ++i) ext.set_row(i, span.row(i));
    ext.set_row(span.rows(), v);
    return ext.rank() == span.rows();
}

bool span_contains_all(const Mat& span, const Mat& other) {
    for (std::size_t i = 0; i < other.rows(); ++i)
        if (!span_contains(span, other.row(i))) return false;
    return true;
}

Mat span_sum(const Mat& a, const Mat& b) {
    Mat ext(a.prime(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) ext.set_row(i, a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) ext.set_row(a.rows() + i, b.row(i));
    return ext.row_basis();
}

Mat span_of(unsigned p, std::size_t ncols, const std::vector<Vec>& vecs) {
    return Mat::from_rows(p, ncols, vecs).row_basis();
}

std::optional<Vec> coords_in(const Mat& basis, const Vec& v) {
    return basis.transpose().solve(v);
}

} // namespace x2alg
