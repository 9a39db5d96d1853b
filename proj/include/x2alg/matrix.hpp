#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "x2alg/fp.hpp"

namespace x2alg {

// Dense matrix over F_p. Entries are always reduced.
// Zero-dimensional shapes (0 x n, n x 0) are valid everywhere.
class Mat {
public:
    Mat() = default;
    Mat(unsigned p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(unsigned p, std::size_t n);
    static Mat from_rows(unsigned p, std::size_t cols, const std::vector<Vec>& rows);

    unsigned prime() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    unsigned at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    unsigned& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_row(std::size_t i, const Vec& v);
    void set_col(std::size_t j, const Vec& v);

    bool operator==(const Mat&) const = default;
    // Lexicographic on (rows, cols, entries); gives enumeration results a canonical order.
    bool operator<(const Mat& o) const;

    bool is_zero() const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Vec apply(const Vec& v) const;
    Mat transpose() const;

    // Row-reduced echelon form; pivot column indices appended to *pivots if given.
    Mat rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;

    // Canonical basis of the row space: RREF with zero rows dropped.
    Mat row_basis() const;

    // Canonical basis (as rows, in row_basis form) of { x : A x = 0 }.
    Mat nullspace_basis() const;

    // One solution of A x = rhs (free variables zero), or nullopt.
    std::optional<Vec> solve(const Vec& rhs) const;
    // Columnwise solve: X with A X = rhs.
    std::optional<Mat> solve_matrix(const Mat& rhs) const;
    // Inverse of a square matrix, nullopt if singular.
    std::optional<Mat> inverse() const;

private:
    unsigned p_ = 2;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<unsigned> a_;
};

// All p^len vectors of the given length, in odometer order (first index fastest).
std::vector<Vec> all_vectors(unsigned prime, std::size_t len);

// Subspaces are represented by their canonical row-basis matrix (see Mat::row_basis).
bool span_contains(const Mat& span, const Vec& v);
bool span_contains_all(const Mat& span, const Mat& other);
Mat span_sum(const Mat& a, const Mat& b);
Mat span_of(unsigned p, std::size_t ncols, const std::vector<Vec>& vecs);
// Coordinates of v in the given row basis, nullopt if v is outside the span.
std::optional<Vec> coords_in(const Mat& basis, const Vec& v);

} // namespace x2alg
