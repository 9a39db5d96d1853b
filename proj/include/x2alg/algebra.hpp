#pragma once

#include <optional>
#include <string>
#include <vector>

#include "x2alg/matrix.hpp"

namespace x2alg {

// Finite-dimensional commutative associative algebra over F_p, given by
// structure constants c[i][j][k]: x_i * x_j = sum_k c[i][j][k] x_k.
// A unit element is optional designated data, not inferred.
// The zero algebra (dim 0) is valid everywhere.
class FiniteAlgebra {
public:
    FiniteAlgebra() = default;

    unsigned prime() const { return p_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const std::optional<Vec>& unit() const { return unit_; }

    unsigned mul_c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<unsigned>& mul_tensor() const { return c_; }

    Vec mul_basis(std::size_t i, std::size_t j) const;
    Vec mul(const Vec& a, const Vec& b) const;
    Vec add(const Vec& a, const Vec& b) const;
    Vec sub(const Vec& a, const Vec& b) const;
    Vec scale(unsigned s, const Vec& a) const;
    Vec zero() const { return Vec(dim_, 0); }
    Vec basis_vec(std::size_t i) const;

    // Multiplication-by-a as a matrix acting on coefficient vectors.
    Mat mult_op(const Vec& a) const;

    // Span of all products x_i x_j (the subspace A^2).
    Mat products_span() const;
    // { a : a * A = 0 }.
    Mat annihilator() const;

    // Structure equality; basis names are labels and do not participate.
    bool same_structure(const FiniteAlgebra& o) const {
        return p_ == o.p_ && dim_ == o.dim_ && c_ == o.c_ && unit_ == o.unit_;
    }
    bool operator==(const FiniteAlgebra&) const = default;

    friend FiniteAlgebra mk_algebra(unsigned prime, std::size_t dim,
                                    const std::vector<unsigned>& mul,
                                    std::vector<std::string> basis_names,
                                    std::optional<Vec> unit);

private:
    unsigned p_ = 2;
    std::size_t dim_ = 0;
    std::vector<unsigned> c_;  // dim^3 flat tensor, [i][j][k]
    std::vector<std::string> names_;
    std::optional<Vec> unit_;
};

// Validates prime, commutativity, associativity and the designated unit.
// Throws NotPrime / NotCommutative(i,j) / NotAssociative(i,j,k) / BadUnit.
// `mul` is the flat [i][j][k] tensor (dim^3 entries), reduced mod prime on entry.
FiniteAlgebra mk_algebra(unsigned prime, std::size_t dim,
                         const std::vector<unsigned>& mul,
                         std::vector<std::string> basis_names = {},
                         std::optional<Vec> unit = std::nullopt);

std::vector<std::string> default_names(std::size_t dim);

FiniteAlgebra zero_algebra(unsigned prime);

} // namespace x2alg
