#include "x2alg/algebra.hpp"

#include "x2alg/errors.hpp"
#include "x2alg/report.hpp"

namespace x2alg {

Vec FiniteAlgebra::mul_basis(std::size_t i, std::size_t j) const {
    Vec v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = mul_c(i, j, k);
    return v;
}

Vec FiniteAlgebra::mul(const Vec& a, const Vec& b) const {
    Vec r(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!b[j]) continue;
            unsigned f = fp::mul(a[i], b[j], p_);
            for (std::size_t k = 0; k < dim_; ++k)
                r[k] = fp::add(r[k], fp::mul(f, mul_c(i, j, k), p_), p_);
        }
    }
    return r;
}

Vec FiniteAlgebra::add(const Vec& a, const Vec& b) const {
    Vec r(dim_);
    for (std::size_t k = 0; k < dim_; ++k) r[k] = fp::add(a[k], b[k], p_);
    return r;
}

Vec FiniteAlgebra::sub(const Vec& a, const Vec& b) const {
    Vec r(dim_);
    for (std::size_t k = 0; k < dim_; ++k) r[k] = fp::sub(a[k], b[k], p_);
    return r;
}

Vec FiniteAlgebra::scale(unsigned s, const Vec& a) const {
    Vec r(dim_);
    for (std::size_t k = 0; k < dim_; ++k) r[k] = fp::mul(s % p_, a[k], p_);
    return r;
}

Vec FiniteAlgebra::basis_vec(std::size_t i) const {
    Vec v(dim_, 0);
    v[i] = 1 % p_;
    return v;
}

Mat FiniteAlgebra::mult_op(const Vec& a) const {
    Mat m(p_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_col(j, mul(a, basis_vec(j)));
    return m;
}

Mat FiniteAlgebra::products_span() const {
    std::vector<Vec> prods;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) prods.push_back(mul_basis(i, j));
    return span_of(p_, dim_, prods);
}

Mat FiniteAlgebra::annihilator() const {
    // Stack the maps a -> a*x_j; annihilator is the common kernel.
    Mat sys(p_, dim_ * dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
            for (std::size_t i = 0; i < dim_; ++i)
                sys.at(j * dim_ + k, i) = mul_c(i, j, k);
    return sys.nullspace_basis();
}

std::vector<std::string> default_names(std::size_t dim) {
    std::vector<std::string> n;
    n.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) n.push_back("e" + std::to_string(i));
    return n;
}

FiniteAlgebra mk_algebra(unsigned prime, std::size_t dim,
                         const std::vector<unsigned>& mul,
                         std::vector<std::string> basis_names,
                         std::optional<Vec> unit) {
    if (!fp::is_prime(prime))
        fail(Errc::not_prime, "characteristic " + std::to_string(prime) + " is not prime");
    if (mul.size() != dim * dim * dim)
        fail(Errc::shape_mismatch, "multiplication tensor must have dim^3 entries");
    if (basis_names.empty()) basis_names = default_names(dim);
    if (basis_names.size() != dim)
        fail(Errc::shape_mismatch, "basis name count does not match dim");

    FiniteAlgebra a;
    a.p_ = prime;
    a.dim_ = dim;
    a.c_.resize(mul.size());
    for (std::size_t t = 0; t < mul.size(); ++t) a.c_[t] = mul[t] % prime;
    a.names_ = std::move(basis_names);

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (a.mul_c(i, j, k) != a.mul_c(j, i, k))
                    fail(Errc::not_commutative,
                         "x_" + std::to_string(i) + " * x_" + std::to_string(j) +
                             " != x_" + std::to_string(j) + " * x_" + std::to_string(i),
                         {i, j});

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                Vec lhs = a.mul(a.mul_basis(i, j), a.basis_vec(k));
                Vec rhs = a.mul(a.basis_vec(i), a.mul_basis(j, k));
                if (lhs != rhs)
                    fail(Errc::not_associative,
                         "(x_" + std::to_string(i) + " x_" + std::to_string(j) + ") x_" +
                             std::to_string(k) + " != x_" + std::to_string(i) + " (x_" +
                             std::to_string(j) + " x_" + std::to_string(k) + ")",
                         {i, j, k});
            }

    if (unit) {
        if (unit->size() != dim)
            fail(Errc::bad_unit, "unit vector length does not match dim");
        Vec e(dim);
        for (std::size_t k = 0; k < dim; ++k) e[k] = (*unit)[k] % prime;
        for (std::size_t i = 0; i < dim; ++i)
            if (a.mul(e, a.basis_vec(i)) != a.basis_vec(i))
                fail(Errc::bad_unit,
                     "designated unit does not fix basis vector " + std::to_string(i), {i});
        a.unit_ = std::move(e);
    }
    return a;
}

FiniteAlgebra zero_algebra(unsigned prime) {
    return mk_algebra(prime, 0, {}, {}, std::nullopt);
}

} // namespace x2alg
