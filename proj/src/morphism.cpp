#include "x2alg/morphism.hpp"

#include "x2alg/errors.hpp"

namespace x2alg {

Morphism mk_morphism(const FiniteAlgebra& source, const FiniteAlgebra& target, Mat matrix) {
    if (source.prime() != target.prime())
        fail(Errc::shape_mismatch, "morphism endpoints have different primes");
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim() ||
        matrix.prime() != source.prime())
        fail(Errc::shape_mismatch, "morphism matrix must be target.dim x source.dim");

    Morphism f{source, target, std::move(matrix)};
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = 0; j < source.dim(); ++j) {
            Vec lhs = f.apply(source.mul_basis(i, j));
            Vec rhs = target.mul(f.matrix.col(i), f.matrix.col(j));
            if (lhs != rhs)
                fail(Errc::not_multiplicative,
                     "f(x_" + std::to_string(i) + " x_" + std::to_string(j) +
                         ") != f(x_" + std::to_string(i) + ") f(x_" + std::to_string(j) + ")",
                     {i, j});
        }
    return f;
}

bool multiplicative_matrix(const FiniteAlgebra& source, const FiniteAlgebra& target,
                           const Mat& m) {
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = i; j < source.dim(); ++j)
            if (m.apply(source.mul_basis(i, j)) != target.mul(m.col(i), m.col(j)))
                return false;
    return true;
}

Morphism identity_morphism(const FiniteAlgebra& a) {
    return Morphism{a, a, Mat::identity(a.prime(), a.dim())};
}

Morphism zero_morphism(const FiniteAlgebra& source, const FiniteAlgebra& target) {
    return Morphism{source, target, Mat(source.prime(), target.dim(), source.dim())};
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!f.target.same_structure(g.source))
        fail(Errc::endpoint_mismatch, "compose: inner endpoints differ");
    return Morphism{f.source, g.target, g.matrix * f.matrix};
}

KernelImage kernel_image(const Morphism& f) {
    KernelImage ki;
    ki.kernel = f.matrix.nullspace_basis();
    ki.image = f.matrix.transpose().row_basis();
    ki.is_mono = ki.kernel.rows() == 0;
    ki.is_epi = ki.image.rows() == f.target.dim();
    return ki;
}

bool is_mono(const Morphism& f) { return f.matrix.nullspace_basis().rows() == 0; }
bool is_epi(const Morphism& f) { return f.matrix.rank() == f.target.dim(); }

} // namespace x2alg
