#pragma once

#include "x2alg/algebra.hpp"
#include "x2alg/matrix.hpp"

namespace x2alg {

struct Ideal; // ideal.hpp

// Linear multiplicative map between algebras over the same prime field.
// matrix is target.dim x source.dim, applied to coefficient columns.
struct Morphism {
    FiniteAlgebra source, target;
    Mat matrix;

    Vec apply(const Vec& v) const { return matrix.apply(v); }
    bool operator==(const Morphism&) const = default;
};

// Validates shapes and multiplicativity f(x_i x_j) = f(x_i) f(x_j).
// Throws NotMultiplicative(i,j) naming the first offending pair.
Morphism mk_morphism(const FiniteAlgebra& source, const FiniteAlgebra& target, Mat matrix);

// Non-throwing multiplicativity test; shapes are the caller's responsibility.
bool multiplicative_matrix(const FiniteAlgebra& source, const FiniteAlgebra& target,
                           const Mat& m);

Morphism identity_morphism(const FiniteAlgebra& a);
Morphism zero_morphism(const FiniteAlgebra& source, const FiniteAlgebra& target);

// g after f; endpoints must be structurally compatible.
Morphism compose(const Morphism& g, const Morphism& f);

struct KernelImage {
    Mat kernel;  // canonical row basis; an ideal of the source
    Mat image;   // canonical row basis of the image subspace of the target
    bool is_mono = false;
    bool is_epi = false;
};

KernelImage kernel_image(const Morphism& f);
bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);

} // namespace x2alg
