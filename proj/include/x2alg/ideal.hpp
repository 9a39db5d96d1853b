#pragma once

#include <vector>

#include "x2alg/algebra.hpp"
#include "x2alg/morphism.hpp"

namespace x2alg {

// Ideal of `parent`, stored as the canonical row basis of its span.
// Closed under multiplication by every parent basis vector.
struct Ideal {
    FiniteAlgebra parent;
    Mat span;

    std::size_t dim() const { return span.rows(); }
    bool contains(const Vec& v) const { return span_contains(span, v); }
    bool operator==(const Ideal&) const = default;
};

bool is_ideal_span(const FiniteAlgebra& a, const Mat& span);

// Smallest ideal containing the generators; fixpoint closure, at most dim steps.
Ideal ideal_generated(const FiniteAlgebra& a, const std::vector<Vec>& gens);

// Kernel of a morphism packaged as an ideal of the source.
Ideal kernel_ideal(const Morphism& f);

// Quotient algebra A/I with deterministic basis: the lexicographically first
// set of standard basis vectors completing the ideal span.
// `projection` is the canonical epi A -> A/I; `section` embeds the chosen
// representatives back into A (projection * section = id).
struct Quotient {
    FiniteAlgebra algebra;
    Morphism projection;
    Mat section;                       // parent.dim x quotient.dim
    std::vector<std::size_t> complement; // indices of representative basis vectors

    Vec reduce(const Vec& v) const { return projection.apply(v); }
    Vec lift(const Vec& q) const { return section.apply(q); }
};

// Throws NotAnIdeal if the span is not closed under multiplication by A.
Quotient quotient_by_ideal(const FiniteAlgebra& a, const Ideal& ideal);

} // namespace x2alg
