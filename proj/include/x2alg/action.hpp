#pragma once

#include <vector>

#include "x2alg/algebra.hpp"
#include "x2alg/report.hpp"

namespace x2alg {

// Action of `actor` on `acted`, tensor a[i][j][k]: p_i . m_j = sum_k a[i][j][k] m_k.
// Construction checks shapes only; axiom violations are data, reported by check_action.
struct Action {
    FiniteAlgebra actor, acted;
    std::vector<Mat> ops; // ops[i] is acted.dim x acted.dim, column j = p_i . m_j

    Vec eval_basis(std::size_t i, std::size_t j) const { return ops[i].col(j); }
    // Bilinear extension p . m.
    Vec eval(const Vec& p, const Vec& m) const;
    // The linear operator m -> p . m.
    Mat op_of(const Vec& p) const;

    unsigned tensor_c(std::size_t i, std::size_t j, std::size_t k) const {
        return ops[i].at(k, j);
    }
    bool is_zero() const;
    bool operator==(const Action&) const = default;
};

Action mk_action(const FiniteAlgebra& actor, const FiniteAlgebra& acted,
                 const std::vector<unsigned>& tensor);

Action zero_action(const FiniteAlgebra& actor, const FiniteAlgebra& acted);
// An algebra acting on itself by multiplication.
Action multiplication_action(const FiniteAlgebra& a);
// The action of A on an ideal of itself by multiplication, in the ideal basis.
Action multiplication_action_on(const FiniteAlgebra& a, const FiniteAlgebra& sub,
                                const Mat& sub_basis);
// Restriction of act to an invariant subspace of acted (rows of sub_basis).
// Throws ActionNotRestrictable if the subspace is not stable.
Action restriction_action(const Action& act, const FiniteAlgebra& sub, const Mat& sub_basis);

// Axioms: (p p').m = p.(p'.m);  p.(m m') = (p.m) m';  e.m = m when the actor
// has a designated unit. Violations are reported, never thrown.
Report check_action(const Action& act);

} // namespace x2alg
