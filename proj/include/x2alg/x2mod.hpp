#pragma once

#include <optional>

#include "x2alg/xmod.hpp"

namespace x2alg {

// Bilinear Peiffer lifting {-,-}: M x M -> L, tensor b[i][j][k].
struct Lifting {
    unsigned prime = 2;
    std::size_t mdim = 0, ldim = 0;
    std::vector<unsigned> c; // flat [i][j][k], size mdim^2 * ldim

    unsigned at(std::size_t i, std::size_t j, std::size_t k) const {
        return c[(i * mdim + j) * ldim + k];
    }
    Vec eval_basis(std::size_t i, std::size_t j) const;
    Vec eval(const Vec& m0, const Vec& m1) const;
    bool is_zero() const;
    bool operator==(const Lifting&) const = default;
};

Lifting mk_lifting(unsigned prime, std::size_t mdim, std::size_t ldim,
                   const std::vector<unsigned>& tensor);
Lifting zero_lifting(unsigned prime, std::size_t mdim, std::size_t ldim);

// L --d2--> M --d1--> P with P acting on L and M (P acts on itself by
// multiplication) and a Peiffer lifting. Validity means:
//   complex        d1 . d2 = 0
//   equivariance   d2(p.l) = p.d2(l),  d1(p.m) = p d1(m)
//   PL1   d2{m0,m1} = m0 m1 - d1(m1).m0
//   PL2   {d2 l0, d2 l1} = l0 l1
//   PL3   {m0, m1 m2} = {m0 m1, m2} + d1(m2).{m0, m1}
//   PL4   {m, d2 l} + {d2 l, m} = d1(m).l
//   PL5   {m0, m1}.p = {p.m0, m1} = {m0, p.m1}
struct TwoCrossedModule {
    FiniteAlgebra L, M, P;
    Morphism d2, d1;
    Action actPL, actPM;
    Lifting lift;

    bool operator==(const TwoCrossedModule&) const = default;
};

TwoCrossedModule mk_2xmod(FiniteAlgebra l, FiniteAlgebra m, FiniteAlgebra p,
                          Morphism d2, Morphism d1, Action actPL, Action actPM,
                          Lifting lift);

// Per-axiom report; each failing family carries its first offending basis
// tuple and both evaluated sides.
Report check_2xmod(const TwoCrossedModule& x);

// Triple (f2, f1, f0) of algebra morphisms between levels.
struct TwoCrossedMorphism {
    Morphism f2, f1, f0;
    bool operator==(const TwoCrossedMorphism&) const = default;
};

TwoCrossedMorphism identity_2morphism(const TwoCrossedModule& x);
TwoCrossedMorphism compose(const TwoCrossedMorphism& g, const TwoCrossedMorphism& f);

// Squares with d2/d1, compatibility with both actions, and preservation of
// the lifting, all on basis tuples.
Report check_2morphism(const TwoCrossedMorphism& f, const TwoCrossedModule& x,
                       const TwoCrossedModule& y);

// m.l := {m, d2 l}; for a valid input this is an action making (L, M, d2)
// crossed, and the split halves of PL4 hold:
//   {m, d2 l} = m.l   and   {d2 l, m} = m.l - d1(m).l.
struct DerivedAction {
    Action action;        // M on L
    CrossedModule xmod;   // (L, M, d2) with the derived action
    Report pl4_split;     // both split identities, per basis pair
};

DerivedAction derived_action(const TwoCrossedModule& x);

// Skeleton: (M, P, d1) -> { <M,M>, M, P, incl, d1 } with lifting
// {m, m'} = m m' - d1(m').m, which lands in the Peiffer ideal.
// Throws ActionNotRestrictable if P does not preserve the ideal.
TwoCrossedModule functor_sk(const PreCrossedModule& x);

// Underlying pre-crossed module (M, P, d1).
PreCrossedModule functor_tr(const TwoCrossedModule& x);

// Crossed -> 2-crossed with zero top term, and its left inverse
// X -> (M / im d2, P, induced d1).
TwoCrossedModule functor_alpha(const CrossedModule& x);
CrossedModule functor_beta(const TwoCrossedModule& x);

// For zero-lifting modules: (M, P, d1) crossed, L has zero multiplication,
// and d1(M).L = 0.
Report trivial_lifting_report(const TwoCrossedModule& x);

// Candidate counit Sk(Tr(Y)) -> Y: the linear map determined by sending each
// lifted commutator to Y's lifting value (and closure products to derived-
// action values). nullopt when no linear map is consistent with that data.
std::optional<TwoCrossedMorphism> sk_tr_counit(const TwoCrossedModule& y);

} // namespace x2alg
