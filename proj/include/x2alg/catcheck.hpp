#pragma once

#include <cstdint>
#include <vector>

#include "x2alg/constructions.hpp"
#include "x2alg/x2mod.hpp"

namespace x2alg {

// Cap on the raw candidate space of one enumeration. enum_alg_morphisms is
// bounded by p^(dim A * dim B); the triple enumerations by the product of the
// three level bounds. Exceeding the cap throws SearchSpaceTooLarge with the
// offending size (saturated at 2^64-1).
struct SearchLimit {
    std::uint64_t max_candidates = 10'000'000;
};

// All multiplicative linear maps A -> B (unit preservation not required),
// canonically sorted and pairwise distinct. Between algebras over different
// primes the hom-set is empty. Depth-first over basis images with
// multiplicativity pruning as soon as a product's support is assigned.
std::vector<Morphism> enum_alg_morphisms(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                         const SearchLimit& lim = {});

// All valid triples (f2, f1, f0): X -> Y, canonically sorted. Candidate f1/f2
// are generated from the affine solution sets of the d1/d2 squares given f0,
// then filtered by level multiplicativity and the full morphism check.
std::vector<TwoCrossedMorphism> enum_2x_morphisms(const TwoCrossedModule& x,
                                                  const TwoCrossedModule& y,
                                                  const SearchLimit& lim = {});

// Same, with the base component fixed to `base` (endpoints X.P -> Y.P).
std::vector<TwoCrossedMorphism> enum_2x_morphisms_over(const TwoCrossedModule& x,
                                                       const TwoCrossedModule& y,
                                                       const Morphism& base,
                                                       const SearchLimit& lim = {});

// For phi: S -> R, D over S and B over R, materializes the hom-sets on both
// sides of the base-change adjunction and verifies the explicit bijections:
//   mono phi:  vertical D -> phi*(B)  vs  morphisms D -> B over phi,
//              via canonical-composition and fiber-coordinate factorization;
//   epi phi:   vertical phi_*(D) -> B vs  morphisms D -> B over phi,
//              via canonical-composition and quotient factorization.
// Whichever sides apply are checked; composites must be identities
// element-by-element. Throws BijectionFailure on any mismatch (not expected
// for valid inputs), PreconditionFailed if phi is neither mono nor epi.
Report check_adjunction_pullback_induced(const Morphism& phi, const TwoCrossedModule& d,
                                         const TwoCrossedModule& b,
                                         const SearchLimit& lim = {});

// Adjunction between the base functor and the two-sided trivial inclusion:
// algebra maps base(X) -> R correspond to module morphisms X -> {0, R, R}.
// f0 determines the triple (0, f0 . d1, f0); verified element-by-element.
Report check_adjunction_g1(const TwoCrossedModule& x, const FiniteAlgebra& r,
                           const SearchLimit& lim = {});

// f: Y -> X over u = f.f0. For every Z in the family, every v: Z.P -> Y.P and
// every theta: Z -> X over u.v, exactly one psi: Z -> Y over v satisfies
// f.psi = theta. Family members over other primes contribute no morphisms.
Report check_cartesian(const TwoCrossedMorphism& f, const TwoCrossedModule& y,
                       const TwoCrossedModule& x, const std::vector<TwoCrossedModule>& family,
                       const SearchLimit& lim = {});

// f: Z -> Y over v = f.f0. For every family member X' over Y's base algebra
// and every theta': Z -> X' over v, exactly one vertical psi': Y -> X'
// satisfies psi'.f = theta'. (Vertical tests suffice for a fibration.)
Report check_cocartesian(const TwoCrossedMorphism& f, const TwoCrossedModule& z,
                         const TwoCrossedModule& y, const std::vector<TwoCrossedModule>& family,
                         const SearchLimit& lim = {});

// Universal property of X over the basis images theta (elements of X.L):
// against every target sharing X's middle and base structure, reports two
// conditions separately for each target T:
//   boundary-only: exactly one Phi with (Phi, id, id): X -> T valid;
//   with-basis:    for every theta': Y -> T.L with d2.theta = d2'.theta',
//                  exactly one such Phi additionally has Phi.theta = theta'.
// Throws PreconditionFailed if a target does not share middle/base structure.
Report check_free_2xmod(const TwoCrossedModule& x, const std::vector<Vec>& theta,
                        const std::vector<TwoCrossedModule>& targets,
                        const SearchLimit& lim = {});

// Module-level freeness: dim C2 = |basis_images| * dim C1 and the linear map
// (r_1..r_k) -> sum r_i.g_i from the rank-k free module is bijective.
Report check_free_module(const FiniteAlgebra& c2, const Action& act,
                         const std::vector<Vec>& basis_images);

// For composable monos phi: S -> T, phi2: T -> R and X over R, builds the
// iterated and the one-step pullback and finds a vertical isomorphism between
// them by enumeration. Throws NoIsomorphismFound if none exists.
Report check_pullback_naturality(const Morphism& phi, const Morphism& phi2,
                                 const TwoCrossedModule& x, const SearchLimit& lim = {});

// Dual: for composable epis phi: R -> S, phi2: S -> T and D over R.
Report check_induced_naturality(const Morphism& phi, const Morphism& phi2,
                                const TwoCrossedModule& d, const SearchLimit& lim = {});

} // namespace x2alg
