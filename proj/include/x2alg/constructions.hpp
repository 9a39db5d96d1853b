#pragma once

#include <functional>

#include "x2alg/x2mod.hpp"

namespace x2alg {

// Pullback of X = {C2, C1, R} along a mono phi: S -> R:
//   { C2, (c1, s) with d1(c1) = phi(s), S } with d2*(c2) = (d2 c2, 0),
//   d1*(c1, s) = s, s.(c1, s') = (phi(s).c1, s s'), s.c2 = phi(s).c2 and
//   lifting {(c1,s),(c1',s')} = {c1, c1'}.
// canonical = (id, c-projection, phi): result -> X.
// factorize maps (f2, f1, phi): B -> X to (f2, (f1, d1^B), id_S): B -> result.
struct PullbackResult {
    TwoCrossedModule result;
    TwoCrossedMorphism canonical;
    FiberProduct middle;
    std::function<TwoCrossedMorphism(const TwoCrossedModule& b,
                                     const TwoCrossedMorphism& f)> factorize;
};

// Throws NotMono when phi has a kernel.
PullbackResult pullback_2xmod(const Morphism& phi, const TwoCrossedModule& x);

// For non-mono phi the levelwise pullback is not a complex: on the naive
// middle term C2 x Ker(phi), d1* d2* (c2, s) = s. Returns a concrete witness.
// Throws IsMono when phi is injective.
struct NonMonoWitness {
    Vec c2;     // element of C2 (zero works, kept explicit)
    Vec s;      // nonzero kernel element of phi
    Vec value;  // d1* d2* evaluated on (c2, s); equals s
};

NonMonoWitness nonmono_witness(const Morphism& phi, const TwoCrossedModule& x);

// Induced module of D = {D2, D1, S} along an epi phi: S -> R with kernel K:
//   { D2/K.D2, D1/K.D1, R } with transported structure, where K.Di is the
//   ideal generated by the kernel acting on Di.
// canonical = (coset, coset, phi): D -> result.
// factorize maps (f2, f1, phi): D -> B to the vertical result -> B.
struct InducedResult {
    TwoCrossedModule result;
    TwoCrossedMorphism canonical;
    Quotient top, middle;
    std::function<TwoCrossedMorphism(const TwoCrossedModule& b,
                                     const TwoCrossedMorphism& f)> factorize;
};

// Throws NotEpi when phi is not surjective; WellDefinednessFailure when a
// transported map fails to respect the quotients (not expected for valid D).
InducedResult induced_2xmod_epi(const Morphism& phi, const TwoCrossedModule& d);

TwoCrossedMorphism pullback_factorize(const PullbackResult& pb, const TwoCrossedModule& b,
                                      const TwoCrossedMorphism& f);
TwoCrossedMorphism induced_factorize(const InducedResult& ind, const TwoCrossedModule& b,
                                     const TwoCrossedMorphism& f);

} // namespace x2alg
