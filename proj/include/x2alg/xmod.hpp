#pragma once

#include <functional>

#include "x2alg/action.hpp"
#include "x2alg/fiber.hpp"
#include "x2alg/ideal.hpp"
#include "x2alg/morphism.hpp"
#include "x2alg/report.hpp"

namespace x2alg {

// bdry: C -> R together with an action of R on C.
// Pre-crossed: bdry(r.c) = r bdry(c).  Crossed: additionally bdry(c).c' = c c'.
// Which axioms hold is established by the check functions, not by construction.
struct PreCrossedModule {
    FiniteAlgebra C, R;
    Morphism bdry;
    Action act; // R on C

    bool operator==(const PreCrossedModule&) const = default;
};

using CrossedModule = PreCrossedModule;

// Shape-validates the pieces (endpoints, primes); axiom checks stay separate.
PreCrossedModule mk_precrossed(FiniteAlgebra c, FiniteAlgebra r, Morphism bdry, Action act);

Report check_precrossed(const PreCrossedModule& x);
Report check_crossed(const PreCrossedModule& x);

// Ideal of C generated by the Peiffer commutators bdry(c_i).c_j - c_i c_j.
// Zero iff the pre-crossed module is crossed.
Ideal peiffer_ideal(const PreCrossedModule& x);

// Pullback of a crossed module along phi: S -> R.
// Middle term is the fiber product of bdry and phi; the factorizer sends a
// compatible pair (f: B -> C, mu: B -> S with bdry f = phi mu) to B -> phi*(C).
struct PullbackXMod {
    CrossedModule xmod;     // over S
    Morphism proj;          // phi*(C) -> C
    FiberProduct fiber;
    std::function<Morphism(const Morphism& f, const Morphism& mu)> factorize;
};

PullbackXMod pullback_xmod(const Morphism& phi, const CrossedModule& x);

// Base functor and its right adjoint A -> (A, A, id).
FiniteAlgebra functor_delta(const CrossedModule& x);
CrossedModule functor_gamma(const FiniteAlgebra& a);

// Recognizer for epimorphisms whose kernel lies in the annihilator of the
// source; such maps carry a canonical crossed structure via preimages.
bool annihilator_kernel_epi(const Morphism& f);

} // namespace x2alg
