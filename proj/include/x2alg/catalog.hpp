#pragma once

#include <vector>

#include "x2alg/x2mod.hpp"

namespace x2alg {

// Generated families used as quantification domains by tests and the
// acceptance suite. All generation is deterministic.

// Every commutative associative algebra structure on F_2^n for n <= 2,
// with the unit auto-detected when one exists.
std::vector<FiniteAlgebra> small_algebras_f2();

// A few larger or odd-characteristic algebras for targeted cases.
std::vector<FiniteAlgebra> extra_algebras();

// Every pre-crossed module (C, R, bdry, action) with both dimensions <= 2
// over F_2: all valid actions crossed with all equivariant boundaries.
std::vector<PreCrossedModule> precrossed_catalog_f2();

// Ten fixed cases over F_3 or in dimension 3, each chosen so that the
// skeleton construction yields a valid 2-crossed module.
std::vector<PreCrossedModule> handpicked_precrossed();

// A strictly pre-crossed module over F_3 whose skeleton violates PL4
// (doubling a nonzero commutator square); kept as a negative fixture.
PreCrossedModule sk_pl4_counterexample();

// The published family of valid 2-crossed modules quantified over by the
// cartesian/cocartesian and freeness checks: zero-top images of crossed
// modules, skeletons of strictly pre-crossed ones, and ideal chains. Deduped.
std::vector<TwoCrossedModule> two_crossed_family();

// Small pools of injective / surjective morphisms between catalog algebras.
std::vector<Morphism> catalog_monos();
std::vector<Morphism> catalog_epis();

// {0, I, R, 0, incl} with zero lifting for the ideal generated by the rows.
TwoCrossedModule ideal_chain(const FiniteAlgebra& r, const std::vector<Vec>& gens);

} // namespace x2alg
