#pragma once

#include <vector>

#include "x2alg/action.hpp"
#include "x2alg/morphism.hpp"

namespace x2alg {

// Multiplier algebra M(R) = { linear d : R -> R with d(rr') = r d(r') },
// with composition as product, plus the canonical mu: R -> M(R), r -> (r' -> rr').
// Requires Ann(R) = 0 or R^2 = R so that M(R) is commutative and mu lands well.
struct MultiplierAlgebra {
    FiniteAlgebra algebra;
    Morphism mu;
    std::vector<Mat> multipliers; // basis of M(R) as operators on R
};

// Throws PreconditionFailed when neither condition holds;
// NotCommutativeMultipliers if composition fails commutativity (checked, not assumed).
MultiplierAlgebra multiplier_algebra(const FiniteAlgebra& r);

// M(R) acting on R by evaluation.
Action multiplier_action(const MultiplierAlgebra& m);

} // namespace x2alg
