#pragma once

#include <optional>

#include "x2alg/morphism.hpp"

namespace x2alg {

// Fiber product A x_C B of f: A -> C, g: B -> C, realised as the subalgebra
// { (a,b) : f(a) = g(b) } of the direct product, on a canonical basis.
struct FiberProduct {
    FiniteAlgebra algebra;
    Morphism to_a, to_b;  // projections; f . to_a == g . to_b
    Mat basis;            // rows live in F^(dim A + dim B)

    // Coordinates of (a, b) in the fiber basis, nullopt when f(a) != g(b).
    std::optional<Vec> coords(const Vec& a, const Vec& b) const;
    Vec part_a(const Vec& v) const;
    Vec part_b(const Vec& v) const;
};

FiberProduct fiber_product(const Morphism& f, const Morphism& g);

} // namespace x2alg
