#pragma once

// Small hand-built algebras and modules shared across test binaries.

#include <vector>

#include "x2alg/action.hpp"
#include "x2alg/algebra.hpp"
#include "x2alg/morphism.hpp"
#include "x2alg/xmod.hpp"

namespace fixtures {

using namespace x2alg;

// F_p as a one-dimensional algebra with unit.
inline FiniteAlgebra field(unsigned p) {
    return mk_algebra(p, 1, {1}, {"e"}, Vec{1});
}

// F_p[x]/(x^2) on basis {1, x}.
inline FiniteAlgebra dual_numbers(unsigned p) {
    std::vector<unsigned> c(8, 0);
    c[(0 * 2 + 0) * 2 + 0] = 1; // 1*1 = 1
    c[(0 * 2 + 1) * 2 + 1] = 1; // 1*x = x
    c[(1 * 2 + 0) * 2 + 1] = 1; // x*1 = x
    return mk_algebra(p, 2, c, {"1", "x"}, Vec{1, 0});
}

// F_p[x]/(x^3) on basis {1, x, x^2}.
inline FiniteAlgebra truncated_poly3(unsigned p) {
    std::vector<unsigned> c(27, 0);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
        c[(i * 3 + j) * 3 + k] = 1;
    };
    set(0, 0, 0);
    set(0, 1, 1); set(1, 0, 1);
    set(0, 2, 2); set(2, 0, 2);
    set(1, 1, 2);
    return mk_algebra(p, 3, c, {"1", "x", "x2"}, Vec{1, 0, 0});
}

// Algebra with all products zero.
inline FiniteAlgebra zero_mult(unsigned p, std::size_t dim) {
    return mk_algebra(p, dim, std::vector<unsigned>(dim * dim * dim, 0));
}

// The ideal (x) of F_p[x]/(x^2) as a one-dimensional algebra, x^2 = 0.
inline FiniteAlgebra ideal_x(unsigned p) {
    return mk_algebra(p, 1, {0}, {"x"});
}

// Inclusion (x) -> F_p[x]/(x^2).
inline Morphism incl_x(unsigned p) {
    Mat m(p, 2, 1);
    m.at(1, 0) = 1;
    return mk_morphism(ideal_x(p), dual_numbers(p), m);
}

// Quotient F_p[x]/(x^2) -> F_p, 1 -> e, x -> 0.
inline Morphism proj_pi(unsigned p) {
    Mat m(p, 1, 2);
    m.at(0, 0) = 1;
    return mk_morphism(dual_numbers(p), field(p), m);
}

// Unit embedding F_p -> F_p[x]/(x^2).
inline Morphism unit_u(unsigned p) {
    Mat m(p, 2, 1);
    m.at(0, 0) = 1;
    return mk_morphism(field(p), dual_numbers(p), m);
}

// Ideal pair (x) -> A as a crossed module.
inline CrossedModule ideal_pair(unsigned p) {
    FiniteAlgebra a = dual_numbers(p), i = ideal_x(p);
    Mat span(p, 1, 2);
    span.at(0, 1) = 1;
    return mk_precrossed(i, a, incl_x(p),
                         multiplication_action_on(a, i, span));
}

// Strictly pre-crossed: (A, F_p, pi) with e acting as the identity.
inline PreCrossedModule precrossed_pi(unsigned p) {
    FiniteAlgebra a = dual_numbers(p), f = field(p);
    std::vector<unsigned> t(1 * 2 * 2, 0);
    t[0 * 2 + 0] = 1; // e.1 = 1
    t[1 * 2 + 1] = 1; // e.x = x
    return mk_precrossed(a, f, proj_pi(p), mk_action(f, a, t));
}

} // namespace fixtures
