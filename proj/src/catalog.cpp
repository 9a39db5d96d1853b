#include "x2alg/catalog.hpp"

#include <algorithm>

#include "x2alg/errors.hpp"
#include "x2alg/ideal.hpp"

namespace x2alg {

namespace {

bool tensor_associative(unsigned p, std::size_t n, const std::vector<unsigned>& c) {
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) {
        return c[(i * n + j) * n + k];
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t u = 0; u < n; ++u) {
                    unsigned lhs = 0, rhs = 0;
                    for (std::size_t t = 0; t < n; ++t) {
                        lhs = fp::add(lhs, fp::mul(at(i, j, t), at(t, k, u), p), p);
                        rhs = fp::add(rhs, fp::mul(at(j, k, t), at(i, t, u), p), p);
                    }
                    if (lhs != rhs) return false;
                }
    return true;
}

std::optional<Vec> detect_unit(unsigned p, std::size_t n, const std::vector<unsigned>& c) {
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) {
        return c[(i * n + j) * n + k];
    };
    if (n == 0) return std::nullopt;
    for (const Vec& v : all_vectors(p, n)) {
        bool unit = true;
        for (std::size_t j = 0; j < n && unit; ++j)
            for (std::size_t k = 0; k < n && unit; ++k) {
                unsigned s = 0;
                for (std::size_t i = 0; i < n; ++i)
                    s = fp::add(s, fp::mul(v[i], at(i, j, k), p), p);
                if (s != (j == k ? 1u : 0u)) unit = false;
            }
        if (unit) return v;
    }
    return std::nullopt;
}

FiniteAlgebra build(unsigned p, std::size_t n, const std::vector<unsigned>& c) {
    return mk_algebra(p, n, c, {}, detect_unit(p, n, c));
}

FiniteAlgebra field_alg(unsigned p) { return mk_algebra(p, 1, {1}, {"e"}, Vec{1}); }

FiniteAlgebra dual_alg(unsigned p) {
    std::vector<unsigned> c(8, 0);
    c[0] = 1;          // 1*1 = 1
    c[(0 * 2 + 1) * 2 + 1] = 1;
    c[(1 * 2 + 0) * 2 + 1] = 1;
    return mk_algebra(p, 2, c, {"1", "x"}, Vec{1, 0});
}

FiniteAlgebra trunc3_alg(unsigned p) {
    std::vector<unsigned> c(27, 0);
    auto one = [&](std::size_t i, std::size_t j, std::size_t k) { c[(i * 3 + j) * 3 + k] = 1; };
    one(0, 0, 0);
    one(0, 1, 1); one(1, 0, 1);
    one(0, 2, 2); one(2, 0, 2);
    one(1, 1, 2);
    return mk_algebra(p, 3, c, {"1", "x", "x2"}, Vec{1, 0, 0});
}

// F_p[x,y]/(x,y)^2 on {1, x, y}.
FiniteAlgebra xy_square_zero_alg(unsigned p) {
    std::vector<unsigned> c(27, 0);
    auto one = [&](std::size_t i, std::size_t j, std::size_t k) { c[(i * 3 + j) * 3 + k] = 1; };
    one(0, 0, 0);
    one(0, 1, 1); one(1, 0, 1);
    one(0, 2, 2); one(2, 0, 2);
    return mk_algebra(p, 3, c, {"1", "x", "y"}, Vec{1, 0, 0});
}

FiniteAlgebra zero_mult_alg(unsigned p, std::size_t n) {
    return mk_algebra(p, n, std::vector<unsigned>(n * n * n, 0));
}

FiniteAlgebra product_f2f2() {
    std::vector<unsigned> c(8, 0);
    c[(0 * 2 + 0) * 2 + 0] = 1;
    c[(1 * 2 + 1) * 2 + 1] = 1;
    return mk_algebra(2, 2, c, {"a", "b"}, Vec{1, 1});
}

bool boundary_equivariant(const PreCrossedModule& x) {
    for (std::size_t i = 0; i < x.R.dim(); ++i)
        for (std::size_t j = 0; j < x.C.dim(); ++j)
            if (x.bdry.apply(x.act.eval_basis(i, j)) !=
                x.R.mul(x.R.basis_vec(i), x.bdry.apply(x.C.basis_vec(j))))
                return false;
    return true;
}

// The action of P on itself by multiplication through the constant-term map
// (the unit acts as the identity, everything else through bdry's kernel).
Action unit_action(const FiniteAlgebra& f, const FiniteAlgebra& c) {
    std::vector<unsigned> t(f.dim() * c.dim() * c.dim(), 0);
    for (std::size_t j = 0; j < c.dim(); ++j) t[(0 * c.dim() + j) * c.dim() + j] = 1;
    return mk_action(f, c, t);
}

// Constant-term projection of an algebra whose first basis vector is the unit.
Morphism const_term(const FiniteAlgebra& c, const FiniteAlgebra& f) {
    Mat m(c.prime(), 1, c.dim());
    m.at(0, 0) = 1;
    return mk_morphism(c, f, m);
}

struct IdealPiece {
    FiniteAlgebra algebra;
    Morphism incl;
    Action mult;
    Mat span;
};

IdealPiece ideal_piece(const FiniteAlgebra& r, const std::vector<Vec>& gens) {
    Ideal ideal = ideal_generated(r, gens);
    std::size_t n = ideal.dim();
    std::vector<unsigned> mul(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec co = *coords_in(ideal.span, r.mul(ideal.span.row(i), ideal.span.row(j)));
            for (std::size_t k = 0; k < n; ++k) mul[(i * n + j) * n + k] = co[k];
        }
    FiniteAlgebra m = mk_algebra(r.prime(), n, mul);
    return {m, mk_morphism(m, r, ideal.span.transpose()),
            multiplication_action_on(r, m, ideal.span), ideal.span};
}

} // namespace

std::vector<FiniteAlgebra> small_algebras_f2() {
    std::vector<FiniteAlgebra> out;
    out.push_back(zero_algebra(2));
    out.push_back(build(2, 1, {0}));
    out.push_back(build(2, 1, {1}));
    // dim 2: free symmetric entries are the three products (0,0), (0,1), (1,1)
    for (const Vec& bits : all_vectors(2, 6)) {
        std::vector<unsigned> c(8, 0);
        auto put = [&](std::size_t i, std::size_t j, unsigned k0, unsigned k1) {
            c[(i * 2 + j) * 2 + 0] = k0;
            c[(i * 2 + j) * 2 + 1] = k1;
            c[(j * 2 + i) * 2 + 0] = k0;
            c[(j * 2 + i) * 2 + 1] = k1;
        };
        put(0, 0, bits[0], bits[1]);
        put(0, 1, bits[2], bits[3]);
        put(1, 1, bits[4], bits[5]);
        if (tensor_associative(2, 2, c)) out.push_back(build(2, 2, c));
    }
    return out;
}

std::vector<FiniteAlgebra> extra_algebras() {
    return {field_alg(3), dual_alg(3),         trunc3_alg(2),     xy_square_zero_alg(3),
            zero_mult_alg(3, 1), zero_mult_alg(3, 2), zero_mult_alg(2, 3)};
}

std::vector<PreCrossedModule> precrossed_catalog_f2() {
    std::vector<PreCrossedModule> out;
    std::vector<FiniteAlgebra> algs = small_algebras_f2();
    for (const FiniteAlgebra& r : algs) {
        for (const FiniteAlgebra& c : algs) {
            std::size_t tlen = r.dim() * c.dim() * c.dim();
            for (const Vec& t : all_vectors(2, tlen)) {
                Action act = mk_action(r, c, std::vector<unsigned>(t.begin(), t.end()));
                if (!check_action(act).ok()) continue;
                std::size_t mlen = r.dim() * c.dim();
                for (const Vec& mv : all_vectors(2, mlen)) {
                    Mat m(2, r.dim(), c.dim());
                    for (std::size_t i = 0; i < r.dim(); ++i)
                        for (std::size_t j = 0; j < c.dim(); ++j)
                            m.at(i, j) = mv[i * c.dim() + j];
                    if (!multiplicative_matrix(c, r, m)) continue;
                    PreCrossedModule x{c, r, Morphism{c, r, m}, act};
                    if (!boundary_equivariant(x)) continue;
                    out.push_back(std::move(x));
                }
            }
        }
    }
    return out;
}

std::vector<PreCrossedModule> handpicked_precrossed() {
    std::vector<PreCrossedModule> out;
    FiniteAlgebra f2 = field_alg(2), f3 = field_alg(3);

    // strictly pre-crossed: constant-term boundaries with the unit action
    out.push_back(mk_precrossed(dual_alg(3), f3, const_term(dual_alg(3), f3),
                                unit_action(f3, dual_alg(3))));
    out.push_back(mk_precrossed(xy_square_zero_alg(3), f3,
                                const_term(xy_square_zero_alg(3), f3),
                                unit_action(f3, xy_square_zero_alg(3))));
    out.push_back(mk_precrossed(trunc3_alg(2), f2, const_term(trunc3_alg(2), f2),
                                unit_action(f2, trunc3_alg(2))));

    // crossed: identity boundaries with multiplication
    for (const FiniteAlgebra& a : {field_alg(3), dual_alg(3), trunc3_alg(2)})
        out.push_back(mk_precrossed(a, a, identity_morphism(a), multiplication_action(a)));

    // crossed: ideal pairs
    {
        IdealPiece ip = ideal_piece(trunc3_alg(2), {Vec{0, 1, 0}});
        out.push_back(mk_precrossed(ip.algebra, trunc3_alg(2), ip.incl, ip.mult));
    }
    {
        IdealPiece ip = ideal_piece(dual_alg(3), {Vec{0, 1}});
        out.push_back(mk_precrossed(ip.algebra, dual_alg(3), ip.incl, ip.mult));
    }

    // crossed: zero boundaries on zero-multiplication modules
    out.push_back(mk_precrossed(zero_mult_alg(3, 2), f3,
                                zero_morphism(zero_mult_alg(3, 2), f3),
                                unit_action(f3, zero_mult_alg(3, 2))));
    out.push_back(mk_precrossed(zero_mult_alg(2, 3), f2,
                                zero_morphism(zero_mult_alg(2, 3), f2),
                                unit_action(f2, zero_mult_alg(2, 3))));
    return out;
}

PreCrossedModule sk_pl4_counterexample() {
    FiniteAlgebra f3 = field_alg(3), m = trunc3_alg(3);
    return mk_precrossed(m, f3, const_term(m, f3), unit_action(f3, m));
}

TwoCrossedModule ideal_chain(const FiniteAlgebra& r, const std::vector<Vec>& gens) {
    IdealPiece ip = ideal_piece(r, gens);
    FiniteAlgebra l = zero_algebra(r.prime());
    return mk_2xmod(l, ip.algebra, r, zero_morphism(l, ip.algebra), ip.incl,
                    zero_action(r, l), ip.mult,
                    zero_lifting(r.prime(), ip.algebra.dim(), 0));
}

std::vector<TwoCrossedModule> two_crossed_family() {
    std::vector<TwoCrossedModule> out;
    auto add = [&](const TwoCrossedModule& x) {
        for (const TwoCrossedModule& y : out)
            if (y == x) return;
        out.push_back(x);
    };

    FiniteAlgebra f2 = field_alg(2), f3 = field_alg(3);
    FiniteAlgebra a2 = dual_alg(2), pp = product_f2f2();

    // zero-top images of crossed modules
    for (const FiniteAlgebra& a : {field_alg(2), dual_alg(2), product_f2f2()})
        add(functor_alpha(CrossedModule{a, a, identity_morphism(a), multiplication_action(a)}));
    {
        IdealPiece ip = ideal_piece(a2, {Vec{0, 1}});
        add(functor_alpha(mk_precrossed(ip.algebra, a2, ip.incl, ip.mult)));
    }
    add(functor_alpha(mk_precrossed(zero_mult_alg(2, 2), f2,
                                    zero_morphism(zero_mult_alg(2, 2), f2),
                                    unit_action(f2, zero_mult_alg(2, 2)))));
    add(functor_alpha(CrossedModule{f3, f3, identity_morphism(f3), multiplication_action(f3)}));

    // skeletons of strictly pre-crossed modules
    add(functor_sk(mk_precrossed(a2, f2, const_term(a2, f2), unit_action(f2, a2))));
    {
        Mat pr0(2, 1, 2);
        pr0.at(0, 0) = 1; // F2 x F2 -> F2 first projection
        add(functor_sk(mk_precrossed(pp, f2, mk_morphism(pp, f2, pr0), unit_action(f2, pp))));
    }
    add(functor_sk(mk_precrossed(dual_alg(3), f3, const_term(dual_alg(3), f3),
                                 unit_action(f3, dual_alg(3)))));

    // ideal chains, including degenerate ones
    add(ideal_chain(a2, {Vec{0, 1}}));
    add(ideal_chain(a2, {}));
    add(ideal_chain(f2, {Vec{1}}));
    add(ideal_chain(pp, {Vec{1, 0}}));

    // nonzero top term with zero boundary: {I, I, A} with lifting {x,x} = x
    {
        IdealPiece ip = ideal_piece(a2, {Vec{0, 1}});
        add(mk_2xmod(ip.algebra, ip.algebra, a2, zero_morphism(ip.algebra, ip.algebra),
                     ip.incl, ip.mult, ip.mult, mk_lifting(2, 1, 1, {1})));
    }
    return out;
}

std::vector<Morphism> catalog_monos() {
    FiniteAlgebra f2 = field_alg(2), a2 = dual_alg(2), t3 = trunc3_alg(2);
    FiniteAlgebra pp = product_f2f2(), f3 = field_alg(3), a3 = dual_alg(3);
    std::vector<Morphism> out;
    out.push_back(identity_morphism(f2));
    out.push_back(identity_morphism(a2));
    { // unit embedding F2 -> A
        Mat m(2, 2, 1);
        m.at(0, 0) = 1;
        out.push_back(mk_morphism(f2, a2, m));
    }
    { // 1 -> 1, x -> x^2: A -> F2[x]/(x^3)
        Mat m(2, 3, 2);
        m.at(0, 0) = 1;
        m.at(2, 1) = 1;
        out.push_back(mk_morphism(a2, t3, m));
    }
    { // diagonal F2 -> F2 x F2
        Mat m(2, 2, 1);
        m.at(0, 0) = 1;
        m.at(1, 0) = 1;
        out.push_back(mk_morphism(f2, pp, m));
    }
    { // first-factor embedding F2 -> F2 x F2
        Mat m(2, 2, 1);
        m.at(0, 0) = 1;
        out.push_back(mk_morphism(f2, pp, m));
    }
    { // unit embedding F3 -> F3[x]/(x^2)
        Mat m(3, 2, 1);
        m.at(0, 0) = 1;
        out.push_back(mk_morphism(f3, a3, m));
    }
    out.push_back(identity_morphism(f3));
    return out;
}

std::vector<Morphism> catalog_epis() {
    FiniteAlgebra f2 = field_alg(2), a2 = dual_alg(2), t3 = trunc3_alg(2);
    FiniteAlgebra pp = product_f2f2(), f3 = field_alg(3), a3 = dual_alg(3);
    std::vector<Morphism> out;
    out.push_back(identity_morphism(f2));
    out.push_back(identity_morphism(a2));
    { // constant term A -> F2
        Mat m(2, 1, 2);
        m.at(0, 0) = 1;
        out.push_back(mk_morphism(a2, f2, m));
    }
    { // F2[x]/(x^3) -> F2[x]/(x^2)
        Mat m(2, 2, 3);
        m.at(0, 0) = 1;
        m.at(1, 1) = 1;
        out.push_back(mk_morphism(t3, a2, m));
    }
    { // first projection F2 x F2 -> F2
        Mat m(2, 1, 2);
        m.at(0, 0) = 1;
        out.push_back(mk_morphism(pp, f2, m));
    }
    { // constant term F3[x]/(x^2) -> F3
        Mat m(3, 1, 2);
        m.at(0, 0) = 1;
        out.push_back(mk_morphism(a3, f3, m));
    }
    { // constant term F2[x]/(x^3) -> F2
        Mat m(2, 1, 3);
        m.at(0, 0) = 1;
        out.push_back(mk_morphism(t3, f2, m));
    }
    return out;
}

} // namespace x2alg
