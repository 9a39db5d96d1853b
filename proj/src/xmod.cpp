#include "x2alg/xmod.hpp"

#include "x2alg/errors.hpp"

namespace x2alg {

PreCrossedModule mk_precrossed(FiniteAlgebra c, FiniteAlgebra r, Morphism bdry, Action act) {
    if (!bdry.source.same_structure(c) || !bdry.target.same_structure(r))
        fail(Errc::endpoint_mismatch, "boundary endpoints must be (C, R)");
    if (!act.actor.same_structure(r) || !act.acted.same_structure(c))
        fail(Errc::endpoint_mismatch, "action must be of R on C");
    return PreCrossedModule{std::move(c), std::move(r), std::move(bdry), std::move(act)};
}

Report check_precrossed(const PreCrossedModule& x) {
    Report rep;
    bool ok = true;
    for (std::size_t i = 0; ok && i < x.R.dim(); ++i)
        for (std::size_t j = 0; ok && j < x.C.dim(); ++j) {
            Vec lhs = x.bdry.apply(x.act.eval_basis(i, j));
            Vec rhs = x.R.mul(x.R.basis_vec(i), x.bdry.apply(x.C.basis_vec(j)));
            if (lhs != rhs) {
                rep.fail("equivariance", {i, j}, vec_to_string(lhs), vec_to_string(rhs));
                ok = false;
            }
        }
    if (ok) rep.pass("equivariance");
    return rep;
}

Report check_crossed(const PreCrossedModule& x) {
    Report rep = check_precrossed(x);
    bool ok = true;
    for (std::size_t i = 0; ok && i < x.C.dim(); ++i)
        for (std::size_t j = 0; ok && j < x.C.dim(); ++j) {
            Vec lhs = x.act.eval(x.bdry.apply(x.C.basis_vec(i)), x.C.basis_vec(j));
            Vec rhs = x.C.mul_basis(i, j);
            if (lhs != rhs) {
                rep.fail("peiffer", {i, j}, vec_to_string(lhs), vec_to_string(rhs));
                ok = false;
            }
        }
    if (ok) rep.pass("peiffer");
    return rep;
}

Ideal peiffer_ideal(const PreCrossedModule& x) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < x.C.dim(); ++i)
        for (std::size_t j = 0; j < x.C.dim(); ++j)
            gens.push_back(x.C.sub(
                x.act.eval(x.bdry.apply(x.C.basis_vec(i)), x.C.basis_vec(j)),
                x.C.mul_basis(i, j)));
    return ideal_generated(x.C, gens);
}

PullbackXMod pullback_xmod(const Morphism& phi, const CrossedModule& x) {
    if (!phi.target.same_structure(x.R))
        fail(Errc::endpoint_mismatch, "phi must land in the base of the crossed module");
    const FiniteAlgebra& s = phi.source;

    FiberProduct fib = fiber_product(x.bdry, phi);
    const std::size_t d = fib.algebra.dim();

    // s' . (c, s) = (phi(s') . c, s' s)
    std::vector<unsigned> tensor(s.dim() * d * d, 0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Vec phs = phi.apply(s.basis_vec(i));
        for (std::size_t j = 0; j < d; ++j) {
            Vec c_part = x.act.eval(phs, fib.part_a(fib.algebra.basis_vec(j)));
            Vec s_part = s.mul(s.basis_vec(i), fib.part_b(fib.algebra.basis_vec(j)));
            auto coords = fib.coords(c_part, s_part);
            if (!coords)
                fail(Errc::internal, "pullback action left the fiber product");
            for (std::size_t k = 0; k < d; ++k) tensor[(i * d + j) * d + k] = (*coords)[k];
        }
    }

    PullbackXMod out;
    out.fiber = fib;
    out.xmod = mk_precrossed(fib.algebra, s, fib.to_b, mk_action(s, fib.algebra, tensor));
    out.proj = fib.to_a;
    out.factorize = [fib, phi, x](const Morphism& f, const Morphism& mu) {
        if (!f.target.same_structure(x.C) || !mu.target.same_structure(phi.source))
            fail(Errc::endpoint_mismatch, "factorize expects f into C and mu into S");
        if (!f.source.same_structure(mu.source))
            fail(Errc::endpoint_mismatch, "factorize expects a common source");
        const std::size_t nb = f.source.dim();
        Mat m(f.source.prime(), fib.algebra.dim(), nb);
        for (std::size_t j = 0; j < nb; ++j) {
            auto c = fib.coords(f.matrix.col(j), mu.matrix.col(j));
            if (!c)
                fail(Errc::endpoint_mismatch,
                     "bdry . f != phi . mu, pair does not land in the fiber", {j});
            m.set_col(j, *c);
        }
        return mk_morphism(f.source, fib.algebra, m);
    };
    return out;
}

FiniteAlgebra functor_delta(const CrossedModule& x) { return x.R; }

CrossedModule functor_gamma(const FiniteAlgebra& a) {
    return mk_precrossed(a, a, identity_morphism(a), multiplication_action(a));
}

bool annihilator_kernel_epi(const Morphism& f) {
    if (!is_epi(f)) return false;
    Mat ker = f.matrix.nullspace_basis();
    Mat ann = f.source.annihilator();
    return span_contains_all(ann, ker);
}

} // namespace x2alg
