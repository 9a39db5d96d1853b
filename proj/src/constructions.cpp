#include "x2alg/constructions.hpp"

#include "x2alg/errors.hpp"
#include "x2alg/ideal.hpp"

namespace x2alg {

namespace {

// Action tensor a[i][j][k] collected from a per-pair evaluator.
std::vector<unsigned> action_tensor(std::size_t adim, std::size_t mdim,
                                    const std::function<Vec(std::size_t, std::size_t)>& pair) {
    std::vector<unsigned> t(adim * mdim * mdim, 0);
    for (std::size_t i = 0; i < adim; ++i)
        for (std::size_t j = 0; j < mdim; ++j) {
            Vec v = pair(i, j);
            for (std::size_t k = 0; k < mdim; ++k) t[(i * mdim + j) * mdim + k] = v[k];
        }
    return t;
}

} // namespace

PullbackResult pullback_2xmod(const Morphism& phi, const TwoCrossedModule& x) {
    if (!phi.target.same_structure(x.P))
        fail(Errc::endpoint_mismatch, "phi must land in the base of the module");
    if (!is_mono(phi)) fail(Errc::not_mono, "pullback requires an injective phi");

    const FiniteAlgebra& s = phi.source;
    const unsigned p = s.prime();
    FiberProduct fib = fiber_product(x.d1, phi);
    const std::size_t nl = x.L.dim(), nm = fib.algebra.dim(), ns = s.dim();

    Mat d2m(p, nm, nl);
    for (std::size_t j = 0; j < nl; ++j) {
        auto c = fib.coords(x.d2.apply(x.L.basis_vec(j)), Vec(ns, 0));
        if (!c) fail(Errc::well_definedness, "d2 image is not matched by zero in the base", {j});
        d2m.set_col(j, *c);
    }
    Morphism d2 = mk_morphism(x.L, fib.algebra, d2m);

    Action act_l = mk_action(s, x.L,
        action_tensor(ns, nl, [&](std::size_t i, std::size_t j) {
            return x.actPL.eval(phi.apply(s.basis_vec(i)), x.L.basis_vec(j));
        }));
    Action act_m = mk_action(s, fib.algebra,
        action_tensor(ns, nm, [&](std::size_t i, std::size_t j) {
            Vec ej = fib.algebra.basis_vec(j);
            Vec part = x.actPM.eval(phi.apply(s.basis_vec(i)), fib.part_a(ej));
            Vec base = s.mul(s.basis_vec(i), fib.part_b(ej));
            auto c = fib.coords(part, base);
            if (!c) fail(Errc::well_definedness, "action does not preserve the fiber", {i, j});
            return *c;
        }));

    std::vector<unsigned> lt(nm * nm * nl, 0);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec v = x.lift.eval(fib.part_a(fib.algebra.basis_vec(i)),
                                fib.part_a(fib.algebra.basis_vec(j)));
            for (std::size_t k = 0; k < nl; ++k) lt[(i * nm + j) * nl + k] = v[k];
        }

    PullbackResult out{
        mk_2xmod(x.L, fib.algebra, s, d2, fib.to_b, act_l, act_m, mk_lifting(p, nm, nl, lt)),
        TwoCrossedMorphism{identity_morphism(x.L), fib.to_a, phi},
        fib, {}};

    TwoCrossedModule res = out.result;
    out.factorize = [phi, fib, res](const TwoCrossedModule& b, const TwoCrossedMorphism& f) {
        if (f.f0.matrix != phi.matrix || !f.f0.source.same_structure(b.P))
            fail(Errc::endpoint_mismatch, "factorization needs a morphism whose base map is phi");
        if (!b.P.same_structure(res.P))
            fail(Errc::endpoint_mismatch, "source must live over the pullback base");
        Mat f1m(b.M.prime(), res.M.dim(), b.M.dim());
        for (std::size_t j = 0; j < b.M.dim(); ++j) {
            Vec ej = b.M.basis_vec(j);
            auto c = fib.coords(f.f1.apply(ej), b.d1.apply(ej));
            if (!c) fail(Errc::endpoint_mismatch, "middle image misses the fiber", {j});
            f1m.set_col(j, *c);
        }
        return TwoCrossedMorphism{mk_morphism(b.L, res.L, f.f2.matrix),
                                  mk_morphism(b.M, res.M, f1m),
                                  mk_morphism(b.P, res.P, Mat::identity(b.P.prime(), b.P.dim()))};
    };
    return out;
}

NonMonoWitness nonmono_witness(const Morphism& phi, const TwoCrossedModule& x) {
    if (!phi.target.same_structure(x.P))
        fail(Errc::endpoint_mismatch, "phi must land in the base of the module");
    KernelImage ki = kernel_image(phi);
    if (ki.is_mono) fail(Errc::is_mono, "phi is injective; every witness would vanish");

    NonMonoWitness w;
    w.c2 = Vec(x.L.dim(), 0);
    w.s = ki.kernel.row(0);
    // (d2 c2, s) sits in the fiber middle term because phi(s) = 0 = d1(d2 c2),
    // yet its base projection is s: the levelwise pullback cannot be a complex.
    FiberProduct fib = fiber_product(x.d1, phi);
    auto c = fib.coords(x.d2.apply(w.c2), w.s);
    if (!c) fail(Errc::internal, "kernel witness missing from the fiber");
    w.value = fib.to_b.apply(*c);
    return w;
}

InducedResult induced_2xmod_epi(const Morphism& phi, const TwoCrossedModule& d) {
    if (!phi.source.same_structure(d.P))
        fail(Errc::endpoint_mismatch, "phi must start at the base of the module");
    KernelImage ki = kernel_image(phi);
    if (!ki.is_epi) fail(Errc::not_epi, "induction requires a surjective phi");

    const FiniteAlgebra& r = phi.target;
    const unsigned p = r.prime();
    const std::size_t nl = d.L.dim(), nm = d.M.dim(), nr = r.dim();

    std::vector<Vec> g2, g1;
    for (std::size_t krow = 0; krow < ki.kernel.rows(); ++krow) {
        Vec k = ki.kernel.row(krow);
        for (std::size_t j = 0; j < nl; ++j) g2.push_back(d.actPL.eval(k, d.L.basis_vec(j)));
        for (std::size_t j = 0; j < nm; ++j) g1.push_back(d.actPM.eval(k, d.M.basis_vec(j)));
    }
    Ideal kd2 = ideal_generated(d.L, g2);
    Ideal kd1 = ideal_generated(d.M, g1);
    Quotient q2 = quotient_by_ideal(d.L, kd2);
    Quotient q1 = quotient_by_ideal(d.M, kd1);

    for (std::size_t rr = 0; rr < kd2.span.rows(); ++rr)
        if (!kd1.contains(d.d2.apply(kd2.span.row(rr))))
            fail(Errc::well_definedness, "d2 does not descend to the quotients", {rr});
    for (std::size_t rr = 0; rr < kd1.span.rows(); ++rr) {
        Vec v = kd1.span.row(rr);
        Vec im = phi.apply(d.d1.apply(v));
        if (im != Vec(nr, 0))
            fail(Errc::well_definedness, "d1 does not descend along phi", {rr});
        for (std::size_t j = 0; j < nm; ++j) {
            if (!kd2.contains(d.lift.eval(v, d.M.basis_vec(j))) ||
                !kd2.contains(d.lift.eval(d.M.basis_vec(j), v)))
                fail(Errc::well_definedness, "lifting does not descend", {rr, j});
        }
    }
    // Preimage independence of the transported actions is automatic: differing
    // choices act through the kernel, which lands in the collapsed ideals.

    std::vector<Vec> pre(nr);
    for (std::size_t i = 0; i < nr; ++i)
        pre[i] = *phi.matrix.solve(r.basis_vec(i));

    const std::size_t ql = q2.algebra.dim(), qm = q1.algebra.dim();
    Morphism d2s = mk_morphism(q2.algebra, q1.algebra,
                               q1.projection.matrix * d.d2.matrix * q2.section);
    Morphism d1s = mk_morphism(q1.algebra, r, phi.matrix * d.d1.matrix * q1.section);

    Action act_l = mk_action(r, q2.algebra,
        action_tensor(nr, ql, [&](std::size_t i, std::size_t j) {
            return q2.reduce(d.actPL.eval(pre[i], q2.section.col(j)));
        }));
    Action act_m = mk_action(r, q1.algebra,
        action_tensor(nr, qm, [&](std::size_t i, std::size_t j) {
            return q1.reduce(d.actPM.eval(pre[i], q1.section.col(j)));
        }));

    std::vector<unsigned> lt(qm * qm * ql, 0);
    for (std::size_t i = 0; i < qm; ++i)
        for (std::size_t j = 0; j < qm; ++j) {
            Vec v = q2.reduce(d.lift.eval(q1.section.col(i), q1.section.col(j)));
            for (std::size_t k = 0; k < ql; ++k) lt[(i * qm + j) * ql + k] = v[k];
        }

    InducedResult out{
        mk_2xmod(q2.algebra, q1.algebra, r, d2s, d1s, act_l, act_m, mk_lifting(p, qm, ql, lt)),
        TwoCrossedMorphism{q2.projection, q1.projection, phi},
        q2, q1, {}};

    TwoCrossedModule res = out.result;
    out.factorize = [phi, q1, q2, kd1, kd2, res](const TwoCrossedModule& b,
                                                 const TwoCrossedMorphism& f) {
        if (f.f0.matrix != phi.matrix)
            fail(Errc::endpoint_mismatch, "factorization needs a morphism whose base map is phi");
        if (!b.P.same_structure(res.P))
            fail(Errc::endpoint_mismatch, "target must live over the induced base");
        for (std::size_t rr = 0; rr < kd2.span.rows(); ++rr)
            if (f.f2.apply(kd2.span.row(rr)) != Vec(b.L.dim(), 0))
                fail(Errc::well_definedness, "top map does not kill the collapsed ideal", {rr});
        for (std::size_t rr = 0; rr < kd1.span.rows(); ++rr)
            if (f.f1.apply(kd1.span.row(rr)) != Vec(b.M.dim(), 0))
                fail(Errc::well_definedness, "middle map does not kill the collapsed ideal", {rr});
        return TwoCrossedMorphism{
            mk_morphism(res.L, b.L, f.f2.matrix * q2.section),
            mk_morphism(res.M, b.M, f.f1.matrix * q1.section),
            mk_morphism(res.P, b.P, Mat::identity(res.P.prime(), res.P.dim()))};
    };
    return out;
}

TwoCrossedMorphism pullback_factorize(const PullbackResult& pb, const TwoCrossedModule& b,
                                      const TwoCrossedMorphism& f) {
    return pb.factorize(b, f);
}

TwoCrossedMorphism induced_factorize(const InducedResult& ind, const TwoCrossedModule& b,
                                     const TwoCrossedMorphism& f) {
    return ind.factorize(b, f);
}

} // namespace x2alg
