#include "x2alg/x2mod.hpp"

#include "x2alg/errors.hpp"

namespace x2alg {

Vec Lifting::eval_basis(std::size_t i, std::size_t j) const {
    Vec v(ldim);
    for (std::size_t k = 0; k < ldim; ++k) v[k] = at(i, j, k);
    return v;
}

Vec Lifting::eval(const Vec& m0, const Vec& m1) const {
    Vec r(ldim, 0);
    for (std::size_t i = 0; i < mdim; ++i) {
        if (!m0[i]) continue;
        for (std::size_t j = 0; j < mdim; ++j) {
            if (!m1[j]) continue;
            unsigned f = fp::mul(m0[i], m1[j], prime);
            for (std::size_t k = 0; k < ldim; ++k)
                r[k] = fp::add(r[k], fp::mul(f, at(i, j, k), prime), prime);
        }
    }
    return r;
}

bool Lifting::is_zero() const {
    for (unsigned x : c)
        if (x) return false;
    return true;
}

Lifting mk_lifting(unsigned prime, std::size_t mdim, std::size_t ldim,
                   const std::vector<unsigned>& tensor) {
    if (tensor.size() != mdim * mdim * ldim)
        fail(Errc::shape_mismatch, "lifting tensor must have mdim^2 * ldim entries");
    Lifting l{prime, mdim, ldim, tensor};
    for (auto& x : l.c) x %= prime;
    return l;
}

Lifting zero_lifting(unsigned prime, std::size_t mdim, std::size_t ldim) {
    return Lifting{prime, mdim, ldim, std::vector<unsigned>(mdim * mdim * ldim, 0)};
}

TwoCrossedModule mk_2xmod(FiniteAlgebra l, FiniteAlgebra m, FiniteAlgebra p,
                          Morphism d2, Morphism d1, Action actPL, Action actPM,
                          Lifting lift) {
    if (l.prime() != m.prime() || m.prime() != p.prime())
        fail(Errc::shape_mismatch, "levels must share a prime");
    if (!d2.source.same_structure(l) || !d2.target.same_structure(m))
        fail(Errc::endpoint_mismatch, "d2 must map L to M");
    if (!d1.source.same_structure(m) || !d1.target.same_structure(p))
        fail(Errc::endpoint_mismatch, "d1 must map M to P");
    if (!actPL.actor.same_structure(p) || !actPL.acted.same_structure(l))
        fail(Errc::endpoint_mismatch, "actPL must be of P on L");
    if (!actPM.actor.same_structure(p) || !actPM.acted.same_structure(m))
        fail(Errc::endpoint_mismatch, "actPM must be of P on M");
    if (lift.prime != l.prime() || lift.mdim != m.dim() || lift.ldim != l.dim())
        fail(Errc::shape_mismatch, "lifting tensor shape mismatch");
    return TwoCrossedModule{std::move(l), std::move(m), std::move(p), std::move(d2),
                            std::move(d1), std::move(actPL), std::move(actPM),
                            std::move(lift)};
}

namespace {

// Runs `body(tuple) -> pair<Vec, Vec>` over all tuples in the given ranges;
// records a single axiom entry with the first mismatch.
template <typename F>
void check_family(Report& rep, const std::string& name,
                  const std::vector<std::size_t>& dims, F&& body) {
    std::vector<std::size_t> idx(dims.size(), 0);
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t rem = t;
        for (std::size_t a = dims.size(); a-- > 0;) {
            idx[a] = rem % dims[a];
            rem /= dims[a];
        }
        auto [lhs, rhs] = body(idx);
        if (lhs != rhs) {
            rep.fail(name, idx, vec_to_string(lhs), vec_to_string(rhs));
            return;
        }
    }
    rep.pass(name);
}

} // namespace

Report check_2xmod(const TwoCrossedModule& x) {
    Report rep;
    const auto& L = x.L;
    const auto& M = x.M;
    const auto& P = x.P;
    const std::size_t nl = L.dim(), nm = M.dim(), np = P.dim();

    check_family(rep, "complex", {nl}, [&](const auto& t) {
        return std::pair{x.d1.apply(x.d2.apply(L.basis_vec(t[0]))), P.zero()};
    });

    check_family(rep, "equivariance-d2", {np, nl}, [&](const auto& t) {
        Vec lhs = x.d2.apply(x.actPL.eval_basis(t[0], t[1]));
        Vec rhs = x.actPM.eval(P.basis_vec(t[0]), x.d2.apply(L.basis_vec(t[1])));
        return std::pair{lhs, rhs};
    });

    check_family(rep, "equivariance-d1", {np, nm}, [&](const auto& t) {
        Vec lhs = x.d1.apply(x.actPM.eval_basis(t[0], t[1]));
        Vec rhs = P.mul(P.basis_vec(t[0]), x.d1.apply(M.basis_vec(t[1])));
        return std::pair{lhs, rhs};
    });

    check_family(rep, "PL1", {nm, nm}, [&](const auto& t) {
        Vec lhs = x.d2.apply(x.lift.eval_basis(t[0], t[1]));
        Vec rhs = M.sub(M.mul_basis(t[0], t[1]),
                        x.actPM.eval(x.d1.apply(M.basis_vec(t[1])), M.basis_vec(t[0])));
        return std::pair{lhs, rhs};
    });

    check_family(rep, "PL2", {nl, nl}, [&](const auto& t) {
        Vec lhs = x.lift.eval(x.d2.apply(L.basis_vec(t[0])), x.d2.apply(L.basis_vec(t[1])));
        Vec rhs = L.mul_basis(t[0], t[1]);
        return std::pair{lhs, rhs};
    });

    check_family(rep, "PL3", {nm, nm, nm}, [&](const auto& t) {
        Vec lhs = x.lift.eval(M.basis_vec(t[0]), M.mul_basis(t[1], t[2]));
        Vec rhs = L.add(x.lift.eval(M.mul_basis(t[0], t[1]), M.basis_vec(t[2])),
                        x.actPL.eval(x.d1.apply(M.basis_vec(t[2])),
                                     x.lift.eval_basis(t[0], t[1])));
        return std::pair{lhs, rhs};
    });

    check_family(rep, "PL4", {nm, nl}, [&](const auto& t) {
        Vec d2l = x.d2.apply(L.basis_vec(t[1]));
        Vec lhs = L.add(x.lift.eval(M.basis_vec(t[0]), d2l),
                        x.lift.eval(d2l, M.basis_vec(t[0])));
        Vec rhs = x.actPL.eval(x.d1.apply(M.basis_vec(t[0])), L.basis_vec(t[1]));
        return std::pair{lhs, rhs};
    });

    check_family(rep, "PL5-left", {nm, nm, np}, [&](const auto& t) {
        Vec lhs = x.actPL.eval(P.basis_vec(t[2]), x.lift.eval_basis(t[0], t[1]));
        Vec rhs = x.lift.eval(x.actPM.eval_basis(t[2], t[0]), M.basis_vec(t[1]));
        return std::pair{lhs, rhs};
    });

    check_family(rep, "PL5-right", {nm, nm, np}, [&](const auto& t) {
        Vec lhs = x.actPL.eval(P.basis_vec(t[2]), x.lift.eval_basis(t[0], t[1]));
        Vec rhs = x.lift.eval(M.basis_vec(t[0]), x.actPM.eval_basis(t[2], t[1]));
        return std::pair{lhs, rhs};
    });

    return rep;
}

TwoCrossedMorphism identity_2morphism(const TwoCrossedModule& x) {
    return TwoCrossedMorphism{identity_morphism(x.L), identity_morphism(x.M),
                              identity_morphism(x.P)};
}

TwoCrossedMorphism compose(const TwoCrossedMorphism& g, const TwoCrossedMorphism& f) {
    return TwoCrossedMorphism{compose(g.f2, f.f2), compose(g.f1, f.f1),
                              compose(g.f0, f.f0)};
}

Report check_2morphism(const TwoCrossedMorphism& f, const TwoCrossedModule& x,
                       const TwoCrossedModule& y) {
    Report rep;
    bool shapes = f.f2.source.same_structure(x.L) && f.f2.target.same_structure(y.L) &&
                  f.f1.source.same_structure(x.M) && f.f1.target.same_structure(y.M) &&
                  f.f0.source.same_structure(x.P) && f.f0.target.same_structure(y.P);
    if (!shapes) {
        rep.fail("endpoints", {}, "triple endpoints", "given modules");
        return rep;
    }

    check_family(rep, "square-d1", {x.M.dim()}, [&](const auto& t) {
        Vec lhs = f.f0.apply(x.d1.apply(x.M.basis_vec(t[0])));
        Vec rhs = y.d1.apply(f.f1.apply(x.M.basis_vec(t[0])));
        return std::pair{lhs, rhs};
    });

    check_family(rep, "square-d2", {x.L.dim()}, [&](const auto& t) {
        Vec lhs = f.f1.apply(x.d2.apply(x.L.basis_vec(t[0])));
        Vec rhs = y.d2.apply(f.f2.apply(x.L.basis_vec(t[0])));
        return std::pair{lhs, rhs};
    });

    check_family(rep, "action-M", {x.P.dim(), x.M.dim()}, [&](const auto& t) {
        Vec lhs = f.f1.apply(x.actPM.eval_basis(t[0], t[1]));
        Vec rhs = y.actPM.eval(f.f0.apply(x.P.basis_vec(t[0])),
                               f.f1.apply(x.M.basis_vec(t[1])));
        return std::pair{lhs, rhs};
    });

    check_family(rep, "action-L", {x.P.dim(), x.L.dim()}, [&](const auto& t) {
        Vec lhs = f.f2.apply(x.actPL.eval_basis(t[0], t[1]));
        Vec rhs = y.actPL.eval(f.f0.apply(x.P.basis_vec(t[0])),
                               f.f2.apply(x.L.basis_vec(t[1])));
        return std::pair{lhs, rhs};
    });

    check_family(rep, "lifting", {x.M.dim(), x.M.dim()}, [&](const auto& t) {
        Vec lhs = f.f2.apply(x.lift.eval_basis(t[0], t[1]));
        Vec rhs = y.lift.eval(f.f1.apply(x.M.basis_vec(t[0])),
                              f.f1.apply(x.M.basis_vec(t[1])));
        return std::pair{lhs, rhs};
    });

    return rep;
}

DerivedAction derived_action(const TwoCrossedModule& x) {
    const std::size_t nm = x.M.dim(), nl = x.L.dim();
    std::vector<unsigned> tensor(nm * nl * nl, 0);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nl; ++j) {
            Vec v = x.lift.eval(x.M.basis_vec(i), x.d2.apply(x.L.basis_vec(j)));
            for (std::size_t k = 0; k < nl; ++k) tensor[(i * nl + j) * nl + k] = v[k];
        }

    DerivedAction out;
    out.action = mk_action(x.M, x.L, tensor);
    out.xmod = mk_precrossed(x.L, x.M, x.d2, out.action);

    bool ok = true;
    for (std::size_t i = 0; ok && i < nm; ++i)
        for (std::size_t j = 0; ok && j < nl; ++j) {
            Vec d2l = x.d2.apply(x.L.basis_vec(j));
            Vec lhs = x.lift.eval(d2l, x.M.basis_vec(i));
            Vec rhs = x.L.sub(out.action.eval_basis(i, j),
                              x.actPL.eval(x.d1.apply(x.M.basis_vec(i)), x.L.basis_vec(j)));
            if (lhs != rhs) {
                out.pl4_split.fail("PL4-split", {i, j}, vec_to_string(lhs),
                                   vec_to_string(rhs));
                ok = false;
            }
        }
    if (ok) out.pl4_split.pass("PL4-split");
    return out;
}

TwoCrossedModule functor_sk(const PreCrossedModule& x) {
    Ideal ideal = peiffer_ideal(x);
    const Mat& span = ideal.span;
    const std::size_t nl = span.rows(), nm = x.C.dim();
    const unsigned p = x.C.prime();

    // The ideal as an algebra on its canonical basis.
    std::vector<unsigned> lmul(nl * nl * nl, 0);
    for (std::size_t u = 0; u < nl; ++u)
        for (std::size_t v = 0; v < nl; ++v) {
            Vec prod = x.C.mul(span.row(u), span.row(v));
            auto c = coords_in(span, prod);
            if (!c) fail(Errc::internal, "ideal not closed under its own products");
            for (std::size_t w = 0; w < nl; ++w) lmul[(u * nl + v) * nl + w] = (*c)[w];
        }
    FiniteAlgebra L = mk_algebra(p, nl, lmul);

    Mat incl(p, nm, nl);
    for (std::size_t u = 0; u < nl; ++u) incl.set_col(u, span.row(u));

    Action actPL = restriction_action(x.act, L, span);

    // Lifting {m, m'} = m m' - d1(m').m, in ideal coordinates.
    std::vector<unsigned> lt(nm * nm * nl, 0);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec val = x.C.sub(x.C.mul_basis(i, j),
                              x.act.eval(x.bdry.apply(x.C.basis_vec(j)), x.C.basis_vec(i)));
            auto c = coords_in(span, val);
            if (!c) fail(Errc::internal, "lifting value escaped the Peiffer ideal");
            for (std::size_t k = 0; k < nl; ++k) lt[(i * nm + j) * nl + k] = (*c)[k];
        }

    return mk_2xmod(L, x.C, x.R, mk_morphism(L, x.C, incl), x.bdry, actPL, x.act,
                    mk_lifting(p, nm, nl, lt));
}

PreCrossedModule functor_tr(const TwoCrossedModule& x) {
    return mk_precrossed(x.M, x.P, x.d1, x.actPM);
}

TwoCrossedModule functor_alpha(const CrossedModule& x) {
    FiniteAlgebra zero = zero_algebra(x.C.prime());
    return mk_2xmod(zero, x.C, x.R, zero_morphism(zero, x.C), x.bdry,
                    zero_action(x.R, zero), x.act,
                    zero_lifting(x.C.prime(), x.C.dim(), 0));
}

CrossedModule functor_beta(const TwoCrossedModule& x) {
    Mat image = x.d2.matrix.transpose().row_basis();
    Ideal im{x.M, image};
    Quotient q = quotient_by_ideal(x.M, im); // throws NotAnIdeal when im d2 is not one

    // d1 kills im d2, so it factors through the representatives.
    Mat bdry = x.d1.matrix * q.section;
    for (std::size_t r = 0; r < image.rows(); ++r) {
        Vec v = x.d1.apply(image.row(r));
        for (unsigned e : v)
            if (e) fail(Errc::well_definedness, "d1 does not vanish on im d2");
    }
    for (std::size_t i = 0; i < x.P.dim(); ++i)
        for (std::size_t r = 0; r < image.rows(); ++r)
            if (!span_contains(image, x.actPM.eval(x.P.basis_vec(i), image.row(r))))
                fail(Errc::well_definedness, "P does not preserve im d2", {i, r});

    const std::size_t nq = q.algebra.dim(), np = x.P.dim();
    std::vector<unsigned> tensor(np * nq * nq, 0);
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < nq; ++j) {
            Vec moved = q.reduce(x.actPM.eval(x.P.basis_vec(i), q.section.col(j)));
            for (std::size_t k = 0; k < nq; ++k) tensor[(i * nq + j) * nq + k] = moved[k];
        }

    return mk_precrossed(q.algebra, x.P, mk_morphism(q.algebra, x.P, bdry),
                         mk_action(x.P, q.algebra, tensor));
}

Report trivial_lifting_report(const TwoCrossedModule& x) {
    if (!x.lift.is_zero())
        fail(Errc::precondition_failed, "report applies to zero liftings only");
    Report rep;

    Report crossed = check_crossed(functor_tr(x));
    bool ok = crossed.ok();
    if (ok) {
        rep.pass("middle-crossed");
    } else {
        const AxiomCheck* v = crossed.violations().front();
        rep.fail("middle-crossed", v->where, v->lhs, v->rhs);
    }

    ok = true;
    for (std::size_t i = 0; ok && i < x.L.dim(); ++i)
        for (std::size_t j = 0; ok && j < x.L.dim(); ++j)
            if (x.L.mul_basis(i, j) != x.L.zero()) {
                rep.fail("top-zero-multiplication", {i, j},
                         vec_to_string(x.L.mul_basis(i, j)), vec_to_string(x.L.zero()));
                ok = false;
            }
    if (ok) rep.pass("top-zero-multiplication");

    ok = true;
    for (std::size_t i = 0; ok && i < x.M.dim(); ++i)
        for (std::size_t j = 0; ok && j < x.L.dim(); ++j) {
            Vec v = x.actPL.eval(x.d1.apply(x.M.basis_vec(i)), x.L.basis_vec(j));
            if (v != x.L.zero()) {
                rep.fail("boundary-kills-top", {i, j}, vec_to_string(v),
                         vec_to_string(x.L.zero()));
                ok = false;
            }
        }
    if (ok) rep.pass("boundary-kills-top");

    return rep;
}

std::optional<TwoCrossedMorphism> sk_tr_counit(const TwoCrossedModule& y) {
    TwoCrossedModule sk = functor_sk(functor_tr(y));
    const std::size_t nl = sk.L.dim(), nm = y.M.dim(), nyl = y.L.dim();
    const unsigned p = y.L.prime();

    // Spanning pairs (v in <M,M> coordinates of M, target in Y.L): lifted
    // commutators first, then closure under multiplication by M matched with
    // the derived action of M on Y.L.
    std::vector<std::pair<Vec, Vec>> pairs;
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j) {
            Vec v = y.M.sub(y.M.mul_basis(i, j),
                            y.actPM.eval(y.d1.apply(y.M.basis_vec(j)), y.M.basis_vec(i)));
            pairs.emplace_back(std::move(v), y.lift.eval_basis(i, j));
        }
    for (std::size_t round = 0, grown = 1; grown && round <= y.M.dim(); ++round) {
        grown = 0;
        std::size_t cur = pairs.size();
        Mat span(p, 0, nm);
        std::vector<Vec> vs;
        for (const auto& pr : pairs) vs.push_back(pr.first);
        span = span_of(p, nm, vs);
        for (std::size_t t = 0; t < cur; ++t)
            for (std::size_t i = 0; i < nm; ++i) {
                Vec v = y.M.mul(y.M.basis_vec(i), pairs[t].first);
                if (span_contains(span, v)) continue;
                Vec tgt = y.lift.eval(y.M.basis_vec(i), y.d2.apply(pairs[t].second));
                pairs.emplace_back(v, tgt);
                span = span_sum(span, Mat::from_rows(p, nm, {v}));
                grown = 1;
            }
    }

    // Solve F . coords(v) = target for F (Y.L dim x sk.L dim).
    // Rows of the system: one block per L-coordinate of Y.
    Mat ideal_basis = sk.d2.matrix.transpose(); // sk L basis rows in M coordinates
    Mat sys(p, pairs.size() * nyl, nyl * nl);
    Mat rhs(p, pairs.size() * nyl, 1);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        auto c = coords_in(ideal_basis, pairs[t].first);
        if (!c) return std::nullopt;
        for (std::size_t r = 0; r < nyl; ++r) {
            for (std::size_t k = 0; k < nl; ++k) sys.at(t * nyl + r, r * nl + k) = (*c)[k];
            rhs.at(t * nyl + r, 0) = pairs[t].second[r];
        }
    }
    auto sol = sys.solve(rhs.col(0));
    if (!sol) return std::nullopt;

    Mat f2(p, nyl, nl);
    for (std::size_t r = 0; r < nyl; ++r)
        for (std::size_t k = 0; k < nl; ++k) f2.at(r, k) = (*sol)[r * nl + k];

    try {
        return TwoCrossedMorphism{mk_morphism(sk.L, y.L, f2), identity_morphism(y.M),
                                  identity_morphism(y.P)};
    } catch (const Error&) {
        return std::nullopt; // solved map exists linearly but is not multiplicative
    }
}

} // namespace x2alg
