#include "x2alg/catcheck.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "x2alg/errors.hpp"

namespace x2alg {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > kSat / b ? kSat : a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp--) r = sat_mul(r, base);
    return r;
}

void ensure_bound(std::uint64_t size, const SearchLimit& lim) {
    if (size <= lim.max_candidates) return;
    Error e(Errc::search_space_too_large,
            "candidate space " +
                (size == kSat ? std::string("(overflowing)") : std::to_string(size)) +
                " exceeds limit " + std::to_string(lim.max_candidates));
    e.size = size;
    throw e;
}

// Runs fn on every index tuple with idx[j] < sizes[j]; no-op when any size is 0.
template <typename F>
void product_indices(const std::vector<std::size_t>& sizes, F&& fn) {
    for (std::size_t s : sizes)
        if (s == 0) return;
    std::vector<std::size_t> idx(sizes.size(), 0);
    for (;;) {
        fn(idx);
        std::size_t j = 0;
        for (; j < sizes.size(); ++j) {
            if (++idx[j] < sizes[j]) break;
            idx[j] = 0;
        }
        if (j == sizes.size()) return;
    }
}

Vec axpy(unsigned p, Vec v, unsigned c, const Vec& w) {
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = fp::add(v[j], fp::mul(c, w[j], p), p);
    return v;
}

// All solutions of A v = rhs: particular solution plus every nullspace combination.
std::vector<Vec> affine_solutions(const Mat& a, const Vec& rhs) {
    std::optional<Vec> part = a.solve(rhs);
    if (!part) return {};
    Mat null = a.nullspace_basis();
    std::vector<Vec> out;
    for (const Vec& c : all_vectors(a.prime(), null.rows())) {
        Vec v = *part;
        for (std::size_t r = 0; r < null.rows(); ++r) v = axpy(a.prime(), std::move(v), c[r], null.row(r));
        out.push_back(std::move(v));
    }
    return out;
}

bool triple_less(const TwoCrossedMorphism& a, const TwoCrossedMorphism& b) {
    if (a.f0.matrix != b.f0.matrix) return a.f0.matrix < b.f0.matrix;
    if (a.f1.matrix != b.f1.matrix) return a.f1.matrix < b.f1.matrix;
    return a.f2.matrix < b.f2.matrix;
}

Morphism vertical_base(const FiniteAlgebra& s, const FiniteAlgebra& t) {
    return Morphism{s, t, Mat::identity(s.prime(), s.dim())};
}

void note(Report& rep, const std::string& name, const std::string& info) {
    rep.checks.push_back({name, true, {}, info, info});
}

// Shared core of the two triple enumerations.
std::vector<TwoCrossedMorphism> enum_2x_impl(const TwoCrossedModule& x, const TwoCrossedModule& y,
                                             const Morphism* base, const SearchLimit& lim) {
    std::vector<TwoCrossedMorphism> out;
    if (x.P.prime() != y.P.prime()) return out;
    unsigned p = x.P.prime();

    std::uint64_t bound = sat_mul(sat_pow(p, x.L.dim() * y.L.dim()),
                                  sat_pow(p, x.M.dim() * y.M.dim()));
    if (!base) bound = sat_mul(bound, sat_pow(p, x.P.dim() * y.P.dim()));
    ensure_bound(bound, lim);

    std::vector<Morphism> bases;
    if (base) {
        if (!base->source.same_structure(x.P) || !base->target.same_structure(y.P))
            fail(Errc::endpoint_mismatch, "fixed base endpoints do not match the modules");
        bases.push_back(*base);
    } else {
        bases = enum_alg_morphisms(x.P, y.P, lim);
    }

    for (const Morphism& f0 : bases) {
        std::vector<std::vector<Vec>> cols1(x.M.dim());
        bool solvable = true;
        for (std::size_t j = 0; j < x.M.dim() && solvable; ++j) {
            cols1[j] = affine_solutions(y.d1.matrix, f0.apply(x.d1.matrix.col(j)));
            solvable = !cols1[j].empty();
        }
        if (!solvable) continue;
        std::vector<std::size_t> sizes1(x.M.dim());
        for (std::size_t j = 0; j < x.M.dim(); ++j) sizes1[j] = cols1[j].size();

        product_indices(sizes1, [&](const std::vector<std::size_t>& i1) {
            Mat f1m(p, y.M.dim(), x.M.dim());
            for (std::size_t j = 0; j < x.M.dim(); ++j) f1m.set_col(j, cols1[j][i1[j]]);
            if (!multiplicative_matrix(x.M, y.M, f1m)) return;

            std::vector<std::vector<Vec>> cols2(x.L.dim());
            for (std::size_t j = 0; j < x.L.dim(); ++j) {
                cols2[j] = affine_solutions(y.d2.matrix, f1m.apply(x.d2.matrix.col(j)));
                if (cols2[j].empty()) return;
            }
            std::vector<std::size_t> sizes2(x.L.dim());
            for (std::size_t j = 0; j < x.L.dim(); ++j) sizes2[j] = cols2[j].size();

            product_indices(sizes2, [&](const std::vector<std::size_t>& i2) {
                Mat f2m(p, y.L.dim(), x.L.dim());
                for (std::size_t j = 0; j < x.L.dim(); ++j) f2m.set_col(j, cols2[j][i2[j]]);
                if (!multiplicative_matrix(x.L, y.L, f2m)) return;
                TwoCrossedMorphism t{Morphism{x.L, y.L, f2m}, Morphism{x.M, y.M, f1m}, f0};
                if (check_2morphism(t, x, y).ok()) out.push_back(std::move(t));
            });
        });
    }
    std::sort(out.begin(), out.end(), triple_less);
    return out;
}

} // namespace

std::vector<Morphism> enum_alg_morphisms(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                         const SearchLimit& lim) {
    std::vector<Morphism> out;
    if (a.prime() != b.prime()) return out;
    unsigned p = a.prime();
    std::size_t n = a.dim(), m = b.dim();
    ensure_bound(sat_pow(p, std::uint64_t(n) * m), lim);

    // Pair (i, k) is checkable once every column in the support of e_i e_k,
    // plus columns i and k themselves, has been assigned.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs_at(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i; k < n; ++k) {
            std::size_t depth = k;
            Vec prod = a.mul_basis(i, k);
            for (std::size_t t = 0; t < n; ++t)
                if (prod[t] != 0) depth = std::max(depth, t);
            pairs_at[depth].push_back({i, k});
        }

    std::vector<Vec> images = all_vectors(p, m);
    Mat cur(p, m, n);

    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            out.push_back(Morphism{a, b, cur});
            return;
        }
        for (const Vec& img : images) {
            cur.set_col(j, img);
            bool ok = true;
            for (auto [i, k] : pairs_at[j]) {
                if (cur.apply(a.mul_basis(i, k)) != b.mul(cur.col(i), cur.col(k))) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, j + 1);
        }
    };
    rec(rec, 0);

    std::sort(out.begin(), out.end(),
              [](const Morphism& x, const Morphism& y) { return x.matrix < y.matrix; });
    return out;
}

std::vector<TwoCrossedMorphism> enum_2x_morphisms(const TwoCrossedModule& x,
                                                  const TwoCrossedModule& y,
                                                  const SearchLimit& lim) {
    return enum_2x_impl(x, y, nullptr, lim);
}

std::vector<TwoCrossedMorphism> enum_2x_morphisms_over(const TwoCrossedModule& x,
                                                       const TwoCrossedModule& y,
                                                       const Morphism& base,
                                                       const SearchLimit& lim) {
    return enum_2x_impl(x, y, &base, lim);
}

Report check_adjunction_pullback_induced(const Morphism& phi, const TwoCrossedModule& d,
                                         const TwoCrossedModule& b, const SearchLimit& lim) {
    if (!phi.source.same_structure(d.P))
        fail(Errc::endpoint_mismatch, "D must live over the source of phi");
    if (!phi.target.same_structure(b.P))
        fail(Errc::endpoint_mismatch, "B must live over the target of phi");
    bool mono = is_mono(phi), epi = is_epi(phi);
    if (!mono && !epi)
        fail(Errc::precondition_failed, "phi is neither injective nor surjective");

    Report rep;
    std::vector<TwoCrossedMorphism> hom_phi = enum_2x_morphisms_over(d, b, phi, lim);

    if (mono) {
        PullbackResult pb = pullback_2xmod(phi, b);
        std::vector<TwoCrossedMorphism> hom_v =
            enum_2x_morphisms_over(d, pb.result, vertical_base(d.P, pb.result.P), lim);
        if (hom_v.size() != hom_phi.size())
            rep.fail("pullback-side-cardinality", {}, std::to_string(hom_v.size()),
                     std::to_string(hom_phi.size()));
        else
            note(rep, "pullback-side-cardinality", "count=" + std::to_string(hom_v.size()));

        for (std::size_t i = 0; i < hom_phi.size(); ++i) {
            TwoCrossedMorphism psi = pullback_factorize(pb, d, hom_phi[i]);
            if (!check_2morphism(psi, d, pb.result).ok() ||
                !(compose(pb.canonical, psi) == hom_phi[i]))
                fail(Errc::bijection_failure,
                     "pullback side: composing the factorization with the canonical "
                     "morphism does not recover element " + std::to_string(i), {i});
        }
        for (std::size_t i = 0; i < hom_v.size(); ++i) {
            TwoCrossedMorphism back =
                pullback_factorize(pb, d, compose(pb.canonical, hom_v[i]));
            if (!(back == hom_v[i]))
                fail(Errc::bijection_failure,
                     "pullback side: factorizing the canonical composite does not "
                     "recover element " + std::to_string(i), {i});
        }
        note(rep, "pullback-side-composites-identity",
             "elements=" + std::to_string(hom_phi.size() + hom_v.size()));
    }

    if (epi) {
        InducedResult ind = induced_2xmod_epi(phi, d);
        std::vector<TwoCrossedMorphism> hom_v =
            enum_2x_morphisms_over(ind.result, b, vertical_base(ind.result.P, b.P), lim);
        if (hom_v.size() != hom_phi.size())
            rep.fail("induced-side-cardinality", {}, std::to_string(hom_v.size()),
                     std::to_string(hom_phi.size()));
        else
            note(rep, "induced-side-cardinality", "count=" + std::to_string(hom_v.size()));

        for (std::size_t i = 0; i < hom_phi.size(); ++i) {
            TwoCrossedMorphism psi = induced_factorize(ind, b, hom_phi[i]);
            if (!check_2morphism(psi, ind.result, b).ok() ||
                !(compose(psi, ind.canonical) == hom_phi[i]))
                fail(Errc::bijection_failure,
                     "induced side: composing the factorization with the canonical "
                     "morphism does not recover element " + std::to_string(i), {i});
        }
        for (std::size_t i = 0; i < hom_v.size(); ++i) {
            TwoCrossedMorphism back =
                induced_factorize(ind, b, compose(hom_v[i], ind.canonical));
            if (!(back == hom_v[i]))
                fail(Errc::bijection_failure,
                     "induced side: factorizing the canonical composite does not "
                     "recover element " + std::to_string(i), {i});
        }
        note(rep, "induced-side-composites-identity",
             "elements=" + std::to_string(hom_phi.size() + hom_v.size()));
    }
    return rep;
}

Report check_adjunction_g1(const TwoCrossedModule& x, const FiniteAlgebra& r,
                           const SearchLimit& lim) {
    Report rep;
    FiniteAlgebra base = functor_delta(functor_beta(x));
    TwoCrossedModule ar = functor_alpha(functor_gamma(r));

    std::vector<Morphism> lhs = enum_alg_morphisms(base, r, lim);
    std::vector<TwoCrossedMorphism> rhs = enum_2x_morphisms(x, ar, lim);

    if (lhs.size() != rhs.size())
        rep.fail("cardinality", {}, std::to_string(lhs.size()), std::to_string(rhs.size()));
    else
        note(rep, "cardinality", "count=" + std::to_string(lhs.size()));

    auto transpose_of = [&](const Morphism& f0) {
        return TwoCrossedMorphism{zero_morphism(x.L, ar.L),
                                  Morphism{x.M, ar.M, f0.matrix * x.d1.matrix},
                                  Morphism{x.P, ar.P, f0.matrix}};
    };

    for (std::size_t i = 0; i < lhs.size(); ++i) {
        TwoCrossedMorphism t = transpose_of(lhs[i]);
        if (!check_2morphism(t, x, ar).ok())
            fail(Errc::bijection_failure,
                 "transpose of base map " + std::to_string(i) + " is not a valid morphism", {i});
        if (std::find(rhs.begin(), rhs.end(), t) == rhs.end())
            fail(Errc::bijection_failure,
                 "transpose of base map " + std::to_string(i) + " missing from the module side",
                 {i});
    }
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        Morphism f0{base, r, rhs[i].f0.matrix};
        bool found = false;
        for (const Morphism& g : lhs)
            if (g.matrix == f0.matrix) found = true;
        if (!found)
            fail(Errc::bijection_failure,
                 "base component of module morphism " + std::to_string(i) +
                     " missing from the algebra side", {i});
        if (!(transpose_of(f0) == rhs[i]))
            fail(Errc::bijection_failure,
                 "module morphism " + std::to_string(i) +
                     " is not the transpose of its own base component", {i});
    }
    note(rep, "composites-identity", "elements=" + std::to_string(lhs.size() + rhs.size()));
    return rep;
}

Report check_cartesian(const TwoCrossedMorphism& f, const TwoCrossedModule& y,
                       const TwoCrossedModule& x, const std::vector<TwoCrossedModule>& family,
                       const SearchLimit& lim) {
    Report rep;
    if (!check_2morphism(f, y, x).ok()) {
        rep.fail("morphism-valid", {}, "f fails its own validity check", "valid morphism");
        return rep;
    }
    note(rep, "morphism-valid", "");
    const Morphism& u = f.f0;

    for (std::size_t iz = 0; iz < family.size(); ++iz) {
        const TwoCrossedModule& z = family[iz];
        std::string name = "cartesian-lift/family[" + std::to_string(iz) + "]";
        std::size_t tested = 0;
        bool okz = true;

        std::vector<Morphism> vs = enum_alg_morphisms(z.P, y.P, lim);
        for (std::size_t iv = 0; iv < vs.size() && okz; ++iv) {
            Morphism uv{z.P, x.P, u.matrix * vs[iv].matrix};
            std::vector<TwoCrossedMorphism> thetas = enum_2x_morphisms_over(z, x, uv, lim);
            if (thetas.empty()) continue;
            std::vector<TwoCrossedMorphism> psis = enum_2x_morphisms_over(z, y, vs[iv], lim);
            for (std::size_t it = 0; it < thetas.size() && okz; ++it) {
                std::size_t count = 0;
                for (const TwoCrossedMorphism& psi : psis)
                    if (compose(f, psi) == thetas[it]) ++count;
                ++tested;
                if (count != 1) {
                    rep.fail(name, {iz, iv, it}, "solutions=" + std::to_string(count), "1");
                    okz = false;
                }
            }
        }
        if (okz) note(rep, name, "tested=" + std::to_string(tested));
    }
    return rep;
}

Report check_cocartesian(const TwoCrossedMorphism& f, const TwoCrossedModule& z,
                         const TwoCrossedModule& y, const std::vector<TwoCrossedModule>& family,
                         const SearchLimit& lim) {
    Report rep;
    if (!check_2morphism(f, z, y).ok()) {
        rep.fail("morphism-valid", {}, "f fails its own validity check", "valid morphism");
        return rep;
    }
    note(rep, "morphism-valid", "");
    const Morphism& v = f.f0;

    std::size_t considered = 0;
    for (std::size_t ix = 0; ix < family.size(); ++ix) {
        const TwoCrossedModule& t = family[ix];
        if (!t.P.same_structure(y.P)) continue; // quantifier ranges over Y's base only
        ++considered;
        std::string name = "cocartesian-lift/family[" + std::to_string(ix) + "]";
        std::size_t tested = 0;
        bool okx = true;

        std::vector<TwoCrossedMorphism> thetas =
            enum_2x_morphisms_over(z, t, Morphism{z.P, t.P, v.matrix}, lim);
        std::vector<TwoCrossedMorphism> psis =
            enum_2x_morphisms_over(y, t, vertical_base(y.P, t.P), lim);
        for (std::size_t it = 0; it < thetas.size() && okx; ++it) {
            std::size_t count = 0;
            for (const TwoCrossedMorphism& psi : psis)
                if (compose(psi, f) == thetas[it]) ++count;
            ++tested;
            if (count != 1) {
                rep.fail(name, {ix, it}, "solutions=" + std::to_string(count), "1");
                okx = false;
            }
        }
        if (okx) note(rep, name, "tested=" + std::to_string(tested));
    }
    note(rep, "targets-over-same-base", "count=" + std::to_string(considered));
    return rep;
}

Report check_free_2xmod(const TwoCrossedModule& x, const std::vector<Vec>& theta,
                        const std::vector<TwoCrossedModule>& targets, const SearchLimit& lim) {
    for (const Vec& g : theta)
        if (g.size() != x.L.dim())
            fail(Errc::shape_mismatch, "basis image has wrong dimension");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const TwoCrossedModule& t = targets[i];
        if (!(t.M.same_structure(x.M) && t.P.same_structure(x.P) &&
              t.d1.matrix == x.d1.matrix && t.actPM.ops == x.actPM.ops))
            fail(Errc::precondition_failed,
                 "target " + std::to_string(i) + " does not share middle and base structure");
    }

    Report rep;
    for (std::size_t it = 0; it < targets.size(); ++it) {
        const TwoCrossedModule& t = targets[it];
        unsigned p = x.L.prime();

        // candidate lifts: columns solve the boundary square, then the full
        // triple (Phi, id, id) must be a valid morphism
        std::vector<std::vector<Vec>> cols(x.L.dim());
        std::vector<std::size_t> sizes(x.L.dim());
        bool solvable = true;
        for (std::size_t j = 0; j < x.L.dim(); ++j) {
            cols[j] = affine_solutions(t.d2.matrix, x.d2.matrix.col(j));
            sizes[j] = cols[j].size();
            if (cols[j].empty()) solvable = false;
        }

        std::vector<Mat> candidates;
        if (solvable) {
            std::uint64_t space = 1;
            for (std::size_t s : sizes) space = sat_mul(space, s);
            ensure_bound(space, lim);
            product_indices(sizes, [&](const std::vector<std::size_t>& idx) {
                Mat m(p, t.L.dim(), x.L.dim());
                for (std::size_t j = 0; j < x.L.dim(); ++j) m.set_col(j, cols[j][idx[j]]);
                if (!multiplicative_matrix(x.L, t.L, m)) return;
                TwoCrossedMorphism tr{Morphism{x.L, t.L, m},
                                      Morphism{x.M, t.M, Mat::identity(p, x.M.dim())},
                                      Morphism{x.P, t.P, Mat::identity(p, x.P.dim())}};
                if (check_2morphism(tr, x, t).ok()) candidates.push_back(std::move(m));
            });
        }

        std::string tname = "/target[" + std::to_string(it) + "]";
        if (candidates.size() == 1)
            note(rep, "universal-boundary" + tname, "");
        else
            rep.fail("universal-boundary" + tname, {it},
                     "solutions=" + std::to_string(candidates.size()), "1");

        // basis-image condition: for every compatible theta', a unique
        // candidate sends theta to theta'
        std::vector<std::vector<Vec>> imgs(theta.size());
        std::vector<std::size_t> isz(theta.size());
        bool any = true;
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < theta.size(); ++i) {
            imgs[i] = affine_solutions(t.d2.matrix, x.d2.apply(theta[i]));
            isz[i] = imgs[i].size();
            combos = sat_mul(combos, isz[i]);
            if (imgs[i].empty()) any = false;
        }
        bool okb = true;
        std::size_t tested = 0;
        if (any) {
            ensure_bound(combos, lim);
            product_indices(isz, [&](const std::vector<std::size_t>& idx) {
                if (!okb) return;
                std::size_t count = 0;
                for (const Mat& m : candidates) {
                    bool match = true;
                    for (std::size_t i = 0; i < theta.size() && match; ++i)
                        if (m.apply(theta[i]) != imgs[i][idx[i]]) match = false;
                    if (match) ++count;
                }
                ++tested;
                if (count != 1) {
                    rep.fail("universal-basis" + tname, {it, tested - 1},
                             "solutions=" + std::to_string(count), "1");
                    okb = false;
                }
            });
        }
        if (okb) note(rep, "universal-basis" + tname, "tested=" + std::to_string(tested));
    }
    return rep;
}

Report check_free_module(const FiniteAlgebra& c2, const Action& act,
                         const std::vector<Vec>& basis_images) {
    if (!act.acted.same_structure(c2))
        fail(Errc::shape_mismatch, "action must act on the given module");
    for (const Vec& g : basis_images)
        if (g.size() != c2.dim()) fail(Errc::shape_mismatch, "generator has wrong dimension");

    Report rep;
    std::size_t k = basis_images.size(), n1 = act.actor.dim();
    if (c2.dim() == k * n1)
        note(rep, "dimension", "dim=" + std::to_string(c2.dim()));
    else
        rep.fail("dimension", {}, std::to_string(c2.dim()),
                 std::to_string(k) + "*" + std::to_string(n1) + "=" + std::to_string(k * n1));

    Mat m(c2.prime(), c2.dim(), k * n1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            m.set_col(i * n1 + j, act.ops[j].apply(basis_images[i]));
    std::size_t rank = m.rank();
    if (m.rows() == m.cols() && rank == m.rows())
        note(rep, "bijective", "rank=" + std::to_string(rank));
    else
        rep.fail("bijective", {}, "rank=" + std::to_string(rank),
                 "full rank " + std::to_string(c2.dim()) + " on a square matrix");
    return rep;
}

namespace {

Report vertical_iso_report(const TwoCrossedModule& a, const TwoCrossedModule& b,
                           const std::string& what, const SearchLimit& lim) {
    Report rep;
    if (a.L.dim() != b.L.dim() || a.M.dim() != b.M.dim())
        fail(Errc::no_isomorphism_found,
             what + ": level dimensions differ, no vertical isomorphism exists");

    std::vector<TwoCrossedMorphism> cands =
        enum_2x_morphisms_over(a, b, vertical_base(a.P, b.P), lim);
    for (const TwoCrossedMorphism& psi : cands) {
        std::optional<Mat> inv2 = psi.f2.matrix.inverse();
        std::optional<Mat> inv1 = psi.f1.matrix.inverse();
        if (!inv2 || !inv1) continue;
        TwoCrossedMorphism back{Morphism{b.L, a.L, *inv2}, Morphism{b.M, a.M, *inv1},
                                vertical_base(b.P, a.P)};
        if (!check_2morphism(back, b, a).ok()) continue;
        note(rep, what + "/vertical-isomorphism", "candidates=" + std::to_string(cands.size()));
        return rep;
    }
    fail(Errc::no_isomorphism_found, what + ": no vertical isomorphism among " +
                                         std::to_string(cands.size()) + " candidates");
}

} // namespace

Report check_pullback_naturality(const Morphism& phi, const Morphism& phi2,
                                 const TwoCrossedModule& x, const SearchLimit& lim) {
    if (!phi.target.same_structure(phi2.source))
        fail(Errc::endpoint_mismatch, "morphisms are not composable");
    PullbackResult inner = pullback_2xmod(phi2, x);
    PullbackResult iterated = pullback_2xmod(phi, inner.result);
    PullbackResult onestep = pullback_2xmod(Morphism{phi.source, phi2.target,
                                                     phi2.matrix * phi.matrix}, x);
    return vertical_iso_report(iterated.result, onestep.result, "pullback-naturality", lim);
}

Report check_induced_naturality(const Morphism& phi, const Morphism& phi2,
                                const TwoCrossedModule& d, const SearchLimit& lim) {
    if (!phi.target.same_structure(phi2.source))
        fail(Errc::endpoint_mismatch, "morphisms are not composable");
    InducedResult inner = induced_2xmod_epi(phi, d);
    InducedResult iterated = induced_2xmod_epi(phi2, inner.result);
    InducedResult onestep = induced_2xmod_epi(Morphism{phi.source, phi2.target,
                                                       phi2.matrix * phi.matrix}, d);
    return vertical_iso_report(iterated.result, onestep.result, "induced-naturality", lim);
}

} // namespace x2alg
