#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "x2alg/errors.hpp"
#include "x2alg/x2mod.hpp"

using namespace x2alg;

namespace {

// {0, I, A, 0, incl} with zero lifting.
TwoCrossedModule ideal_chain(unsigned p) {
    FiniteAlgebra l = zero_algebra(p), m = fixtures::ideal_x(p), a = fixtures::dual_numbers(p);
    Mat span(p, 1, 2);
    span.at(0, 1) = 1;
    return mk_2xmod(l, m, a, zero_morphism(l, m), fixtures::incl_x(p),
                    zero_action(a, l), multiplication_action_on(a, m, span),
                    zero_lifting(p, 1, 0));
}

// {I, I, A, 0, incl} with lifting {x,x} = x: a valid module with nonzero lifting.
TwoCrossedModule ideal_chain_thick(unsigned p) {
    FiniteAlgebra i = fixtures::ideal_x(p), a = fixtures::dual_numbers(p);
    Mat span(p, 1, 2);
    span.at(0, 1) = 1;
    Action mult_on_i = multiplication_action_on(a, i, span);
    return mk_2xmod(i, i, a, zero_morphism(i, i), fixtures::incl_x(p),
                    mult_on_i, mult_on_i, mk_lifting(p, 1, 1, {1}));
}

// Strictly pre-crossed module over F_3 whose skeleton violates PL4:
// (F_3[x]/(x^3), F_3, pi, unit action); <x,x> = -x^2 survives doubling.
PreCrossedModule precrossed_pi3_cubic() {
    FiniteAlgebra m = fixtures::truncated_poly3(3), f = fixtures::field(3);
    Mat bd(3, 1, 3);
    bd.at(0, 0) = 1;
    std::vector<unsigned> t(1 * 3 * 3, 0);
    for (std::size_t j = 0; j < 3; ++j) t[j * 3 + j] = 1; // e.a = a
    return mk_precrossed(m, f, mk_morphism(m, f, bd), mk_action(f, m, t));
}

} // namespace

TEST_CASE("axiom checks on reference modules") {
    SUBCASE("ideal chain with zero lifting is valid") {
        CHECK(check_2xmod(ideal_chain(2)).ok());
        CHECK(check_2xmod(ideal_chain(3)).ok());
    }
    SUBCASE("ideal chain with identity-like lifting is valid") {
        CHECK(check_2xmod(ideal_chain_thick(2)).ok());
        CHECK(check_2xmod(ideal_chain_thick(3)).ok());
    }
    SUBCASE("alpha of a crossed module is valid") {
        CHECK(check_2xmod(functor_alpha(fixtures::ideal_pair(2))).ok());
        CHECK(check_2xmod(functor_alpha(functor_gamma(fixtures::dual_numbers(3)))).ok());
    }
    SUBCASE("alpha of a strictly pre-crossed module fails exactly PL1") {
        Report r = check_2xmod(functor_alpha(fixtures::precrossed_pi(2)));
        CHECK_FALSE(r.ok());
        for (const auto* v : r.violations()) CHECK(v->axiom == "PL1");
        CHECK(r.violations().size() == 1);
    }
}

TEST_CASE("skeleton functor") {
    SUBCASE("skeleton of a crossed module has zero top term") {
        TwoCrossedModule s = functor_sk(fixtures::ideal_pair(2));
        CHECK(s.L.dim() == 0);
        CHECK(check_2xmod(s).ok());
    }
    SUBCASE("skeleton of the pi module is a valid 2-crossed module") {
        for (unsigned p : {2u, 3u}) {
            TwoCrossedModule s = functor_sk(fixtures::precrossed_pi(p));
            CHECK(s.L.dim() == 1);
            CHECK(s.M.same_structure(fixtures::dual_numbers(p)));
            Report r = check_2xmod(s);
            INFO(r.to_string());
            CHECK(r.ok());
            // the lifting hits the Peiffer ideal: {1, x} = x
            CHECK(s.lift.eval_basis(0, 1) == Vec{1});
            CHECK(s.lift.eval_basis(1, 0) == Vec{0});
        }
    }
    SUBCASE("PL1 violation is pinpointed after flipping one lifting entry") {
        TwoCrossedModule s = functor_sk(fixtures::precrossed_pi(2));
        std::vector<unsigned> t = s.lift.c;
        t[(1 * 2 + 0) * 1 + 0] = 1; // {x, 1} := x, contradicting PL1
        TwoCrossedModule bad = mk_2xmod(s.L, s.M, s.P, s.d2, s.d1, s.actPL, s.actPM,
                                        mk_lifting(2, 2, 1, t));
        Report r = check_2xmod(bad);
        CHECK_FALSE(r.ok());
        REQUIRE(r.violations().size() >= 1);
        CHECK(r.violations()[0]->axiom == "PL1");
        CHECK(r.violations()[0]->where == std::vector<std::size_t>{1, 0});
    }
    SUBCASE("over F3 a cubic source violates PL4 and nothing else") {
        TwoCrossedModule s = functor_sk(precrossed_pi3_cubic());
        CHECK(s.L.dim() == 2);
        Report r = check_2xmod(s);
        CHECK_FALSE(r.ok());
        for (const auto* v : r.violations()) CHECK(v->axiom == "PL4");
        CHECK(!r.violations().empty());
    }
    SUBCASE("lifting lands in the Peiffer ideal") {
        for (unsigned p : {2u, 3u}) {
            PreCrossedModule x = fixtures::precrossed_pi(p);
            Ideal pi_ = peiffer_ideal(x);
            TwoCrossedModule s = functor_sk(x);
            for (std::size_t i = 0; i < x.C.dim(); ++i)
                for (std::size_t j = 0; j < x.C.dim(); ++j) {
                    // commutator value in ambient coordinates
                    Vec amb = s.d2.apply(s.lift.eval_basis(i, j));
                    CHECK(pi_.contains(amb));
                    CHECK(amb == x.C.sub(x.C.mul_basis(i, j),
                                         x.act.eval(x.bdry.apply(x.C.basis_vec(j)),
                                                    x.C.basis_vec(i))));
                }
        }
    }
}

TEST_CASE("truncation and the unit of the adjunction") {
    for (unsigned p : {2u, 3u}) {
        PreCrossedModule x = fixtures::precrossed_pi(p);
        CHECK(functor_tr(functor_sk(x)) == x);
        PreCrossedModule y = fixtures::ideal_pair(p);
        CHECK(functor_tr(functor_sk(y)) == y);
    }
}

TEST_CASE("counit candidate of the skeleton adjunction") {
    SUBCASE("on a skeleton it is the identity on the top term") {
        TwoCrossedModule y = functor_sk(fixtures::precrossed_pi(2));
        auto c = sk_tr_counit(y);
        REQUIRE(c.has_value());
        CHECK(check_2morphism(*c, functor_sk(functor_tr(y)), y).ok());
        CHECK(c->f2.matrix == Mat::identity(2, 1));
    }
    SUBCASE("on an alpha image the top map is zero") {
        TwoCrossedModule y = functor_alpha(fixtures::ideal_pair(2));
        auto c = sk_tr_counit(y);
        REQUIRE(c.has_value());
        CHECK(check_2morphism(*c, functor_sk(functor_tr(y)), y).ok());
    }
    SUBCASE("on the thick ideal chain the counit exists") {
        TwoCrossedModule y = ideal_chain_thick(2);
        auto c = sk_tr_counit(y);
        if (c) CHECK(check_2morphism(*c, functor_sk(functor_tr(y)), y).ok());
    }
}

TEST_CASE("derived action") {
    SUBCASE("on a skeleton the derived action is multiplication") {
        TwoCrossedModule s = functor_sk(fixtures::precrossed_pi(2));
        DerivedAction d = derived_action(s);
        CHECK(d.pl4_split.ok());
        CHECK(check_action(d.action).ok());
        CHECK(check_crossed(d.xmod).ok());
        // m.l = {m, d2 l} = m l - d1(l-included).m = m l since d1 kills the ideal
        for (std::size_t i = 0; i < s.M.dim(); ++i)
            for (std::size_t j = 0; j < s.L.dim(); ++j) {
                Vec ml_ambient = s.M.mul(s.M.basis_vec(i), s.d2.apply(s.L.basis_vec(j)));
                CHECK(s.d2.apply(d.action.eval_basis(i, j)) == ml_ambient);
            }
    }
    SUBCASE("zero lifting gives the zero action and forces L^2 = 0") {
        TwoCrossedModule x = ideal_chain(2);
        DerivedAction d = derived_action(x);
        CHECK(d.action.is_zero());
        CHECK(d.pl4_split.ok());
        CHECK(check_crossed(d.xmod).ok());
    }
    SUBCASE("on the thick ideal chain the action matches the lifting") {
        TwoCrossedModule x = ideal_chain_thick(2);
        DerivedAction d = derived_action(x);
        CHECK(d.pl4_split.ok());
        CHECK(check_crossed(d.xmod).ok());
        // m.l = {m, d2 l} = {x, 0} = 0
        CHECK(d.action.is_zero());
    }
}

TEST_CASE("alpha and beta functors") {
    SUBCASE("beta after alpha is the identity on the nose") {
        for (const CrossedModule& x : {fixtures::ideal_pair(2),
                                       functor_gamma(fixtures::dual_numbers(3))}) {
            CrossedModule back = functor_beta(functor_alpha(x));
            CHECK(back == x);
        }
    }
    SUBCASE("beta of a skeleton is the crossed-module reflection") {
        PreCrossedModule x = fixtures::precrossed_pi(2);
        CrossedModule refl = functor_beta(functor_sk(x));
        CHECK(check_crossed(refl).ok());
        Quotient q = quotient_by_ideal(x.C, peiffer_ideal(x));
        CHECK(refl.C == q.algebra);
        CHECK(refl.bdry.matrix == (x.bdry.matrix * q.section));
    }
    SUBCASE("beta of the thick ideal chain quotients by the boundary image") {
        TwoCrossedModule x = ideal_chain_thick(2); // d2 = 0, so beta = Tr
        CrossedModule b = functor_beta(x);
        CHECK(b.C == x.M);
    }
}

TEST_CASE("trivial lifting report") {
    SUBCASE("valid zero-lifting modules pass all remarks") {
        CHECK(trivial_lifting_report(ideal_chain(2)).ok());
        CHECK(trivial_lifting_report(functor_alpha(fixtures::ideal_pair(2))).ok());
    }
    SUBCASE("pre-crossed-only middle is flagged") {
        TwoCrossedModule bad = functor_alpha(fixtures::precrossed_pi(2));
        Report r = trivial_lifting_report(bad);
        CHECK_FALSE(r.ok());
        bool mid = false;
        for (const auto* v : r.violations())
            if (v->axiom == "middle-crossed") mid = true;
        CHECK(mid);
        CHECK_FALSE(check_2xmod(bad).ok());
    }
    SUBCASE("nonzero lifting is a precondition failure") {
        CHECK_THROWS_WITH_AS(trivial_lifting_report(ideal_chain_thick(2)),
                             doctest::Contains("PreconditionFailed"), Error);
    }
}

TEST_CASE("morphism checks") {
    TwoCrossedModule x = functor_sk(fixtures::precrossed_pi(2));
    SUBCASE("identity is valid") {
        CHECK(check_2morphism(identity_2morphism(x), x, x).ok());
    }
    SUBCASE("zeroed top map breaks lifting compatibility") {
        TwoCrossedMorphism f = identity_2morphism(x);
        f.f2 = zero_morphism(x.L, x.L);
        Report r = check_2morphism(f, x, x);
        CHECK_FALSE(r.ok());
        bool lift = false;
        for (const auto* v : r.violations())
            if (v->axiom == "lifting") lift = true;
        CHECK(lift);
    }
    SUBCASE("mismatched endpoints short-circuit") {
        TwoCrossedMorphism f = identity_2morphism(x);
        Report r = check_2morphism(f, x, ideal_chain(2));
        CHECK_FALSE(r.ok());
        CHECK(r.violations()[0]->axiom == "endpoints");
    }
    SUBCASE("composition of valid morphisms stays valid") {
        TwoCrossedMorphism id2 = compose(identity_2morphism(x), identity_2morphism(x));
        CHECK(check_2morphism(id2, x, x).ok());
    }
}

TEST_CASE("shape validation of the constructor") {
    FiniteAlgebra l = zero_algebra(2), m = fixtures::ideal_x(2), a = fixtures::dual_numbers(2);
    // d1 with the wrong source
    CHECK_THROWS_WITH_AS(
        mk_2xmod(l, m, a, zero_morphism(l, m), fixtures::proj_pi(2), zero_action(a, l),
                 multiplication_action(a), zero_lifting(2, 1, 0)),
        doctest::Contains("EndpointMismatch"), Error);
}
