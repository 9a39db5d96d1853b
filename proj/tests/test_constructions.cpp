#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "x2alg/constructions.hpp"
#include "x2alg/errors.hpp"

using namespace x2alg;

namespace {

// {0, I, R, 0, incl} with zero lifting over R, I given by a span.
TwoCrossedModule ideal_chain_over(const FiniteAlgebra& r, const Mat& span) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < span.rows(); ++i) rows.push_back(span.row(i));
    Ideal ideal = ideal_generated(r, rows);
    std::vector<unsigned> mul(ideal.dim() * ideal.dim() * ideal.dim(), 0);
    for (std::size_t i = 0; i < ideal.dim(); ++i)
        for (std::size_t j = 0; j < ideal.dim(); ++j) {
            Vec prod = r.mul(ideal.span.row(i), ideal.span.row(j));
            Vec co = *coords_in(ideal.span, prod);
            for (std::size_t k = 0; k < ideal.dim(); ++k)
                mul[(i * ideal.dim() + j) * ideal.dim() + k] = co[k];
        }
    FiniteAlgebra m = mk_algebra(r.prime(), ideal.dim(), mul);
    Mat inclm = ideal.span.transpose();
    FiniteAlgebra l = zero_algebra(r.prime());
    return mk_2xmod(l, m, r, zero_morphism(l, m), mk_morphism(m, r, inclm),
                    zero_action(r, l), multiplication_action_on(r, m, ideal.span),
                    zero_lifting(r.prime(), ideal.dim(), 0));
}

TwoCrossedModule alpha_gamma(const FiniteAlgebra& a) {
    return functor_alpha(functor_gamma(a));
}

// mono F2[x]/(x^2) -> F2[x]/(x^3), 1 -> 1, x -> x^2
Morphism square_embed() {
    Mat m(2, 3, 2);
    m.at(0, 0) = 1;
    m.at(2, 1) = 1;
    return mk_morphism(fixtures::dual_numbers(2), fixtures::truncated_poly3(2), m);
}

} // namespace

TEST_CASE("pullback of a 2-crossed module") {
    SUBCASE("rejects non-monomorphisms") {
        CHECK_THROWS_WITH_AS(pullback_2xmod(fixtures::proj_pi(2), alpha_gamma(fixtures::field(2))),
                             doctest::Contains("NotMono"), Error);
    }
    SUBCASE("along the identity it is isomorphic to the input") {
        for (const TwoCrossedModule& x :
             {ideal_chain_over(fixtures::dual_numbers(2), fixtures::incl_x(2).matrix.transpose()),
              alpha_gamma(fixtures::dual_numbers(2)),
              functor_sk(fixtures::precrossed_pi(2))}) {
            PullbackResult pb = pullback_2xmod(identity_morphism(x.P), x);
            CHECK(check_2xmod(pb.result).ok());
            CHECK(check_2morphism(pb.canonical, pb.result, x).ok());
            CHECK(pb.result.M.dim() == x.M.dim());
            CHECK(pb.result.L.same_structure(x.L));
        }
    }
    SUBCASE("ideal chain pulls back to the preimage ideal") {
        FiniteAlgebra r = fixtures::truncated_poly3(2), s = fixtures::dual_numbers(2);
        Mat span(2, 1, 3);
        span.at(0, 2) = 1; // I = (x^2)
        TwoCrossedModule x = ideal_chain_over(r, span);
        Morphism phi = square_embed();
        PullbackResult pb = pullback_2xmod(phi, x);
        CHECK(check_2xmod(pb.result).ok());
        CHECK(check_2morphism(pb.canonical, pb.result, x).ok());

        // the middle term is phi^{-1}(I) through the base projection
        std::vector<Vec> pre;
        for (const Vec& v : oracles::all_vectors(2, 2))
            if (span_contains(span, phi.apply(v))) pre.push_back(v);
        Mat pre_span = span_of(2, 2, pre);
        CHECK(pb.result.M.dim() == pre_span.rows());
        std::vector<Vec> images;
        for (std::size_t i = 0; i < pb.result.M.dim(); ++i)
            images.push_back(pb.result.d1.apply(pb.result.M.basis_vec(i)));
        CHECK(span_of(2, 2, images) == pre_span);
        // the projection identifies multiplications exactly
        for (std::size_t i = 0; i < pb.result.M.dim(); ++i)
            for (std::size_t j = 0; j < pb.result.M.dim(); ++j)
                CHECK(pb.result.d1.apply(pb.result.M.mul_basis(i, j)) ==
                      s.mul(images[i], images[j]));
        // and it is injective on the middle term
        CHECK(kernel_image(pb.result.d1).is_mono);
    }
    SUBCASE("zero ideal pulls back to the zero middle term") {
        FiniteAlgebra r = fixtures::dual_numbers(2);
        TwoCrossedModule x = ideal_chain_over(r, Mat(2, 0, 2));
        PullbackResult pb = pullback_2xmod(fixtures::unit_u(2), x);
        CHECK(pb.result.M.dim() == 0);
        CHECK(check_2xmod(pb.result).ok());
    }
    SUBCASE("the unit embedding collapses the ideal chain") {
        TwoCrossedModule x =
            ideal_chain_over(fixtures::dual_numbers(2), fixtures::incl_x(2).matrix.transpose());
        PullbackResult pb = pullback_2xmod(fixtures::unit_u(2), x);
        CHECK(pb.result.M.dim() == 0);
        CHECK(pb.result.P.same_structure(fixtures::field(2)));
        CHECK(check_2xmod(pb.result).ok());
    }
    SUBCASE("factorization satisfies the commuting identities exactly") {
        TwoCrossedModule x = alpha_gamma(fixtures::dual_numbers(2));
        Morphism u = fixtures::unit_u(2);
        PullbackResult pb = pullback_2xmod(u, x);
        CHECK(check_2xmod(pb.result).ok());

        TwoCrossedModule b = alpha_gamma(fixtures::field(2));
        TwoCrossedMorphism f{zero_morphism(b.L, x.L), u, u};
        CHECK(check_2morphism(f, b, x).ok());
        TwoCrossedMorphism psi = pullback_factorize(pb, b, f);
        CHECK(check_2morphism(psi, b, pb.result).ok());
        TwoCrossedMorphism round = compose(pb.canonical, psi);
        CHECK(round.f2.matrix == f.f2.matrix);
        CHECK(round.f1.matrix == f.f1.matrix);
        CHECK(round.f0.matrix == f.f0.matrix);

        // factorizing the canonical morphism itself gives the identity
        TwoCrossedMorphism self = pullback_factorize(pb, pb.result, pb.canonical);
        CHECK(self.f1.matrix == Mat::identity(2, pb.result.M.dim()));
        CHECK(self.f2.matrix == Mat::identity(2, pb.result.L.dim()));
    }
    SUBCASE("factorization rejects morphisms over a different base map") {
        TwoCrossedModule x = alpha_gamma(fixtures::dual_numbers(2));
        PullbackResult pb = pullback_2xmod(fixtures::unit_u(2), x);
        TwoCrossedMorphism bad{zero_morphism(x.L, x.L), zero_morphism(x.M, x.M),
                               zero_morphism(x.P, x.P)};
        CHECK_THROWS_WITH_AS(pullback_factorize(pb, x, bad),
                             doctest::Contains("EndpointMismatch"), Error);
    }
}

TEST_CASE("non-mono witness") {
    TwoCrossedModule x = alpha_gamma(fixtures::field(2));
    SUBCASE("pi yields the kernel generator x") {
        NonMonoWitness w = nonmono_witness(fixtures::proj_pi(2), x);
        CHECK(w.s == Vec{0, 1});
        CHECK(w.value == w.s);
        CHECK(w.value != Vec(2, 0));
        CHECK(w.c2 == Vec(x.L.dim(), 0));
    }
    SUBCASE("monos are rejected") {
        TwoCrossedModule y = alpha_gamma(fixtures::dual_numbers(2));
        CHECK_THROWS_WITH_AS(nonmono_witness(fixtures::unit_u(2), y),
                             doctest::Contains("IsMono"), Error);
    }
}

TEST_CASE("induced module along an epimorphism") {
    SUBCASE("rejects non-epimorphisms") {
        CHECK_THROWS_WITH_AS(
            induced_2xmod_epi(fixtures::unit_u(2), alpha_gamma(fixtures::field(2))),
            doctest::Contains("NotEpi"), Error);
    }
    SUBCASE("along the identity it returns the module unchanged") {
        for (const TwoCrossedModule& x :
             {alpha_gamma(fixtures::dual_numbers(2)), functor_sk(fixtures::precrossed_pi(3))}) {
            InducedResult ind = induced_2xmod_epi(identity_morphism(x.P), x);
            CHECK(ind.result == x);
            CHECK(check_2morphism(ind.canonical, x, ind.result).ok());
        }
    }
    SUBCASE("ideal chain over A collapses its boundary along pi") {
        TwoCrossedModule d =
            ideal_chain_over(fixtures::dual_numbers(2), fixtures::incl_x(2).matrix.transpose());
        InducedResult ind = induced_2xmod_epi(fixtures::proj_pi(2), d);
        // K = (x), K.D1 = x(x) = 0: middle survives, boundary dies
        CHECK(ind.result.M == d.M);
        CHECK(ind.result.P.same_structure(fixtures::field(2)));
        CHECK(ind.result.d1.matrix.is_zero());
        CHECK(check_2xmod(ind.result).ok());
        CHECK(check_2morphism(ind.canonical, d, ind.result).ok());
    }
    SUBCASE("identity chain over A collapses the middle along pi") {
        TwoCrossedModule d = alpha_gamma(fixtures::dual_numbers(2));
        InducedResult ind = induced_2xmod_epi(fixtures::proj_pi(2), d);
        CHECK(ind.result.M.dim() == 1);
        CHECK(ind.result.M.unit().has_value());
        CHECK(check_2xmod(ind.result).ok());
        CHECK(check_2morphism(ind.canonical, d, ind.result).ok());
        // the transported boundary is the canonical isomorphism
        CHECK(kernel_image(ind.result.d1).is_mono);
        CHECK(kernel_image(ind.result.d1).is_epi);
    }
    SUBCASE("factorization satisfies the commuting identities exactly") {
        TwoCrossedModule d = alpha_gamma(fixtures::dual_numbers(2));
        Morphism pi_ = fixtures::proj_pi(2);
        InducedResult ind = induced_2xmod_epi(pi_, d);

        TwoCrossedModule b = alpha_gamma(fixtures::field(2));
        TwoCrossedMorphism f{zero_morphism(d.L, b.L), pi_, pi_};
        CHECK(check_2morphism(f, d, b).ok());
        TwoCrossedMorphism g = induced_factorize(ind, b, f);
        CHECK(check_2morphism(g, ind.result, b).ok());
        TwoCrossedMorphism round = compose(g, ind.canonical);
        CHECK(round.f1.matrix == f.f1.matrix);
        CHECK(round.f2.matrix == f.f2.matrix);

        TwoCrossedMorphism self = induced_factorize(ind, ind.result, ind.canonical);
        CHECK(self.f1.matrix == Mat::identity(2, ind.result.M.dim()));
    }
    SUBCASE("factorization rejects maps that do not kill the collapsed ideal") {
        TwoCrossedModule d = alpha_gamma(fixtures::dual_numbers(2));
        Morphism pi_ = fixtures::proj_pi(2);
        InducedResult ind = induced_2xmod_epi(pi_, d);
        // shape-only target over F2 whose middle keeps all of A
        FiniteAlgebra a = fixtures::dual_numbers(2), f2f = fixtures::field(2);
        FiniteAlgebra l0 = zero_algebra(2);
        std::vector<unsigned> t(1 * 2 * 2, 0);
        t[(0 * 2 + 0) * 2 + 0] = 1;
        t[(0 * 2 + 1) * 2 + 1] = 1;
        TwoCrossedModule b = mk_2xmod(l0, a, f2f, zero_morphism(l0, a), pi_,
                                      zero_action(f2f, l0), mk_action(f2f, a, t),
                                      zero_lifting(2, 2, 0));
        TwoCrossedMorphism f{zero_morphism(d.L, b.L), identity_morphism(a), pi_};
        CHECK_THROWS_WITH_AS(induced_factorize(ind, b, f),
                             doctest::Contains("WellDefinednessFailure"), Error);
    }
}
