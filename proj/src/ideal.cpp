#include "x2alg/ideal.hpp"

#include "x2alg/errors.hpp"

namespace x2alg {

bool is_ideal_span(const FiniteAlgebra& a, const Mat& span) {
    for (std::size_t r = 0; r < span.rows(); ++r)
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!span_contains(span, a.mul(span.row(r), a.basis_vec(i)))) return false;
    return true;
}

Ideal ideal_generated(const FiniteAlgebra& a, const std::vector<Vec>& gens) {
    Mat span = span_of(a.prime(), a.dim(), gens);
    for (std::size_t step = 0; step <= a.dim(); ++step) {
        std::vector<Vec> next;
        for (std::size_t r = 0; r < span.rows(); ++r)
            for (std::size_t i = 0; i < a.dim(); ++i) {
                Vec prod = a.mul(span.row(r), a.basis_vec(i));
                if (!span_contains(span, prod)) next.push_back(std::move(prod));
            }
        if (next.empty()) return Ideal{a, span};
        for (std::size_t r = 0; r < span.rows(); ++r) next.push_back(span.row(r));
        span = span_of(a.prime(), a.dim(), next);
    }
    fail(Errc::internal, "ideal closure did not stabilise within dim iterations");
}

Ideal kernel_ideal(const Morphism& f) {
    Mat ker = f.matrix.nullspace_basis();
    if (!is_ideal_span(f.source, ker))
        fail(Errc::internal, "kernel of a multiplicative map must be an ideal");
    return Ideal{f.source, ker};
}

Quotient quotient_by_ideal(const FiniteAlgebra& a, const Ideal& ideal) {
    if (!ideal.parent.same_structure(a))
        fail(Errc::shape_mismatch, "ideal parent differs from quotient base algebra");
    if (ideal.span.cols() != a.dim() || ideal.span.prime() != a.prime())
        fail(Errc::shape_mismatch, "ideal span shape/prime mismatch");
    Mat span = ideal.span.row_basis();
    if (!is_ideal_span(a, span))
        fail(Errc::not_an_ideal, "span is not closed under multiplication by the algebra");

    const unsigned p = a.prime();
    const std::size_t n = a.dim(), k = span.rows(), q = n - k;

    // Greedy smallest-index standard vectors independent of the span.
    std::vector<std::size_t> complement;
    Mat cur = span;
    for (std::size_t j = 0; j < n && complement.size() < q; ++j) {
        Vec ej(n, 0);
        ej[j] = 1;
        if (!span_contains(cur, ej)) {
            complement.push_back(j);
            cur = span_sum(cur, Mat::from_rows(p, n, {ej}));
        }
    }
    if (complement.size() != q)
        fail(Errc::internal, "could not complete ideal span to a basis");

    // Columns: ideal basis then representatives; bottom rows of the inverse
    // read off the representative coordinates of any vector.
    Mat full(p, n, n);
    for (std::size_t c = 0; c < k; ++c) full.set_col(c, span.row(c));
    for (std::size_t c = 0; c < q; ++c) {
        Vec ej(n, 0);
        ej[complement[c]] = 1;
        full.set_col(k + c, ej);
    }
    auto inv = full.inverse();
    if (!inv) fail(Errc::internal, "combined basis matrix must be invertible");
    Mat red(p, q, n);
    for (std::size_t i = 0; i < q; ++i) red.set_row(i, inv->row(k + i));

    Mat section(p, n, q);
    for (std::size_t c = 0; c < q; ++c) {
        Vec ej(n, 0);
        ej[complement[c]] = 1;
        section.set_col(c, ej);
    }

    std::vector<unsigned> mul(q * q * q, 0);
    for (std::size_t u = 0; u < q; ++u)
        for (std::size_t v = 0; v < q; ++v) {
            Vec prod = red.apply(a.mul(section.col(u), section.col(v)));
            for (std::size_t w = 0; w < q; ++w) mul[(u * q + v) * q + w] = prod[w];
        }

    std::vector<std::string> names;
    for (std::size_t c : complement) names.push_back(a.basis_names()[c]);

    std::optional<Vec> unit;
    if (a.unit() && q > 0) unit = red.apply(*a.unit());

    Quotient out;
    out.algebra = mk_algebra(p, q, mul, std::move(names), std::move(unit));
    out.projection = mk_morphism(a, out.algebra, red);
    out.section = std::move(section);
    out.complement = std::move(complement);
    return out;
}

} // namespace x2alg
