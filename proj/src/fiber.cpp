#include "x2alg/fiber.hpp"

#include "x2alg/errors.hpp"

namespace x2alg {

std::optional<Vec> FiberProduct::coords(const Vec& a, const Vec& b) const {
    Vec joint(a.size() + b.size());
    std::copy(a.begin(), a.end(), joint.begin());
    std::copy(b.begin(), b.end(), joint.begin() + static_cast<long>(a.size()));
    return coords_in(basis, joint);
}

Vec FiberProduct::part_a(const Vec& v) const { return to_a.apply(v); }
Vec FiberProduct::part_b(const Vec& v) const { return to_b.apply(v); }

FiberProduct fiber_product(const Morphism& f, const Morphism& g) {
    if (!f.target.same_structure(g.target) || f.source.prime() != g.source.prime())
        fail(Errc::endpoint_mismatch, "fiber product maps must share a target");
    const unsigned p = f.source.prime();
    const std::size_t na = f.source.dim(), nb = g.source.dim(), nc = f.target.dim();

    Mat sys(p, nc, na + nb);
    for (std::size_t i = 0; i < nc; ++i) {
        for (std::size_t j = 0; j < na; ++j) sys.at(i, j) = f.matrix.at(i, j);
        for (std::size_t j = 0; j < nb; ++j)
            sys.at(i, na + j) = fp::neg(g.matrix.at(i, j), p);
    }
    Mat basis = sys.nullspace_basis();
    const std::size_t d = basis.rows();

    std::vector<unsigned> mul(d * d * d, 0);
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
            Vec ru = basis.row(u), rv = basis.row(v);
            Vec au(ru.begin(), ru.begin() + static_cast<long>(na));
            Vec bu(ru.begin() + static_cast<long>(na), ru.end());
            Vec av(rv.begin(), rv.begin() + static_cast<long>(na));
            Vec bv(rv.begin() + static_cast<long>(na), rv.end());
            Vec prod(na + nb);
            Vec pa = f.source.mul(au, av), pb = g.source.mul(bu, bv);
            std::copy(pa.begin(), pa.end(), prod.begin());
            std::copy(pb.begin(), pb.end(), prod.begin() + static_cast<long>(na));
            auto c = coords_in(basis, prod);
            if (!c) fail(Errc::internal, "fiber product is not closed under products");
            for (std::size_t w = 0; w < d; ++w) mul[(u * d + v) * d + w] = (*c)[w];
        }

    std::optional<Vec> unit;
    if (f.source.unit() && g.source.unit() && d > 0) {
        if (f.apply(*f.source.unit()) == g.apply(*g.source.unit())) {
            Vec joint(na + nb);
            std::copy(f.source.unit()->begin(), f.source.unit()->end(), joint.begin());
            std::copy(g.source.unit()->begin(), g.source.unit()->end(),
                      joint.begin() + static_cast<long>(na));
            unit = coords_in(basis, joint);
        }
    }

    FiberProduct fp_;
    fp_.algebra = mk_algebra(p, d, mul, default_names(d), unit);
    fp_.basis = basis;

    Mat ma(p, na, d), mb(p, nb, d);
    for (std::size_t u = 0; u < d; ++u) {
        Vec r = basis.row(u);
        for (std::size_t i = 0; i < na; ++i) ma.at(i, u) = r[i];
        for (std::size_t i = 0; i < nb; ++i) mb.at(i, u) = r[na + i];
    }
    fp_.to_a = mk_morphism(fp_.algebra, f.source, ma);
    fp_.to_b = mk_morphism(fp_.algebra, g.source, mb);
    return fp_;
}

} // namespace x2alg
