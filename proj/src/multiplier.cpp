#include "x2alg/multiplier.hpp"

#include "x2alg/errors.hpp"

namespace x2alg {

MultiplierAlgebra multiplier_algebra(const FiniteAlgebra& r) {
    const unsigned p = r.prime();
    const std::size_t n = r.dim();

    bool ann_zero = r.annihilator().rows() == 0;
    bool products_full = r.products_span().rows() == n;
    if (!ann_zero && !products_full)
        fail(Errc::precondition_failed,
             "multiplier algebra needs Ann(R) = 0 or R^2 = R");

    // Unknown operator D (n x n), flattened (row, col) -> row * n + col.
    // Constraint per (i, j, u): [D(x_i x_j)]_u = [x_i D(x_j)]_u.
    Mat sys(p, n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t u = 0; u < n; ++u) {
                std::size_t row = (i * n + j) * n + u;
                for (std::size_t k = 0; k < n; ++k)
                    sys.at(row, u * n + k) =
                        fp::add(sys.at(row, u * n + k), r.mul_c(i, j, k), p);
                for (std::size_t t = 0; t < n; ++t)
                    sys.at(row, t * n + j) =
                        fp::sub(sys.at(row, t * n + j), r.mul_c(i, t, u), p);
            }
    Mat basis = sys.nullspace_basis();
    const std::size_t d = basis.rows();

    std::vector<Mat> mult;
    mult.reserve(d);
    for (std::size_t b = 0; b < d; ++b) {
        Mat op(p, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) op.at(i, j) = basis.at(b, i * n + j);
        mult.push_back(std::move(op));
    }

    auto op_coords = [&](const Mat& op) {
        Vec flat(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = op.at(i, j);
        return coords_in(basis, flat);
    };

    std::vector<unsigned> mul(d * d * d, 0);
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
            Mat comp = mult[u] * mult[v];
            Mat comp_rev = mult[v] * mult[u];
            if (comp != comp_rev)
                fail(Errc::not_commutative_multipliers,
                     "multiplier composition is not commutative", {u, v});
            auto c = op_coords(comp);
            if (!c) fail(Errc::internal, "multiplier composition left the solution space");
            for (std::size_t w = 0; w < d; ++w) mul[(u * d + v) * d + w] = (*c)[w];
        }

    std::optional<Vec> unit;
    if (d > 0) {
        unit = op_coords(Mat::identity(p, n));
        if (!unit) fail(Errc::internal, "identity operator must be a multiplier");
    }

    MultiplierAlgebra out;
    out.algebra = mk_algebra(p, d, mul, default_names(d), unit);
    out.multipliers = std::move(mult);

    Mat mu(p, d, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto c = op_coords(r.mult_op(r.basis_vec(i)));
        if (!c) fail(Errc::internal, "multiplication operator must be a multiplier");
        mu.set_col(i, *c);
    }
    out.mu = mk_morphism(r, out.algebra, mu);
    return out;
}

Action multiplier_action(const MultiplierAlgebra& m) {
    Action act{m.algebra, m.mu.source, {}};
    for (const auto& op : m.multipliers) act.ops.push_back(op);
    return act;
}

} // namespace x2alg
