#include "x2alg/action.hpp"

#include "x2alg/errors.hpp"

namespace x2alg {

Vec Action::eval(const Vec& p, const Vec& m) const {
    Vec r(acted.dim(), 0);
    for (std::size_t i = 0; i < actor.dim(); ++i) {
        if (!p[i]) continue;
        Vec part = ops[i].apply(m);
        for (std::size_t k = 0; k < acted.dim(); ++k)
            r[k] = fp::add(r[k], fp::mul(p[i], part[k], actor.prime()), actor.prime());
    }
    return r;
}

Mat Action::op_of(const Vec& p) const {
    Mat m(actor.prime(), acted.dim(), acted.dim());
    for (std::size_t i = 0; i < actor.dim(); ++i) {
        if (!p[i]) continue;
        for (std::size_t r = 0; r < acted.dim(); ++r)
            for (std::size_t c = 0; c < acted.dim(); ++c)
                m.at(r, c) = fp::add(m.at(r, c),
                                     fp::mul(p[i], ops[i].at(r, c), actor.prime()),
                                     actor.prime());
    }
    return m;
}

bool Action::is_zero() const {
    for (const auto& op : ops)
        if (!op.is_zero()) return false;
    return true;
}

Action mk_action(const FiniteAlgebra& actor, const FiniteAlgebra& acted,
                 const std::vector<unsigned>& tensor) {
    if (actor.prime() != acted.prime())
        fail(Errc::shape_mismatch, "action endpoints have different primes");
    const std::size_t np = actor.dim(), nm = acted.dim();
    if (tensor.size() != np * nm * nm)
        fail(Errc::shape_mismatch, "action tensor must have actor.dim * acted.dim^2 entries");
    Action a{actor, acted, {}};
    a.ops.reserve(np);
    for (std::size_t i = 0; i < np; ++i) {
        Mat op(actor.prime(), nm, nm);
        for (std::size_t j = 0; j < nm; ++j)
            for (std::size_t k = 0; k < nm; ++k)
                op.at(k, j) = tensor[(i * nm + j) * nm + k] % actor.prime();
        a.ops.push_back(std::move(op));
    }
    return a;
}

Action zero_action(const FiniteAlgebra& actor, const FiniteAlgebra& acted) {
    return mk_action(actor, acted,
                     std::vector<unsigned>(actor.dim() * acted.dim() * acted.dim(), 0));
}

Action multiplication_action(const FiniteAlgebra& a) {
    Action act{a, a, {}};
    for (std::size_t i = 0; i < a.dim(); ++i) act.ops.push_back(a.mult_op(a.basis_vec(i)));
    return act;
}

Action multiplication_action_on(const FiniteAlgebra& a, const FiniteAlgebra& sub,
                                const Mat& sub_basis) {
    return restriction_action(multiplication_action(a), sub, sub_basis);
}

Action restriction_action(const Action& act, const FiniteAlgebra& sub, const Mat& sub_basis) {
    if (sub_basis.rows() != sub.dim() || sub_basis.cols() != act.acted.dim())
        fail(Errc::shape_mismatch, "sub-basis shape does not match");
    Action out{act.actor, sub, {}};
    for (std::size_t i = 0; i < act.actor.dim(); ++i) {
        Mat op(act.actor.prime(), sub.dim(), sub.dim());
        for (std::size_t j = 0; j < sub.dim(); ++j) {
            Vec moved = act.ops[i].apply(sub_basis.row(j));
            auto c = coords_in(sub_basis, moved);
            if (!c)
                fail(Errc::action_not_restrictable,
                     "actor basis " + std::to_string(i) +
                         " moves sub-basis vector " + std::to_string(j) +
                         " outside the subspace",
                     {i, j});
            op.set_col(j, *c);
        }
        out.ops.push_back(std::move(op));
    }
    return out;
}

Report check_action(const Action& act) {
    Report rep;
    const auto& P = act.actor;
    const auto& M = act.acted;

    bool ok = true;
    for (std::size_t i = 0; ok && i < P.dim(); ++i)
        for (std::size_t j = 0; ok && j < P.dim(); ++j)
            for (std::size_t k = 0; ok && k < M.dim(); ++k) {
                Vec lhs = act.eval(P.mul_basis(i, j), M.basis_vec(k));
                Vec rhs = act.eval(P.basis_vec(i), act.eval_basis(j, k));
                if (lhs != rhs) {
                    rep.fail("action-associativity", {i, j, k}, vec_to_string(lhs),
                             vec_to_string(rhs));
                    ok = false;
                }
            }
    if (ok) rep.pass("action-associativity");

    ok = true;
    for (std::size_t i = 0; ok && i < P.dim(); ++i)
        for (std::size_t j = 0; ok && j < M.dim(); ++j)
            for (std::size_t k = 0; ok && k < M.dim(); ++k) {
                Vec lhs = act.eval(P.basis_vec(i), M.mul_basis(j, k));
                Vec rhs = M.mul(act.eval_basis(i, j), M.basis_vec(k));
                if (lhs != rhs) {
                    rep.fail("action-multiplicativity", {i, j, k}, vec_to_string(lhs),
                             vec_to_string(rhs));
                    ok = false;
                }
            }
    if (ok) rep.pass("action-multiplicativity");

    if (P.unit()) {
        ok = true;
        for (std::size_t j = 0; ok && j < M.dim(); ++j) {
            Vec lhs = act.eval(*P.unit(), M.basis_vec(j));
            if (lhs != M.basis_vec(j)) {
                rep.fail("action-unital", {j}, vec_to_string(lhs),
                         vec_to_string(M.basis_vec(j)));
                ok = false;
            }
        }
        if (ok) rep.pass("action-unital");
    }
    return rep;
}

} // namespace x2alg
