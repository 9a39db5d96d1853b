#include "x2alg/json_io.hpp"

#include <fstream>

#include "json.hpp"
#include "x2alg/errors.hpp"

namespace x2alg {

namespace {

using nlohmann::json; // std::map-backed: object keys serialize sorted

[[noreturn]] void bad(const std::string& ctx, const std::string& msg) {
    fail(Errc::parse_error, ctx + ": " + msg);
}

json parse_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) fail(Errc::parse_error, file.string() + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(Errc::parse_error, file.string() + ": " + e.what());
    }
}

const json& need(const json& j, const char* key, const std::string& ctx) {
    if (!j.is_object() || !j.contains(key)) bad(ctx, "missing key \"" + std::string(key) + "\"");
    return j.at(key);
}

std::uint64_t need_count(const json& j, const char* key, const std::string& ctx) {
    const json& v = need(j, key, ctx);
    if (!v.is_number_unsigned()) bad(ctx, "\"" + std::string(key) + "\" must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

unsigned reduce_int(const json& v, unsigned p, const std::string& ctx) {
    if (!v.is_number_integer()) bad(ctx, "expected an integer coefficient");
    long long x = v.get<long long>();
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<unsigned>(r);
}

Vec reduce_vec(const json& v, std::size_t len, unsigned p, const std::string& ctx) {
    if (!v.is_array() || v.size() != len)
        bad(ctx, "expected an array of " + std::to_string(len) + " integers");
    Vec out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = reduce_int(v.at(i), p, ctx);
    return out;
}

// depth guards reference chains between files
FiniteAlgebra algebra_from(const json& j, const std::filesystem::path& dir,
                           const std::string& ctx, int depth);

FiniteAlgebra algebra_or_ref(const json& j, const std::filesystem::path& dir,
                             const std::string& ctx, int depth) {
    if (depth > 16) bad(ctx, "algebra reference chain too deep");
    if (j.is_string()) {
        std::filesystem::path target = dir / j.get<std::string>();
        json inner = parse_file(target);
        return algebra_from(inner, target.parent_path(), target.string(), depth + 1);
    }
    return algebra_from(j, dir, ctx, depth);
}

FiniteAlgebra algebra_from(const json& j, const std::filesystem::path& dir,
                           const std::string& ctx, int depth) {
    (void)dir;
    (void)depth;
    std::uint64_t prime = need_count(j, "prime", ctx);
    if (prime < 2 || prime > 1u << 20) bad(ctx, "\"prime\" out of range");
    unsigned p = static_cast<unsigned>(prime);
    std::size_t dim = static_cast<std::size_t>(need_count(j, "dim", ctx));
    if (dim > 64) bad(ctx, "\"dim\" out of range");

    const json& basis = need(j, "basis", ctx);
    if (!basis.is_array() || basis.size() != dim)
        bad(ctx, "\"basis\" must list one name per dimension");
    std::vector<std::string> names;
    for (const json& s : basis) {
        if (!s.is_string()) bad(ctx, "\"basis\" entries must be strings");
        names.push_back(s.get<std::string>());
    }

    const json& mul = need(j, "mul", ctx);
    if (!mul.is_array() || mul.size() != dim) bad(ctx, "\"mul\" must be a dim x dim x dim tensor");
    std::vector<unsigned> tensor(dim * dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        const json& row = mul.at(i);
        if (!row.is_array() || row.size() != dim)
            bad(ctx, "\"mul\" must be a dim x dim x dim tensor");
        for (std::size_t k = 0; k < dim; ++k) {
            Vec cell = reduce_vec(row.at(k), dim, p, ctx + " mul[" + std::to_string(i) + "][" +
                                                        std::to_string(k) + "]");
            for (std::size_t t = 0; t < dim; ++t) tensor[(i * dim + k) * dim + t] = cell[t];
        }
    }

    std::optional<Vec> unit;
    const json& u = need(j, "unit", ctx);
    if (!u.is_null()) unit = reduce_vec(u, dim, p, ctx + " unit");

    return mk_algebra(p, dim, tensor, std::move(names), std::move(unit));
}

Mat matrix_from(const json& j, unsigned p, std::size_t rows, std::size_t cols,
                const std::string& ctx) {
    if (!j.is_array() || j.size() != rows)
        bad(ctx, "\"matrix\" must have " + std::to_string(rows) + " rows");
    Mat m(p, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        m.set_row(i, reduce_vec(j.at(i), cols, p, ctx + " row " + std::to_string(i)));
    return m;
}

Morphism morphism_from(const json& j, const std::filesystem::path& dir, const std::string& ctx) {
    FiniteAlgebra source = algebra_or_ref(need(j, "source", ctx), dir, ctx + " source", 0);
    FiniteAlgebra target = algebra_or_ref(need(j, "target", ctx), dir, ctx + " target", 0);
    Mat m = matrix_from(need(j, "matrix", ctx), source.prime(), target.dim(), source.dim(), ctx);
    return mk_morphism(source, target, std::move(m));
}

std::vector<unsigned> action_tensor_from(const json& j, unsigned p, std::size_t adim,
                                         std::size_t mdim, std::size_t ldim,
                                         const char* key, const std::string& ctx) {
    const json& act = need(j, key, ctx);
    if (!act.is_array() || act.size() != adim)
        bad(ctx, std::string("\"") + key + "\" has the wrong actor dimension");
    std::vector<unsigned> tensor(adim * mdim * ldim, 0);
    for (std::size_t i = 0; i < adim; ++i) {
        const json& row = act.at(i);
        if (!row.is_array() || row.size() != mdim)
            bad(ctx, std::string("\"") + key + "\" has the wrong acted dimension");
        for (std::size_t k = 0; k < mdim; ++k) {
            Vec cell = reduce_vec(row.at(k), ldim, p,
                                  ctx + " " + key + "[" + std::to_string(i) + "][" +
                                      std::to_string(k) + "]");
            for (std::size_t t = 0; t < ldim; ++t) tensor[(i * mdim + k) * ldim + t] = cell[t];
        }
    }
    return tensor;
}

Action action_from(const json& j, const std::filesystem::path& dir, const std::string& ctx) {
    FiniteAlgebra actor = algebra_or_ref(need(j, "actor", ctx), dir, ctx + " actor", 0);
    FiniteAlgebra acted = algebra_or_ref(need(j, "acted", ctx), dir, ctx + " acted", 0);
    std::vector<unsigned> tensor = action_tensor_from(j, actor.prime(), actor.dim(), acted.dim(),
                                                      acted.dim(), "act", ctx);
    return mk_action(actor, acted, tensor);
}

// Rebuilds an inner morphism against the outer algebras so one in-memory
// object is shared; the file may inline or reference equal structures.
Morphism inner_morphism(const json& j, const std::filesystem::path& dir, const std::string& ctx,
                        const FiniteAlgebra& source, const FiniteAlgebra& target) {
    Morphism raw = morphism_from(j, dir, ctx);
    if (!raw.source.same_structure(source) || !raw.target.same_structure(target))
        fail(Errc::endpoint_mismatch, ctx + ": endpoints disagree with the enclosing object");
    return mk_morphism(source, target, raw.matrix);
}

Action inner_action(const json& j, const std::filesystem::path& dir, const std::string& ctx,
                    const FiniteAlgebra& actor, const FiniteAlgebra& acted) {
    FiniteAlgebra ractor = algebra_or_ref(need(j, "actor", ctx), dir, ctx + " actor", 0);
    FiniteAlgebra racted = algebra_or_ref(need(j, "acted", ctx), dir, ctx + " acted", 0);
    if (!ractor.same_structure(actor) || !racted.same_structure(acted))
        fail(Errc::endpoint_mismatch, ctx + ": action endpoints disagree with the enclosing object");
    std::vector<unsigned> tensor = action_tensor_from(j, actor.prime(), actor.dim(), acted.dim(),
                                                      acted.dim(), "act", ctx);
    return mk_action(actor, acted, tensor);
}

PreCrossedModule xmod_from(const json& j, const std::filesystem::path& dir,
                           const std::string& ctx) {
    FiniteAlgebra c = algebra_or_ref(need(j, "C", ctx), dir, ctx + " C", 0);
    FiniteAlgebra r = algebra_or_ref(need(j, "R", ctx), dir, ctx + " R", 0);
    Morphism bdry = inner_morphism(need(j, "bdry", ctx), dir, ctx + " bdry", c, r);
    Action act = inner_action(need(j, "action", ctx), dir, ctx + " action", r, c);
    return mk_precrossed(std::move(c), std::move(r), std::move(bdry), std::move(act));
}

TwoCrossedModule x2mod_from(const json& j, const std::filesystem::path& dir,
                            const std::string& ctx) {
    FiniteAlgebra l = algebra_or_ref(need(j, "L", ctx), dir, ctx + " L", 0);
    FiniteAlgebra m = algebra_or_ref(need(j, "M", ctx), dir, ctx + " M", 0);
    FiniteAlgebra p = algebra_or_ref(need(j, "P", ctx), dir, ctx + " P", 0);
    Morphism d2 = inner_morphism(need(j, "d2", ctx), dir, ctx + " d2", l, m);
    Morphism d1 = inner_morphism(need(j, "d1", ctx), dir, ctx + " d1", m, p);
    Action apl = inner_action(need(j, "actPL", ctx), dir, ctx + " actPL", p, l);
    Action apm = inner_action(need(j, "actPM", ctx), dir, ctx + " actPM", p, m);
    std::vector<unsigned> lt = action_tensor_from(j, l.prime(), m.dim(), m.dim(), l.dim(),
                                                  "lift", ctx);
    Lifting lift = mk_lifting(l.prime(), m.dim(), l.dim(), lt);
    return mk_2xmod(std::move(l), std::move(m), std::move(p), std::move(d2), std::move(d1),
                    std::move(apl), std::move(apm), std::move(lift));
}

TwoCrossedMorphism triple_from(const json& j, const std::filesystem::path& dir,
                               const std::string& ctx) {
    return {morphism_from(need(j, "f2", ctx), dir, ctx + " f2"),
            morphism_from(need(j, "f1", ctx), dir, ctx + " f1"),
            morphism_from(need(j, "f0", ctx), dir, ctx + " f0")};
}

json algebra_json(const FiniteAlgebra& a) {
    json j;
    j["prime"] = a.prime();
    j["dim"] = a.dim();
    j["basis"] = a.basis_names();
    json mul = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(a.mul_basis(i, k));
        mul.push_back(std::move(row));
    }
    j["mul"] = std::move(mul);
    if (a.unit())
        j["unit"] = *a.unit();
    else
        j["unit"] = nullptr;
    return j;
}

json matrix_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

json morphism_json(const Morphism& f) {
    json j;
    j["source"] = algebra_json(f.source);
    j["target"] = algebra_json(f.target);
    j["matrix"] = matrix_json(f.matrix);
    return j;
}

json action_json(const Action& a) {
    json j;
    j["actor"] = algebra_json(a.actor);
    j["acted"] = algebra_json(a.acted);
    json t = json::array();
    for (std::size_t i = 0; i < a.actor.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.acted.dim(); ++k) row.push_back(a.eval_basis(i, k));
        t.push_back(std::move(row));
    }
    j["act"] = std::move(t);
    return j;
}

json xmod_json(const PreCrossedModule& x) {
    json j;
    j["C"] = algebra_json(x.C);
    j["R"] = algebra_json(x.R);
    j["bdry"] = morphism_json(x.bdry);
    j["action"] = action_json(x.act);
    return j;
}

json x2mod_json(const TwoCrossedModule& x) {
    json j;
    j["L"] = algebra_json(x.L);
    j["M"] = algebra_json(x.M);
    j["P"] = algebra_json(x.P);
    j["d2"] = morphism_json(x.d2);
    j["d1"] = morphism_json(x.d1);
    j["actPL"] = action_json(x.actPL);
    j["actPM"] = action_json(x.actPM);
    json lift = json::array();
    for (std::size_t i = 0; i < x.M.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < x.M.dim(); ++k) row.push_back(x.lift.eval_basis(i, k));
        lift.push_back(std::move(row));
    }
    j["lift"] = std::move(lift);
    return j;
}

json triple_json(const TwoCrossedMorphism& t) {
    json j;
    j["f2"] = morphism_json(t.f2);
    j["f1"] = morphism_json(t.f1);
    j["f0"] = morphism_json(t.f0);
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

const char* kind_name(ObjectKind k) {
    switch (k) {
        case ObjectKind::algebra: return "algebra";
        case ObjectKind::morphism: return "morphism";
        case ObjectKind::action: return "action";
        case ObjectKind::xmod: return "xmod";
        case ObjectKind::x2mod: return "x2mod";
        case ObjectKind::triple: return "triple";
    }
    return "unknown";
}

LoadedObject load_object(const std::filesystem::path& file) {
    json j = parse_file(file);
    std::filesystem::path dir = file.parent_path();
    std::string ctx = file.string();
    if (!j.is_object()) bad(ctx, "top-level value must be an object");

    LoadedObject out{};
    if (j.contains("lift")) {
        out.kind = ObjectKind::x2mod;
        out.x2mod = x2mod_from(j, dir, ctx);
    } else if (j.contains("bdry")) {
        out.kind = ObjectKind::xmod;
        out.xmod = xmod_from(j, dir, ctx);
    } else if (j.contains("f2")) {
        out.kind = ObjectKind::triple;
        out.triple = triple_from(j, dir, ctx);
    } else if (j.contains("act")) {
        out.kind = ObjectKind::action;
        out.action = action_from(j, dir, ctx);
    } else if (j.contains("matrix")) {
        out.kind = ObjectKind::morphism;
        out.morphism = morphism_from(j, dir, ctx);
    } else if (j.contains("prime")) {
        out.kind = ObjectKind::algebra;
        out.algebra = algebra_from(j, dir, ctx, 0);
    } else {
        bad(ctx, "unrecognized object: none of the distinguishing keys present");
    }
    return out;
}

namespace {

[[noreturn]] void wrong_kind(const std::filesystem::path& file, ObjectKind want, ObjectKind got) {
    fail(Errc::parse_error, file.string() + ": expected " + std::string(kind_name(want)) +
                                ", found " + kind_name(got));
}

} // namespace

FiniteAlgebra load_algebra(const std::filesystem::path& file) {
    LoadedObject o = load_object(file);
    if (o.kind != ObjectKind::algebra) wrong_kind(file, ObjectKind::algebra, o.kind);
    return std::move(*o.algebra);
}

Morphism load_morphism(const std::filesystem::path& file) {
    LoadedObject o = load_object(file);
    if (o.kind != ObjectKind::morphism) wrong_kind(file, ObjectKind::morphism, o.kind);
    return std::move(*o.morphism);
}

Action load_action(const std::filesystem::path& file) {
    LoadedObject o = load_object(file);
    if (o.kind != ObjectKind::action) wrong_kind(file, ObjectKind::action, o.kind);
    return std::move(*o.action);
}

PreCrossedModule load_xmod(const std::filesystem::path& file) {
    LoadedObject o = load_object(file);
    if (o.kind != ObjectKind::xmod) wrong_kind(file, ObjectKind::xmod, o.kind);
    return std::move(*o.xmod);
}

TwoCrossedModule load_x2mod(const std::filesystem::path& file) {
    LoadedObject o = load_object(file);
    if (o.kind != ObjectKind::x2mod) wrong_kind(file, ObjectKind::x2mod, o.kind);
    return std::move(*o.x2mod);
}

TwoCrossedMorphism load_triple(const std::filesystem::path& file) {
    LoadedObject o = load_object(file);
    if (o.kind != ObjectKind::triple) wrong_kind(file, ObjectKind::triple, o.kind);
    return std::move(*o.triple);
}

std::string to_json(const FiniteAlgebra& a) { return dump(algebra_json(a)); }
std::string to_json(const Morphism& f) { return dump(morphism_json(f)); }
std::string to_json(const Action& a) { return dump(action_json(a)); }
std::string to_json(const PreCrossedModule& x) { return dump(xmod_json(x)); }
std::string to_json(const TwoCrossedModule& x) { return dump(x2mod_json(x)); }
std::string to_json(const TwoCrossedMorphism& t) { return dump(triple_json(t)); }

std::string report_to_json(const Report& rep) {
    json checks = json::array();
    for (const AxiomCheck& c : rep.checks) {
        json e;
        e["axiom"] = c.axiom;
        e["ok"] = c.ok;
        e["where"] = c.where;
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        checks.push_back(std::move(e));
    }
    json j;
    j["ok"] = rep.ok();
    j["checks"] = std::move(checks);
    return dump(j);
}

void write_file(const std::filesystem::path& file, const std::string& content) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::usage, file.string() + ": cannot open for writing");
    out << content;
    if (!out) fail(Errc::usage, file.string() + ": write failed");
}

} // namespace x2alg
