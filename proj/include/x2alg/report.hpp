#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "x2alg/fp.hpp"

namespace x2alg {

// Result of checking one axiom family over all basis tuples.
// `where`, `lhs`, `rhs` describe the first offending instance when ok == false.
struct AxiomCheck {
    std::string axiom;
    bool ok = true;
    std::vector<std::size_t> where;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::vector<AxiomCheck> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }

    std::vector<const AxiomCheck*> violations() const {
        std::vector<const AxiomCheck*> v;
        for (const auto& c : checks)
            if (!c.ok) v.push_back(&c);
        return v;
    }

    void pass(const std::string& axiom) { checks.push_back({axiom, true, {}, "", ""}); }

    void fail(const std::string& axiom, std::vector<std::size_t> where,
              const std::string& lhs, const std::string& rhs) {
        checks.push_back({axiom, false, std::move(where), lhs, rhs});
    }

    void merge(const Report& other, const std::string& prefix = "") {
        for (auto c : other.checks) {
            c.axiom = prefix.empty() ? c.axiom : prefix + "/" + c.axiom;
            checks.push_back(std::move(c));
        }
    }

    std::string to_string() const;
};

std::string vec_to_string(const Vec& v);
std::string tuple_to_string(const std::vector<std::size_t>& t);

} // namespace x2alg
