#include "x2alg/report.hpp"

#include "x2alg/errors.hpp"

#include <sstream>

namespace x2alg {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_prime: return "NotPrime";
        case Errc::not_commutative: return "NotCommutative";
        case Errc::not_associative: return "NotAssociative";
        case Errc::bad_unit: return "BadUnit";
        case Errc::not_multiplicative: return "NotMultiplicative";
        case Errc::not_an_ideal: return "NotAnIdeal";
        case Errc::precondition_failed: return "PreconditionFailed";
        case Errc::not_commutative_multipliers: return "NotCommutativeMultipliers";
        case Errc::action_not_restrictable: return "ActionNotRestrictable";
        case Errc::not_mono: return "NotMono";
        case Errc::is_mono: return "IsMono";
        case Errc::not_epi: return "NotEpi";
        case Errc::well_definedness: return "WellDefinednessFailure";
        case Errc::endpoint_mismatch: return "EndpointMismatch";
        case Errc::search_space_too_large: return "SearchSpaceTooLarge";
        case Errc::bijection_failure: return "BijectionFailure";
        case Errc::no_isomorphism_found: return "NoIsomorphismFound";
        case Errc::shape_mismatch: return "ShapeMismatch";
        case Errc::parse_error: return "ParseError";
        case Errc::usage: return "UsageError";
        case Errc::internal: return "InternalError";
    }
    return "UnknownError";
}

std::string vec_to_string(const Vec& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

std::string tuple_to_string(const std::vector<std::size_t>& t) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << t[i];
    }
    os << ")";
    return os.str();
}

std::string Report::to_string() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        if (c.ok) {
            os << "  [ok]   " << c.axiom << "\n";
        } else {
            os << "  [FAIL] " << c.axiom << " at " << tuple_to_string(c.where)
               << "  lhs=" << c.lhs << "  rhs=" << c.rhs << "\n";
        }
    }
    return os.str();
}

} // namespace x2alg
