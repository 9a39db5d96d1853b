#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace x2alg {

enum class Errc {
    not_prime,
    not_commutative,
    not_associative,
    bad_unit,
    not_multiplicative,
    not_an_ideal,
    precondition_failed,
    not_commutative_multipliers,
    action_not_restrictable,
    not_mono,
    is_mono,
    not_epi,
    well_definedness,
    endpoint_mismatch,
    search_space_too_large,
    bijection_failure,
    no_isomorphism_found,
    shape_mismatch,
    parse_error,
    usage,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Errc code;
    std::vector<std::size_t> where; // offending basis tuple, when applicable
    std::uint64_t size = 0;         // search-space size for search_space_too_large

    Error(Errc c, const std::string& msg, std::vector<std::size_t> w = {})
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg),
          code(c), where(std::move(w)) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg, std::vector<std::size_t> w = {}) {
    throw Error(c, msg, std::move(w));
}

} // namespace x2alg
