#pragma once

#include <cstdint>
#include <vector>

namespace x2alg {

// Coefficient vector over F_p, entries always kept in [0, p).
using Vec = std::vector<unsigned>;

namespace fp {

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline unsigned reduce(long long v, unsigned p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<unsigned>(r);
}

inline unsigned add(unsigned a, unsigned b, unsigned p) { return (a + b) % p; }
inline unsigned sub(unsigned a, unsigned b, unsigned p) { return (a + p - b) % p; }
inline unsigned mul(unsigned a, unsigned b, unsigned p) {
    return static_cast<unsigned>((static_cast<std::uint64_t>(a) * b) % p);
}
inline unsigned neg(unsigned a, unsigned p) { return (p - a) % p; }

// p prime, a != 0.
inline unsigned inv(unsigned a, unsigned p) {
    unsigned r = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = mul(r, base, p);
        base = mul(base, base, p);
        e >>= 1;
    }
    return r;
}

} // namespace fp
} // namespace x2alg
