#ifndef QCODES_NUMERIC_HPP
#define QCODES_NUMERIC_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "qcodes/errors.hpp"

namespace qcodes {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization by trial division; adequate for the word-sized
/// moduli and group orders this library handles.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        unsigned e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<std::uint64_t> divisors_sorted(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// n = p^e with p prime; returns {p, e} or throws.
inline std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t n, Errc errc,
                                                                const std::string& what) {
    auto f = factorize(n);
    require(n >= 2 && f.size() == 1, errc, what + " must be a prime power, got " + std::to_string(n));
    return {f[0].first, f[0].second};
}

/// p^e, throwing on overflow past `limit`.
inline std::uint64_t checked_pow(std::uint64_t p, unsigned e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        require(r <= limit / p, Errc::unsupported, "power overflow");
        r *= p;
    }
    return r;
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

/// Counter-based mixing function (splitmix64 finalizer). Used for all
/// reproducible sampling: value depends only on (seed, counter), never on
/// call order or worker layout.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return mix64(mix64(seed ^ 0xa0761d6478bd642fULL) + 0x9e3779b97f4a7c15ULL * stream + index);
}

/// Minimal unsigned bignum: just enough for exponents like (2^155 - 1) / m.
struct BigUint {
    std::vector<std::uint64_t> w;  // little-endian 64-bit limbs, trimmed

    static BigUint pow2_minus_1(unsigned bits) {
        BigUint r;
        r.w.assign((bits + 63) / 64, ~0ULL);
        unsigned rem = bits % 64;
        if (rem) r.w.back() = (1ULL << rem) - 1;
        r.trim();
        return r;
    }

    void trim() {
        while (!w.empty() && w.back() == 0) w.pop_back();
    }

    bool is_zero() const { return w.empty(); }

    /// Divides in place by a word-sized divisor, returns the remainder.
    std::uint64_t div_u64(std::uint64_t d) {
        unsigned __int128 rem = 0;
        for (std::size_t i = w.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | w[i];
            w[i] = static_cast<std::uint64_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<std::uint64_t>(rem);
    }

    unsigned bit_length() const {
        if (w.empty()) return 0;
        unsigned top = 64;
        std::uint64_t x = w.back();
        while (!(x & (1ULL << 63))) { x <<= 1; --top; }
        return static_cast<unsigned>((w.size() - 1) * 64) + top;
    }

    bool bit(unsigned i) const {
        std::size_t word = i / 64;
        return word < w.size() && ((w[word] >> (i % 64)) & 1);
    }
};

}  // namespace qcodes

#endif
