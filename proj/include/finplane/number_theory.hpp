#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace finplane {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors of n in increasing order (trial division).
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

struct PrimePower {
    std::uint32_t p = 0;
    std::uint32_t a = 0;
};

/// Decomposes q = p^a; nullopt when q is not a prime power.
inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto f = prime_factors(q);
    if (f.size() != 1) return std::nullopt;
    PrimePower pp{static_cast<std::uint32_t>(f[0]), 0};
    while (q > 1) {
        q /= f[0];
        ++pp.a;
    }
    return pp;
}

inline bool is_prime_power(std::uint64_t q) { return as_prime_power(q).has_value(); }

/// All prime powers in [lo, hi], increasing. Primes come from a sieve; powers by direct enumeration.
inline std::vector<std::uint64_t> prime_powers_in(std::uint64_t lo, std::uint64_t hi, bool primes_only = false) {
    std::vector<std::uint64_t> out;
    if (hi < 2 || lo > hi) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    for (std::uint64_t p = 2; p <= hi; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t q = p; q <= hi; q *= p) {
            if (q >= lo) out.push_back(q);
            if (primes_only || q > hi / p) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace finplane
