#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "adelic/common.hpp"

namespace adelic {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 modpow(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline i64 isqrt(i64 n) {
    if (n < 0) return -1;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(i64 n, i64& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit
    u64 d = static_cast<u64>(n - 1);
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = modpow(a, d, static_cast<u64>(n));
        if (x == 1 || x == static_cast<u64>(n - 1)) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, static_cast<u64>(n));
            if (x == static_cast<u64>(n - 1)) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<i64> primes_upto(i64 limit) {
    static std::vector<i64> cache;
    static i64 cached_limit = 0;
    if (limit > cached_limit) {
        cache.clear();
        std::vector<bool> sieve(static_cast<std::size_t>(limit) + 1, true);
        for (i64 p = 2; p <= limit; ++p) {
            if (!sieve[static_cast<std::size_t>(p)]) continue;
            cache.push_back(p);
            for (i64 q = p * p; q <= limit; q += p) sieve[static_cast<std::size_t>(q)] = false;
        }
        cached_limit = limit;
    }
    auto end = std::upper_bound(cache.begin(), cache.end(), limit);
    return std::vector<i64>(cache.begin(), end);
}

inline bool is_squarefree(i64 n) {
    if (n == 0) return false;
    i64 m = n < 0 ? -n : n;
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    return true;
}

inline std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> f;
    if (n < 0) n = -n;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

// Jacobi symbol (a|n) for odd n >= 1.
inline int jacobi_symbol(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0) throw BadInput("jacobi_symbol: n must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

// Kronecker symbol (D|n), completely multiplicative in n >= 1.
inline int kronecker_symbol(i64 D, i64 n) {
    if (n < 1) throw BadInput("kronecker_symbol: n must be >= 1");
    int result = 1;
    while (n % 2 == 0) {
        if (D % 2 == 0) return 0;
        i64 r = ((D % 8) + 8) % 8;
        if (r == 3 || r == 5) result = -result;
        n /= 2;
    }
    int j = jacobi_symbol(D, n);
    return result * j;
}

inline bool is_fundamental_discriminant(i64 D) {
    if (D == 1 || D == 0) return false;
    i64 r = ((D % 4) + 4) % 4;
    if (r == 1) return is_squarefree(D);
    if (r == 0) {
        i64 m = D / 4;
        i64 mr = ((m % 4) + 4) % 4;
        return (mr == 2 || mr == 3) && is_squarefree(m);
    }
    return false;
}

// Tonelli-Shanks: a root of x^2 = a (mod p), p an odd prime with (a|p) = 1.
inline i64 sqrt_mod_prime(i64 a, i64 p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (jacobi_symbol(a, p) != 1) throw BadInput("sqrt_mod_prime: not a quadratic residue");
    if (p % 4 == 3) return static_cast<i64>(modpow(a, (p + 1) / 4, p));
    // write p-1 = q * 2^s with q odd
    i64 q = p - 1;
    int s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    // find a non-residue z
    i64 z = 2;
    while (jacobi_symbol(z, p) != -1) ++z;
    u64 up = static_cast<u64>(p);
    u64 m = static_cast<u64>(s);
    u64 c = modpow(static_cast<u64>(z), static_cast<u64>(q), up);
    u64 t = modpow(static_cast<u64>(a), static_cast<u64>(q), up);
    u64 r = modpow(static_cast<u64>(a), static_cast<u64>((q + 1) / 2), up);
    while (t != 1) {
        u64 i = 0;
        u64 tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, up); ++i; }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, up);
        m = i;
        c = mulmod(b, b, up);
        t = mulmod(t, c, up);
        r = mulmod(r, b, up);
    }
    return static_cast<i64>(r);
}

inline i64 gcd64(i64 a, i64 b) { return std::gcd(a, b); }

} // namespace adelic
