#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adelic/common.hpp"
#include "adelic/intmath.hpp"

namespace adelic {

// ----------------------------------------------------------------------
// Arithmetic of quadratic fields Q(sqrt d): discriminants, place
// classification, prime-divisor splitting with Diophantine witnesses,
// torsion and fundamental units.
// ----------------------------------------------------------------------

struct QuadField {
    i64 d = 0;         // squarefree, not 0 or 1
    i64 D = 0;         // discriminant: d if d = 1 mod 4, else 4d
    bool one_class = false;
    std::map<i64, int> ramified_ranks; // p -> r_p with prod p^{r_p} = |D|
};

inline bool is_one_class(i64 d) {
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw NotSquarefree("is_one_class: d must be squarefree and not 0 or 1");
    if (d < 0) {
        for (i64 v : {-1, -2, -3, -7, -11, -19, -43, -67, -163})
            if (d == v) return true;
        return false;
    }
    if (is_prime(d) && d % 4 == 3) return true;
    if (d % 2 == 0 && is_prime(d / 2) && (d / 2) % 4 == 3) return true;
    auto f = factorize(d);
    if (f.size() == 2 && f[0].second == 1 && f[1].second == 1 &&
        f[0].first % 4 == 3 && f[1].first % 4 == 3)
        return true;
    return false;
}

inline QuadField make_field(i64 d) {
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw NotSquarefree("make_field: d must be squarefree and not 0 or 1");
    QuadField F;
    F.d = d;
    i64 dm4 = ((d % 4) + 4) % 4;
    F.D = (dm4 == 1) ? d : 4 * d;
    F.one_class = is_one_class(d);
    i64 absD = F.D < 0 ? -F.D : F.D;
    for (auto [p, e] : factorize(absD)) F.ramified_ranks[p] = e;
    return F;
}

// P_d vs S_d: whether d is a nonzero square in Q_p.
enum class PlaceClass { split, nonsplit };

inline PlaceClass classify_place(i64 d, i64 p) {
    if (!is_prime(p)) throw BadInput("classify_place: p must be prime");
    if (p == 2) {
        if (d % 2 == 0) return PlaceClass::nonsplit;
        i64 r = ((d % 8) + 8) % 8;
        return r == 1 ? PlaceClass::split : PlaceClass::nonsplit;
    }
    if (d % p == 0) return PlaceClass::nonsplit;
    return jacobi_symbol(d, p) == 1 ? PlaceClass::split : PlaceClass::nonsplit;
}

enum class SplitCase { ramified, inert, split_sqrt_basis, split_half_basis };

inline const char* split_case_name(SplitCase c) {
    switch (c) {
        case SplitCase::ramified: return "ramified";
        case SplitCase::inert: return "inert";
        case SplitCase::split_sqrt_basis: return "split";
        default: return "split";
    }
}

// Integer coordinates of a divisor: a + b sqrt(d) when D = 4d, and
// a + b (1 + sqrt d)/2 when D = d.
struct DivisorCoords {
    i64 a = 0;
    i64 b = 0;
};

struct PrimeDivisorFactorization {
    i64 p = 0;
    SplitCase kase = SplitCase::inert;
    i64 q = 0; // divisor norm: p (ramified/split) or p^2 (inert)
    i64 d = 0; // field parameter, for norm evaluation
    bool half_basis = false;
    std::optional<std::array<DivisorCoords, 2>> divisors; // absent for inert
    std::optional<i64> hensel_root;                       // split cases only

    i64 norm(const DivisorCoords& v) const {
        i128 a = v.a, b = v.b;
        i128 n = half_basis ? a * a + a * b + ((1 - static_cast<i128>(d)) / 4) * b * b
                            : a * a - static_cast<i128>(d) * b * b;
        return static_cast<i64>(n);
    }

    DivisorCoords conjugate(const DivisorCoords& v) const {
        return half_basis ? DivisorCoords{v.a + v.b, -v.b} : DivisorCoords{v.a, -v.b};
    }

    // residue of the divisor under sqrt(d) -> r (resp. omega -> r)
    i64 eval_mod_p(const DivisorCoords& v, i64 r) const {
        i64 m = (v.a + r * v.b) % p;
        return ((m % p) + p) % p;
    }
};

namespace detail {

// First solution of |form(a,b)| = p, scanning b = 1.. and a = 0, 1, -1, 2, ...
// For d < 0 the form is positive definite, which caps both coordinates
// sharply; for d > 0 the generous indefinite-form bound applies.
inline DivisorCoords solve_norm_equation(i64 d, bool half_basis, i64 p) {
    auto norm = [&](i64 a, i64 b) -> i128 {
        i128 aa = a, bb = b;
        return half_basis ? aa * aa + aa * bb + ((1 - static_cast<i128>(d)) / 4) * bb * bb
                          : aa * aa - static_cast<i128>(d) * bb * bb;
    };
    i64 b_bound, a_bound;
    if (d < 0) {
        // N(a + b sqrt d) = a^2 + |d| b^2; N(a + b w) >= (|d|/4) b^2
        b_bound = isqrt(half_basis ? (4 * p) / (-d) : p / (-d)) + 1;
        a_bound = isqrt(p) + b_bound / 2 + 2;
    } else {
        b_bound = a_bound = isqrt(p * (1 + d)) + 2;
    }
    for (i64 b = 1; b <= b_bound; ++b) {
        for (i64 k = 0; k <= 2 * a_bound; ++k) {
            i64 a = (k % 2 == 1) ? (k + 1) / 2 : -k / 2; // 0, 1, -1, 2, -2, ...
            i128 n = norm(a, b);
            if (n == p || n == -static_cast<i128>(p)) return {a, b};
        }
    }
    throw SolverExhausted("solve_norm_equation: no solution within search bound for p = " +
                          std::to_string(p));
}

// Smallest root in [1, p-1] of r^2 = d (mod p), or of z^2 - z + (1-d)/4 = 0
// (mod p) in the half-integral basis.
inline i64 canonical_hensel_root(i64 d, bool half_basis, i64 p) {
    if (!half_basis) {
        i64 r = sqrt_mod_prime(((d % p) + p) % p, p);
        return std::min(r, p - r);
    }
    if (p == 2) return 1;
    i64 r = sqrt_mod_prime(((d % p) + p) % p, p);
    i64 inv2 = static_cast<i64>(modpow(2, static_cast<u64>(p - 2), static_cast<u64>(p)));
    i64 z1 = static_cast<i64>(mulmod(static_cast<u64>(((1 + r) % p + p) % p), static_cast<u64>(inv2), static_cast<u64>(p)));
    i64 z2 = static_cast<i64>(mulmod(static_cast<u64>(((1 - r) % p + p) % p), static_cast<u64>(inv2), static_cast<u64>(p)));
    if (z1 == 0) return z2;
    if (z2 == 0) return z1;
    return std::min(z1, z2);
}

} // namespace detail

// Order the split divisor pair so that the first one, evaluated at the
// canonical Hensel root, is divisible by p (the |p-divisor|_p = 1/p witness).
inline PrimeDivisorFactorization normalize_divisors(PrimeDivisorFactorization f, i64 d) {
    if (f.kase != SplitCase::split_sqrt_basis && f.kase != SplitCase::split_half_basis)
        throw ConstraintViolation("normalize_divisors: split case required");
    if (!f.divisors) throw ConstraintViolation("normalize_divisors: no divisors stored");
    i64 r = detail::canonical_hensel_root(d, f.half_basis, f.p);
    f.hensel_root = r;
    auto& dv = *f.divisors;
    if (f.eval_mod_p(dv[0], r) != 0) std::swap(dv[0], dv[1]);
    if (f.eval_mod_p(dv[0], r) != 0)
        throw Error("normalize_divisors: neither divisor satisfies the divisibility witness");
    return f;
}

inline PrimeDivisorFactorization split_prime(const QuadField& F, i64 p) {
    if (!F.one_class) throw NotOneClass("split_prime: field is not one-class");
    if (!is_prime(p)) throw BadInput("split_prime: p must be prime");
    PrimeDivisorFactorization f;
    f.p = p;
    f.d = F.d;
    f.half_basis = (F.D == F.d);
    bool ramified = (F.D % p == 0);
    PlaceClass pc = classify_place(F.d, p);
    if (ramified) {
        f.kase = SplitCase::ramified;
        f.q = p;
        DivisorCoords pr = detail::solve_norm_equation(F.d, f.half_basis, p);
        f.divisors = {{pr, f.conjugate(pr)}};
        return f;
    }
    if (pc == PlaceClass::nonsplit) {
        f.kase = SplitCase::inert;
        f.q = p * p;
        return f;
    }
    f.kase = f.half_basis ? SplitCase::split_half_basis : SplitCase::split_sqrt_basis;
    f.q = p;
    DivisorCoords pr = detail::solve_norm_equation(F.d, f.half_basis, p);
    f.divisors = {{pr, f.conjugate(pr)}};
    return normalize_divisors(f, F.d);
}

// ----------------------------------------------------------------------
// Units
// ----------------------------------------------------------------------

// Omega = x + y sqrt(d)          when d = 2, 3 (mod 4)
// Omega = x + y (1 + sqrt d)/2   when d = 1 (mod 4)   (half_basis flag)
struct FundamentalUnit {
    i64 x = 0;
    i64 y = 0;
    int norm = 1;
    bool half_basis = false;
    i64 d = 0;

    double real_value() const {
        double sd = std::sqrt(static_cast<double>(d));
        return half_basis ? x + y * (1.0 + sd) / 2.0 : x + y * sd;
    }
};

namespace detail {

// Fundamental solution of x^2 - d y^2 = +-1 by the continued fraction of
// sqrt(d); returns (x, y, norm).
inline std::array<i64, 3> pell_by_continued_fraction(i64 d) {
    i64 a0 = isqrt(d);
    if (a0 * a0 == d) throw BadInput("pell: d must not be a square");
    i128 h0 = 1, h1 = a0; // convergent numerators
    i128 k0 = 0, k1 = 1;  // denominators
    i64 P = 0, Q = 1;
    i64 a = a0;
    int steps = 0;
    while (true) {
        P = a * Q - P;
        Q = (d - P * P) / Q;
        a = (a0 + P) / Q;
        ++steps;
        if (Q == 1) break;
        i128 h2 = a * h1 + h0;
        i128 k2 = a * k1 + k0;
        h0 = h1; h1 = h2;
        k0 = k1; k1 = k2;
        if (h1 > (static_cast<i128>(1) << 62))
            throw Error("pell: fundamental solution exceeds 64-bit range");
        if (steps > 100000) throw SolverExhausted("pell: period not found");
    }
    i64 x = static_cast<i64>(h1);
    i64 y = static_cast<i64>(k1);
    int norm = (x * x - d * y * y) == 1 ? 1 : -1;
    return {x, y, norm};
}

} // namespace detail

inline FundamentalUnit fundamental_unit(i64 d) {
    if (d <= 1) throw BadInput("fundamental_unit: d must be a positive squarefree integer > 1");
    if (!is_squarefree(d)) throw NotSquarefree("fundamental_unit: d must be squarefree");
    auto [u, v, n] = detail::pell_by_continued_fraction(d);
    FundamentalUnit U;
    U.d = d;
    U.half_basis = (((d % 4) + 4) % 4 == 1);
    if (!U.half_basis) {
        U.x = u;
        U.y = v;
        U.norm = n;
        return U;
    }
    // The maximal order is Z[(1+sqrt d)/2]; the unit group of Z[sqrt d] has
    // index 1 or 3 in it.  A cube root (X + Y sqrt d)/2 of u + v sqrt d
    // satisfies X^3 - 3 n X = 2 u with d Y^2 = X^2 - 4 n.
    i64 X = static_cast<i64>(std::llround(std::cbrt(2.0 * static_cast<double>(u))));
    for (i64 cand = X - 2; cand <= X + 2; ++cand) {
        if (cand <= 0) continue;
        i128 lhs = static_cast<i128>(cand) * cand * cand - 3 * static_cast<i128>(n) * cand;
        if (lhs != 2 * static_cast<i128>(u)) continue;
        i64 num = cand * cand - 4 * n;
        if (num % d != 0) continue;
        i64 Y2 = num / d;
        i64 Y;
        if (!is_perfect_square(Y2, Y) || Y == 0) continue;
        U.x = (cand - Y) / 2;
        U.y = Y;
        U.norm = n;
        return U;
    }
    // index 1: Omega = u + v sqrt d = (u - v) + 2v * omega
    U.x = u - v;
    U.y = 2 * v;
    U.norm = n;
    return U;
}

// Torsion units: {+-1}, plus {+-i} for d = -1 and the six sixth roots for d = -3.
inline std::vector<std::string> torsion_units(i64 d) {
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw NotSquarefree("torsion_units: d must be squarefree and not 0 or 1");
    if (d == -1) return {"1", "-1", "i", "-i"};
    if (d == -3)
        return {"1", "-1", "(1+sqrt(-3))/2", "-(1+sqrt(-3))/2", "(1-sqrt(-3))/2", "-(1-sqrt(-3))/2"};
    return {"1", "-1"};
}

inline int torsion_order(i64 d) { return static_cast<int>(torsion_units(d).size()); }

} // namespace adelic
