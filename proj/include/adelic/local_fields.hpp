#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "adelic/common.hpp"
#include "adelic/gammafn.hpp"
#include "adelic/intmath.hpp"
#include "adelic/rational.hpp"

namespace adelic {

// ----------------------------------------------------------------------
// Local gamma and beta functions of R, C and the p-fields.  These are the
// atomic factors of every adelic identity in this library.
// ----------------------------------------------------------------------

struct RealGammaArgs {
    Cplx alpha;
    int nu = 0; // in F_2
};

struct ComplexGammaArgs {
    Cplx alpha;
    long nu = 0; // in Z
};

struct PAdicPlace {
    i64 p = 2;
    int f = 1; // residue degree, 1 or 2
    i64 q = 2; // module p^f

    static PAdicPlace make(i64 p, int f) {
        if (!is_prime(p)) throw BadInput("PAdicPlace: p must be prime");
        if (f != 1 && f != 2) throw BadInput("PAdicPlace: residue degree must be 1 or 2");
        return PAdicPlace{p, f, f == 1 ? p : p * p};
    }
};

// Multiplicative character of Z_p^x of rank rho, given by its values on the
// units mod p^rho.  values[u] is the character value at u (coprime to p),
// zero entries at non-units.  r is the additive-character rank (0 over Q_p).
struct LocalCharacter {
    i64 p = 2;
    int rank = 0;
    std::vector<Cplx> values; // indexed 0 .. p^rank - 1; empty when rank == 0
    int r = 0;

    i64 modulus() const {
        i64 m = 1;
        for (int i = 0; i < rank; ++i) m *= p;
        return m;
    }
};

namespace detail {

inline Cplx i_pow_minus(long nu) {
    // i^{-nu}
    switch (((nu % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

inline void reject_near_nonpositive_integer(const Cplx& z, double guard, const char* who) {
    double r = std::round(z.real());
    if (r <= 0.0 && std::abs(z - Cplx(r)) < guard)
        throw PoleError(std::string(who) + ": argument within pole guard of non-positive integer");
}

} // namespace detail

// Gamma function of the quasicharacter sgn^nu(x)|x|^alpha of R:
//   2 i^{-nu} (2 pi)^{-alpha} Gamma(alpha) cos(pi (alpha - nu) / 2)
// Points where Gamma poles (including removable ones) are rejected.
inline Cplx gamma_real(Cplx alpha, int nu, const PrecisionPolicy& pol = {}) {
    if (nu != 0 && nu != 1) throw ConstraintViolation("gamma_real: nu must be 0 or 1");
    detail::reject_near_nonpositive_integer(alpha, pol.pole_guard, "gamma_real");
    const double pi = std::numbers::pi;
    Cplx val = 2.0 * detail::i_pow_minus(nu) * std::exp(-alpha * std::log(2.0 * pi)) *
               gamma_fn(alpha) * std::cos(pi * 0.5 * (alpha - Cplx(nu)));
    if (!finite(val)) throw PoleError("gamma_real: non-finite value");
    return val;
}

// Gamma function of the quasicharacter z^nu (z zbar)^{-nu/2 + alpha} of C:
//   i^{-nu} 2 (2 pi)^{-2 alpha} Gamma(alpha + nu/2) Gamma(alpha - nu/2) sin(pi (2 alpha - nu)/2)
inline Cplx gamma_complex(Cplx alpha, long nu, const PrecisionPolicy& pol = {}) {
    Cplx ap = alpha + Cplx(0.5 * static_cast<double>(nu));
    Cplx am = alpha - Cplx(0.5 * static_cast<double>(nu));
    detail::reject_near_nonpositive_integer(ap, pol.pole_guard, "gamma_complex");
    detail::reject_near_nonpositive_integer(am, pol.pole_guard, "gamma_complex");
    const double pi = std::numbers::pi;
    Cplx val = detail::i_pow_minus(nu) * 2.0 * std::exp(-2.0 * alpha * std::log(2.0 * pi)) *
               gamma_fn(ap) * gamma_fn(am) * std::sin(pi * 0.5 * (2.0 * alpha - Cplx(static_cast<double>(nu))));
    if (!finite(val)) throw PoleError("gamma_complex: non-finite value");
    return val;
}

// Reduced gamma function of a local p-field with module q:
//   G_q(x) = (1 - x/q) / (1 - 1/x),  pole at x = 1.
inline Cplx reduced_gamma(Cplx x, i64 q, const PrecisionPolicy& pol = {}) {
    if (std::abs(x - Cplx(1.0)) < pol.pole_guard)
        throw PoleError("reduced_gamma: x within pole guard of 1");
    double dq = static_cast<double>(q);
    // written as x (1 - x/q) / (x - 1) so that x = 0 is regular
    return x * (1.0 - x / dq) / (x - 1.0);
}

inline Rational reduced_gamma_exact(const Rational& x, i64 q) {
    if (x == Rational(1)) throw PoleError("reduced_gamma_exact: pole at x = 1");
    Rational one(1);
    return x * (one - x / Rational(q)) / (x - one);
}

// Gamma_q(alpha) = G_q(q^alpha) with the principal branch of q^alpha.
inline Cplx gamma_q(Cplx alpha, i64 q, const PrecisionPolicy& pol = {}) {
    Cplx x = std::exp(alpha * std::log(static_cast<double>(q)));
    return reduced_gamma(x, q, pol);
}

inline Rational gamma_q_exact(int alpha, i64 q) {
    return reduced_gamma_exact(Rational::int_pow(q, alpha), q);
}

// kappa(theta) = q^{rho/2} Int_{|x|=1} theta(x) chi(pi^{-r-rho} x) dx over Q_p,
// with Haar measure normalized so Int_{Z_p} dx = 1; evaluates to the finite sum
//   p^{-rho/2} Sum_{u in (Z/p^rho)^x} theta(u) e^{2 pi i u / p^{rho+r}}.
// Unit modulus for primitive theta.
inline Cplx normalized_gauss_sum(const LocalCharacter& chi) {
    if (chi.rank < 1) throw ConstraintViolation("normalized_gauss_sum: rank must be >= 1");
    const double pi = std::numbers::pi;
    i64 m = chi.modulus();
    double mm = static_cast<double>(m);
    // additive character e^{2 pi i u / p^{rho + r}}; over Q_p r = 0
    double denom = mm;
    for (int i = 0; i < chi.r; ++i) denom *= static_cast<double>(chi.p);
    Cplx sum{0.0, 0.0};
    for (i64 u = 1; u < m; ++u) {
        if (u % chi.p == 0) continue;
        double ang = 2.0 * pi * static_cast<double>(u) / denom;
        sum += chi.values[static_cast<std::size_t>(u)] * Cplx(std::cos(ang), std::sin(ang));
    }
    return sum / std::sqrt(mm);
}

// Gamma(alpha; theta) for a ramified local character over Q_p:
//   kappa(theta) q^{(alpha - 1/2)(r + rho)},  q = p.
inline Cplx local_gamma_ramified(Cplx alpha, const LocalCharacter& chi, const PrecisionPolicy& /*pol*/ = {}) {
    if (chi.rank < 1)
        throw ConstraintViolation("local_gamma_ramified: character is unramified; use reduced_gamma");
    Cplx kappa = normalized_gauss_sum(chi);
    double lp = std::log(static_cast<double>(chi.p));
    return kappa * std::exp((alpha - Cplx(0.5)) * (static_cast<double>(chi.r + chi.rank) * lp));
}

// ----------------------------------------------------------------------
// Beta functions: products of three local gammas under the argument
// constraints alpha+beta+gamma = 1 (0 for the primed family).
// ----------------------------------------------------------------------

namespace detail {

inline void check_sum(Cplx a, Cplx b, Cplx c, double expected, const char* who) {
    if (std::abs(a + b + c - Cplx(expected)) > 1e-12)
        throw ConstraintViolation(std::string(who) + ": arguments must sum to " +
                                  std::to_string(expected));
}

} // namespace detail

inline Cplx beta_real(const RealGammaArgs& a, const RealGammaArgs& b, const RealGammaArgs& c,
                      const PrecisionPolicy& pol = {}) {
    detail::check_sum(a.alpha, b.alpha, c.alpha, 1.0, "beta_real");
    if ((a.nu + b.nu + c.nu) % 2 != 0)
        throw ConstraintViolation("beta_real: sign exponents must sum to 0 in F_2");
    return gamma_real(a.alpha, a.nu, pol) * gamma_real(b.alpha, b.nu, pol) *
           gamma_real(c.alpha, c.nu, pol);
}

// Reduced form B_inf(alpha, beta, gamma): all sign exponents zero.
inline Cplx beta_real_reduced(Cplx a, Cplx b, Cplx c, const PrecisionPolicy& pol = {}) {
    return beta_real({a, 0}, {b, 0}, {c, 0}, pol);
}

inline Cplx beta_complex(const ComplexGammaArgs& a, const ComplexGammaArgs& b,
                         const ComplexGammaArgs& c, const PrecisionPolicy& pol = {}) {
    detail::check_sum(a.alpha, b.alpha, c.alpha, 1.0, "beta_complex");
    if (a.nu + b.nu + c.nu != 0)
        throw ConstraintViolation("beta_complex: weights must sum to 0 in Z");
    return gamma_complex(a.alpha, a.nu, pol) * gamma_complex(b.alpha, b.nu, pol) *
           gamma_complex(c.alpha, c.nu, pol);
}

inline Cplx beta_complex_reduced(Cplx a, Cplx b, Cplx c, const PrecisionPolicy& pol = {}) {
    return beta_complex({a, 0}, {b, 0}, {c, 0}, pol);
}

inline Cplx beta_padic(Cplx a, Cplx b, Cplx c, i64 q, const PrecisionPolicy& pol = {}) {
    detail::check_sum(a, b, c, 1.0, "beta_padic");
    return gamma_q(a, q, pol) * gamma_q(b, q, pol) * gamma_q(c, q, pol);
}

inline Rational beta_padic_exact(int a, int b, int c, i64 q) {
    if (a + b + c != 1) throw ConstraintViolation("beta_padic_exact: arguments must sum to 1");
    return gamma_q_exact(a, q) * gamma_q_exact(b, q) * gamma_q_exact(c, q);
}

// Primed beta function: argument sum 0, sign sum 1 in F_2.  Describes the
// massless superstring amplitudes.
inline Cplx beta_primed(const RealGammaArgs& a, const RealGammaArgs& b, const RealGammaArgs& c,
                        const PrecisionPolicy& pol = {}) {
    detail::check_sum(a.alpha, b.alpha, c.alpha, 0.0, "beta_primed");
    if ((a.nu + b.nu + c.nu) % 2 != 1)
        throw ConstraintViolation("beta_primed: sign exponents must sum to 1 in F_2");
    return gamma_real(a.alpha, a.nu, pol) * gamma_real(b.alpha, b.nu, pol) *
           gamma_real(c.alpha, c.nu, pol);
}

} // namespace adelic
