#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "adelic/characters.hpp"
#include "adelic/common.hpp"
#include "adelic/gammafn.hpp"
#include "adelic/intmath.hpp"

namespace adelic {

// ----------------------------------------------------------------------
// Analytic continuation backend: Hurwitz zeta by Euler-Maclaurin, and the
// L-functions built on it.  These realize every regularized Euler product
// in the verifier modules as a ratio of continued L-values.
// ----------------------------------------------------------------------

namespace detail {

// B_{2k} for k = 1..16, exact
inline constexpr i64 kBernNum[17] = {0, 1,  -1, 1,  -1, 5,  -691, 7, -3617, 43867,
                                     -174611, 854513, -236364091, 8553103,
                                     -23749461029LL, 8615841276005LL, -7709321041217LL};
inline constexpr i64 kBernDen[17] = {1, 6, 30, 42, 30, 66, 2730, 6, 510, 798,
                                     330, 138, 2730, 6, 870, 14322, 510};

inline double bern_over_fact(int k) {
    double fact = 1.0;
    for (int i = 2; i <= 2 * k; ++i) fact *= i;
    return static_cast<double>(kBernNum[k]) / static_cast<double>(kBernDen[k]) / fact;
}

// |s (s+1) ... (s+m-1)|
inline double rising_abs(Cplx s, int m) {
    double r = 1.0;
    for (int j = 0; j < m; ++j) r *= std::abs(s + Cplx(j));
    return r;
}

// Bound on the Euler-Maclaurin remainder after K correction terms with tail
// starting at T: |B_{2K+2}/(2K+2)!| |(s)_{2K+1}| T^{-sigma-2K-1} |s+2K+1|/(sigma+2K+1).
inline double em_error_bound(Cplx s, double T, int K) {
    double sigma = s.real();
    double denom = sigma + 2.0 * K + 1.0;
    if (denom <= 0.5) return std::numeric_limits<double>::infinity();
    return std::abs(bern_over_fact(K + 1)) * rising_abs(s, 2 * K + 1) *
           std::pow(T, -sigma - 2.0 * K - 1.0) * std::abs(s + Cplx(2.0 * K + 1.0)) / denom;
}

// (e^w - 1) / w, stable near w = 0
inline Cplx expm1_over(Cplx w) {
    if (std::abs(w) < 1e-4)
        return 1.0 + w * (0.5 + w * (1.0 / 6.0 + w * (1.0 / 24.0 + w / 120.0)));
    return (std::exp(w) - 1.0) / w;
}

} // namespace detail

// zeta(s, a) - 1/(s-1): the entire part of the Hurwitz zeta function.
// Euler-Maclaurin with at least policy.series_terms initial terms; the term
// count is raised when the remainder bound exceeds target_abs_err, and
// AccuracyNotReachable is thrown when no affordable count reaches it.
inline Cplx hurwitz_zeta_deflated(Cplx s, double a, const PrecisionPolicy& pol = {}) {
    if (!(a > 0.0) || a > 1.0) throw BadInput("hurwitz_zeta: a must lie in (0, 1]");
    const int K = pol.bernoulli_terms;
    if (s.real() + 2.0 * K + 1.0 <= 0.5)
        throw AccuracyNotReachable("hurwitz_zeta: Re s too negative for the correction order");

    // For Re s < 0 the initial-sum terms grow like T^{-Re s} and cancel
    // against the tail, so start just past the asymptotic radius of the
    // correction series and let the remainder bound raise the count.
    int M;
    if (s.real() < -0.5) {
        double radius = (std::abs(s) + 2.0 * K + 2.0) / (2.0 * std::numbers::pi) - a;
        M = std::max(8, static_cast<int>(std::ceil(radius)) + 1);
    } else {
        M = std::max(pol.series_terms, 10);
    }
    const double target = 0.5 * pol.target_abs_err;
    const int cap = std::max(20000, 64 * pol.series_terms);
    while (true) {
        double bound = detail::em_error_bound(s, M + a, K);
        if (bound <= target) break;
        double factor = std::pow(bound / target, 1.0 / (s.real() + 2.0 * K + 1.0));
        int M2 = static_cast<int>(std::ceil(M * std::max(factor, 1.25))) + 4;
        if (M2 > cap) {
            if (detail::em_error_bound(s, cap + a, K) > target)
                throw AccuracyNotReachable("hurwitz_zeta: policy too weak for requested s");
            M = cap;
            break;
        }
        M = M2;
    }

    Cplx sum{0.0, 0.0};
    double magnitude = 0.0; // running scale of everything added, for the rounding estimate
    for (int n = 0; n < M; ++n) {
        Cplx term = std::exp(-s * std::log(n + a));
        sum += term;
        magnitude += std::abs(term.real()) + std::abs(term.imag());
    }

    const double T = M + a;
    const double lnT = std::log(T);
    // T^{1-s}/(s-1) - 1/(s-1) = -ln T * (e^w - 1)/w,  w = (1-s) ln T
    Cplx pole_part = -lnT * detail::expm1_over((1.0 - s) * lnT);
    sum += pole_part;
    magnitude += std::abs(pole_part);

    Cplx Tms = std::exp(-s * lnT);
    sum += 0.5 * Tms;
    magnitude += 0.5 * std::abs(Tms);

    Cplx rising = s;                 // (s)_{2k-1} for k = 1
    Cplx Tpow = Tms / T;             // T^{-s-2k+1} for k = 1
    const double T2 = T * T;
    for (int k = 1; k <= K; ++k) {
        Cplx corr = detail::bern_over_fact(k) * rising * Tpow;
        sum += corr;
        magnitude += std::abs(corr);
        rising *= (s + Cplx(2.0 * k - 1.0)) * (s + Cplx(2.0 * k));
        Tpow /= T2;
    }

    double rounding = 4e-16 * magnitude;
    if (rounding > pol.target_abs_err && rounding > 1e-11 * std::abs(sum))
        throw AccuracyNotReachable("hurwitz_zeta: double-precision cancellation exceeds target");
    return sum;
}

inline Cplx hurwitz_zeta(Cplx s, double a, const PrecisionPolicy& pol = {}) {
    if (std::abs(s - Cplx(1.0)) < 1e-14) throw PoleAtOne();
    return hurwitz_zeta_deflated(s, a, pol) + 1.0 / (s - 1.0);
}

inline Cplx riemann_zeta(Cplx s, const PrecisionPolicy& pol = {}) {
    return hurwitz_zeta(s, 1.0, pol);
}

// L(s, chi) = N^{-s} sum_{a=1..N} chi(a) zeta(s, a/N), with the pole term
// dropped exactly when sum chi(a) = 0 (any non-principal character).
inline Cplx dirichlet_l(Cplx s, const DirichletCharacter& chi, const PrecisionPolicy& pol = {}) {
    const i64 N = chi.modulus();
    if (N == 1) return riemann_zeta(s, pol);
    bool principal = chi.is_principal();
    if (principal && std::abs(s - Cplx(1.0)) < 1e-14) throw PoleAtOne();
    Cplx sum{0.0, 0.0};
    double residue_coef = 0.0;
    for (i64 a = 1; a <= N; ++a) {
        auto v = chi.at_exact(a);
        if (!v) continue;
        sum += v->value() * hurwitz_zeta_deflated(s, static_cast<double>(a) / N, pol);
        if (principal) residue_coef += 1.0;
    }
    if (principal) sum += residue_coef / (s - 1.0);
    return std::exp(-s * std::log(static_cast<double>(N))) * sum;
}

// zeta_K(s) = zeta(s) L(s, chi_D) for the quadratic field of fundamental
// discriminant D.
inline Cplx dedekind_zeta_quadratic(Cplx s, i64 D, const PrecisionPolicy& pol = {}) {
    if (!is_fundamental_discriminant(D))
        throw BadInput("dedekind_zeta_quadratic: D must be a fundamental discriminant");
    if (std::abs(s - Cplx(1.0)) < 1e-14) throw PoleAtOne();
    DirichletCharacter chiD = DirichletCharacter::kronecker(D);
    return riemann_zeta(s, pol) * dirichlet_l(s, chiD, pol);
}

// Identifier for the L-function realizing a regularized Euler product.
struct LFunctionId {
    enum class Kind { riemann, dirichlet, dedekind_quadratic, norm_induced } kind = Kind::riemann;
    DirichletCharacter chi; // dirichlet / norm_induced
    i64 D = 0;              // dedekind_quadratic / norm_induced

    static LFunctionId riemann() { return {}; }
    static LFunctionId dirichlet(DirichletCharacter c) {
        return {Kind::dirichlet, std::move(c), 0};
    }
    static LFunctionId dedekind(i64 D) { return {Kind::dedekind_quadratic, {}, D}; }
    static LFunctionId norm_induced(DirichletCharacter c, i64 D) {
        return {Kind::norm_induced, std::move(c), D};
    }
};

inline Cplx l_value(const LFunctionId& id, Cplx s, const PrecisionPolicy& pol = {}) {
    switch (id.kind) {
        case LFunctionId::Kind::riemann: return riemann_zeta(s, pol);
        case LFunctionId::Kind::dirichlet: return dirichlet_l(s, id.chi, pol);
        case LFunctionId::Kind::dedekind_quadratic: return dedekind_zeta_quadratic(s, id.D, pol);
        case LFunctionId::Kind::norm_induced: {
            DirichletCharacter chiD = DirichletCharacter::kronecker(id.D);
            return dirichlet_l(s, id.chi, pol) * dirichlet_l(s, id.chi.times(chiD).primitive(), pol);
        }
    }
    throw Error("l_value: bad kind");
}

} // namespace adelic
