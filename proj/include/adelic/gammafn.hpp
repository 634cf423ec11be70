#pragma once

#include <cmath>
#include <numbers>

#include "adelic/common.hpp"

namespace adelic {

namespace detail {

// Lanczos approximation, g = 607/128, 15 terms.  Relative error ~1e-15 on
// the right half-plane, which is ample for the double-precision targets here.
inline constexpr double kLanczosG = 607.0 / 128.0;
inline constexpr double kLanczosCoef[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

inline Cplx lanczos_log_gamma_right(Cplx z) {
    // valid for Re z >= 0.5
    z -= 1.0;
    Cplx x = kLanczosCoef[0];
    for (int k = 1; k < 15; ++k) x += kLanczosCoef[k] / (z + static_cast<double>(k));
    Cplx t = z + (kLanczosG + 0.5);
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline bool is_nonpositive_integer(const Cplx& z, double tol = 0.0) {
    if (z.imag() != 0.0 && std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

} // namespace detail

// log Gamma(z); on the right half-plane this is the principal branch, and
// exp(log_gamma(z)) equals Gamma(z) everywhere away from poles.
inline Cplx log_gamma(Cplx z) {
    if (detail::is_nonpositive_integer(z))
        throw PoleAtNonPositiveInteger("log_gamma: pole at z = " + std::to_string(z.real()));
    if (z.real() >= 0.5) return detail::lanczos_log_gamma_right(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const double pi = std::numbers::pi;
    Cplx logsin = std::log(std::sin(pi * z));
    return std::log(Cplx(pi)) - logsin - detail::lanczos_log_gamma_right(1.0 - z);
}

inline Cplx gamma_fn(Cplx z) { return std::exp(log_gamma(z)); }

// Gamma(a)/Gamma(b) without intermediate overflow.
inline Cplx gamma_ratio(Cplx a, Cplx b) { return std::exp(log_gamma(a) - log_gamma(b)); }

} // namespace adelic
