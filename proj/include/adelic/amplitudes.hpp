#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>

#include "adelic/common.hpp"
#include "adelic/local_fields.hpp"
#include "adelic/rational.hpp"
#include "adelic/verify.hpp"

namespace adelic {

// ----------------------------------------------------------------------
// 4-particle tree amplitudes: crossing-symmetric Veneziano and Virasoro
// amplitudes with their p-adic analogues, the ramified families, the
// massless superstring amplitude, and the four heterotic amplitudes.
// ----------------------------------------------------------------------

struct ReggeTrajectory {
    double intercept = 1.0;
    double slope = 0.5;
    double mass_sq_sum = -8.0;

    static ReggeTrajectory veneziano_tachyon() { return {1.0, 0.5, -8.0}; }
    static ReggeTrajectory virasoro_tachyon() { return {2.0, 0.25, -32.0}; }

    double constraint_value() const { return 3.0 * intercept + slope * mass_sq_sum; }
    void check_veneziano() const {
        if (std::abs(constraint_value() + 1.0) > 1e-12)
            throw ConstraintViolation("trajectory: 3 alpha + alpha' sum m^2 must equal -1");
    }
    void check_virasoro() const {
        if (std::abs(constraint_value() + 2.0) > 1e-12)
            throw ConstraintViolation("trajectory: 3 alpha + alpha' sum m^2 must equal -2");
    }
};

struct MandelstamPoint {
    double s = 0, t = 0, u = 0;

    static MandelstamPoint from_st(double s, double t, double mass_sq_sum) {
        return {s, t, mass_sq_sum - s - t};
    }
    void check(double mass_sq_sum) const {
        if (std::abs(s + t + u - mass_sq_sum) > 1e-12)
            throw ConstraintViolation("Mandelstam point: s + t + u must equal the mass-squared sum");
    }
};

struct AmplitudePole {
    char channel = 's';
    double location = 0.0;       // value of the channel variable at the pole
    Cplx residue_estimate{0, 0}; // local Laurent coefficient (0 at removable points)
};

struct AmplitudePoleError : PoleError {
    AmplitudePole pole;
    explicit AmplitudePoleError(AmplitudePole p)
        : PoleError(std::string("amplitude pole in channel ") + p.channel + " at " +
                    std::to_string(p.location)),
          pole(p) {}
};

namespace detail {

inline bool near_nonpositive_integer(double x, double guard) {
    double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) < guard;
}

// Gamma_inf(x; nu) pole set: all non-positive integer x (removable points are
// rejected as well, so they count here; their residue estimate comes out ~0).
template <typename Eval>
void scan_poles(const MandelstamPoint& pt, const std::array<double, 3>& args, double guard,
                double slope_per_channel, const Eval& eval) {
    const char chan[3] = {'s', 't', 'u'};
    const double vars[3] = {pt.s, pt.t, pt.u};
    for (int i = 0; i < 3; ++i) {
        if (!near_nonpositive_integer(args[i], guard)) continue;
        AmplitudePole pole;
        pole.channel = chan[i];
        double m = std::round(args[i]);
        // args[i] = base + slope * var  =>  pole where var = (m - base)/slope
        pole.location = vars[i] + (m - args[i]) / slope_per_channel;
        const double eps = 1e-3;
        Cplx g_plus{0, 0}, g_minus{0, 0};
        try {
            g_plus = eval(i, pole.location + eps);
            g_minus = eval(i, pole.location - eps);
            pole.residue_estimate = 0.5 * eps * (g_plus - g_minus);
        } catch (const Error&) {
            pole.residue_estimate = {0, 0};
        }
        throw AmplitudePoleError(pole);
    }
}

} // namespace detail

// V(s,t,u) = B_inf(-a - a's, -a - a't, -a - a'u)
inline Cplx veneziano(const MandelstamPoint& pt, const ReggeTrajectory& traj,
                      const PrecisionPolicy& pol = {}) {
    traj.check_veneziano();
    pt.check(traj.mass_sq_sum);
    auto arg = [&](double v) { return -traj.intercept - traj.slope * v; };
    std::array<double, 3> args{arg(pt.s), arg(pt.t), arg(pt.u)};
    detail::scan_poles(pt, args, pol.pole_guard, -traj.slope, [&](int i, double moved) {
        double v[3] = {pt.s, pt.t, pt.u};
        double shift = moved - v[i];
        v[i] = moved;
        v[(i + 2) % 3] -= shift; // keep s+t+u fixed against the previous channel
        return beta_real_reduced(arg(v[0]), arg(v[1]), arg(v[2]), pol);
    });
    return beta_real_reduced(args[0], args[1], args[2], pol);
}

inline Cplx veneziano_p(const MandelstamPoint& pt, const ReggeTrajectory& traj, i64 q,
                        const PrecisionPolicy& pol = {}) {
    traj.check_veneziano();
    pt.check(traj.mass_sq_sum);
    auto arg = [&](double v) { return -traj.intercept - traj.slope * v; };
    double lq = std::log(static_cast<double>(q));
    for (auto [x, c] : {std::pair{arg(pt.s), 's'}, {arg(pt.t), 't'}, {arg(pt.u), 'u'}}) {
        if (std::abs(std::exp(x * lq) - 1.0) < pol.pole_guard) {
            AmplitudePole pole;
            pole.channel = c;
            pole.location = -traj.intercept / traj.slope;
            throw AmplitudePoleError(pole);
        }
    }
    return beta_padic(arg(pt.s), arg(pt.t), arg(pt.u), q, pol);
}

// exact-rational mode: requires integral beta arguments
inline Rational veneziano_p_exact(const MandelstamPoint& pt, const ReggeTrajectory& traj, i64 q) {
    traj.check_veneziano();
    pt.check(traj.mass_sq_sum);
    auto arg = [&](double v) {
        double x = -traj.intercept - traj.slope * v;
        if (std::abs(x - std::round(x)) > 1e-12)
            throw BadInput("veneziano_p_exact: beta arguments must be integers");
        return static_cast<int>(std::llround(x));
    };
    return beta_padic_exact(arg(pt.s), arg(pt.t), arg(pt.u), q);
}

// W(s,t,u) = B_om(-a/2 - a' s/2, ...)
inline Cplx virasoro(const MandelstamPoint& pt, const ReggeTrajectory& traj,
                     const PrecisionPolicy& pol = {}) {
    traj.check_virasoro();
    pt.check(traj.mass_sq_sum);
    auto arg = [&](double v) { return -0.5 * (traj.intercept + traj.slope * v); };
    std::array<double, 3> args{arg(pt.s), arg(pt.t), arg(pt.u)};
    detail::scan_poles(pt, args, pol.pole_guard, -0.5 * traj.slope, [&](int i, double moved) {
        double v[3] = {pt.s, pt.t, pt.u};
        double shift = moved - v[i];
        v[i] = moved;
        v[(i + 2) % 3] -= shift;
        return beta_complex_reduced(arg(v[0]), arg(v[1]), arg(v[2]), pol);
    });
    return beta_complex_reduced(args[0], args[1], args[2], pol);
}

inline Cplx virasoro_p(const MandelstamPoint& pt, const ReggeTrajectory& traj, i64 q,
                       const PrecisionPolicy& pol = {}) {
    traj.check_virasoro();
    pt.check(traj.mass_sq_sum);
    auto arg = [&](double v) { return -0.5 * (traj.intercept + traj.slope * v); };
    double lq = std::log(static_cast<double>(q));
    for (auto [x, c] : {std::pair{arg(pt.s), 's'}, {arg(pt.t), 't'}, {arg(pt.u), 'u'}}) {
        if (std::abs(std::exp(x * lq) - 1.0) < pol.pole_guard) {
            AmplitudePole pole;
            pole.channel = c;
            pole.location = -traj.intercept / traj.slope;
            throw AmplitudePoleError(pole);
        }
    }
    return beta_padic(arg(pt.s), arg(pt.t), arg(pt.u), q, pol);
}

inline Rational virasoro_p_exact(const MandelstamPoint& pt, const ReggeTrajectory& traj, i64 q) {
    traj.check_virasoro();
    pt.check(traj.mass_sq_sum);
    auto arg = [&](double v) {
        double x = -0.5 * (traj.intercept + traj.slope * v);
        if (std::abs(x - std::round(x)) > 1e-12)
            throw BadInput("virasoro_p_exact: beta arguments must be integers");
        return static_cast<int>(std::llround(x));
    };
    return beta_padic_exact(arg(pt.s), arg(pt.t), arg(pt.u), q);
}

// Ramified generalizations V_{nu mu eta} (signs in F_2) and W_{nu mu eta}
// (weights in Z); crossing-symmetric under permutations of the pairs.
inline Cplx veneziano_ramified(const MandelstamPoint& pt, const ReggeTrajectory& traj,
                               const std::array<int, 3>& signs, const PrecisionPolicy& pol = {}) {
    traj.check_veneziano();
    pt.check(traj.mass_sq_sum);
    if ((signs[0] + signs[1] + signs[2]) % 2 != 0)
        throw ConstraintViolation("veneziano_ramified: signs must sum to 0 in F_2");
    auto arg = [&](double v) { return Cplx(-traj.intercept - traj.slope * v); };
    return beta_real({arg(pt.s), signs[0]}, {arg(pt.t), signs[1]}, {arg(pt.u), signs[2]}, pol);
}

inline Cplx virasoro_ramified(const MandelstamPoint& pt, const ReggeTrajectory& traj,
                              const std::array<long, 3>& weights, const PrecisionPolicy& pol = {}) {
    traj.check_virasoro();
    pt.check(traj.mass_sq_sum);
    if (weights[0] + weights[1] + weights[2] != 0)
        throw ConstraintViolation("virasoro_ramified: weights must sum to 0");
    // same halved arguments as the zero-weight amplitude, which this family
    // must reduce to
    auto arg = [&](double v) { return Cplx(-0.5 * (traj.intercept + traj.slope * v)); };
    return beta_complex({arg(pt.s), weights[0]}, {arg(pt.t), weights[1]}, {arg(pt.u), weights[2]},
                        pol);
}

// Massless RNS superstring amplitude
//   A_inf(s,t,u) = Gamma_inf(-s/2;1) Gamma_inf(-t/2;1) Gamma_inf(-u/2;1),  s+t+u = 0.
inline Cplx superstring(const MandelstamPoint& pt, const PrecisionPolicy& pol = {}) {
    pt.check(0.0);
    std::array<double, 3> args{-pt.s / 2, -pt.t / 2, -pt.u / 2};
    detail::scan_poles(pt, args, pol.pole_guard, -0.5, [&](int i, double moved) {
        double v[3] = {pt.s, pt.t, pt.u};
        double shift = moved - v[i];
        v[i] = moved;
        v[(i + 2) % 3] -= shift;
        return beta_primed({Cplx(-v[0] / 2), 1}, {Cplx(-v[1] / 2), 1}, {Cplx(-v[2] / 2), 1}, pol);
    });
    return beta_primed({Cplx(args[0]), 1}, {Cplx(args[1]), 1}, {Cplx(args[2]), 1}, pol);
}

// Massless heterotic 4-particle amplitudes
//   A^(k)(s,t,u) = B_inf(-1-s/8-S/2, -1-t/8-T/2, -1-u/8-U/2),
// with (S,T,U) one of the four basic index sets; other sets arise by
// permutation and can be passed explicitly.
struct HeteroticIndexSet {
    int k = 0; // 0 when built from an explicit triple
    int S = -8, T = 0, U = 0;

    static HeteroticIndexSet from_k(int k) {
        switch (k) {
            case 1: return {1, -8, 0, 0};
            case 2: return {2, -6, -2, 0};
            case 3: return {3, -4, -4, 0};
            case 4: return {4, -4, -2, -2};
        }
        throw BadInput("heterotic index set: k must be 1..4");
    }
    static HeteroticIndexSet explicit_indices(int S, int T, int U) {
        HeteroticIndexSet idx{0, S, T, U};
        idx.validate();
        return idx;
    }
    void validate() const {
        if (S + T + U != -8) throw ConstraintViolation("heterotic indices must sum to -8");
        for (int v : {S, T, U})
            if (v > 0 || v < -8 || v % 2 != 0)
                throw ConstraintViolation("heterotic indices must lie in {0,-2,-4,-6,-8}");
    }
};

inline Cplx heterotic(const MandelstamPoint& pt, const HeteroticIndexSet& idx,
                      const PrecisionPolicy& pol = {}) {
    idx.validate();
    pt.check(0.0);
    auto arg = [&](double v, int S) { return -1.0 - v / 8.0 - S / 2.0; };
    std::array<double, 3> args{arg(pt.s, idx.S), arg(pt.t, idx.T), arg(pt.u, idx.U)};
    const int SS[3] = {idx.S, idx.T, idx.U};
    detail::scan_poles(pt, args, pol.pole_guard, -1.0 / 8.0, [&](int i, double moved) {
        double v[3] = {pt.s, pt.t, pt.u};
        double shift = moved - v[i];
        v[i] = moved;
        v[(i + 2) % 3] -= shift;
        return beta_real_reduced(arg(v[0], SS[0]), arg(v[1], SS[1]), arg(v[2], SS[2]), pol);
    });
    return beta_real_reduced(args[0], args[1], args[2], pol);
}

namespace detail {

// Gamma_inf(-1 - s/8 - S/2; 0) = shift_factor(S, s) * Gamma_inf(-s/8; shift_weight(S))
inline int shift_weight(int S) { return (S == -8 || S == -4 || S == 0) ? 1 : 0; }

inline Cplx shift_factor(int S, double s) {
    const double pi = std::numbers::pi;
    const Cplx i{0.0, 1.0};
    switch (S) {
        case -8: return -i / std::pow(16.0 * pi, 3) * (16.0 - s) * (8.0 - s) * s;
        case -6: return (8.0 - s) * s / std::pow(16.0 * pi, 2);
        case -4: return i * s / (16.0 * pi);
        case -2: return {1.0, 0.0};
        case 0: return -16.0 * pi * i / (8.0 + s);
    }
    throw BadInput("shift_factor: S must be in {0,-2,-4,-6,-8}");
}

} // namespace detail

// Factorized closed forms of the four heterotic amplitudes as a rational
// prefactor times three Gamma_inf(-x/8; nu) factors.
inline Cplx heterotic_factorized(const MandelstamPoint& pt, int k, const PrecisionPolicy& pol = {}) {
    pt.check(0.0);
    const double pi = std::numbers::pi;
    const Cplx i{0.0, 1.0};
    auto G = [&](double v, int nu) { return gamma_real(Cplx(-v / 8.0), nu, pol); };
    double s = pt.s, t = pt.t, u = pt.u;
    switch (k) {
        case 1:
            return i / (16.0 * pi) * (16.0 - s) * (8.0 - s) * s / ((8.0 + t) * (8.0 + u)) *
                   G(s, 1) * G(t, 1) * G(u, 1);
        case 2:
            return -i / (16.0 * pi) * (8.0 - s) * s / (8.0 + u) * G(s, 0) * G(t, 0) * G(u, 1);
        case 3:
            return i / (16.0 * pi) * s * t / (8.0 + u) * G(s, 1) * G(t, 1) * G(u, 1);
        case 4:
            return i * s / (16.0 * pi) * G(s, 1) * G(t, 0) * G(u, 0);
    }
    throw BadInput("heterotic_factorized: k must be 1..4");
}

// Checks the factorized form against the beta-function definition and each
// single-gamma shift identity at the same point.
inline RegProductReport heterotic_factorization_check(const MandelstamPoint& pt, int k,
                                                      const PrecisionPolicy& pol = {},
                                                      double tol = 1e-10) {
    RegProductReport rep;
    rep.identity_id = "heterotic-factorization";
    char buf[128];
    std::snprintf(buf, sizeof buf, "k=%d s=%.9g t=%.9g u=%.9g", k, pt.s, pt.t, pt.u);
    rep.inputs = buf;
    try {
        rep.lhs = heterotic(pt, HeteroticIndexSet::from_k(k), pol);
        rep.rhs = heterotic_factorized(pt, k, pol);
        double shift_resid = 0.0;
        for (int S : {-8, -6, -4, -2, 0}) {
            Cplx lhs = gamma_real(Cplx(-1.0 - pt.s / 8.0 - S / 2.0), 0, pol);
            Cplx rhs = detail::shift_factor(S, pt.s) *
                       gamma_real(Cplx(-pt.s / 8.0), detail::shift_weight(S), pol);
            shift_resid = std::max(shift_resid, std::abs(lhs - rhs));
        }
        rep.finalize(tol);
        rep.residual = std::max(rep.residual, shift_resid);
        if (rep.pole_guard_ok && rep.residual >= tol) rep.verdict = Verdict::fail;
        return rep;
    } catch (const PoleError& e) {
        rep.mark_inconclusive(e.what());
    } catch (const AccuracyNotReachable& e) {
        rep.mark_inconclusive(e.what());
    }
    rep.finalize(tol);
    return rep;
}

enum class AdelicAmplitudeKind { veneziano, virasoro };

// V^2 . reg[prod V_p^2 prod V_q] = sqrt|D| (d > 0)  and
// W   . reg[prod W_p^2 prod W_q] = sqrt|D| (d < 0), evaluated through the
// principal-quasicharacter beta identity at the amplitude's argument triple.
inline RegProductReport amplitude_adelic_check(const QuadField& F, const MandelstamPoint& pt,
                                               const ReggeTrajectory& traj, AdelicAmplitudeKind kind,
                                               const PrecisionPolicy& pol = {}, double tol = 1e-8) {
    IdentityPoint ip;
    if (kind == AdelicAmplitudeKind::veneziano) {
        traj.check_veneziano();
        if (F.d < 0)
            throw BadInput("amplitude_adelic_check: the Veneziano relation applies to real fields (d > 0)");
        pt.check(traj.mass_sq_sum);
        ip = {Cplx(-traj.intercept - traj.slope * pt.s), Cplx(-traj.intercept - traj.slope * pt.t),
              Cplx(-traj.intercept - traj.slope * pt.u)};
    } else {
        traj.check_virasoro();
        if (F.d > 0)
            throw BadInput("amplitude_adelic_check: the Virasoro relation applies to imaginary fields (d < 0)");
        pt.check(traj.mass_sq_sum);
        ip = {Cplx(-0.5 * (traj.intercept + traj.slope * pt.s)),
              Cplx(-0.5 * (traj.intercept + traj.slope * pt.t)),
              Cplx(-0.5 * (traj.intercept + traj.slope * pt.u))};
    }
    RegProductReport rep = verify_beta_quadratic_principal(F, ip, pol, tol);
    rep.identity_id = "amplitude-adelic";
    char buf[160];
    std::snprintf(buf, sizeof buf, "d=%lld kind=%s s=%.9g t=%.9g u=%.9g",
                  static_cast<long long>(F.d),
                  kind == AdelicAmplitudeKind::veneziano ? "veneziano" : "virasoro", pt.s, pt.t, pt.u);
    rep.inputs = buf;
    return rep;
}

// A_inf(s,t,u) . reg prod Gamma_p(-s/2 + ...) ... = kappa N sqrt(N), for three
// odd characters of one common conductor N.
inline RegProductReport superstring_adelic_check(const MandelstamPoint& pt,
                                                 const std::array<GlobalCharacterQ, 3>& chars,
                                                 const PrecisionPolicy& pol = {}, double tol = 1e-8) {
    pt.check(0.0);
    i64 N = chars[0].chi.conductor();
    for (const auto& g : chars) {
        if (g.nu != 1)
            throw ConstraintViolation("superstring_adelic_check: all characters must be odd (nu = 1)");
        if (g.chi.conductor() != N)
            throw ConstraintViolation("superstring_adelic_check: conductors must coincide");
    }
    RegProductReport rep;
    rep.identity_id = "superstring-adelic";
    char buf[200];
    std::snprintf(buf, sizeof buf, "s=%.9g t=%.9g u=%.9g theta=%s pi=%s sigma=%s", pt.s, pt.t, pt.u,
                  chars[0].chi.serialize().c_str(), chars[1].chi.serialize().c_str(),
                  chars[2].chi.serialize().c_str());
    rep.inputs = buf;
    try {
        std::array<Cplx, 3> args{Cplx(-pt.s / 2), Cplx(-pt.t / 2), Cplx(-pt.u / 2)};
        rep.lhs = beta_primed({args[0], 1}, {args[1], 1}, {args[2], 1}, pol);
        rep.rhs = {1.0, 0.0};
        for (int i = 0; i < 3; ++i) {
            rep.lhs *= reg_gamma_ratio_q(args[i], chars[i], pol);
            rep.rhs *= global_kappa(chars[i]) * phase_calibration(chars[i], pol);
        }
        rep.rhs *= std::pow(static_cast<double>(N), 1.5);
    } catch (const PoleError& e) {
        rep.mark_inconclusive(e.what());
    } catch (const PoleGuardTripped& e) {
        rep.mark_inconclusive(e.what());
    } catch (const AccuracyNotReachable& e) {
        rep.mark_inconclusive(e.what());
    }
    rep.finalize(tol);
    return rep;
}

// V_110(s,t,u) = (1 + a + a' t)/(a + a' s) V(s - 1/a', t + 1/a', u), from the
// one-step sign-shift relation of B_inf.
inline RegProductReport relation_veneziano_shift_check(const MandelstamPoint& pt,
                                                       const ReggeTrajectory& traj,
                                                       const PrecisionPolicy& pol = {},
                                                       double tol = 1e-10) {
    RegProductReport rep;
    rep.identity_id = "relation-4-25";
    char buf[128];
    std::snprintf(buf, sizeof buf, "s=%.9g t=%.9g u=%.9g", pt.s, pt.t, pt.u);
    rep.inputs = buf;
    try {
        rep.lhs = veneziano_ramified(pt, traj, {1, 1, 0}, pol);
        MandelstamPoint shifted{pt.s - 1.0 / traj.slope, pt.t + 1.0 / traj.slope, pt.u};
        double pref_num = 1.0 + traj.intercept + traj.slope * pt.t;
        double pref_den = traj.intercept + traj.slope * pt.s;
        if (std::abs(pref_den) < pol.pole_guard)
            throw PoleGuardTripped("relation check: prefactor denominator below guard");
        rep.rhs = pref_num / pref_den * veneziano(shifted, traj, pol);
    } catch (const PoleError& e) {
        rep.mark_inconclusive(e.what());
    } catch (const PoleGuardTripped& e) {
        rep.mark_inconclusive(e.what());
    } catch (const AccuracyNotReachable& e) {
        rep.mark_inconclusive(e.what());
    }
    rep.finalize(tol);
    return rep;
}

} // namespace adelic
