#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "adelic/amplitudes.hpp"

using namespace adelic;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double kPi = std::numbers::pi;

bool clear_args(std::initializer_list<double> xs, double margin = 0.06) {
    for (double x : xs) {
        double r = std::round(x);
        if (r <= 0.0 && std::abs(x - r) < margin) return false;
    }
    return true;
}

MandelstamPoint sample_massless(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    for (int i = 0; i < 2000; ++i) {
        double s = dist(rng), t = dist(rng);
        MandelstamPoint pt{s, t, -s - t};
        if (!clear_args({-s / 8, -t / 8, -pt.u / 8, -1 - s / 8, -1 - t / 8, -1 - pt.u / 8,
                         -1 - s / 8 + 4, -1 - s / 8 + 3, -1 - s / 8 + 2, -1 - s / 8 + 1}))
            continue;
        if (std::abs(8.0 + pt.u) < 0.4 || std::abs(8.0 + pt.t) < 0.4 || std::abs(8.0 - s) < 0.4 ||
            std::abs(16.0 - s) < 0.4 || std::abs(s) < 0.4 || std::abs(t) < 0.4)
            continue;
        return pt;
    }
    throw std::runtime_error("no massless point found");
}
} // namespace

TEST_CASE("trajectory and point constraints") {
    REQUIRE_NOTHROW(ReggeTrajectory::veneziano_tachyon().check_veneziano());
    REQUIRE_NOTHROW(ReggeTrajectory::virasoro_tachyon().check_virasoro());
    REQUIRE_THROWS_AS(ReggeTrajectory::veneziano_tachyon().check_virasoro(), ConstraintViolation);
    REQUIRE_THROWS_AS((MandelstamPoint{1, 1, 1}.check(0.0)), ConstraintViolation);
    ReggeTrajectory traj = ReggeTrajectory::veneziano_tachyon();
    REQUIRE_THROWS_AS((veneziano({1, 1, 1}, traj)), ConstraintViolation);
    REQUIRE_THROWS_AS((superstring({1, 1, 1})), ConstraintViolation);
}

TEST_CASE("veneziano amplitude: crossing symmetry and the vanishing tachyon point") {
    ReggeTrajectory traj = ReggeTrajectory::veneziano_tachyon();
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> dist(-3.4, -0.6);
    int done = 0;
    while (done < 100) {
        double s = dist(rng), t = dist(rng);
        MandelstamPoint pt = MandelstamPoint::from_st(s, t, -8.0);
        if (!clear_args({-1 - s / 2, -1 - t / 2, -1 - pt.u / 2})) continue;
        Cplx v = veneziano(pt, traj);
        for (auto [a, b, c] : {std::array<double, 3>{pt.t, pt.s, pt.u},
                               {pt.u, pt.t, pt.s},
                               {pt.s, pt.u, pt.t},
                               {pt.t, pt.u, pt.s},
                               {pt.u, pt.s, pt.t}})
            REQUIRE(std::abs(v - veneziano({a, b, c}, traj)) < 1e-12);
        ++done;
    }
    // s = -1, t = -3, u = -4: arguments (-1/2, 1/2, 1), Gamma_inf(1;0) = 0
    Cplx v0 = veneziano({-1, -3, -4}, traj);
    REQUIRE(std::abs(v0) < 1e-14);
}

TEST_CASE("veneziano pole reporting") {
    ReggeTrajectory traj = ReggeTrajectory::veneziano_tachyon();
    // s -> 2 drives the s-argument to -2
    try {
        veneziano(MandelstamPoint::from_st(2.0, -3.3, -8.0), traj);
        FAIL("expected a pole");
    } catch (const AmplitudePoleError& e) {
        REQUIRE(e.pole.channel == 's');
        REQUIRE_THAT(e.pole.location, WithinAbs(2.0, 1e-9));
        REQUIRE(std::abs(e.pole.residue_estimate) > 1e-6); // genuine pole, nonzero residue
    }
    // removable point: s = 0 gives argument -1 where the cosine cancels
    try {
        veneziano(MandelstamPoint::from_st(0.0, -3.3, -8.0), traj);
        FAIL("expected a pole report");
    } catch (const AmplitudePoleError& e) {
        REQUIRE(e.pole.channel == 's');
        REQUIRE(std::abs(e.pole.residue_estimate) < 1e-6); // removable: residue ~ 0
    }
}

TEST_CASE("p-adic amplitudes: exact rational mode and crossing") {
    // arguments (2,2,-3) at q = 5 via a trajectory with integer arguments:
    // intercept -3, slope 1/2, sum m^2 = 16 satisfies 3(-3) + 8 = -1
    ReggeTrajectory traj2{-3.0, 0.5, 16.0};
    REQUIRE_NOTHROW(traj2.check_veneziano());
    // args: -(-3) - s/2 = 3 - s/2: want (2,2,-3) -> s=2, t=2, u=12
    MandelstamPoint pt{2.0, 2.0, 12.0};
    Rational exact = veneziano_p_exact(pt, traj2, 5);
    REQUIRE(exact == gamma_q_exact(2, 5) * gamma_q_exact(2, 5) * gamma_q_exact(-3, 5));
    Cplx fl = veneziano_p(pt, traj2, 5);
    REQUIRE(std::abs(fl - Cplx(exact.value())) < 1e-12);

    // crossing
    REQUIRE(veneziano_p_exact({2.0, 12.0, 2.0}, traj2, 5) == exact);
    REQUIRE_THROWS_AS((veneziano_p({1, 1, 1}, traj2, 5)), ConstraintViolation);
}

TEST_CASE("p-adic amplitudes: crossing symmetry under all six permutations") {
    ReggeTrajectory vt = ReggeTrajectory::veneziano_tachyon();
    ReggeTrajectory wt = ReggeTrajectory::virasoro_tachyon();
    std::mt19937_64 rng(131);
    std::uniform_real_distribution<double> vdist(-3.4, -0.6), wdist(-13.0, -3.0);
    int done = 0;
    while (done < 100) {
        double s = vdist(rng), t = vdist(rng);
        MandelstamPoint pt = MandelstamPoint::from_st(s, t, -8.0);
        double lq = std::log(3.0);
        bool ok = true;
        for (double v : {pt.s, pt.t, pt.u})
            if (std::abs(std::exp((-1 - v / 2) * lq) - 1.0) < 0.02) ok = false;
        if (!ok) continue;
        Cplx vp = veneziano_p(pt, vt, 3);
        for (auto [a, b, c] : {std::array<double, 3>{pt.t, pt.s, pt.u},
                               {pt.u, pt.t, pt.s},
                               {pt.s, pt.u, pt.t},
                               {pt.t, pt.u, pt.s},
                               {pt.u, pt.s, pt.t}})
            REQUIRE(std::abs(vp - veneziano_p({a, b, c}, vt, 3)) < 1e-12 * std::max(1.0, std::abs(vp)));
        ++done;
    }
    done = 0;
    while (done < 100) {
        double s = wdist(rng), t = wdist(rng);
        MandelstamPoint pt = MandelstamPoint::from_st(s, t, -32.0);
        double lq = std::log(9.0);
        bool ok = true;
        for (double v : {pt.s, pt.t, pt.u})
            if (std::abs(std::exp((-1 - v / 8) * lq) - 1.0) < 0.02) ok = false;
        if (!ok) continue;
        Cplx wp = virasoro_p(pt, wt, 9);
        for (auto [a, b, c] : {std::array<double, 3>{pt.t, pt.s, pt.u},
                               {pt.u, pt.t, pt.s},
                               {pt.s, pt.u, pt.t},
                               {pt.t, pt.u, pt.s},
                               {pt.u, pt.s, pt.t}})
            REQUIRE(std::abs(wp - virasoro_p({a, b, c}, wt, 9)) < 1e-12 * std::max(1.0, std::abs(wp)));
        ++done;
    }
}

TEST_CASE("virasoro amplitude: two formula paths agree") {
    ReggeTrajectory traj = ReggeTrajectory::virasoro_tachyon();
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> dist(-13.0, -3.0);
    int done = 0;
    while (done < 50) {
        double s = dist(rng), t = dist(rng);
        MandelstamPoint pt = MandelstamPoint::from_st(s, t, -32.0);
        if (!clear_args({-1 - s / 8, -1 - t / 8, -1 - pt.u / 8})) continue;
        Cplx w = virasoro(pt, traj);
        // direct product of complex gammas
        auto arg = [&](double v) { return Cplx(-0.5 * (traj.intercept + traj.slope * v)); };
        Cplx direct = gamma_complex(arg(pt.s), 0) * gamma_complex(arg(pt.t), 0) *
                      gamma_complex(arg(pt.u), 0);
        REQUIRE(std::abs(w - direct) < 1e-12 * std::max(1.0, std::abs(w)));
        REQUIRE(std::abs(w - virasoro({t, s, pt.u}, traj)) < 1e-12);
        ++done;
    }
}

TEST_CASE("ramified amplitude families and their permutation relations") {
    ReggeTrajectory traj = ReggeTrajectory::veneziano_tachyon();
    std::mt19937_64 rng(97);
    std::uniform_real_distribution<double> dist(-3.4, -0.6);
    int done = 0;
    while (done < 50) {
        double s = dist(rng), t = dist(rng);
        MandelstamPoint pt = MandelstamPoint::from_st(s, t, -8.0);
        if (!clear_args({-1 - s / 2, -1 - t / 2, -1 - pt.u / 2})) continue;
        // V_101(s,t,u) = V_110(s,u,t) = V_011(t,s,u)
        Cplx v101 = veneziano_ramified(pt, traj, {1, 0, 1});
        REQUIRE(std::abs(v101 - veneziano_ramified({pt.s, pt.u, pt.t}, traj, {1, 1, 0})) < 1e-12);
        REQUIRE(std::abs(v101 - veneziano_ramified({pt.t, pt.s, pt.u}, traj, {0, 1, 1})) < 1e-12);
        ++done;
    }
    REQUIRE_THROWS_AS((veneziano_ramified({-1, -3, -4}, traj, {1, 0, 0})), ConstraintViolation);

    // W three-vector (2nu + eta = 0) and six-vector permutation relations
    ReggeTrajectory wt = ReggeTrajectory::virasoro_tachyon();
    done = 0;
    std::uniform_real_distribution<double> wdist(-13.0, -3.0);
    while (done < 50) {
        double s = wdist(rng), t = wdist(rng);
        MandelstamPoint pt = MandelstamPoint::from_st(s, t, -32.0);
        auto arg = [&](double v) { return -1.0 - v / 8.0; };
        if (!clear_args({arg(s) + 0.5, arg(s) - 0.5, arg(t) + 0.5, arg(t) - 0.5, arg(pt.u) + 1.0,
                         arg(pt.u) - 1.0, arg(s), arg(t), arg(pt.u)},
                        0.1))
            continue;
        // three-vector: (1,1,-2)
        Cplx w1 = virasoro_ramified(pt, wt, {1, 1, -2});
        REQUIRE(std::abs(w1 - virasoro_ramified({t, s, pt.u}, wt, {1, 1, -2})) < 1e-11);
        // six-vector: (1,2,-3) with distinct weights
        if (!clear_args({arg(s) + 1.0, arg(t) + 1.5, arg(pt.u) + 1.5, arg(s) - 1.0, arg(t) - 1.5},
                        0.1)) continue;
        Cplx w6 = virasoro_ramified(pt, wt, {1, 2, -3});
        REQUIRE(std::abs(w6 - virasoro_ramified({t, s, pt.u}, wt, {2, 1, -3})) < 1e-11);
        REQUIRE(std::abs(w6 - virasoro_ramified({pt.u, pt.s, pt.t}, wt, {-3, 1, 2})) < 1e-11);
        ++done;
    }
}

TEST_CASE("sign-shift relation expressing V_110 through the Veneziano amplitude") {
    ReggeTrajectory traj = ReggeTrajectory::veneziano_tachyon();
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> dist(-3.4, -0.6);
    int done = 0;
    while (done < 50) {
        double s = dist(rng), t = dist(rng);
        MandelstamPoint pt = MandelstamPoint::from_st(s, t, -8.0);
        double xs = -1 - s / 2, xt = -1 - t / 2, xu = -1 - pt.u / 2;
        if (!clear_args({xs, xt, xu, xs + 1, xt - 1})) continue;
        if (std::abs(traj.intercept + traj.slope * s) < 0.05) continue;
        auto rep = relation_veneziano_shift_check(pt, traj);
        REQUIRE(rep.verdict == Verdict::pass);
        REQUIRE(rep.residual < 1e-10);
        ++done;
    }
}

TEST_CASE("superstring amplitude") {
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> dist(0.3, 1.4);
    int done = 0;
    while (done < 50) {
        double s = dist(rng), t = dist(rng);
        MandelstamPoint pt{s, t, -s - t};
        if (!clear_args({-s / 2, -t / 2, (s + t) / 2})) continue;
        Cplx a = superstring(pt);
        REQUIRE(std::abs(a - superstring({t, s, pt.u})) < 1e-13);
        REQUIRE(std::abs(a - superstring({pt.u, t, s})) < 1e-13);
        ++done;
    }
    // s = 1, t = 1, u = -2: check against the real-axis gamma formula
    MandelstamPoint pt{1.0, 1.0, -2.0};
    Cplx a = superstring(pt);
    auto ginf1 = [&](double x) {
        return 2.0 * Cplx{0, -1} * std::pow(2 * kPi, -x) * std::exp(std::lgamma(x)) *
               std::cos(kPi * 0.5 * (x - 1));
    };
    // Gamma_inf(-1/2;1) via reflection from Gamma_inf(3/2;1):
    // gamma_real(-1/2,1) gamma_real(3/2,1) = -1
    Cplx g32 = ginf1(1.5);
    Cplx gm12 = -1.0 / g32;
    Cplx oracle = gm12 * gm12 * ginf1(1.0);
    REQUIRE(std::abs(a - oracle) < 1e-12);
}

TEST_CASE("heterotic amplitudes: factorized forms and shift identities") {
    std::mt19937_64 rng(107);
    for (int k = 1; k <= 4; ++k) {
        for (int i = 0; i < 100; ++i) {
            MandelstamPoint pt = sample_massless(rng, 0.4, 6.0);
            auto rep = heterotic_factorization_check(pt, k);
            INFO("k=" << k << " s=" << pt.s << " t=" << pt.t);
            REQUIRE(rep.verdict == Verdict::pass);
            REQUIRE(rep.residual < 1e-10);
        }
    }
    // k = 1 at (1, 2, -3): finite, matches the factorized form
    MandelstamPoint pt{1.0, 2.0, -3.0};
    Cplx direct = heterotic(pt, HeteroticIndexSet::from_k(1));
    REQUIRE(finite(direct));
    REQUIRE(std::abs(direct - heterotic_factorized(pt, 1)) < 1e-10);

    // permuted index sets via the explicit override
    Cplx a = heterotic(pt, HeteroticIndexSet::explicit_indices(0, -8, 0));
    Cplx b = heterotic({pt.t, pt.s, pt.u}, HeteroticIndexSet::from_k(1));
    REQUIRE(std::abs(a - b) < 1e-12);

    // k = 4 is symmetric in (t, u)
    Cplx k4 = heterotic(pt, HeteroticIndexSet::from_k(4));
    REQUIRE(std::abs(k4 - heterotic({pt.s, pt.u, pt.t}, HeteroticIndexSet::from_k(4))) < 1e-12);

    REQUIRE_THROWS_AS(HeteroticIndexSet::explicit_indices(-8, -2, 0), ConstraintViolation);
    REQUIRE_THROWS_AS(HeteroticIndexSet::from_k(5), BadInput);
}

TEST_CASE("heterotic amplitudes proportional to the superstring amplitude") {
    std::mt19937_64 rng(109);
    const Cplx i{0, 1};
    for (int n = 0; n < 100; ++n) {
        MandelstamPoint pt = sample_massless(rng, 0.4, 6.0);
        MandelstamPoint q{pt.s / 4, pt.t / 4, pt.u / 4};
        if (!clear_args({-pt.s / 8, -pt.t / 8, -pt.u / 8})) continue;
        Cplx a_sup = superstring(q);
        Cplx k1 = heterotic(pt, HeteroticIndexSet::from_k(1));
        Cplx pref1 = i / (16 * kPi) * (16 - pt.s) * (8 - pt.s) * pt.s / ((8 + pt.t) * (8 + pt.u));
        REQUIRE(std::abs(k1 - pref1 * a_sup) < 1e-10 * std::max(1.0, std::abs(k1)));
        Cplx k3 = heterotic(pt, HeteroticIndexSet::from_k(3));
        Cplx pref3 = i * pt.s * pt.t / (16 * kPi * (8 + pt.u));
        REQUIRE(std::abs(k3 - pref3 * a_sup) < 1e-10 * std::max(1.0, std::abs(k3)));
    }
}

TEST_CASE("amplitude adelic relations over quadratic fields") {
    std::mt19937_64 rng(113);
    std::uniform_real_distribution<double> vdist(-3.4, -0.6);
    QuadField F2 = make_field(2);
    ReggeTrajectory vt = ReggeTrajectory::veneziano_tachyon();
    int done = 0;
    while (done < 5) {
        double s = vdist(rng), t = vdist(rng);
        MandelstamPoint pt = MandelstamPoint::from_st(s, t, -8.0);
        double xs = -1 - s / 2, xt = -1 - t / 2, xu = -1 - pt.u / 2;
        if (!clear_args({xs, xt, xu}) || std::abs(xu - 1.0) < 0.06) continue;
        auto rep = amplitude_adelic_check(F2, pt, vt, AdelicAmplitudeKind::veneziano);
        REQUIRE(rep.verdict == Verdict::pass);
        REQUIRE_THAT(rep.rhs.real(), WithinAbs(std::sqrt(8.0), 1e-12));
        ++done;
    }

    QuadField Fm1 = make_field(-1);
    ReggeTrajectory wt = ReggeTrajectory::virasoro_tachyon();
    std::uniform_real_distribution<double> wdist(-13.5, -2.5);
    done = 0;
    while (done < 5) {
        double s = wdist(rng), t = wdist(rng);
        MandelstamPoint pt = MandelstamPoint::from_st(s, t, -32.0);
        double xs = -1 - s / 8, xt = -1 - t / 8, xu = -1 - pt.u / 8;
        if (!clear_args({xs, xt, xu}) || std::abs(xu - 1.0) < 0.06) continue;
        auto rep = amplitude_adelic_check(Fm1, pt, wt, AdelicAmplitudeKind::virasoro);
        REQUIRE(rep.verdict == Verdict::pass);
        REQUIRE_THAT(rep.rhs.real(), WithinAbs(2.0, 1e-12));
        ++done;
    }

    REQUIRE_THROWS_AS((amplitude_adelic_check(F2, {1, 1, 1}, vt, AdelicAmplitudeKind::veneziano)),
                      ConstraintViolation);
    REQUIRE_THROWS_AS(amplitude_adelic_check(Fm1, MandelstamPoint::from_st(0.3, 0.4, -8.0), vt,
                                             AdelicAmplitudeKind::veneziano),
                      BadInput);
}

TEST_CASE("superstring adelic identity") {
    auto g4 = GlobalCharacterQ::from_character(DirichletCharacter::kronecker(-4));
    std::mt19937_64 rng(127);
    std::uniform_real_distribution<double> dist(0.3, 1.4);
    int done = 0;
    while (done < 5) {
        double s = dist(rng), t = dist(rng);
        MandelstamPoint pt{s, t, -s - t};
        if (!clear_args({-s / 2, -t / 2, (s + t) / 2})) continue;
        auto rep = superstring_adelic_check(pt, {g4, g4, g4});
        REQUIRE(rep.verdict == Verdict::pass);
        REQUIRE_THAT(std::abs(rep.lhs) / std::abs(rep.rhs), WithinAbs(1.0, 1e-8));
        REQUIRE_THAT(std::abs(rep.rhs), WithinAbs(8.0, 1e-12)); // N sqrt N = 8
        ++done;
    }
    // mismatched conductors are rejected
    auto g8 = GlobalCharacterQ::from_character(DirichletCharacter::kronecker(-8));
    REQUIRE_THROWS_AS((superstring_adelic_check({1, 1, -2}, {g4, g4, g8})), ConstraintViolation);
    // even characters are rejected
    auto ge = GlobalCharacterQ::from_character(DirichletCharacter::kronecker(8));
    REQUIRE_THROWS_AS((superstring_adelic_check({1, 1, -2}, {ge, ge, ge})), ConstraintViolation);
}

TEST_CASE("argument sums are automatic for every amplitude constructor") {
    ReggeTrajectory vt = ReggeTrajectory::veneziano_tachyon();
    MandelstamPoint pt = MandelstamPoint::from_st(-1.3, -2.7, -8.0);
    // the three beta arguments of V sum to -3a - a' sum m^2 = 1 exactly
    double sum = 3.0 * (-vt.intercept) - vt.slope * (-8.0);
    REQUIRE_THAT(sum, WithinAbs(1.0, 1e-12));
    REQUIRE_NOTHROW(veneziano(pt, vt));
    ReggeTrajectory wt = ReggeTrajectory::virasoro_tachyon();
    double wsum = 3.0 * (-0.5 * wt.intercept) - 0.5 * wt.slope * (-32.0);
    REQUIRE_THAT(wsum, WithinAbs(1.0, 1e-12));
}
