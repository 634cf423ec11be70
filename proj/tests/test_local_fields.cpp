#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "adelic/characters.hpp"
#include "adelic/local_fields.hpp"

using namespace adelic;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double kPi = std::numbers::pi;

// real-axis plug-in oracle for Gamma_inf, built on std::lgamma
Cplx gamma_real_oracle(double alpha, int nu) {
    double g = std::exp(std::lgamma(alpha));
    Cplx ipow = nu == 0 ? Cplx{1, 0} : Cplx{0, -1};
    return 2.0 * ipow * std::pow(2.0 * kPi, -alpha) * g * std::cos(kPi * 0.5 * (alpha - nu));
}
} // namespace

TEST_CASE("gamma_real plug-in values") {
    REQUIRE(std::abs(gamma_real({0.5, 0}, 0) - Cplx{1, 0}) < 1e-14);
    REQUIRE(std::abs(gamma_real({0.5, 0}, 0) - gamma_real_oracle(0.5, 0)) < 1e-14);
    REQUIRE(std::abs(gamma_real({0.5, 0}, 1) - Cplx{0, -1}) < 1e-14);
    // consistency: (-i)^2 = (-1)^nu
    Cplx v = gamma_real({0.5, 0}, 1);
    REQUIRE(std::abs(v * v - Cplx{-1, 0}) < 1e-13);
    REQUIRE(std::abs(gamma_real({2.0, 0}, 0) - Cplx{-1.0 / (2.0 * kPi * kPi), 0}) < 1e-14);
    REQUIRE(std::abs(gamma_real({2.0, 0}, 0) - gamma_real_oracle(2.0, 0)) < 1e-15);
}

TEST_CASE("gamma_real rejects poles and removable points") {
    REQUIRE_THROWS_AS((gamma_real({0.0, 0}, 0)), PoleError);
    REQUIRE_THROWS_AS((gamma_real({-2.0, 0}, 0)), PoleError);
    REQUIRE_THROWS_AS((gamma_real({-1.0, 0}, 0)), PoleError); // removable, still rejected
    REQUIRE_THROWS_AS((gamma_real({-1.0, 0}, 1)), PoleError);
    REQUIRE_NOTHROW(gamma_real({-1.5, 0}, 0));
}

TEST_CASE("gamma_complex plug-in values") {
    REQUIRE(std::abs(gamma_complex({0.5, 0}, 0) - Cplx{1, 0}) < 1e-14);
    REQUIRE(std::abs(gamma_complex({1.0, 0}, 0)) < 1e-14); // sin(pi) = 0
    REQUIRE_THROWS_AS((gamma_complex({-1.0, 0.0}, 4)), PoleError); // alpha - nu/2 = -3
}

TEST_CASE("reflection identities for the archimedean gammas") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(-3.0, 4.0), im(-6.0, 6.0);
    auto safe = [](Cplx a) {
        double r = std::round(a.real());
        return std::abs(a.imag()) > 1e-3 || std::abs(a.real() - r) > 1e-2;
    };
    int done = 0;
    while (done < 100) {
        Cplx a{re(rng), im(rng)};
        if (!safe(a) || !safe(1.0 - a)) continue;
        for (int nu : {0, 1}) {
            Cplx lhs = gamma_real(a, nu) * gamma_real(1.0 - a, nu);
            REQUIRE(std::abs(lhs - Cplx(nu == 0 ? 1.0 : -1.0)) < 1e-10);
        }
        ++done;
    }
    done = 0;
    std::uniform_int_distribution<int> nud(-5, 5);
    while (done < 100) {
        Cplx a{re(rng), im(rng)};
        int nu = nud(rng);
        Cplx ap = a + Cplx(nu / 2.0), am = a - Cplx(nu / 2.0);
        if (!safe(ap) || !safe(am) || !safe(1.0 - ap) || !safe(1.0 - am)) continue;
        Cplx lhs = gamma_complex(a, nu) * gamma_complex(1.0 - a, nu);
        REQUIRE(std::abs(lhs - Cplx(nu % 2 == 0 ? 1.0 : -1.0)) < 1e-10);
        ++done;
    }
}

TEST_CASE("reduced gamma: plug-ins, reflection, periodicity") {
    REQUIRE(std::abs(reduced_gamma({4, 0}, 2) - Cplx{-4.0 / 3.0, 0}) < 1e-14);
    REQUIRE(std::abs(reduced_gamma({25, 0}, 5) - Cplx{-25.0 / 6.0, 0}) < 1e-14);
    REQUIRE(gamma_q_exact(2, 2) == Rational(-4, 3));
    REQUIRE(gamma_q_exact(2, 5) == Rational(-25, 6));
    REQUIRE_THROWS_AS((reduced_gamma({1.0, 0.0}, 3)), PoleError);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(-2.0, 2.0);
    const i64 qs[] = {2, 3, 5, 49};
    for (int i = 0; i < 100; ++i) {
        Cplx x{re(rng), im(rng)};
        i64 q = qs[i % 4];
        if (std::abs(x - Cplx(1.0)) < 0.05 || std::abs(x) < 0.05) continue;
        Cplx qq{static_cast<double>(q), 0.0};
        REQUIRE(std::abs(reduced_gamma(x, q) * reduced_gamma(qq / x, q) - Cplx(1.0)) < 1e-12);
    }

    // exact-rational reflection Gamma_q(a) Gamma_q(1-a) = 1
    for (i64 q : {2LL, 3LL, 5LL, 7LL, 25LL})
        for (int n : {-3, -2, 2, 3, 4})
            REQUIRE(gamma_q_exact(n, q) * gamma_q_exact(1 - n, q) == Rational(1));

    // floating reflection at non-integer arguments
    for (int i = 0; i < 50; ++i) {
        Cplx a{re(rng), im(rng)};
        i64 q = qs[i % 4];
        double lq = std::log(static_cast<double>(q));
        if (std::abs(std::exp(a * lq) - 1.0) < 0.05 || std::abs(std::exp((1.0 - a) * lq) - 1.0) < 0.05)
            continue;
        REQUIRE(std::abs(gamma_q(a, q) * gamma_q(1.0 - a, q) - Cplx(1.0)) < 1e-12);
    }

    // periodicity in Im alpha with period 2 pi / ln q
    Cplx a{0.7, 0.9};
    for (i64 q : {2LL, 9LL}) {
        Cplx shifted = a + Cplx(0.0, 2.0 * kPi / std::log(static_cast<double>(q)));
        REQUIRE(std::abs(gamma_q(a, q) - gamma_q(shifted, q)) < 1e-12);
    }
}

TEST_CASE("p-adic places") {
    auto v = PAdicPlace::make(5, 2);
    REQUIRE(v.q == 25);
    REQUIRE(PAdicPlace::make(7, 1).q == 7);
    REQUIRE_THROWS_AS(PAdicPlace::make(6, 1), BadInput);
    REQUIRE_THROWS_AS(PAdicPlace::make(5, 3), BadInput);
}

TEST_CASE("normalized gauss sums") {
    // quadratic character mod 3: (1/sqrt 3)(e^{2 pi i/3} - e^{4 pi i/3}) = i
    LocalCharacter chi3{3, 1, {Cplx{0, 0}, Cplx{1, 0}, Cplx{-1, 0}}, 0};
    REQUIRE(std::abs(normalized_gauss_sum(chi3) - Cplx{0, 1}) < 1e-14);

    // local component of the conductor-4 quadratic character: 2-term sum over {1,3}
    auto chi4 = DirichletCharacter::kronecker(-4);
    LocalCharacter lc = local_character(chi4, 2);
    REQUIRE(lc.rank == 2);
    Cplx oracle = (std::exp(Cplx(0, 2 * kPi / 4)) - std::exp(Cplx(0, 2 * kPi * 3 / 4))) / 2.0;
    REQUIRE(std::abs(normalized_gauss_sum(lc) - oracle) < 1e-14);
    REQUIRE_THAT(std::abs(normalized_gauss_sum(lc)), WithinAbs(1.0, 1e-12));

    // |kappa| = 1 for every primitive character with p^rho <= 200
    std::vector<i64> moduli;
    for (i64 m : {3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47,
                  49, 53, 59, 61, 64, 67, 71, 73, 79, 81, 83, 89, 97, 101, 103, 107, 109, 113,
                  121, 125, 127, 128, 131, 137, 139, 149, 151, 157, 163, 167, 169, 173, 179, 181,
                  191, 193, 197, 199})
        moduli.push_back(m);
    int checked = 0;
    for (i64 m : moduli) {
        auto gens = DirichletCharacter::canonical_generators(m);
        std::vector<i64> counters(gens.size(), 0);
        while (true) {
            std::vector<RootOfUnity> vals;
            for (std::size_t i = 0; i < gens.size(); ++i)
                vals.emplace_back(counters[i], gens[i].order);
            auto chi = DirichletCharacter::build(m, vals);
            if (chi.conductor() == m) {
                i64 p = factorize(m)[0].first;
                LocalCharacter c = local_character(chi, p);
                REQUIRE_THAT(std::abs(normalized_gauss_sum(c)), WithinAbs(1.0, 1e-12));
                ++checked;
            }
            std::size_t i = 0;
            for (; i < gens.size(); ++i) {
                if (++counters[i] < gens[i].order) break;
                counters[i] = 0;
            }
            if (i == gens.size()) break;
        }
    }
    REQUIRE(checked > 300);
}

TEST_CASE("ramified local gamma") {
    auto chi4 = DirichletCharacter::kronecker(-4);
    LocalCharacter lc = local_character(chi4, 2);

    LocalCharacter unram{3, 0, {}, 0};
    REQUIRE_THROWS_AS((local_gamma_ramified({0.5, 0.0}, unram)), ConstraintViolation);

    REQUIRE_THAT(std::abs(local_gamma_ramified({0.5, 0.0}, lc)), WithinAbs(1.0, 1e-12));

    // modulus 2^{2(alpha - 1/2)} for real alpha, rho = 2, r = 0
    for (double alpha : {0.2, 1.0, 1.7})
        REQUIRE_THAT(std::abs(local_gamma_ramified({alpha, 0.0}, lc)),
                     WithinAbs(std::pow(2.0, 2.0 * (alpha - 0.5)), 1e-12));
}

TEST_CASE("beta functions enforce their constraints") {
    REQUIRE_THROWS_AS((beta_real({{0.3, 0}, 0}, {{0.3, 0}, 0}, {{0.3, 0}, 0})), ConstraintViolation);
    REQUIRE_THROWS_AS((beta_real({{0.3, 0}, 1}, {{0.3, 0}, 0}, {{0.4, 0}, 0})), ConstraintViolation);
    REQUIRE_THROWS_AS((beta_complex({{0.3, 0}, 1}, {{0.3, 0}, 0}, {{0.4, 0}, 0})), ConstraintViolation);
    REQUIRE_THROWS_AS((beta_padic({0.3, 0}, {0.3, 0}, {0.3, 0}, 5)), ConstraintViolation);
    REQUIRE_THROWS_AS((beta_primed({{0.3, 0}, 1}, {{0.3, 0}, 1}, {{0.4, 0}, 1})), ConstraintViolation);
    REQUIRE_THROWS_AS(beta_padic_exact(1, 1, 1, 5), ConstraintViolation);
}

TEST_CASE("beta permutation symmetry and definitions") {
    RealGammaArgs a{{0.3, 0.4}, 1}, b{{0.9, -0.2}, 1}, c{{-0.2, -0.2}, 0};
    Cplx v = beta_real(a, b, c);
    REQUIRE(std::abs(v - beta_real(b, a, c)) < 1e-15);
    REQUIRE(std::abs(v - beta_real(c, b, a)) < 1e-15);
    REQUIRE(std::abs(v - gamma_real(a.alpha, a.nu) * gamma_real(b.alpha, b.nu) *
                             gamma_real(c.alpha, c.nu)) < 1e-15);

    ComplexGammaArgs ca{{0.3, 0.4}, 2}, cb{{0.9, -0.2}, -1}, cc{{-0.2, -0.2}, -1};
    Cplx w = beta_complex(ca, cb, cc);
    REQUIRE(std::abs(w - beta_complex(cb, ca, cc)) < 1e-15);

    // reduced forms are the all-zero-sign calls
    REQUIRE(std::abs(beta_real_reduced({0.3, 0.4}, {0.9, -0.2}, Cplx(1.0) - Cplx{0.3, 0.4} - Cplx{0.9, -0.2}) -
                     beta_real({{0.3, 0.4}, 0}, {{0.9, -0.2}, 0},
                               {Cplx(1.0) - Cplx{0.3, 0.4} - Cplx{0.9, -0.2}, 0})) < 1e-15);
}

TEST_CASE("p-adic beta: exact rational value") {
    // B_2(2,2,-3) = G_2(4)^2 G_2(1/8) = (16/9)(1 - 1/16)/(1 - 8)
    REQUIRE(beta_padic_exact(2, 2, -3, 2) == Rational(-5, 21));
    Cplx fl = beta_padic({2, 0}, {2, 0}, {-3, 0}, 2);
    REQUIRE(std::abs(fl - Cplx(-5.0 / 21.0)) < 1e-13);
    // pairwise exact reflection instead of a second constrained triple
    REQUIRE(gamma_q_exact(2, 2) * gamma_q_exact(-1, 2) == Rational(1));
}

TEST_CASE("one-step sign-shift relation of the real beta") {
    // B(a,1; b,-1; c,0) = ((b-1)/a) B(a+1, b-1, c); -1 = 1 in F_2
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> re(0.1, 0.9), im(-3.0, 3.0);
    int done = 0;
    while (done < 50) {
        Cplx a{re(rng), im(rng)}, b{re(rng), im(rng)};
        Cplx c = 1.0 - a - b;
        if (std::abs(c.imag()) < 0.05 && std::abs(c.real() - std::round(c.real())) < 0.05) continue;
        if (std::abs(a) < 0.05) continue;
        Cplx lhs = beta_real({a, 1}, {b, 1}, {c, 0});
        Cplx rhs = (b - 1.0) / a * beta_real_reduced(a + 1.0, b - 1.0, c);
        REQUIRE(std::abs(lhs - rhs) < 1e-10);
        ++done;
    }
}

TEST_CASE("primed beta constraint family") {
    // argument sum 0, sign sum 1
    Cplx v = beta_primed({{0.35, 0.2}, 1}, {{0.4, -0.1}, 1}, {{-0.75, -0.1}, 1});
    REQUIRE(finite(v));
    REQUIRE_THROWS_AS((beta_primed({{0.35, 0}, 1}, {{0.4, 0}, 1}, {{0.25, 0}, 0})), ConstraintViolation);
    REQUIRE(std::abs(v - beta_primed({{0.4, -0.1}, 1}, {{0.35, 0.2}, 1}, {{-0.75, -0.1}, 1})) < 1e-15);
}
