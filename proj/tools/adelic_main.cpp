// adelic: local gamma/beta functions of R, C and p-fields, prime splitting in
// one-class quadratic fields, and numeric verification of regularized adelic
// product identities and 4-particle string-amplitude relations.

#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adelic/amplitudes.hpp"
#include "adelic/analytic.hpp"
#include "adelic/report_json.hpp"
#include "adelic/verify.hpp"

using namespace adelic;
using nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kResidual = 1, kBadInput = 2, kInconclusive = 3 };

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Cplx parse_cplx(const std::string& s) {
    std::size_t comma = s.find(',');
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

struct PointSampler {
    std::mt19937_64 rng;
    explicit PointSampler(std::uint64_t seed) : rng(seed) {}
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    }
    Cplx box(double re_lo, double re_hi, double im_lo, double im_hi) {
        double re = uniform(re_lo, re_hi);
        double im = uniform(im_lo, im_hi);
        return {re, im};
    }
};

bool args_clear_of_poles(std::initializer_list<double> args, double margin) {
    for (double x : args) {
        double r = std::round(x);
        if (r <= 0.0 && std::abs(x - r) < margin) return false;
    }
    return true;
}

int aggregate_exit(const std::vector<RegProductReport>& reports) {
    bool any_fail = false, any_inconclusive = false;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::fail) any_fail = true;
        if (r.verdict == Verdict::inconclusive) any_inconclusive = true;
    }
    if (any_fail) return kResidual;
    if (any_inconclusive) return kInconclusive;
    return kOk;
}

void emit_reports(const std::vector<RegProductReport>& reports, const std::string& format,
                  std::uint64_t seed, double tolerance) {
    if (format == "json") {
        ordered_json j;
        j["seed"] = seed;
        j["tolerance"] = tolerance;
        j["reports"] = ordered_json::array();
        for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
        std::printf("%s\n", j.dump(2).c_str());
        return;
    }
    std::printf("# seed=%llu tolerance=%s\n", static_cast<unsigned long long>(seed),
                num(tolerance).c_str());
    for (const auto& r : reports)
        std::printf("%-24s %-12s residual=%-12s lhs=%s rhs=%s %s\n", r.identity_id.c_str(),
                    verdict_name(r.verdict), num(r.residual).c_str(), fmt_cplx(r.lhs).c_str(),
                    fmt_cplx(r.rhs).c_str(), r.inputs.c_str());
}

// ---------------------------------------------------------------- gamma ----

int cmd_gamma(const std::string& place, const std::string& alpha_str, int nu, i64 q,
              const std::string& charspec, i64 p, const std::string& format,
              const PrecisionPolicy& pol) {
    Cplx alpha = parse_cplx(alpha_str);
    Cplx value;
    std::string exact;
    if (place == "real") {
        value = gamma_real(alpha, nu, pol);
    } else if (place == "complex") {
        value = gamma_complex(alpha, nu, pol);
    } else if (place == "p") {
        if (!charspec.empty()) {
            DirichletCharacter chi = DirichletCharacter::parse(charspec);
            LocalCharacter lc = local_character(chi, p);
            value = local_gamma_ramified(alpha, lc, pol);
        } else {
            if (alpha.imag() == 0.0 && alpha.real() == std::round(alpha.real())) {
                Rational r = gamma_q_exact(static_cast<int>(alpha.real()), q);
                exact = r.str();
                value = {r.value(), 0.0};
            } else {
                value = gamma_q(alpha, q, pol);
            }
        }
    } else {
        throw BadInput("gamma: --place must be real, complex or p");
    }
    if (format == "json") {
        ordered_json j;
        j["place"] = place;
        j["alpha"] = {alpha.real(), alpha.imag()};
        j["value"] = {value.real(), value.imag()};
        if (!exact.empty()) j["exact"] = exact;
        std::printf("%s\n", j.dump().c_str());
    } else if (!exact.empty()) {
        std::printf("%s\n", exact.c_str());
    } else {
        std::printf("%s\n", fmt_cplx(value).c_str());
    }
    return kOk;
}

// ---------------------------------------------------------------- field ----

int cmd_field(i64 d, const std::string& format) {
    QuadField F = make_field(d);
    ordered_json j;
    j["d"] = F.d;
    j["D"] = F.D;
    j["one_class"] = F.one_class;
    ordered_json rr = ordered_json::object();
    for (auto [p, r] : F.ramified_ranks) rr[std::to_string(p)] = r;
    j["ramified_ranks"] = rr;
    j["torsion_units"] = torsion_units(d);
    if (d > 0) {
        FundamentalUnit U = fundamental_unit(d);
        j["fundamental_unit"] = {{"x", U.x},
                                 {"y", U.y},
                                 {"norm", U.norm},
                                 {"basis", U.half_basis ? "(1+sqrt d)/2" : "sqrt d"},
                                 {"value", U.real_value()}};
    }
    if (format == "json") {
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("d=%lld D=%lld one_class=%s torsion=%zu\n", static_cast<long long>(F.d),
                    static_cast<long long>(F.D), F.one_class ? "yes" : "no",
                    torsion_units(d).size());
        for (auto [p, r] : F.ramified_ranks)
            std::printf("  ramified p=%lld r=%d\n", static_cast<long long>(p), r);
        if (d > 0) {
            FundamentalUnit U = fundamental_unit(d);
            std::printf("  unit: x=%lld y=%lld norm=%+d basis=%s value=%s\n",
                        static_cast<long long>(U.x), static_cast<long long>(U.y), U.norm,
                        U.half_basis ? "(1+sqrt d)/2" : "sqrt d", num(U.real_value()).c_str());
        }
    }
    return kOk;
}

// ---------------------------------------------------------------- split ----

void print_split_row(const PrimeDivisorFactorization& f, bool json_mode, ordered_json* arr) {
    if (json_mode) {
        ordered_json j;
        j["p"] = f.p;
        j["case"] = split_case_name(f.kase);
        j["q"] = f.q;
        if (f.divisors) {
            j["divisors"] = {{(*f.divisors)[0].a, (*f.divisors)[0].b},
                             {(*f.divisors)[1].a, (*f.divisors)[1].b}};
            j["basis"] = f.half_basis ? "(1+sqrt d)/2" : "sqrt d";
        }
        if (f.hensel_root) j["hensel_root"] = *f.hensel_root;
        arr->push_back(j);
        return;
    }
    std::printf("p=%-6lld case=%-9s q=%-8lld", static_cast<long long>(f.p), split_case_name(f.kase),
                static_cast<long long>(f.q));
    if (f.divisors)
        std::printf(" divisors=(%lld,%lld),(%lld,%lld)", static_cast<long long>((*f.divisors)[0].a),
                    static_cast<long long>((*f.divisors)[0].b),
                    static_cast<long long>((*f.divisors)[1].a),
                    static_cast<long long>((*f.divisors)[1].b));
    if (f.hensel_root) std::printf(" root=%lld", static_cast<long long>(*f.hensel_root));
    std::printf("\n");
}

int cmd_split(i64 d, i64 p, i64 upto, const std::string& format) {
    QuadField F = make_field(d);
    if (!F.one_class) throw NotOneClass("split: d is not a one-class field parameter");
    bool json_mode = format == "json";
    ordered_json arr = ordered_json::array();
    if (p > 0) {
        print_split_row(split_prime(F, p), json_mode, &arr);
    } else {
        for (i64 q : primes_upto(upto)) print_split_row(split_prime(F, q), json_mode, &arr);
    }
    if (json_mode) {
        ordered_json j;
        j["d"] = d;
        j["rows"] = arr;
        std::printf("%s\n", j.dump(2).c_str());
    }
    return kOk;
}

// ----------------------------------------------------------------- scan ----

int cmd_scan(const std::string& kind, int k, std::optional<double> intercept_opt,
             std::optional<double> slope_opt, std::optional<double> mass2_opt, double smin,
             double smax, double tmin, double tmax, double step, std::optional<double> s_single,
             std::optional<double> t_single, const std::string& format,
             const PrecisionPolicy& pol) {
    // per-kind defaults: tachyonic trajectories for the string amplitudes,
    // the massless constraint for the superstring and heterotic families
    ReggeTrajectory traj = kind == "virasoro" ? ReggeTrajectory::virasoro_tachyon()
                                              : ReggeTrajectory::veneziano_tachyon();
    if (kind == "superstring" || kind == "heterotic") traj.mass_sq_sum = 0.0;
    if (intercept_opt) traj.intercept = *intercept_opt;
    if (slope_opt) traj.slope = *slope_opt;
    if (mass2_opt) traj.mass_sq_sum = *mass2_opt;
    double mass2 = traj.mass_sq_sum;
    auto eval = [&](double s, double t) -> std::pair<Cplx, std::optional<AmplitudePole>> {
        MandelstamPoint pt = MandelstamPoint::from_st(s, t, mass2);
        try {
            if (kind == "veneziano") return {veneziano(pt, traj, pol), std::nullopt};
            if (kind == "virasoro") return {virasoro(pt, traj, pol), std::nullopt};
            if (kind == "superstring") return {superstring(pt, pol), std::nullopt};
            if (kind == "heterotic")
                return {heterotic(pt, HeteroticIndexSet::from_k(k), pol), std::nullopt};
            throw BadInput("scan: unknown amplitude kind '" + kind + "'");
        } catch (const AmplitudePoleError& e) {
            return {{0.0, 0.0}, e.pole};
        }
    };

    if (s_single && t_single) {
        auto [value, pole] = eval(*s_single, *t_single);
        ordered_json j;
        j["amplitude"] = kind;
        j["s"] = *s_single;
        j["t"] = *t_single;
        j["u"] = mass2 - *s_single - *t_single;
        j["value"] = {value.real(), value.imag()};
        j["pole_flag"] = pole.has_value();
        j["channel"] = pole ? std::string(1, pole->channel) : "";
        if (pole) {
            j["pole_location"] = pole->location;
            j["residue_estimate"] = {pole->residue_estimate.real(), pole->residue_estimate.imag()};
        }
        std::printf("%s\n", j.dump().c_str());
        return kOk;
    }

    std::printf("s,t,u,re,im,pole_flag,channel\n");
    const double eps = step * 1e-9;
    for (double s = smin; s <= smax + eps; s += step) {
        for (double t = tmin; t <= tmax + eps; t += step) {
            auto [value, pole] = eval(s, t);
            std::printf("%s,%s,%s,%s,%s,%d,%s\n", num(s).c_str(), num(t).c_str(),
                        num(mass2 - s - t).c_str(), num(pole ? 0.0 : value.real()).c_str(),
                        num(pole ? 0.0 : value.imag()).c_str(), pole ? 1 : 0,
                        pole ? std::string(1, pole->channel).c_str() : "");
        }
    }
    return kOk;
}

// --------------------------------------------------------------- verify ----

struct VerifyOptions {
    std::string theta = "principal", pi = "principal", sigma, chi;
    i64 d = -1;
    int k = 1;
    int points = 20;
    std::uint64_t seed = 12345;
    double tolerance = 1e-8;
    std::string alpha;
    std::string format = "text";
};

int cmd_verify(const std::string& id, const VerifyOptions& opt, const PrecisionPolicy& pol) {
    PointSampler sampler(opt.seed);
    std::vector<RegProductReport> reports;
    const int redraw_cap = 500;

    auto sample_constrained = [&](double re_lo, double re_hi, double im) {
        for (int tries = 0; tries < redraw_cap; ++tries) {
            Cplx a = sampler.box(re_lo, re_hi, -im, im);
            Cplx b = sampler.box(re_lo, re_hi, -im, im);
            IdentityPoint pt = IdentityPoint::constrained(a, b);
            if (std::abs(pt.gamma.imag()) < 0.05 && std::abs(pt.gamma.real()) < 0.1) continue;
            if (std::abs(pt.gamma - Cplx(1.0)) < 0.1) continue;
            return pt;
        }
        throw Error("sampler: could not find a well-conditioned point");
    };

    if (id == "gamma-q") {
        GlobalCharacterQ g = GlobalCharacterQ::from_character(DirichletCharacter::parse(opt.theta));
        if (!opt.alpha.empty()) {
            reports.push_back(verify_gamma_adelic_q(parse_cplx(opt.alpha), g, pol, opt.tolerance));
        } else {
            for (int i = 0; i < opt.points; ++i) {
                Cplx a = sampler.box(0.25, 0.75, -8.0, 8.0);
                reports.push_back(verify_gamma_adelic_q(a, g, pol, opt.tolerance));
            }
        }
    } else if (id == "beta-q") {
        GlobalCharacterQ th = GlobalCharacterQ::from_character(DirichletCharacter::parse(opt.theta));
        GlobalCharacterQ pi = GlobalCharacterQ::from_character(DirichletCharacter::parse(opt.pi));
        for (int i = 0; i < opt.points; ++i)
            reports.push_back(
                verify_beta_adelic_q(sample_constrained(0.2, 0.8, 5.0), th, pi, pol, opt.tolerance));
    } else if (id == "beta-quadratic") {
        QuadField F = make_field(opt.d);
        for (int i = 0; i < opt.points; ++i)
            reports.push_back(
                verify_beta_quadratic_principal(F, sample_constrained(0.2, 0.8, 2.0), pol, opt.tolerance));
    } else if (id == "gamma-quadratic") {
        QuadField F = make_field(opt.d);
        QuadCharacterData qc = opt.chi.empty()
                                   ? QuadCharacterData::principal(F)
                                   : QuadCharacterData::norm_induced(F, DirichletCharacter::parse(opt.chi));
        for (int i = 0; i < opt.points; ++i) {
            Cplx a = sampler.box(0.25, 0.75, -5.0, 5.0);
            reports.push_back(verify_gamma_adelic_quadratic(F, a, qc, pol, opt.tolerance));
        }
    } else if (id == "amplitude-adelic") {
        QuadField F = make_field(opt.d);
        bool ven = opt.d > 0;
        ReggeTrajectory traj =
            ven ? ReggeTrajectory::veneziano_tachyon() : ReggeTrajectory::virasoro_tachyon();
        for (int i = 0; i < opt.points; ++i) {
            for (int tries = 0; tries < redraw_cap; ++tries) {
                double lo = ven ? -3.4 : -13.5, hi = ven ? -0.6 : -2.5;
                MandelstamPoint pt =
                    MandelstamPoint::from_st(sampler.uniform(lo, hi), sampler.uniform(lo, hi),
                                             traj.mass_sq_sum);
                auto arg = [&](double v) {
                    return ven ? -traj.intercept - traj.slope * v
                               : -0.5 * (traj.intercept + traj.slope * v);
                };
                double xs = arg(pt.s), xt = arg(pt.t), xu = arg(pt.u);
                auto clear = [&](double x) {
                    return std::abs(x - std::round(x)) > 0.06 && std::abs(x) > 0.06 &&
                           std::abs(x - 1.0) > 0.06;
                };
                if (!clear(xs) || !clear(xt) || !clear(xu)) continue;
                reports.push_back(amplitude_adelic_check(
                    F, pt, traj, ven ? AdelicAmplitudeKind::veneziano : AdelicAmplitudeKind::virasoro,
                    pol, opt.tolerance));
                break;
            }
        }
    } else if (id == "superstring-adelic") {
        GlobalCharacterQ g1 = GlobalCharacterQ::from_character(DirichletCharacter::parse(opt.theta));
        GlobalCharacterQ g2 = opt.pi == "principal"
                                  ? g1
                                  : GlobalCharacterQ::from_character(DirichletCharacter::parse(opt.pi));
        GlobalCharacterQ g3 = opt.sigma.empty()
                                  ? g1
                                  : GlobalCharacterQ::from_character(DirichletCharacter::parse(opt.sigma));
        for (int i = 0; i < opt.points; ++i) {
            for (int tries = 0; tries < redraw_cap; ++tries) {
                double s = sampler.uniform(0.3, 1.4), t = sampler.uniform(0.3, 1.4);
                MandelstamPoint pt{s, t, -s - t};
                if (!args_clear_of_poles({-s / 2, -t / 2, (s + t) / 2}, 0.06)) continue;
                reports.push_back(superstring_adelic_check(pt, {g1, g2, g3}, pol, opt.tolerance));
                break;
            }
        }
    } else if (id == "heterotic-factorization") {
        for (int i = 0; i < opt.points; ++i) {
            for (int tries = 0; tries < redraw_cap; ++tries) {
                double s = sampler.uniform(0.4, 6.0), t = sampler.uniform(0.4, 6.0);
                MandelstamPoint pt{s, t, -s - t};
                if (std::abs(8.0 + pt.u) < 0.3 || std::abs(8.0 - s) < 0.3 || std::abs(8.0 + pt.t) < 0.3)
                    continue;
                if (!args_clear_of_poles({-s / 8, -t / 8, -pt.u / 8, -1 - pt.u / 8, -1 - t / 8}, 0.05))
                    continue;
                reports.push_back(heterotic_factorization_check(pt, opt.k, pol, opt.tolerance));
                break;
            }
        }
    } else if (id == "relation-4-25") {
        ReggeTrajectory traj = ReggeTrajectory::veneziano_tachyon();
        for (int i = 0; i < opt.points; ++i) {
            for (int tries = 0; tries < redraw_cap; ++tries) {
                double s = sampler.uniform(-3.4, -0.6), t = sampler.uniform(-3.4, -0.6);
                MandelstamPoint pt = MandelstamPoint::from_st(s, t, traj.mass_sq_sum);
                double xs = -1 - s / 2, xt = -1 - t / 2, xu = -1 - pt.u / 2;
                if (!args_clear_of_poles({xs, xt, xu, xs + 1, xt - 1}, 0.06)) continue;
                if (std::abs(traj.intercept + traj.slope * s) < 0.05) continue;
                reports.push_back(relation_veneziano_shift_check(pt, traj, pol, opt.tolerance));
                break;
            }
        }
    } else {
        throw BadInput("verify: unknown identity id '" + id + "'");
    }

    emit_reports(reports, opt.format, opt.seed, opt.tolerance);
    return aggregate_exit(reports);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"local gamma/beta functions, quadratic-field splitting, and adelic identity verification"};
    app.require_subcommand(1);

    PrecisionPolicy pol;
    try {
        pol = PrecisionPolicy::from_env();
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kBadInput;
    }

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "evaluate a local gamma function");
    std::string place = "real", alpha_str = "0.5", charspec, gformat = "text";
    int nu = 0;
    i64 gq = 2, gp = 2;
    gamma_cmd->add_option("--place", place, "real | complex | p");
    gamma_cmd->add_option("--alpha", alpha_str, "argument, re or re,im");
    gamma_cmd->add_option("--nu", nu, "sign/weight exponent");
    gamma_cmd->add_option("--q", gq, "module of the p-field");
    gamma_cmd->add_option("--character", charspec, "ramified local character (Dirichlet spec)");
    gamma_cmd->add_option("--p", gp, "prime for the ramified local character");
    gamma_cmd->add_option("--format", gformat, "text | json");

    // field
    auto* field_cmd = app.add_subcommand("field", "describe a quadratic field");
    i64 fd = -1;
    std::string fformat = "text";
    field_cmd->add_option("--d", fd, "squarefree field parameter")->required();
    field_cmd->add_option("--format", fformat, "text | json");

    // split
    auto* split_cmd = app.add_subcommand("split", "prime divisor factorization in Q(sqrt d)");
    i64 sd = -1, sp = 0, supto = 0;
    std::string sformat = "text";
    split_cmd->add_option("--d", sd, "one-class field parameter")->required();
    split_cmd->add_option("--p", sp, "single prime");
    split_cmd->add_option("--upto", supto, "all primes below the bound");
    split_cmd->add_option("--format", sformat, "text | json");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "amplitude scan over a Mandelstam grid");
    std::string akind = "veneziano", scformat = "csv";
    int sk = 1;
    double intercept = 1.0, slope = 0.5, mass2 = -8.0;
    double smin = -6, smax = 2, tmin = -6, tmax = 2, step = 0.5;
    std::optional<double> s_single, t_single;
    double s_single_v = 0, t_single_v = 0;
    scan_cmd->add_option("--amplitude", akind, "veneziano | virasoro | superstring | heterotic");
    scan_cmd->add_option("--k", sk, "heterotic index set");
    auto* iopt = scan_cmd->add_option("--intercept", intercept, "trajectory intercept");
    auto* slopt = scan_cmd->add_option("--slope", slope, "trajectory slope");
    auto* mopt = scan_cmd->add_option("--mass2", mass2, "sum of external masses squared");
    scan_cmd->add_option("--smin", smin);
    scan_cmd->add_option("--smax", smax);
    scan_cmd->add_option("--tmin", tmin);
    scan_cmd->add_option("--tmax", tmax);
    scan_cmd->add_option("--step", step);
    auto* sopt = scan_cmd->add_option("--s", s_single_v, "single-point s");
    auto* topt = scan_cmd->add_option("--t", t_single_v, "single-point t");
    scan_cmd->add_option("--format", scformat, "csv | json");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify an adelic identity at sampled points");
    std::string vid;
    VerifyOptions vopt;
    verify_cmd->add_option("id", vid,
                           "gamma-q | beta-q | beta-quadratic | gamma-quadratic | amplitude-adelic |"
                           " superstring-adelic | heterotic-factorization | relation-4-25")
        ->required();
    verify_cmd->add_option("--theta", vopt.theta, "character spec");
    verify_cmd->add_option("--pi", vopt.pi, "second character spec");
    verify_cmd->add_option("--sigma", vopt.sigma, "third character spec (superstring-adelic)");
    verify_cmd->add_option("--chi", vopt.chi, "norm-induced character spec");
    verify_cmd->add_option("--d", vopt.d, "field parameter");
    verify_cmd->add_option("--k", vopt.k, "heterotic index set");
    verify_cmd->add_option("--points", vopt.points, "number of sampled points");
    verify_cmd->add_option("--seed", vopt.seed, "sampler seed");
    verify_cmd->add_option("--tolerance", vopt.tolerance, "pass tolerance");
    verify_cmd->add_option("--alpha", vopt.alpha, "fixed argument instead of sampling");
    verify_cmd->add_option("--format", vopt.format, "text | json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gamma_cmd) return cmd_gamma(place, alpha_str, nu, gq, charspec, gp, gformat, pol);
        if (*field_cmd) return cmd_field(fd, fformat);
        if (*split_cmd) {
            if (sp == 0 && supto == 0) throw BadInput("split: give --p or --upto");
            return cmd_split(sd, sp, supto, sformat);
        }
        if (*scan_cmd) {
            if (*sopt) s_single = s_single_v;
            if (*topt) t_single = t_single_v;
            return cmd_scan(akind, sk,
                            *iopt ? std::optional<double>(intercept) : std::nullopt,
                            *slopt ? std::optional<double>(slope) : std::nullopt,
                            *mopt ? std::optional<double>(mass2) : std::nullopt, smin, smax, tmin,
                            tmax, step, s_single, t_single, scformat, pol);
        }
        if (*verify_cmd) return cmd_verify(vid, vopt, pol);
    } catch (const PoleGuardTripped& e) {
        std::fprintf(stderr, "inconclusive: %s\n", e.what());
        return kInconclusive;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kBadInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kBadInput;
    }
    return kBadInput;
}
