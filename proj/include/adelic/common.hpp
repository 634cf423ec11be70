#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace adelic {

using Cplx = std::complex<double>;

// ----------------------------------------------------------------------
// Error taxonomy.  Domain violations throw; verifier-level guard trips are
// reported through RegProductReport instead (see verify.hpp).
// ----------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : Error {
    using Error::Error;
};
struct PoleAtOne : PoleError {
    PoleAtOne() : PoleError("pole at s = 1") {}
};
struct PoleAtNonPositiveInteger : PoleError {
    explicit PoleAtNonPositiveInteger(const std::string& what) : PoleError(what) {}
};
struct AccuracyNotReachable : Error {
    using Error::Error;
};
struct ConstraintViolation : Error {
    using Error::Error;
};
struct PoleGuardTripped : Error {
    using Error::Error;
};
struct NotSquarefree : Error {
    using Error::Error;
};
struct NotOneClass : Error {
    using Error::Error;
};
struct SolverExhausted : Error {
    using Error::Error;
};
struct InconsistentOrder : Error {
    using Error::Error;
};
struct ParityViolation : Error {
    using Error::Error;
};
struct TrivialityViolation : Error {
    using Error::Error;
};
struct UnsupportedCharacterKind : Error {
    using Error::Error;
};
struct BadInput : Error {
    using Error::Error;
};

// ----------------------------------------------------------------------
// Numerical policy shared by every analytic operation.
//
//   series_terms    : initial Euler-Maclaurin terms M (lower bound; the
//                     evaluator may raise M to honour target_abs_err)
//   bernoulli_terms : tail correction terms K
//   target_abs_err  : requested absolute accuracy
//   pole_guard      : minimum |denominator| before a test point is
//                     declared inconclusive
// ----------------------------------------------------------------------

struct PrecisionPolicy {
    int series_terms = 50;
    int bernoulli_terms = 10;
    double target_abs_err = 1e-12;
    double pole_guard = 1e-6;

    void validate() const {
        if (series_terms < 10) throw BadInput("PrecisionPolicy: series_terms must be >= 10");
        if (bernoulli_terms < 2 || bernoulli_terms > 15)
            throw BadInput("PrecisionPolicy: bernoulli_terms must be in [2, 15]");
        if (!(target_abs_err > 0.0) || target_abs_err > 1e-6)
            throw BadInput("PrecisionPolicy: target_abs_err must be in (0, 1e-6]");
        if (!(pole_guard > 0.0)) throw BadInput("PrecisionPolicy: pole_guard must be positive");
    }

    // Override fields from ADELIC_PRECISION, e.g.
    //   ADELIC_PRECISION="series_terms=80,target_abs_err=1e-13"
    static PrecisionPolicy from_env() {
        PrecisionPolicy pol;
        const char* raw = std::getenv("ADELIC_PRECISION");
        if (!raw) return pol;
        std::string s(raw);
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t comma = s.find(',', pos);
            if (comma == std::string::npos) comma = s.size();
            std::string item = s.substr(pos, comma - pos);
            std::size_t eq = item.find('=');
            if (eq != std::string::npos) {
                std::string key = item.substr(0, eq);
                std::string val = item.substr(eq + 1);
                if (key == "series_terms") pol.series_terms = std::stoi(val);
                else if (key == "bernoulli_terms") pol.bernoulli_terms = std::stoi(val);
                else if (key == "target_abs_err") pol.target_abs_err = std::stod(val);
                else if (key == "pole_guard") pol.pole_guard = std::stod(val);
                else throw BadInput("ADELIC_PRECISION: unknown key '" + key + "'");
            }
            pos = comma + 1;
        }
        pol.validate();
        return pol;
    }
};

inline bool finite(const Cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace adelic
