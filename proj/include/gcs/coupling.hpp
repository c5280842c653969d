#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gcs/errors.hpp"
#include "gcs/rational.hpp"
#include "gcs/roots.hpp"

namespace gcs {

/// Parameters of the globally coupled problem
///   Lap(A) - A + A^p - k A int_{R^n} A^r dx = 0,  A > 0, A -> 0 at infinity.
/// r_exp = 2 is the standard coupling; other exponents are handled by
/// numeric root finding only.
struct ProblemParams {
    int n = 1;
    Exponent p = 3.0;
    double k = 1.0;
    double r_exp = 2.0;

    void validate() const {
        if (n < 1) throw std::invalid_argument("ProblemParams: n must be a positive integer");
        if (!(p.value() > 1.0)) throw std::invalid_argument("ProblemParams: p must exceed 1");
        if (!(k > 0.0)) throw std::invalid_argument("ProblemParams: k must be positive");
        if (!(r_exp > 0.0)) throw std::invalid_argument("ProblemParams: r_exp must be positive");
    }
};

/// e_{n,p} = n/2 - 2/(p-1). Its position relative to -1 and 0 decides the
/// shape of the consistency function f.
inline Rational e_exponent_exact(int n, const Rational& p) {
    return Rational(n, 2) - Rational(2) / (p - Rational(1));
}

inline double e_exponent(int n, const Exponent& p) {
    if (n < 1) throw std::invalid_argument("e_exponent: n must be >= 1");
    if (!(p.value() > 1.0)) throw std::invalid_argument("e_exponent: p must exceed 1");
    if (p.is_exact()) return e_exponent_exact(n, p.exact()).value();
    return 0.5 * n - 2.0 / (p.value() - 1.0);
}

/// Sobolev critical exponent p*(n); infinity for n = 1, 2.
inline double sobolev_exponent(int n) {
    if (n < 1) throw std::invalid_argument("sobolev_exponent: n must be >= 1");
    if (n <= 2) return std::numeric_limits<double>::infinity();
    return static_cast<double>(n + 2) / static_cast<double>(n - 2);
}

inline bool is_supercritical(int n, const Exponent& p) {
    if (n <= 2) return false;
    return cmp(p, Rational(n + 2, n - 2)) >= 0;
}

/// Consistency function f(omega) = (omega - 1) omega^{e_{n,p}}. Roots of
/// f(omega) = k alpha enumerate the solutions of the coupled problem.
inline double f_eval_e(double omega, double e) {
    if (!(omega > 0.0)) throw NonpositiveOmega("f is defined on omega > 0");
    return (omega - 1.0) * std::pow(omega, e);
}

inline double f_eval(double omega, int n, const Exponent& p) {
    return f_eval_e(omega, e_exponent(n, p));
}

/// The five subcritical shapes of f on (0, inf), plus the supercritical case.
enum class FTag {
    MaxThenDecay,           // e + 1 < 0: interior maximum, f(inf) = 0
    SaturatingOne,          // e + 1 = 0: increasing, f(inf) = 1
    IncreasingUnbounded,    // 0 < e + 1 < 1: increasing, f(+0) = -inf
    IncreasingFiniteAtZero, // e + 1 = 1: increasing, f(+0) = -1
    MinThenGrow,            // e + 1 > 1: interior minimum below 1, f(+0) = 0
    Supercritical,          // p >= p*(n): no ground state at all
};

inline const char* ftag_name(FTag t) {
    switch (t) {
        case FTag::MaxThenDecay: return "max-then-decay";
        case FTag::SaturatingOne: return "saturating-one";
        case FTag::IncreasingUnbounded: return "increasing-unbounded";
        case FTag::IncreasingFiniteAtZero: return "increasing-finite-at-zero";
        case FTag::MinThenGrow: return "min-then-grow";
        case FTag::Supercritical: return "supercritical";
    }
    return "?";
}

struct FCase {
    FTag tag = FTag::Supercritical;
    double e = 0.0;
    std::optional<double> omega_crit; // critical point e/(e+1), when one exists
};

/// Classifies the shape of f. The case boundaries p = 1 + 4/(n+2) and
/// p = 1 + 4/n are compared exactly for rational p; floating p falls into
/// the open intervals by strict comparison.
inline FCase classify_f(int n, const Exponent& p) {
    const double e = e_exponent(n, p);
    if (is_supercritical(n, p)) return {FTag::Supercritical, e, std::nullopt};

    const int lo = cmp(p, Rational(n + 6, n + 2)); // p vs 1 + 4/(n+2)
    if (lo < 0) return {FTag::MaxThenDecay, e, e / (e + 1.0)};
    if (lo == 0) return {FTag::SaturatingOne, e, std::nullopt};
    const int hi = cmp(p, Rational(n + 4, n)); // p vs 1 + 4/n
    if (hi < 0) return {FTag::IncreasingUnbounded, e, std::nullopt};
    if (hi == 0) return {FTag::IncreasingFiniteAtZero, e, std::nullopt};
    return {FTag::MinThenGrow, e, e / (e + 1.0)};
}

struct RootOptions {
    double rel_tol = 1e-12;      // Brent refinement, relative on omega
    double tangency_band = 1e-9; // |k alpha - f(omega_crit)| <= band*(1+k alpha) collapses
                                 // the near-double root to the critical point
    double scan_lo = 1e-6;       // log-grid scan domain for generalized coupling
    double scan_hi = 1e6;
    int scan_nodes = 2000;
};

namespace detail {

// Expands [lo, 2 lo, ...] until pred(hi) holds. pred must eventually hold.
template <class Pred>
inline double expand_until(double lo, Pred&& pred, const char* what) {
    double hi = 2.0 * lo;
    while (!pred(hi)) {
        hi *= 2.0;
        if (hi > 1e250)
            throw RootScanExhausted(std::string("bracket expansion exhausted: ") + what);
    }
    return hi;
}

} // namespace detail

/// All omega > 0 with f(omega) = k_alpha, sorted ascending. The count (0, 1
/// or 2) follows the shape of f; the near-tangent configuration in the
/// max-then-decay case reports the single critical root.
inline std::vector<double> solve_consistency(int n, const Exponent& p, double k_alpha,
                                             const RootOptions& opt = {}) {
    if (!(k_alpha > 0.0)) throw std::invalid_argument("solve_consistency: k*alpha must be positive");
    if (is_supercritical(n, p))
        throw SupercriticalExponent("solve_consistency: p >= p*(n), no ground state exists");

    const FCase fc = classify_f(n, p);
    const double e = fc.e;
    auto g = [&](double w) { return f_eval_e(w, e) - k_alpha; };
    const BrentOptions brent{opt.rel_tol, 0.0, 200};

    switch (fc.tag) {
        case FTag::MaxThenDecay: {
            const double wc = *fc.omega_crit;
            const double fmax = f_eval_e(wc, e);
            if (std::abs(k_alpha - fmax) <= opt.tangency_band * (1.0 + k_alpha))
                return {wc};
            if (k_alpha > fmax) return {};
            // one root on each side of the maximum
            const double lo = brent_root(g, 1.0, wc, -k_alpha, fmax - k_alpha, brent);
            const double hi_end =
                detail::expand_until(wc, [&](double w) { return g(w) < 0.0; }, "f below max");
            const double hi = brent_root(g, wc, hi_end, fmax - k_alpha, g(hi_end), brent);
            return {lo, hi};
        }
        case FTag::SaturatingOne: {
            // f(omega) = 1 - 1/omega here (e = -1 exactly): a root exists iff
            // k alpha < 1 and sits at 1/(1 - k alpha).
            if (!(k_alpha < 1.0)) return {};
            const double guess = 1.0 / (1.0 - k_alpha);
            const double lo = std::max(1.0, 0.9 * guess), hi = 1.2 * guess;
            return {brent_root(g, lo, hi, g(lo), g(hi), brent)};
        }
        case FTag::IncreasingUnbounded:
        case FTag::IncreasingFiniteAtZero:
        case FTag::MinThenGrow: {
            // f < 0 on (0, 1) and f increases through k_alpha beyond 1
            const double hi =
                detail::expand_until(1.0, [&](double w) { return g(w) >= 0.0; }, "f above k*alpha");
            return {brent_root(g, 1.0, hi, -k_alpha, g(hi), brent)};
        }
        case FTag::Supercritical: break; // unreachable
    }
    return {};
}

/// Items of the existence/multiplicity theorem.
enum class TheoremItem { I1_1, I1_2, I1_3, I2_1, I2_2, I3_1, I4_1 };

inline const char* theorem_item_name(TheoremItem it) {
    switch (it) {
        case TheoremItem::I1_1: return "1-1";
        case TheoremItem::I1_2: return "1-2";
        case TheoremItem::I1_3: return "1-3";
        case TheoremItem::I2_1: return "2-1";
        case TheoremItem::I2_2: return "2-2";
        case TheoremItem::I3_1: return "3-1";
        case TheoremItem::I4_1: return "4-1";
    }
    return "?";
}

struct ClassificationResult {
    TheoremItem theorem_item = TheoremItem::I4_1;
    int count = 0;
    std::vector<double> omegas; // sorted roots of f(omega) = k alpha
    std::optional<double> k_star; // threshold coupling in theorem cases 1 and 2
};

/// Full existence/multiplicity answer for given parameters and ground-state
/// mass alpha = int A_0^2. The case-2 criterion implemented is k*alpha < 1;
/// see the k_star field for the resulting threshold 1/alpha.
inline ClassificationResult classify_existence(const ProblemParams& params, double alpha,
                                               const RootOptions& opt = {}) {
    params.validate();
    if (!(alpha > 0.0)) throw std::invalid_argument("classify_existence: alpha must be positive");

    const FCase fc = classify_f(params.n, params.p);
    if (fc.tag == FTag::Supercritical) return {TheoremItem::I4_1, 0, {}, std::nullopt};

    const double ka = params.k * alpha;
    auto roots = solve_consistency(params.n, params.p, ka, opt);
    ClassificationResult res;
    res.omegas = std::move(roots);
    res.count = static_cast<int>(res.omegas.size());

    switch (fc.tag) {
        case FTag::MaxThenDecay:
            res.k_star = f_eval_e(*fc.omega_crit, fc.e) / alpha;
            res.theorem_item = res.count == 0   ? TheoremItem::I1_1
                               : res.count == 1 ? TheoremItem::I1_2
                                                : TheoremItem::I1_3;
            break;
        case FTag::SaturatingOne:
            res.k_star = 1.0 / alpha;
            res.theorem_item = res.count == 0 ? TheoremItem::I2_1 : TheoremItem::I2_2;
            break;
        default:
            res.theorem_item = TheoremItem::I3_1;
            break;
    }
    return res;
}

/// Roots of (omega - 1) omega^{n/2 - r/(p-1)} = k alpha_r for the coupling
/// exponent r. No analytic case split is attempted: a log-spaced sign-change
/// scan followed by Brent refinement, as far as the scan domain reaches.
inline std::vector<double> generalized_consistency(int n, const Exponent& p, double r_exp,
                                                   double k_alpha_r,
                                                   const RootOptions& opt = {}) {
    if (!(r_exp > 0.0)) throw std::invalid_argument("generalized_consistency: r_exp must be positive");
    if (!(k_alpha_r > 0.0))
        throw std::invalid_argument("generalized_consistency: k*alpha_r must be positive");
    if (is_supercritical(n, p))
        throw SupercriticalExponent("generalized_consistency: p >= p*(n)");

    const double g_exp = 0.5 * n - r_exp / (p.value() - 1.0);
    auto g = [&](double w) { return f_eval_e(w, g_exp) - k_alpha_r; };

    const int m = std::max(opt.scan_nodes, 8);
    const double ratio = std::pow(opt.scan_hi / opt.scan_lo, 1.0 / (m - 1));
    std::vector<double> roots;
    const BrentOptions brent{opt.rel_tol, 0.0, 200};
    double w_prev = opt.scan_lo, g_prev = g(w_prev);
    for (int j = 1; j < m; ++j) {
        const double w = opt.scan_lo * std::pow(ratio, j);
        const double gw = g(w);
        if (g_prev == 0.0) {
            roots.push_back(w_prev);
        } else if ((g_prev < 0.0) != (gw < 0.0)) {
            roots.push_back(brent_root(g, w_prev, w, g_prev, gw, brent));
        }
        w_prev = w;
        g_prev = gw;
    }
    if (g_prev == 0.0) roots.push_back(w_prev);

    // drop duplicates from a root landing exactly on a scan node
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || std::abs(r - out.back()) > 1e-9 * (1.0 + std::abs(r))) out.push_back(r);

    if (out.empty()) {
        // the asymptotics predict a root whenever f is eventually above
        // k alpha_r: f -> inf for g_exp > -1, f -> 1 for g_exp = -1
        const bool predicted =
            (g_exp > -1.0) || (g_exp == -1.0 && k_alpha_r < 1.0);
        if (predicted)
            throw RootScanExhausted(
                "generalized_consistency: a root is predicted beyond the scan domain");
    }
    return out;
}

/// One row of a bifurcation sweep. Rows with invalid parameters carry an
/// error marker instead of aborting the whole sweep.
struct SweepRow {
    double k = 0.0;
    std::optional<ClassificationResult> result;
    std::string error;
};

inline std::vector<SweepRow> sweep_bifurcation(int n, const Exponent& p, double alpha,
                                               const std::vector<double>& k_values,
                                               const RootOptions& opt = {}) {
    std::vector<SweepRow> rows;
    rows.reserve(k_values.size());
    for (double k : k_values) {
        SweepRow row;
        row.k = k;
        try {
            row.result = classify_existence({n, p, k, 2.0}, alpha, opt);
        } catch (const Error& e) {
            row.error = e.kind();
        } catch (const std::exception&) {
            row.error = "invalid-argument";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace gcs
