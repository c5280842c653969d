#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gcs {

struct BrentOptions {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int max_iter = 200;
};

/// Brent's method on a bracketing interval [a, b] with fa = f(a), fb = f(b)
/// of opposite sign. Combines inverse quadratic interpolation, secant and
/// bisection; always keeps a valid bracket.
template <class F>
double brent_root(F&& f, double a, double b, double fa, double fb, const BrentOptions& opt = {}) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw std::invalid_argument("brent_root: endpoints do not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < opt.max_iter; ++it) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                           0.5 * (opt.rel_tol * std::abs(b) + opt.abs_tol);
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return b;

        if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
            d = e = m; // interpolation is not trustworthy; bisect
        } else {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = e = m;
            }
        }
        a = b; fa = fb;
        b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa;
            d = e = b - a;
        }
    }
    return b;
}

template <class F>
double brent_root(F&& f, double a, double b, const BrentOptions& opt = {}) {
    const double fa = f(a), fb = f(b);
    return brent_root(f, a, b, fa, fb, opt);
}

} // namespace gcs
