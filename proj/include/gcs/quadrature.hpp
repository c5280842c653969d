#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "gcs/errors.hpp"
#include "gcs/ground_state.hpp"

namespace gcs {

/// Integral over R^n split into the sampled grid contribution and the
/// analytic correction for the exponential tail beyond the grid.
struct QuadratureResult {
    double value = 0.0;
    double grid_part = 0.0;
    double tail_part = 0.0;
    double est_error = 0.0;
};

/// Surface area of the unit sphere S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
inline double sphere_area(int n) {
    return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

/// Upper incomplete gamma for integer order:
/// Gamma(n, x) = (n-1)! e^{-x} sum_{k<n} x^k / k!.
inline double upper_gamma_int(int n, double x) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < n; ++k) {
        term *= x / k;
        sum += term;
    }
    double fact = 1.0;
    for (int k = 2; k < n; ++k) fact *= k;
    return fact * std::exp(-x) * sum;
}

namespace detail {

// Composite Simpson on a uniform grid; an odd interval count gets a closing
// 3/8 rule.
inline double simpson_uniform(const std::vector<double>& f, double h) {
    const std::size_t nodes = f.size();
    if (nodes < 2) return 0.0;
    if (nodes == 2) return 0.5 * h * (f[0] + f[1]);
    const std::size_t m = nodes - 1;
    std::size_t even_end = m;
    double extra = 0.0;
    if (m % 2 != 0) {
        even_end = m - 3;
        extra = 3.0 * h / 8.0 * (f[m - 3] + 3.0 * f[m - 2] + 3.0 * f[m - 1] + f[m]);
    }
    double s = 0.0;
    for (std::size_t i = 0; i + 2 <= even_end; i += 2) s += f[i] + 4.0 * f[i + 1] + f[i + 2];
    return s * h / 3.0 + extra;
}

inline double pow_int(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

} // namespace detail

/// int_{R^n} u(|x|)^power dx = sigma_{n-1} int_0^inf u^power r^{n-1} dr,
/// evaluated by composite Simpson on the stored grid plus the closed-form
/// tail of (C e^{-delta r})^power beyond it.
inline QuadratureResult radial_integral(const RadialProfile& profile, double power, int n) {
    if (!(power > 0.0)) throw std::invalid_argument("radial_integral: power must be positive");
    if (n < 1) throw std::invalid_argument("radial_integral: n must be >= 1");
    if (!profile.decay_C || !profile.decay_delta)
        throw DegenerateTail("radial_integral: profile carries no decay constants");
    const std::size_t len = profile.grid.size();
    if (len < 3) throw std::invalid_argument("radial_integral: profile too short");

    const double sigma = sphere_area(n);
    const double h = (profile.grid.back() - profile.grid.front()) / (len - 1);

    std::vector<double> f(len);
    for (std::size_t i = 0; i < len; ++i)
        f[i] = std::pow(profile.values[i], power) * detail::pow_int(profile.grid[i], n - 1);

    QuadratureResult out;
    out.grid_part = sigma * detail::simpson_uniform(f, h);

    const double lam = power * *profile.decay_delta;
    const double R = profile.grid.back();
    out.tail_part =
        sigma * std::pow(*profile.decay_C, power) * std::pow(lam, -n) * upper_gamma_int(n, lam * R);
    out.value = out.grid_part + out.tail_part;

    // Richardson estimate against the half-resolution Simpson sum
    if ((len - 1) % 4 == 0) {
        std::vector<double> f2(len / 2 + 1);
        for (std::size_t i = 0; i < f2.size(); ++i) f2[i] = f[2 * i];
        out.est_error = std::abs(out.grid_part - sigma * detail::simpson_uniform(f2, 2.0 * h)) / 15.0;
    } else {
        double trap = 0.5 * (f.front() + f.back());
        for (std::size_t i = 1; i + 1 < len; ++i) trap += f[i];
        out.est_error = std::abs(out.grid_part - sigma * trap * h) / 3.0;
    }
    return out;
}

/// int_{R^n} |grad u|^2 dx from the stored derivative samples.
inline QuadratureResult gradient_square_integral(const RadialProfile& profile, int n) {
    if (n < 1) throw std::invalid_argument("gradient_square_integral: n must be >= 1");
    if (!profile.decay_C || !profile.decay_delta)
        throw DegenerateTail("gradient_square_integral: profile carries no decay constants");
    const std::size_t len = profile.grid.size();
    const double sigma = sphere_area(n);
    const double h = (profile.grid.back() - profile.grid.front()) / (len - 1);

    std::vector<double> f(len);
    for (std::size_t i = 0; i < len; ++i)
        f[i] = profile.derivs[i] * profile.derivs[i] * detail::pow_int(profile.grid[i], n - 1);

    QuadratureResult out;
    out.grid_part = sigma * detail::simpson_uniform(f, h);
    const double C = *profile.decay_C * *profile.decay_delta; // |u'| ~ delta C e^{-delta r}
    const double lam = 2.0 * *profile.decay_delta;
    out.tail_part = sigma * C * C * std::pow(lam, -n) * upper_gamma_int(n, lam * profile.grid.back());
    out.value = out.grid_part + out.tail_part;
    return out;
}

} // namespace gcs
