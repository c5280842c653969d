#pragma once

#include <cmath>
#include <map>
#include <tuple>

#include "gcs/gcs.hpp"

namespace fixtures {

// Closed-form n = 1 ground state of u'' - u + u^p = 0:
//   u(r) = ((p+1)/2)^{1/(p-1)} sech^{2/(p-1)}((p-1) r / 2).
inline double sech_ground_state(double r, double p) {
    const double amp = std::pow(0.5 * (p + 1.0), 1.0 / (p - 1.0));
    const double s = 1.0 / std::cosh(0.5 * (p - 1.0) * r);
    return amp * std::pow(s, 2.0 / (p - 1.0));
}

inline double sech_ground_state_deriv(double r, double p) {
    const double amp = std::pow(0.5 * (p + 1.0), 1.0 / (p - 1.0));
    const double b = 0.5 * (p - 1.0), m = 2.0 / (p - 1.0);
    const double s = 1.0 / std::cosh(b * r);
    return -amp * m * b * std::pow(s, m) * std::tanh(b * r);
}

// Ground states are expensive enough to share across test cases.
inline const gcs::RadialProfile& ground_state(int n, double p) {
    static std::map<std::pair<int, double>, gcs::RadialProfile> cache;
    auto it = cache.find({n, p});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(n, p), gcs::shoot_ground_state(n, p)).first;
    return it->second;
}

inline double alpha(int n, double p) {
    return gcs::radial_integral(ground_state(n, p), 2.0, n).value;
}

// Profile sampled from the closed form: an exact oracle object for the
// quadrature and identity tests.
inline gcs::RadialProfile synthetic_sech_profile(double p, std::size_t nodes, double r_max = 20.0) {
    gcs::RadialProfile pr;
    pr.n = 1;
    pr.p = p;
    const double h = r_max / static_cast<double>(nodes - 1);
    pr.grid.resize(nodes);
    pr.values.resize(nodes);
    pr.derivs.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        pr.grid[i] = i * h;
        pr.values[i] = sech_ground_state(pr.grid[i], p);
        pr.derivs[i] = sech_ground_state_deriv(pr.grid[i], p);
    }
    // sech^{2/(p-1)}(b r) ~ 2^{2/(p-1)} e^{-r}: exact tail constants
    pr.decay_delta = 1.0;
    pr.decay_C = std::pow(0.5 * (p + 1.0), 1.0 / (p - 1.0)) * std::pow(2.0, 2.0 / (p - 1.0));
    return pr;
}

} // namespace fixtures
