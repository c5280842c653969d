#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

#include "gcs/errors.hpp"

namespace gcs {

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    double h_init = 1e-3;
    double h_min = 1e-14;
    long max_steps = 20000000;
};

/// Dormand-Prince 5(4) embedded pair with FSAL and step-size control.
/// Integrates in either direction; advance_to() lands exactly on the target
/// so output grids need no interpolation.
template <std::size_t N, class RHS>
class Dopri5 {
public:
    using State = std::array<double, N>;

    explicit Dopri5(RHS rhs, const OdeOptions& opt = {})
        : rhs_(std::forward<RHS>(rhs)), opt_(opt) {}

    void start(double t, const State& y) {
        t_ = t;
        y_ = y;
        rhs_(t_, y_, k_[0]);
        h_mag_ = std::max(opt_.h_init, opt_.h_min);
        steps_ = 0;
    }

    double time() const noexcept { return t_; }
    const State& state() const noexcept { return y_; }

    /// Steps until t_target. The observer is called after every accepted
    /// step; returning false halts integration early (returns false).
    template <class Observer>
    bool advance_to(double t_target, Observer&& observe) {
        const double dir = (t_target >= t_) ? 1.0 : -1.0;
        while (dir * (t_target - t_) > 4.0 * eps_ * std::max(1.0, std::abs(t_))) {
            double h = dir * std::min(h_mag_, std::abs(t_target - t_));
            double err = 0.0;
            State y_new, k_last;
            for (;;) {
                err = attempt_step(h, y_new, k_last);
                if (++steps_ > opt_.max_steps)
                    throw MaxIterations("ode integration exceeded max_steps");
                if (err <= 1.0) break;
                h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
                if (std::abs(h) < opt_.h_min)
                    throw MaxIterations("ode step size underflow");
            }
            t_ += h;
            y_ = y_new;
            k_[0] = k_last; // FSAL
            const double fac = err > 1e-30 ? 0.9 * std::pow(err, -0.2) : 5.0;
            h_mag_ = std::abs(h) * std::clamp(fac, 0.2, 5.0);
            if (!observe(t_, y_)) return false;
        }
        t_ = t_target;
        return true;
    }

    bool advance_to(double t_target) {
        return advance_to(t_target, [](double, const State&) { return true; });
    }

private:
    // Returns the scaled error norm of one trial step of size h and fills
    // the candidate state plus the last stage derivative (for FSAL).
    double attempt_step(double h, State& y5, State& k7) {
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                                a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                                a64 = 49.0 / 176, a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        // b(5th) - b(4th): error estimator weights
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                                e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

        State w;
        for (std::size_t i = 0; i < N; ++i) w[i] = y_[i] + h * a21 * k_[0][i];
        rhs_(t_ + h / 5, w, k_[1]);
        for (std::size_t i = 0; i < N; ++i)
            w[i] = y_[i] + h * (a31 * k_[0][i] + a32 * k_[1][i]);
        rhs_(t_ + 3 * h / 10, w, k_[2]);
        for (std::size_t i = 0; i < N; ++i)
            w[i] = y_[i] + h * (a41 * k_[0][i] + a42 * k_[1][i] + a43 * k_[2][i]);
        rhs_(t_ + 4 * h / 5, w, k_[3]);
        for (std::size_t i = 0; i < N; ++i)
            w[i] = y_[i] + h * (a51 * k_[0][i] + a52 * k_[1][i] + a53 * k_[2][i] + a54 * k_[3][i]);
        rhs_(t_ + 8 * h / 9, w, k_[4]);
        for (std::size_t i = 0; i < N; ++i)
            w[i] = y_[i] + h * (a61 * k_[0][i] + a62 * k_[1][i] + a63 * k_[2][i] +
                                a64 * k_[3][i] + a65 * k_[4][i]);
        rhs_(t_ + h, w, k_[5]);
        for (std::size_t i = 0; i < N; ++i)
            y5[i] = y_[i] + h * (b1 * k_[0][i] + b3 * k_[2][i] + b4 * k_[3][i] +
                                 b5 * k_[4][i] + b6 * k_[5][i]);
        rhs_(t_ + h, y5, k7);

        double err2 = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double e = h * (e1 * k_[0][i] + e3 * k_[2][i] + e4 * k_[3][i] +
                                  e5 * k_[4][i] + e6 * k_[5][i] + e7 * k7[i]);
            const double sc =
                opt_.abs_tol + opt_.rel_tol * std::max(std::abs(y_[i]), std::abs(y5[i]));
            err2 += (e / sc) * (e / sc);
        }
        return std::sqrt(err2 / N);
    }

    static constexpr double eps_ = 2.220446049250313e-16;

    RHS rhs_;
    OdeOptions opt_;
    double t_ = 0.0;
    double h_mag_ = 1e-3;
    long steps_ = 0;
    State y_{};
    std::array<State, 6> k_{};
};

} // namespace gcs
