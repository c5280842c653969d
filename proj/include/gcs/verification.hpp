#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gcs/coupling.hpp"
#include "gcs/errors.hpp"
#include "gcs/ground_state.hpp"
#include "gcs/quadrature.hpp"

namespace gcs {

/// One reconstructed solution of the coupled problem: the scaled profile
/// together with its computed masses and certification residual.
struct SolutionBranch {
    double omega = 1.0;
    RadialProfile profile;
    double l2_mass = 0.0;       // int A^2 over R^n
    double coupling_mass = 0.0; // int A^{r_exp}; equals l2_mass for r_exp = 2
    double residual_sup = 0.0;  // sup-norm nonlocal PDE residual
};

/// Sup-norm finite-difference residual of Lap(u) - omega u + u^p over the
/// interior grid points of the stored samples.
inline double ode_residual(const RadialProfile& profile, double omega = 1.0) {
    const std::size_t len = profile.grid.size();
    if (len < 3) return 0.0;
    const double h = (profile.grid.back() - profile.grid.front()) / (len - 1);
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < len; ++i) {
        const double lap = (profile.values[i + 1] - 2.0 * profile.values[i] +
                            profile.values[i - 1]) / (h * h) +
                           (profile.n - 1) / profile.grid[i] *
                               (profile.values[i + 1] - profile.values[i - 1]) / (2.0 * h);
        const double res = lap - omega * profile.values[i] +
                           detail::odd_pow(profile.values[i], profile.p);
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

/// Sup-norm finite-difference residual of the full nonlocal equation
/// Lap(A) - A + A^p - k A int A^r over the interior grid points.
inline double nonlocal_residual(const SolutionBranch& branch, const ProblemParams& params) {
    const RadialProfile& pr = branch.profile;
    const std::size_t len = pr.grid.size();
    if (len < 3) return 0.0;
    const double h = (pr.grid.back() - pr.grid.front()) / (len - 1);
    const double shift = 1.0 + params.k * branch.coupling_mass;
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < len; ++i) {
        const double lap =
            (pr.values[i + 1] - 2.0 * pr.values[i] + pr.values[i - 1]) / (h * h) +
            (pr.n - 1) / pr.grid[i] * (pr.values[i + 1] - pr.values[i - 1]) / (2.0 * h);
        const double res = lap - shift * pr.values[i] + detail::odd_pow(pr.values[i], pr.p);
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

/// Scales the base ground state to the root omega, computes its masses and
/// verifies the scalar consistency |1 + k int A^r - omega| <= tol omega.
inline SolutionBranch reconstruct_solution(const ProblemParams& params, double omega,
                                           const RadialProfile& base,
                                           double consistency_tol = 1e-6) {
    params.validate();
    if (!(omega > 0.0)) throw NonpositiveOmega("reconstruct_solution: omega must be positive");

    SolutionBranch branch;
    branch.omega = omega;
    branch.profile = scale_profile(base, omega, params.p.value());
    branch.l2_mass = radial_integral(branch.profile, 2.0, params.n).value;
    branch.coupling_mass = params.r_exp == 2.0
                               ? branch.l2_mass
                               : radial_integral(branch.profile, params.r_exp, params.n).value;

    const double defect = std::abs(1.0 + params.k * branch.coupling_mass - omega);
    if (defect > consistency_tol * omega)
        throw ConsistencyViolation("reconstruct_solution: |1 + k int A^r - omega| = " +
                                   std::to_string(defect) + " exceeds " +
                                   std::to_string(consistency_tol * omega));
    branch.residual_sup = nonlocal_residual(branch, params);
    return branch;
}

/// The three radially weighted integrals entering the integral identities.
struct IdentityTerms {
    double grad2 = 0.0;  // int |grad u|^2
    double mass2 = 0.0;  // int u^2
    double mass_p1 = 0.0; // int u^{p+1}
};

inline IdentityTerms identity_terms(const RadialProfile& profile, int n, double p) {
    IdentityTerms t;
    t.grad2 = gradient_square_integral(profile, n).value;
    t.mass2 = radial_integral(profile, 2.0, n).value;
    t.mass_p1 = radial_integral(profile, p + 1.0, n).value;
    return t;
}

/// Pohozaev identity for decaying solutions of Lap(u) - omega u + u^p = 0:
///   (n-2)/2 int |grad u|^2 = n (int u^{p+1}/(p+1) - omega int u^2 / 2).
/// Returns |LHS - RHS| / (|LHS| + |RHS| + eps). For n = 2 both sides vanish
/// and this ratio is uninformative; use pohozaev_terms and the degenerate
/// form int u^2 = 2 int u^{p+1}/(p+1) there.
inline double pohozaev_check(const RadialProfile& profile, int n, double p, double omega = 1.0) {
    const IdentityTerms t = identity_terms(profile, n, p);
    const double lhs = 0.5 * (n - 2) * t.grad2;
    const double rhs = n * (t.mass_p1 / (p + 1.0) - 0.5 * omega * t.mass2);
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-300);
}

struct PohozaevTerms {
    double lhs = 0.0;
    double rhs = 0.0;
    double scale = 0.0; // magnitude of the constituent terms, for n = 2
};

inline PohozaevTerms pohozaev_terms(const RadialProfile& profile, int n, double p,
                                    double omega = 1.0) {
    const IdentityTerms t = identity_terms(profile, n, p);
    PohozaevTerms out;
    out.lhs = 0.5 * (n - 2) * t.grad2;
    out.rhs = n * (t.mass_p1 / (p + 1.0) - 0.5 * omega * t.mass2);
    out.scale = 0.5 * std::abs(n - 2) * t.grad2 + n * (t.mass_p1 / (p + 1.0) + 0.5 * omega * t.mass2);
    return out;
}

/// Nehari identity (equation multiplied by u and integrated):
///   int |grad u|^2 + omega int u^2 = int u^{p+1}.
inline double nehari_check(const RadialProfile& profile, int n, double p, double omega = 1.0) {
    const IdentityTerms t = identity_terms(profile, n, p);
    const double lhs = t.grad2 + omega * t.mass2;
    const double rhs = t.mass_p1;
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-300);
}

/// Numerical certificate of one branch: every check reported as a relative
/// defect; thresholds live with the caller.
struct CertificationReport {
    double omega = 0.0;
    double l2_mass = 0.0;
    double consistency_defect = 0.0; // |1 + k int A^r - omega| / omega
    double ode_residual = 0.0;       // vs the omega-shifted single-power equation
    double nonlocal_residual = 0.0;  // vs the full globally coupled equation
    double pohozaev_defect = 0.0;
    double nehari_defect = 0.0;
};

inline CertificationReport certify_branch(const SolutionBranch& branch,
                                          const ProblemParams& params) {
    CertificationReport rep;
    rep.omega = branch.omega;
    rep.l2_mass = branch.l2_mass;
    rep.consistency_defect =
        std::abs(1.0 + params.k * branch.coupling_mass - branch.omega) / branch.omega;
    rep.ode_residual = ode_residual(branch.profile, branch.omega);
    rep.nonlocal_residual = nonlocal_residual(branch, params);
    const PohozaevTerms pt =
        pohozaev_terms(branch.profile, params.n, params.p.value(), branch.omega);
    rep.pohozaev_defect = std::abs(pt.lhs - pt.rhs) / (pt.scale + 1e-300);
    rep.nehari_defect = nehari_check(branch.profile, params.n, params.p.value(), branch.omega);
    return rep;
}

} // namespace gcs
