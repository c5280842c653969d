#pragma once

#include <optional>
#include <vector>

#include "gcs/coupling.hpp"
#include "gcs/ground_state.hpp"
#include "gcs/quadrature.hpp"
#include "gcs/verification.hpp"

namespace gcs {

struct SolveOptions {
    ShootConfig shoot{};
    RootOptions roots{};
    double consistency_tol = 1e-6;
};

/// Everything the pipeline produces for one parameter set: the ground state,
/// its masses, the scalar classification (r_exp = 2 only) and one
/// reconstructed branch per root.
struct ProblemSolution {
    std::optional<RadialProfile> base; // absent in the supercritical case
    double alpha = 0.0;                // int A_0^2
    double alpha_r = 0.0;              // int A_0^{r_exp}
    FCase fcase;
    std::optional<ClassificationResult> classification; // theorem labels, r_exp = 2
    std::vector<double> omegas;
    std::vector<SolutionBranch> branches;
};

/// Ground state -> masses -> roots of the consistency equation -> one
/// reconstructed, certified branch per root.
inline ProblemSolution solve_problem(const ProblemParams& params, const SolveOptions& opt = {}) {
    params.validate();

    ProblemSolution sol;
    sol.fcase = classify_f(params.n, params.p);
    if (sol.fcase.tag == FTag::Supercritical) {
        sol.classification = ClassificationResult{TheoremItem::I4_1, 0, {}, std::nullopt};
        return sol;
    }

    sol.base = shoot_ground_state(params.n, params.p, opt.shoot);
    sol.alpha = radial_integral(*sol.base, 2.0, params.n).value;
    sol.alpha_r = params.r_exp == 2.0
                      ? sol.alpha
                      : radial_integral(*sol.base, params.r_exp, params.n).value;

    if (params.r_exp == 2.0) {
        sol.classification = classify_existence(params, sol.alpha, opt.roots);
        sol.omegas = sol.classification->omegas;
    } else {
        sol.omegas = generalized_consistency(params.n, params.p, params.r_exp,
                                             params.k * sol.alpha_r, opt.roots);
    }

    sol.branches.reserve(sol.omegas.size());
    for (double omega : sol.omegas)
        sol.branches.push_back(
            reconstruct_solution(params, omega, *sol.base, opt.consistency_tol));
    return sol;
}

} // namespace gcs
