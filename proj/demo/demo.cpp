// Minimal library walkthrough: shoot the ground state, classify existence
// for a coupling strength, reconstruct the branches and certify them.

#include <cstdio>

#include "gcs/gcs.hpp"

int main() {
    using namespace gcs;

    // ground state of u'' + ((n-1)/r) u' - u + u^p = 0 for n = 1, p = 3
    const RadialProfile base = shoot_ground_state(1, 3.0);
    const double alpha = radial_integral(base, 2.0, 1).value;
    std::printf("u(0) = %.12f, alpha = int A0^2 = %.12f\n", base.values.front(), alpha);

    // the globally coupled problem at k = 0.5 reduces to f(omega) = k alpha
    const ProblemParams params{1, 3.0, 0.5, 2.0};
    const ProblemSolution sol = solve_problem(params);
    std::printf("theorem item %s, %d solution(s)\n",
                theorem_item_name(sol.classification->theorem_item), sol.classification->count);

    for (const SolutionBranch& branch : sol.branches) {
        const CertificationReport rep = certify_branch(branch, params);
        std::printf("omega = %.12f  int A^2 = %.12f  consistency defect = %.2e  "
                    "nonlocal residual = %.2e\n",
                    rep.omega, rep.l2_mass, rep.consistency_defect, rep.nonlocal_residual);
    }
    return 0;
}
