// Command-line front end: ground-state / classify / solve / sweep / verify.
//
// Exit codes: 0 success, 2 usage error, 3 nonexistence (mathematically
// correct, no solution for the given parameters), 4 numerical failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gcs/gcs.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNonexistence = 3;
constexpr int kExitNumerical = 4;

struct RunConfig {
    int n = 1;
    std::string p_str;
    double k = 0.0;
    std::string k_range; // lo:hi:count
    std::string spacing = "log";
    double r_exp = 2.0;
    std::string output;
    std::string format = "structured-text";
    // tolerance overrides
    double amp_tol = 1e-12;
    double r_max = 20.0;
    int grid_points = 16000;
    double root_tol = 1e-12;
    double consistency_tol = 1e-6;
    double residual_tol = 1e-5; // scaled by A(0)
    double identity_tol = 1e-4;
    bool write_profiles = false;
    std::string profile_prefix = "branch";
};

gcs::ProblemParams make_params(const RunConfig& cfg) {
    gcs::ProblemParams params{cfg.n, gcs::Exponent::parse(cfg.p_str), cfg.k, cfg.r_exp};
    params.validate();
    return params;
}

gcs::SolveOptions make_options(const RunConfig& cfg) {
    gcs::SolveOptions opt;
    opt.shoot.amp_tol = cfg.amp_tol;
    opt.shoot.r_max = cfg.r_max;
    opt.shoot.grid_points = cfg.grid_points;
    opt.roots.rel_tol = cfg.root_tol;
    opt.consistency_tol = cfg.consistency_tol;
    return opt;
}

std::vector<double> parse_k_range(const std::string& range, const std::string& spacing) {
    double lo = 0.0, hi = 0.0;
    int count = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(range);
    if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || !in.eof())
        throw std::invalid_argument("--k-range expects lo:hi:count");
    if (!(lo > 0.0) || !(hi > 0.0) || count < 2)
        throw std::invalid_argument("--k-range needs positive endpoints and count >= 2");
    std::vector<double> ks(count);
    for (int i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / (count - 1);
        ks[i] = spacing == "linear" ? lo + t * (hi - lo) : lo * std::pow(hi / lo, t);
    }
    return ks;
}

void emit(std::ostream& os, const std::vector<gcs::Record>& recs, const std::string& format) {
    gcs::write_records(os, recs, gcs::parse_record_format(format));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

int cmd_ground_state(const RunConfig& cfg) {
    gcs::ProblemParams params{cfg.n, gcs::Exponent::parse(cfg.p_str), 1.0, 2.0};
    const gcs::SolveOptions opt = make_options(cfg);
    const gcs::RadialProfile profile = gcs::shoot_ground_state(params.n, params.p, opt.shoot);
    const double alpha = gcs::radial_integral(profile, 2.0, params.n).value;
    const double residual = gcs::ode_residual(profile, 1.0);

    std::ostringstream csv;
    gcs::write_profile_csv(csv, profile);
    write_file(cfg.output.empty() ? "ground_state.csv" : cfg.output, csv.str());

    emit(std::cout, {gcs::ground_state_record(profile, alpha, residual)}, cfg.format);
    return kExitOk;
}

int cmd_classify(const RunConfig& cfg) {
    const gcs::ProblemParams params = make_params(cfg);
    if (params.r_exp != 2.0)
        throw CLI::ValidationError("classify follows the r = 2 theorem; use solve for other r");
    const gcs::SolveOptions opt = make_options(cfg);
    const gcs::ProblemSolution sol = gcs::solve_problem(params, opt);
    emit(std::cout, {gcs::classification_record(params, sol.alpha, sol.fcase, *sol.classification)},
         cfg.format);
    return sol.classification->count == 0 ? kExitNonexistence : kExitOk;
}

int cmd_solve(const RunConfig& cfg) {
    const gcs::ProblemParams params = make_params(cfg);
    const gcs::SolveOptions opt = make_options(cfg);
    const gcs::ProblemSolution sol = gcs::solve_problem(params, opt);

    std::ostringstream out;
    if (sol.classification) {
        emit(out, {gcs::classification_record(params, sol.alpha, sol.fcase, *sol.classification)},
             cfg.format);
        out << '\n';
    }
    std::vector<gcs::Record> branch_recs;
    for (const auto& branch : sol.branches)
        branch_recs.push_back(gcs::certification_record(gcs::certify_branch(branch, params)));
    emit(out, branch_recs, cfg.format);

    if (cfg.write_profiles) {
        for (std::size_t i = 0; i < sol.branches.size(); ++i) {
            std::ostringstream csv;
            gcs::write_profile_csv(csv, sol.branches[i].profile);
            write_file(cfg.profile_prefix + "_" + std::to_string(i + 1) + ".csv", csv.str());
        }
    }
    if (cfg.output.empty())
        std::cout << out.str();
    else
        write_file(cfg.output, out.str());
    return sol.omegas.empty() ? kExitNonexistence : kExitOk;
}

int cmd_sweep(const RunConfig& cfg) {
    gcs::ProblemParams params{cfg.n, gcs::Exponent::parse(cfg.p_str), 1.0, 2.0};
    params.validate();
    const gcs::SolveOptions opt = make_options(cfg);
    const std::vector<double> ks = parse_k_range(cfg.k_range, cfg.spacing);

    double alpha = 1.0; // unused in the supercritical case
    if (!gcs::is_supercritical(params.n, params.p)) {
        const gcs::RadialProfile base = gcs::shoot_ground_state(params.n, params.p, opt.shoot);
        alpha = gcs::radial_integral(base, 2.0, params.n).value;
    }
    const auto rows = gcs::sweep_bifurcation(params.n, params.p, alpha, ks, opt.roots);

    std::ostringstream out;
    out << "k,count,omega1,omega2\n";
    for (const auto& row : rows) {
        out << gcs::format_sig(row.k) << ',';
        if (!row.result) {
            out << "error:" << row.error << ",,";
        } else {
            out << row.result->count << ',';
            out << (row.result->count > 0 ? gcs::format_sig(row.result->omegas[0]) : "") << ',';
            out << (row.result->count > 1 ? gcs::format_sig(row.result->omegas[1]) : "");
        }
        out << '\n';
    }
    if (cfg.output.empty())
        std::cout << out.str();
    else
        write_file(cfg.output, out.str());
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    const gcs::ProblemParams params = make_params(cfg);
    const gcs::SolveOptions opt = make_options(cfg);
    const gcs::ProblemSolution sol = gcs::solve_problem(params, opt);

    if (sol.omegas.empty())
        throw gcs::NoSolutionExists(
            sol.fcase.tag == gcs::FTag::Supercritical
                ? "p >= p*(n): the problem has no solution for any k (item 4-1)"
                : "no solution exists at this coupling strength");

    std::vector<gcs::Record> recs;
    bool all_ok = true;
    for (const auto& branch : sol.branches) {
        const gcs::CertificationReport rep = gcs::certify_branch(branch, params);
        recs.push_back(gcs::certification_record(rep));
        const double a0 = branch.profile.values.front();
        if (rep.nonlocal_residual > cfg.residual_tol * a0 ||
            rep.ode_residual > cfg.residual_tol * a0 ||
            rep.consistency_defect > cfg.consistency_tol ||
            rep.pohozaev_defect > cfg.identity_tol || rep.nehari_defect > cfg.identity_tol)
            all_ok = false;
    }
    std::ostringstream out;
    emit(out, recs, cfg.format);
    if (cfg.output.empty())
        std::cout << out.str();
    else
        write_file(cfg.output, out.str());
    if (!all_ok) {
        std::cerr << "verify: at least one defect exceeds its threshold\n";
        return kExitNumerical;
    }
    return kExitOk;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_k) {
    cmd->add_option("--n", cfg.n, "space dimension (integer >= 1)")->required();
    cmd->add_option("--p", cfg.p_str, "nonlinearity exponent, decimal or num/den rational")
        ->required();
    if (with_k) cmd->add_option("--k", cfg.k, "coupling strength")->required();
    cmd->add_option("--format", cfg.format, "csv | structured-text")
        ->check(CLI::IsMember({"csv", "structured-text"}));
    cmd->add_option("--output,-o", cfg.output, "output file (stdout when omitted)");
    cmd->add_option("--amp-tol", cfg.amp_tol, "shooting bisection tolerance");
    cmd->add_option("--r-max", cfg.r_max, "truncation radius (omega = 1 units)");
    cmd->add_option("--grid-points", cfg.grid_points, "output grid intervals");
    cmd->add_option("--root-tol", cfg.root_tol, "relative tolerance of the omega roots");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ground states and existence classification for the globally coupled "
                 "scalar field equation Lap(A) - A + A^p - k A int A^r = 0"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* gs = app.add_subcommand("ground-state",
                                  "shoot the ground state of Lap(u) - u + u^p = 0, export the "
                                  "profile CSV and print {u0, alpha, decay, residual}");
    add_common(gs, cfg, false);

    auto* cl = app.add_subcommand(
        "classify", "existence/multiplicity classification (theorem items, roots, k*)");
    add_common(cl, cfg, true);

    auto* so = app.add_subcommand(
        "solve", "full pipeline: ground state, consistency roots, reconstructed branches");
    add_common(so, cfg, true);
    so->add_option("--r-exp", cfg.r_exp, "coupling exponent r (default 2)");
    so->add_option("--consistency-tol", cfg.consistency_tol, "branch consistency tolerance");
    so->add_flag("--write-profiles", cfg.write_profiles, "write one CSV per branch");
    so->add_option("--profile-prefix", cfg.profile_prefix, "branch CSV filename prefix");

    auto* sw = app.add_subcommand("sweep", "tabulate root count and roots across a k range");
    add_common(sw, cfg, false);
    sw->add_option("--k-range", cfg.k_range, "lo:hi:count")->required();
    sw->add_option("--spacing", cfg.spacing, "log | linear")
        ->check(CLI::IsMember({"log", "linear"}));

    auto* ve = app.add_subcommand("verify",
                                  "reconstruct every branch and certify residuals and integral "
                                  "identities against thresholds");
    add_common(ve, cfg, true);
    ve->add_option("--r-exp", cfg.r_exp, "coupling exponent r (default 2)");
    ve->add_option("--consistency-tol", cfg.consistency_tol, "branch consistency tolerance");
    ve->add_option("--residual-tol", cfg.residual_tol, "residual threshold, scaled by A(0)");
    ve->add_option("--identity-tol", cfg.identity_tol, "Pohozaev/Nehari defect threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (gs->parsed()) return cmd_ground_state(cfg);
        if (cl->parsed()) return cmd_classify(cfg);
        if (so->parsed()) return cmd_solve(cfg);
        if (sw->parsed()) return cmd_sweep(cfg);
        if (ve->parsed()) return cmd_verify(cfg);
    } catch (const gcs::SupercriticalExponent& e) {
        std::cerr << "gcs: " << e.what() << '\n';
        return kExitNonexistence;
    } catch (const gcs::NoSolutionExists& e) {
        std::cerr << "gcs: " << e.what() << '\n';
        return kExitNonexistence;
    } catch (const gcs::Error& e) {
        std::cerr << "gcs: numerical failure (" << e.kind() << "): " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "gcs: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "gcs: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}
