#pragma once

#include <string>
#include <vector>

#include "spgap/certify.hpp"
#include "spgap/laplacian.hpp"
#include "spgap/presentation.hpp"
#include "spgap/sdp.hpp"

namespace spgap {

struct RunConfig {
    int n = 2;
    Flavor flavor = Flavor::G;
    std::string target = "delta1";  // delta1 | adj+plus | sq+plus
    double k = 1.0;
    int radius = 1;
    bool sym = true;  // Wedderburn reduction on/off
    double lambda_lo = 0.0;
    double lambda_hi = 1.0;
    double width_tol = 1e-3;  // bisection resolution
    SolveOptions solver;
    double trim = 1e-8;  // relative eigenvalue cutoff when factoring P
    long seed = 0;       // recorded for reproducibility (solver is deterministic)
    int table_n_max = 10;
    std::string out_dir = ".";
};

std::string run_config_json(const RunConfig& cfg);
RunConfig run_config_from_json(const std::string& text);

// ---------------------------------------------------------------------------
// Stage files.  Every stage reads the previous stage's file, so any stage can
// be swapped for an external tool producing the same format.
// ---------------------------------------------------------------------------

struct ProblemFile {
    int n = 2;
    Flavor flavor = Flavor::G;
    std::uint64_t relator_hash = 0;
    std::string target = "delta1";
    double k = 1.0;
    int radius = 1;
    SupportBasis E;
    QMatrix M;
};

void write_problem(const ProblemFile& pf, const std::string& path);
ProblemFile read_problem(const std::string& path);

struct SolutionFile {
    double lambda_ap = 0;
    int q_rows = 0, q_cols = 0;
    std::vector<double> Q;  // row-major factor, P ~= Q^T Q
    std::string solver;
    long iterations = 0;
};

void write_solution(const SolutionFile& sf, const std::string& path);
SolutionFile read_solution(const std::string& path);

ProblemFile build_problem(const RunConfig& cfg);

struct SolveOutcome {
    SolutionFile sol;
    bool any_feasible = false;
};

/// Bisection solve (reduced when cfg.sym and the support is Sym-stable),
/// followed by factoring the Gram matrix at the best feasible lambda.
SolveOutcome solve_problem(const ProblemFile& pf, const RunConfig& cfg);

/// Doubled generating set size used for Kazhdan bounds: 2n^2 generators and
/// their inverses.
int doubled_gens(int n);

Certificate certify_files(const ProblemFile& pf, const SolutionFile& sf);

// ---------------------------------------------------------------------------
// Induction and the H_n report
// ---------------------------------------------------------------------------

struct InducedStatement {
    int base_n = 0, target_n = 0;
    std::string part;
    double lambda_base = 0;
    double lambda_induced = 0;
    std::string formula;
    double weight_k = 0;  // (n-1)(n-2)/((m-2)(m-1)), reported not minimized
};

InducedStatement induce_from(const Certificate& base, int target_n);
std::string induced_json(const InducedStatement& s);
std::string induced_text(const InducedStatement& s);

struct HnRow {
    int n = 0;
    mpq_class bound;
    double kappa = 0;
};

std::vector<HnRow> report_Hn_table(const mpq_class& lam_adj, const mpq_class& lam_sq,
                                   int n_max);
std::string hn_table_text(const std::vector<HnRow>& rows);
std::string hn_table_json(const std::vector<HnRow>& rows);

// ---------------------------------------------------------------------------
// End-to-end run
// ---------------------------------------------------------------------------

struct RunResult {
    Certificate cert;
    bool solver_feasible = false;
    std::string problem_path, sdpa_path, solution_path, cert_path;
    std::string report_path, report_json_path;
};

/// present -> laplacian -> support -> sdp -> certify, writing config.json,
/// problem.json, problem.sdpa, solution.json, cert.json and the reports under
/// cfg.out_dir.  Errors carry a [stage] tag.
RunResult run_pipeline(const RunConfig& cfg);

}  // namespace spgap
