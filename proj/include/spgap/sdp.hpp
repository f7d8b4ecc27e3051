#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spgap/core.hpp"
#include "spgap/laplacian.hpp"
#include "spgap/presentation.hpp"
#include "spgap/symmetry.hpp"

namespace spgap {

// ---------------------------------------------------------------------------
// Support basis
// ---------------------------------------------------------------------------

/// Finite subset E of the group, kept sorted (entrywise matrix order) so
/// index_of can binary-search.  Contains the identity and is inverse-closed;
/// the Gram matrix of an SOS witness is indexed by (matrix row of M) x E.
struct SupportBasis {
    int n = 0;
    std::vector<SympMatrix> elements;
    int radius = 0;
    int ball_size = 0;  // how many elements came from the word ball

    int size() const { return static_cast<int>(elements.size()); }
    int identity_index() const;
    std::optional<int> index_of(const SympMatrix& g) const;
};

/// Ball of `radius` over the presentation's generators, augmented (with
/// inverse closure) until support(M) is covered by E^-1 E.  Throws if any
/// support element is not symplectic-reachable (cannot happen for matrices
/// built from words).
SupportBasis build_support(const Presentation& p, const QMatrix& m, int radius);

// ---------------------------------------------------------------------------
// Linearized problem
// ---------------------------------------------------------------------------

/// Feasibility data for "M - lam*I = x_E* P x_E, P PSD".  Variables form an
/// N x N symmetric matrix, N = d*|E|, index p = i*|E| + a.  Entries are
/// partitioned into classes: (p,q) ~ (i,j,g) with g = E[a]^-1 E[b], merged
/// with the transposed class (j,i,g^-1).  Each class carries the affine
/// constraint  sum of entries = rhs0 - lam*rhs_lam  (the merged pair sums
/// both coefficient constraints, hence the multiplicity-2 right-hand sides).
struct SdpProblem {
    int d = 0;  // rows of M
    SupportBasis E;
    QMatrix M;

    std::vector<SympMatrix> products;      // distinct E[a]^-1 E[b], byte-key order
    std::vector<std::int32_t> prod_id;     // |E|^2 row-major (a,b) -> product index
    std::vector<std::int32_t> prod_inv;    // product index -> index of its inverse
    int identity_pid = -1;

    struct ClassInfo {
        std::int32_t i, j, g;  // representative triple (lex-min vs transpose)
        std::int32_t count;    // number of ordered entries
        double rhs0;
        double rhs_lam;
    };
    std::vector<ClassInfo> classes;        // sorted by (i, j, byte key of g)
    std::vector<std::int32_t> class_of;    // N^2 row-major entry -> class index

    long N() const { return static_cast<long>(d) * E.size(); }
};

SdpProblem linearize(const QMatrix& m, const SupportBasis& e);

// ---------------------------------------------------------------------------
// Wedderburn data for the Sym_n action on S x E
// ---------------------------------------------------------------------------

/// Real irreducible of Sym_n in Young's orthogonal form.
struct Irrep {
    std::vector<int> partition;
    int dim = 0;
    std::vector<std::vector<double>> rho;  // per sigma (dim x dim, row-major)
    std::vector<double> character;         // per sigma; cross-checked against MN
};

std::vector<std::vector<int>> partitions(int n);
/// Murnaghan-Nakayama character value of the irrep `part` at cycle type `mu`.
long mn_character(const std::vector<int>& part, const std::vector<int>& mu);
std::vector<Irrep> sym_irreps(int n);

struct SparseRows {  // CSR with few nonzeros per row
    int rows = 0, cols = 0;
    std::vector<int> rowptr{0};
    std::vector<int> colidx;
    std::vector<double> val;
    void push_row(const std::vector<std::pair<int, double>>& entries);
};

struct WedderburnData {
    int n = 0;       // Sym_n
    long N = 0;      // |S x E|
    std::vector<PermutationAction> sigmas;
    std::vector<std::vector<std::int32_t>> act_V;  // per sigma: V permutation
    std::vector<Irrep> irreps;
    std::vector<int> mult;                  // m_pi from the constructed bases
    std::vector<int> mult_char;             // m_pi from character inner products
    /// U[pi][a]: the a-th aligned copy (m_pi x N, orthonormal rows); U[pi][0]
    /// is the U_pi of the block map Theta(M) = (+) U_pi M U_pi^T.
    std::vector<std::vector<SparseRows>> U;
    long commutant_dim = 0;                 // #orbits on (S x E)^2
};

/// Builds the symmetry-adapted data; verifies sum m_pi^2 == commutant_dim and
/// orthonormality of every U block (tolerance 1e-10) before returning.
WedderburnData wedderburn(const Presentation& p, const SdpProblem& prob);

// ---------------------------------------------------------------------------
// Orbit constraints and block reduction
// ---------------------------------------------------------------------------

struct OrbitConstraint {
    std::int32_t rep_class;                 // lex-min member
    std::vector<std::int32_t> class_ids;    // all classes in the orbit
    double rhs0, rhs_lam;                   // common value (checked)
};

std::vector<OrbitConstraint> orbit_constraints(const SdpProblem& prob,
                                               const WedderburnData& wd);

/// Materialized block problem: one PSD block per irrep (size m_pi), one
/// constraint per class orbit:  sum_pi dim_pi * <U_pi Abar U_pi^T, P_pi> = rhs,
/// with Abar the orbit average of the class indicator matrices.
struct ReducedProblem {
    std::vector<int> block_sizes;  // m_pi
    std::vector<int> block_dims;   // dim_pi
    struct Entry {
        std::int32_t block;
        std::int32_t r, c;
        double v;
    };
    std::vector<std::vector<Entry>> constraints;  // upper-triangle entries
    std::vector<double> rhs0, rhs_lam;
    long dim() const;  // sum of m_pi^2
};

ReducedProblem reduce(const SdpProblem& prob, const WedderburnData& wd);

/// Full N x N invariant matrix from blocks:  sum_pi dim_pi-aligned copies of
/// U_pi^T P_pi U_pi (dense, row-major).
std::vector<double> reconstruct(const std::vector<std::vector<double>>& blocks,
                                const WedderburnData& wd);

/// Theta: blocks U_pi M U_pi^T of a dense invariant matrix.
std::vector<std::vector<double>> theta_blocks(const std::vector<double>& m,
                                              const WedderburnData& wd);

// ---------------------------------------------------------------------------
// Solver
// ---------------------------------------------------------------------------

struct SolveOptions {
    double rho = 1.8;        // over-relaxation
    double tol = 1e-8;       // relative Frobenius gap between the two projections
    long max_iter = 1000000;
    long check_every = 25;
    double stall_ratio = 0.9995;  // per-window best-residual improvement
    int stall_windows = 60;       // consecutive flat windows -> stalled
    double stall_floor = 1e-7;    // never stall below this residual
    int verbose = 0;              // print every `verbose` checks (0 = quiet)
};

struct FixedResult {
    bool feasible = false;
    bool stalled = false;
    double residual = 0;
    long iters = 0;
};

/// Douglas-Rachford splitting between the PSD cone and the affine class
/// constraints, on the dense N x N iterate.  With WedderburnData the PSD step
/// projects onto (PSD n invariant) block-wise, which is what makes the rank-3
/// problems tractable; without it the full spectral projection is used.
class SdpSolver {
  public:
    SdpSolver(const SdpProblem& prob, const WedderburnData* wd = nullptr);

    FixedResult solve_fixed(double lambda, const SolveOptions& opts);
    /// PSD-side iterate of the last solve_fixed (row-major N x N).
    const std::vector<double>& psd_point() const { return x_; }
    /// Warm-start state; persists across solve_fixed calls.
    std::vector<double>& state() { return z_; }
    void reset();

    struct MaxResult {
        bool any_feasible = false;
        double lambda_best = 0;
        std::vector<double> best_point;  // PSD iterate at lambda_best
        long total_iters = 0;
    };
    /// Bisection for sup{lambda feasible} on [lo, hi]; assumes monotone
    /// feasibility (true for M - lam*I).  Each probe warm starts from the
    /// state of the last feasible probe, never from an infeasible one.
    MaxResult maximize(double lo, double hi, double width_tol, const SolveOptions& opts);

  private:
    const SdpProblem& prob_;
    const WedderburnData* wd_;
    long n_;
    std::vector<double> z_, x_, y_, work_;
    std::vector<double> class_sum_, class_delta_;

    void project_affine(std::vector<double>& m, double lambda);
    void project_psd(const std::vector<double>& src, std::vector<double>& dst);
};

/// DR on the materialized block problem (criterion: reduced optimum must
/// match the full optimum).  Affine projection via a pivoted QR of the
/// constraint matrix in the dim_pi-weighted inner product.
class ReducedSolver {
  public:
    explicit ReducedSolver(const ReducedProblem& red);
    FixedResult solve_fixed(double lambda, const SolveOptions& opts);
    double maximize(double lo, double hi, double width_tol, const SolveOptions& opts);
    const std::vector<std::vector<double>>& blocks() const { return blocks_; }
    /// Blocks captured at the best feasible lambda of the last maximize.
    const std::vector<std::vector<double>>& best_blocks() const { return best_blocks_; }
    long total_iters() const { return total_iters_; }

  private:
    const ReducedProblem& red_;
    long dim_;
    int rank_ = 0;
    std::vector<long> block_offset_;
    std::vector<double> q_;          // dim x rank orthonormal (column-major)
    std::vector<double> part0_, part1_;  // min-norm solutions for rhs0 / rhs_lam
    std::vector<double> z_, x_, y_;
    std::vector<std::vector<double>> blocks_;
    std::vector<std::vector<double>> best_blocks_;
    long total_iters_ = 0;

    std::vector<double> scale_;  // sqrt(dim_pi) per block (metric absorption)
    void project_affine(std::vector<double>& v, double lambda);
    void project_psd(const std::vector<double>& src, std::vector<double>& dst);
};

// ---------------------------------------------------------------------------
// SDPA interface
// ---------------------------------------------------------------------------

/// Sparse SDPA with blocks {N, -2}: block 1 carries P, block 2 = diag(u, v)
/// encodes lambda = u - v; maximizing <F0, Y> with F0 = diag-block(1, -1)
/// matches maximizing lambda.  Byte-stable: classes in canonical order,
/// entries row-major upper triangle, %.17g.
void export_sdpa(const SdpProblem& prob, const std::string& path);

struct ImportedSolution {
    double lambda_ap = 0;
    std::vector<double> P;  // N x N dense
};
/// Reads quintuples "<mat> <block> <i> <j> <value>" (or 4-token lines without
/// the leading matrix number) describing the primal block matrix Y.
ImportedSolution import_solution(const std::string& path, const SdpProblem& prob);

}  // namespace spgap
