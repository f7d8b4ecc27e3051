#pragma once

#include <string>
#include <vector>

#include "spgap/core.hpp"
#include "spgap/laplacian.hpp"
#include "spgap/presentation.hpp"
#include "spgap/sdp.hpp"

namespace spgap {

// ---------------------------------------------------------------------------
// Interval arithmetic
// ---------------------------------------------------------------------------

/// Closed interval with outward rounding via nextafter on every operation —
/// no global rounding-mode toggles, so concurrent certifications cannot
/// interfere.  Widths are a step wider than a directed-rounding
/// implementation, which only makes the certified bounds more conservative.
struct IntervalScalar {
    double lo = 0, hi = 0;

    IntervalScalar() = default;
    explicit IntervalScalar(double v) : lo(v), hi(v) {}
    IntervalScalar(double l, double h) : lo(l), hi(h) {}
    static IntervalScalar enclose(const mpq_class& q);

    IntervalScalar operator+(const IntervalScalar& o) const;
    IntervalScalar operator-(const IntervalScalar& o) const;
    IntervalScalar operator-() const { return {-hi, -lo}; }
    IntervalScalar operator*(const IntervalScalar& o) const;
    IntervalScalar& operator+=(const IntervalScalar& o) { return *this = *this + o; }

    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains(const mpq_class& q) const;
    double mag() const;  // sup |x| over the interval
    bool valid() const;  // finite endpoints, lo <= hi
};

double down(double v);  // nextafter toward -inf
double up(double v);    // nextafter toward +inf

// ---------------------------------------------------------------------------
// Order-unit machinery
// ---------------------------------------------------------------------------

/// Exact constructive version of the order-unit theorem: weighted squares
/// summing to M + sum_i ||M_i||_1 E_ii as an exact rational identity.
struct OrderUnitSOS {
    struct Term {
        mpq_class weight;  // > 0
        QMatrix row;       // 1 x d factor; contributes weight * row* row
    };
    std::vector<Term> terms;
    QMatrix total;  // the machine-checked right-hand side M + diag(row norms)
};

OrderUnitSOS explicit_order_unit_sos(const QMatrix& m);

/// max_i ||M_i||_1 for a rational matrix (the order-unit shift).
mpq_class order_unit_shift(const QMatrix& m);

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

/// Interval residual bound: computes r = M - lambda_ap*I - x_E*(Q^T Q)x_E
/// with interval coefficients (enclosure of the dgemm product plus exact
/// accumulation of the support sums), symmetrizes (r + r*)/2, and returns
/// the upper endpoint of the maximal interval row 1-norm.
double order_unit_alpha(const QMatrix& m, double lambda_ap,
                        const std::vector<double>& q, int q_rows,
                        const SupportBasis& e);

/// Eigendecomposition factor of a numeric PSD matrix: eigenvalues clipped at
/// zero, rows below `rel_trim * max eigenvalue` dropped, Q = Lambda^1/2 V^T.
/// The clipping/trimming error is absorbed by the certified residual.
std::vector<double> gram_to_factor(const std::vector<double>& p, int n,
                                   double rel_trim, int* out_rows);

/// kappa >= sqrt(2 lambda / |S|), rounded down.
double kazhdan_bound(double lambda, int s_size);

struct Certificate {
    int version = 1;
    int n = 0;
    Flavor flavor = Flavor::G;
    std::uint64_t relator_hash = 0;
    std::string target_part;  // "delta1" | "adj+plus" | "sq+plus" | "toy"
    double k = 1.0;
    std::vector<SympMatrix> basis;
    double lambda_ap = 0;
    int q_rows = 0, q_cols = 0;
    std::vector<double> Q;
    double alpha = 0;
    double lambda_cert = 0;
    int s_size = 0;
    double kappa = 0;
    std::string status;  // "certified" | "inconclusive"
    std::string solver;
    long iterations = 0;
    std::string created;

    bool certified() const { return status == "certified"; }
};

struct CertifyContext {
    int n = 0;
    Flavor flavor = Flavor::G;
    std::uint64_t relator_hash = 0;
    std::string target_part;
    double k = 1.0;
    int s_size = 0;  // symmetrized generating set size (2 * 2n^2)
    std::string solver;
    long iterations = 0;
};

/// Assembles a certificate: alpha from the interval replay, lambda_cert =
/// down(lambda_ap - alpha), status by sign, Kazhdan bound when positive.
Certificate certify(const QMatrix& m, double lambda_ap, const std::vector<double>& q,
                    int q_rows, const SupportBasis& e, const CertifyContext& ctx);

std::string certificate_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);
void write_certificate(const Certificate& c, const std::string& path);
Certificate read_certificate(const std::string& path);

struct VerifyResult {
    bool ok = false;
    double alpha_replay = 0;
    double lambda_cert_replay = 0;
    std::string message;
};

/// Replays a certificate against a freshly rebuilt target matrix: passes iff
/// lambda_ap - alpha' >= lambda_cert and the stored status/kappa are no
/// stronger than the replayed ones.
VerifyResult verify_certificate(const Certificate& c, const QMatrix& m);

/// Convenience: rebuild M from the certificate's presentation data and verify.
VerifyResult verify_certificate(const Certificate& c);

}  // namespace spgap
