#pragma once

#include "spgap/core.hpp"
#include "spgap/presentation.hpp"

namespace spgap {

/// Fox derivative of a free word with respect to one generator, pushed to the
/// group ring through the matrix model.
template <class S = mpq_class>
GroupRingElem<S> fox_derivative(const Word& w, const GeneratorId& g, int n) {
    GroupRingElem<S> out(n);
    SympMatrix prefix = SympMatrix::identity(n);
    for (const auto& l : w) {
        SympMatrix m = generator_matrix(l.gen, n);
        if (l.sign > 0) {
            if (l.gen == g) out.add_term(prefix, S(1));
            prefix = prefix * m;
        } else {
            prefix = prefix * m.inverse();
            if (l.gen == g) out.add_term(prefix, S(0) - S(1));
        }
    }
    return out;
}

struct JacobianPair {
    QMatrix d0;  // 2n^2 x 1, entries 1 - s
    QMatrix d1;  // m x 2n^2, entries dr_i/ds_j
};

/// Builds (d0, d1) and checks the chain identity: each row of d1*d0 must be
/// 1 - eval(r), which is 0 for every relator holding in the matrix model and
/// vanishes in the quotient ring for the quotient family.
JacobianPair jacobian(const Presentation& p);

struct Laplacian {
    QMatrix minus;  // d0 d0*
    QMatrix plus;   // d1* d1
    QMatrix full;   // minus + plus
};

Laplacian laplacian(const Presentation& p);

struct LaplacianParts {
    int n = 0;
    Flavor flavor = Flavor::G;
    QMatrix mono_m, sq_m, adj_m, op_m;  // minus graded by |phi(s) u phi(t)|
    QMatrix mono_p, sq_p, adj_p, op_p;  // plus graded by |phi(r)|

    QMatrix minus() const { return mono_m + sq_m + adj_m + op_m; }
    QMatrix plus() const { return mono_p + sq_p + adj_p + op_p; }
    const QMatrix& minus_part(int k) const;
    const QMatrix& plus_part(int k) const;
};

LaplacianParts decompose(const Presentation& p);

/// Weighted Laplacian minus + k*plus (k >= 1; k == 1 is the plain Laplacian).
QMatrix weighted_laplacian(const LaplacianParts& parts, const mpq_class& k);

enum class TargetKind { Delta1, AdjPlus, SqPlus };

TargetKind parse_target(const std::string& s);
std::string to_string(TargetKind t);

/// Target matrix selection: Delta1 = minus + k*plus; AdjPlus = Adj- + k*plus;
/// SqPlus = Sq- + k*plus.
QMatrix target_matrix(const LaplacianParts& parts, TargetKind t, const mpq_class& k = 1);

std::string grmatrix_json(const QMatrix& m);
QMatrix grmatrix_from_json(const std::string& text);
std::string grelem_text(const QElem& e);

}  // namespace spgap
