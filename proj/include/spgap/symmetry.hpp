#pragma once

#include "spgap/core.hpp"
#include "spgap/laplacian.hpp"
#include "spgap/presentation.hpp"

namespace spgap {

/// A permutation of {1..n}, acting on generators by index substitution and on
/// group-ring supports by conjugation with the block permutation matrix.
struct PermutationAction {
    int n;
    std::vector<int> sigma;  // sigma[i-1] = image of i, 1-based values

    static PermutationAction identity(int n);
    PermutationAction compose(const PermutationAction& o) const;  // this after o
    PermutationAction inverse() const;
    int operator()(int i) const { return sigma[i - 1]; }
};

std::vector<PermutationAction> all_permutations(int n);

GeneratorId act(const PermutationAction& s, const GeneratorId& g);
Word act(const PermutationAction& s, const Word& w);
SympMatrix perm_block_matrix(const PermutationAction& s);  // diag(P, P)
SympMatrix act(const PermutationAction& s, const SympMatrix& m);

template <class S>
GroupRingElem<S> act(const PermutationAction& s, const GroupRingElem<S>& x) {
    GroupRingElem<S> out(x.rank());
    for (const auto& [g, c] : x.terms()) out.add_term(act(s, g), c);
    return out;
}

/// (sigma A)_{s,t} = sigma(A_{sigma^-1 s, sigma^-1 t}); rows/cols must be
/// indexed by the canonical generator list.
template <class S>
GRMatrix<S> act(const PermutationAction& s, const GRMatrix<S>& a) {
    int n = a.rank();
    auto gens = steinberg_generators(n);
    GRMatrix<S> out(n, a.rows(), a.cols());
    PermutationAction inv = s.inverse();
    for (int r = 0; r < a.rows(); ++r) {
        int pr = generator_index(act(inv, gens[r]), n);
        for (int c = 0; c < a.cols(); ++c) {
            int pc = generator_index(act(inv, gens[c]), n);
            out.at(r, c) = act(s, a.at(pr, pc));
        }
    }
    return out;
}

/// Embedding of rank-m objects into rank n >= m along indices 1..m
/// (symplectic coordinates {1..m} u {n+1..n+m}).
SympMatrix embed(const SympMatrix& a, int n);

template <class S>
GroupRingElem<S> embed(const GroupRingElem<S>& x, int n) {
    GroupRingElem<S> out(n);
    for (const auto& [g, c] : x.terms()) out.add_term(embed(g, n), c);
    return out;
}

/// Embeds a generator-indexed GRMatrix from rank m into rank n.
template <class S>
GRMatrix<S> embed(const GRMatrix<S>& a, int m, int n) {
    auto gens_m = steinberg_generators(m);
    GRMatrix<S> out(n, 2 * n * n, 2 * n * n);
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) {
            if (a.at(r, c).is_zero()) continue;
            out.at(generator_index(gens_m[r], n), generator_index(gens_m[c], n)) =
                embed(a.at(r, c), n);
        }
    return out;
}

/// Diagonal identity restricted to generators touching `face_size` indices
/// (0 = all generators, giving the full identity matrix I_n).
template <class S>
GRMatrix<S> identity_part(int n, int face_size = 0) {
    auto gens = steinberg_generators(n);
    GRMatrix<S> out(n, 2 * n * n, 2 * n * n);
    for (std::size_t s = 0; s < gens.size(); ++s) {
        int k = static_cast<int>(phi(gens[s]).size());
        if (face_size == 0 || k == face_size)
            out.at(static_cast<int>(s), static_cast<int>(s)) = GroupRingElem<S>::one(n);
    }
    return out;
}

/// Lemma: A^n = (m-k)! / ((n-k)! m!) * sum over Sym_n of tau(embedded A^m),
/// for a Sym_m-invariant part supported on faces of size k.
QMatrix symmetrize(const QMatrix& a_m, int m, int k_A, int n);

/// Coefficients (coeff_Sq, coeff_Mono) with
/// sum over Sym_n of sigma(I_m) = coeff_Sq*I_n^Sq + coeff_Mono*I_n^Mono.
std::pair<mpz_class, mpz_class> symmetrize_identity(int m, int n);

/// Gap induced at rank n by an Adj-type certificate at rank m: (n-2)/(m-2)*lam.
mpq_class induced_gap(const mpq_class& lam_m, int m, int n);

/// Weight k for which the weaker full-Laplacian conclusion holds.
mpq_class induced_weight(int m, int n);

/// (n-2)*lam_adj + lam_sq.
mpq_class combined_Hn_bound(const mpq_class& lam_adj, const mpq_class& lam_sq, int n);

/// Order-unit fallback: max row 1-norm; A + lam0*I is a sum of squares.
mpq_class order_unit_fallback(const QMatrix& a);

}  // namespace spgap
