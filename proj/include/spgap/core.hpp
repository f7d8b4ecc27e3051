#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spgap {

// ---------------------------------------------------------------------------
// Generators and words
// ---------------------------------------------------------------------------

enum class GenKind : std::uint8_t { X, Y, Yp, Z, Zp };

/// One of the 2n^2 elementary symplectic generators.  Y/Yp are stored with
/// i < j; constructing one with i > j swaps the indices.  Z/Zp have j == 0.
struct GeneratorId {
    GenKind kind;
    int i;
    int j;

    GeneratorId() : kind(GenKind::X), i(1), j(2) {}
    GeneratorId(GenKind k, int i_, int j_ = 0);

    auto operator<=>(const GeneratorId&) const = default;
};

std::string to_text(const GeneratorId& g);
GeneratorId parse_generator(const std::string& s);

/// Index set touched by a generator ({i} or {i,j}).
std::vector<int> phi(const GeneratorId& g);

struct Letter {
    GeneratorId gen;
    int sign;  // +1 or -1
    auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word over the generators.  The empty word is the identity.
using Word = std::vector<Letter>;

Word reduce(const std::vector<Letter>& letters);
Word word_mul(const Word& u, const Word& v);
Word word_inv(const Word& u);
Word word_pow(const Word& u, int k);
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1
Word gen_word(const GeneratorId& g, int sign = 1);

std::string to_text(const Word& w);       // X[1,2]*Z[1]^-1 ; "" for identity
Word parse_word(const std::string& s, int n);

/// Union of generator subscripts in the reduced word.
std::vector<int> phi(const Word& w);

// ---------------------------------------------------------------------------
// Symplectic matrices
// ---------------------------------------------------------------------------

/// Dense 2n x 2n integer matrix; equality/order/hash by entries.
class SympMatrix {
  public:
    SympMatrix() : n_(0) {}
    explicit SympMatrix(int n) : n_(n), a_(4 * n * n) {}

    static SympMatrix identity(int n);
    static SympMatrix J(int n);  // [[0, I], [-I, 0]]

    int rank() const { return n_; }
    int dim() const { return 2 * n_; }

    mpz_class& at(int r, int c) { return a_[r * 2 * n_ + c]; }
    const mpz_class& at(int r, int c) const { return a_[r * 2 * n_ + c]; }

    SympMatrix operator*(const SympMatrix& o) const;
    SympMatrix transpose() const;
    SympMatrix operator-() const;
    /// Exact inverse valid for symplectic matrices: A^-1 = -J A^T J.
    SympMatrix inverse() const;

    bool is_identity() const;
    bool is_symplectic() const;

    bool operator==(const SympMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator<(const SympMatrix& o) const;

    std::size_t hash() const;
    /// Deterministic byte encoding (sign/length-prefixed entries); also the
    /// canonical tie-breaking key for orbit representatives.
    std::string byte_key() const;

  private:
    int n_;
    std::vector<mpz_class> a_;
};

struct SympMatrixHash {
    std::size_t operator()(const SympMatrix& m) const { return m.hash(); }
};

SympMatrix generator_matrix(const GeneratorId& g, int n);
SympMatrix evaluate(const Word& w, int n);

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

/// Degree-1 polynomial c0 + c1*lam with exact rational coefficients, used for
/// identity checks carrying a symbolic gap parameter.
struct LinPoly {
    mpq_class c0, c1;

    LinPoly() = default;
    LinPoly(const mpq_class& a) : c0(a) {}     // NOLINT: implicit by design
    LinPoly(long a) : c0(a) {}                 // NOLINT
    LinPoly(const mpq_class& a, const mpq_class& b) : c0(a), c1(b) {}
    static LinPoly lambda() { return {mpq_class(0), mpq_class(1)}; }

    LinPoly operator+(const LinPoly& o) const { return {c0 + o.c0, c1 + o.c1}; }
    LinPoly operator-(const LinPoly& o) const { return {c0 - o.c0, c1 - o.c1}; }
    LinPoly operator-() const { return {-c0, -c1}; }
    LinPoly operator*(const LinPoly& o) const;
    LinPoly& operator+=(const LinPoly& o) { c0 += o.c0; c1 += o.c1; return *this; }
    bool operator==(const LinPoly& o) const { return c0 == o.c0 && c1 == o.c1; }
};

template <class S> bool scalar_is_zero(const S& s) { return s == S(0); }
inline bool scalar_is_zero(const mpq_class& s) { return sgn(s) == 0; }
inline bool scalar_is_zero(const LinPoly& s) {
    return sgn(s.c0) == 0 && sgn(s.c1) == 0;
}

// ---------------------------------------------------------------------------
// Group ring
// ---------------------------------------------------------------------------

/// Sparse element of the group ring: map from matrix image to coefficient.
template <class S>
class GroupRingElem {
  public:
    GroupRingElem() : n_(0) {}
    explicit GroupRingElem(int n) : n_(n) {}
    GroupRingElem(int n, const SympMatrix& g, const S& c) : n_(n) {
        if (!scalar_is_zero(c)) terms_[g] = c;
    }

    static GroupRingElem one(int n) {
        return GroupRingElem(n, SympMatrix::identity(n), S(1));
    }

    int rank() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    const std::map<SympMatrix, S>& terms() const { return terms_; }

    void add_term(const SympMatrix& g, const S& c) {
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            if (!scalar_is_zero(c)) terms_.emplace(g, c);
        } else {
            it->second += c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    S coeff(const SympMatrix& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? S(0) : it->second;
    }

    GroupRingElem operator+(const GroupRingElem& o) const {
        GroupRingElem r = *this;
        for (const auto& [g, c] : o.terms_) r.add_term(g, c);
        return r;
    }
    GroupRingElem operator-(const GroupRingElem& o) const {
        GroupRingElem r = *this;
        for (const auto& [g, c] : o.terms_) r.add_term(g, S(0) - c);
        return r;
    }
    GroupRingElem operator*(const GroupRingElem& o) const {
        GroupRingElem r(n_ ? n_ : o.n_);
        for (const auto& [g, a] : terms_)
            for (const auto& [h, b] : o.terms_) r.add_term(g * h, a * b);
        return r;
    }
    GroupRingElem operator*(const S& c) const {
        GroupRingElem r(n_);
        if (scalar_is_zero(c)) return r;
        for (const auto& [g, a] : terms_) r.add_term(g, a * c);
        return r;
    }
    GroupRingElem star() const {
        GroupRingElem r(n_);
        for (const auto& [g, c] : terms_) r.add_term(g.inverse(), c);
        return r;
    }
    bool operator==(const GroupRingElem& o) const { return terms_ == o.terms_; }

  private:
    int n_;
    std::map<SympMatrix, S> terms_;
};

template <class S>
S norm1(const GroupRingElem<S>& x) {
    S s(0);
    for (const auto& [g, c] : x.terms()) s += (c < S(0)) ? S(0) - c : c;
    return s;
}

// ---------------------------------------------------------------------------
// Matrices over the group ring
// ---------------------------------------------------------------------------

template <class S>
class GRMatrix {
  public:
    GRMatrix() : n_(0), rows_(0), cols_(0) {}
    GRMatrix(int n, int rows, int cols)
        : n_(n), rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * cols, GroupRingElem<S>(n)) {}

    static GRMatrix identity(int n, int dim) {
        GRMatrix m(n, dim, dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = GroupRingElem<S>::one(n);
        return m;
    }

    int rank() const { return n_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GroupRingElem<S>& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const GroupRingElem<S>& at(int r, int c) const {
        return e_[static_cast<std::size_t>(r) * cols_ + c];
    }

    GRMatrix operator+(const GRMatrix& o) const;
    GRMatrix operator-(const GRMatrix& o) const;
    GRMatrix operator*(const GRMatrix& o) const;
    GRMatrix operator*(const S& c) const;
    /// Star-transpose: (M*)_{r,c} = star(M_{c,r}).
    GRMatrix star() const;

    bool is_zero() const;
    bool is_self_adjoint() const { return *this == star(); }
    bool operator==(const GRMatrix& o) const;

  private:
    int n_, rows_, cols_;
    std::vector<GroupRingElem<S>> e_;
};

template <class S>
S row_norm1(const GRMatrix<S>& m, int row) {
    S s(0);
    for (int c = 0; c < m.cols(); ++c) s += norm1(m.at(row, c));
    return s;
}

template <class S>
GRMatrix<S> GRMatrix<S>::operator+(const GRMatrix& o) const {
    GRMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] + o.e_[k];
    return r;
}
template <class S>
GRMatrix<S> GRMatrix<S>::operator-(const GRMatrix& o) const {
    GRMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] - o.e_[k];
    return r;
}
template <class S>
GRMatrix<S> GRMatrix<S>::operator*(const GRMatrix& o) const {
    GRMatrix r(n_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            GroupRingElem<S> acc(n_);
            for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}
template <class S>
GRMatrix<S> GRMatrix<S>::operator*(const S& c) const {
    GRMatrix r = *this;
    for (auto& e : r.e_) e = e * c;
    return r;
}
template <class S>
GRMatrix<S> GRMatrix<S>::star() const {
    GRMatrix r(n_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).star();
    return r;
}
template <class S>
bool GRMatrix<S>::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}
template <class S>
bool GRMatrix<S>::operator==(const GRMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

using QElem = GroupRingElem<mpq_class>;
using QMatrix = GRMatrix<mpq_class>;

/// FNV-1a 64-bit, used for relator-set hashes and byte-key hashing.
std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 14695981039346656037ull);

mpz_class factorial_mpz(int k);

}  // namespace spgap
