#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spgap/core.hpp"

namespace spgap {

enum class Flavor { G, H };

inline std::string to_string(Flavor f) { return f == Flavor::G ? "G" : "H"; }
Flavor parse_flavor(const std::string& s);

struct RelatorTag {
    std::string family;        // torsion | xy | ... | t_xx | ... | comm | quot
    std::vector<int> indices;  // the index tuple the relator was built from
};

struct Presentation {
    int n = 0;
    Flavor flavor = Flavor::G;
    std::vector<GeneratorId> generators;
    std::vector<Word> relators;
    std::vector<RelatorTag> tags;
};

/// 2n^2 generators in canonical order: X block (lex (i,j)), Y (lex, i<j),
/// Yp (lex, i<j), Z (by i), Zp (by i).
std::vector<GeneratorId> steinberg_generators(int n);

/// Position of a generator in the canonical order.
int generator_index(const GeneratorId& g, int n);

/// Unordered generator pairs that receive plain commutator relators: all
/// pairs minus those on the left of a described relator, minus the excluded
/// families (X[i,j]/X[j,i], Y[i,j]/Yp[i,j], Z[i]/Zp[i]).
std::vector<std::pair<GeneratorId, GeneratorId>> which_pairs_undescribed(int n);

std::vector<Word> steinberg_relators(int n, Flavor flavor);
Presentation steinberg_presentation(int n, Flavor flavor);

struct ValidateReport {
    struct Failure {
        std::size_t index;
        SympMatrix image;
    };
    std::size_t checked = 0;
    /// Relators of the quotient family: their matrix image defines the kernel
    /// of G_n -> H_n rather than being the identity, so they are recorded
    /// separately instead of being required to evaluate to I.
    std::size_t definitional = 0;
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

/// Evaluates every relator through the matrix model.  Must pass before any
/// Laplacian is built.
ValidateReport validate(const Presentation& p);

/// FNV-1a over the canonical text of all relators (order-sensitive).
std::uint64_t relator_hash(const Presentation& p);

/// Drop all relators of the given families (experimentation hook).
Presentation drop_families(const Presentation& p, const std::vector<std::string>& families);

std::string dump_text(const Presentation& p);
std::string dump_json(const Presentation& p);

}  // namespace spgap
