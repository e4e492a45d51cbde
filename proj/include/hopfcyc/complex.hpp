#pragma once

#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/sparse.hpp"

namespace hopfcyc {

struct LevelBasis {
    std::vector<TensorWord> words;
    std::map<TensorWord, int> index;

    static LevelBasis from_words(std::vector<TensorWord> w);
    int dim() const { return static_cast<int>(words.size()); }
    SparseVec vec(const TensorElement& x) const;  // throws if a word is missing
};

/// Operator matrices of a cyclic module on explicit level bases.
struct MaterializedCyclic {
    FieldId field = FieldId::rationals();
    std::vector<LevelBasis> bases;                         // level 0..max_level
    std::vector<std::vector<SparseMatrix>> faces;          // [n][i]: n -> n-1
    std::vector<std::vector<SparseMatrix>> degeneracies;   // [n][i]: n -> n+1
    std::vector<SparseMatrix> cyclic;                      // [n]
    bool has_cyclic = false;

    int dim(int n) const { return bases[static_cast<size_t>(n)].dim(); }
};

/// Materialize levels 0..max_level. For graded modules pass exact_weight >= 0
/// to restrict to one weight block; bound is the degree bound otherwise.
MaterializedCyclic materialize(const CyclicModule& m, int max_level, long bound,
                               long exact_weight = -1);

/// The dual cyclic module of a cocyclic module: transpose every operator on
/// the (finite) level bases.
MaterializedCyclic transpose_cocyclic(const CocyclicModule& m, int max_level, long bound);

/// Degeneracy-reduced complex with induced b and Connes B matrices.
struct NormalizedComplex {
    FieldId field = FieldId::rationals();
    std::vector<int> dims;          // normalized dimension per level
    std::vector<SparseMatrix> b;    // [n]: n -> n-1
    std::vector<SparseMatrix> B;    // [n]: n -> n+1 (only when cyclic)
    bool has_B = false;
    // labels for representatives: column j of level n is word_label[n][j]
    std::vector<std::vector<std::string>> labels;
};

NormalizedComplex normalize_complex(const MaterializedCyclic& mc, const Algebra* alg_for_labels);

/// H_n of the normalized b-complex for n = 0..n_max (needs levels to n_max+1).
std::vector<int> hochschild_dims(const NormalizedComplex& nc, int n_max);

/// HC_n from the (b, B) mixed total complex on the normalized levels.
std::vector<int> cyclic_dims_bB(const NormalizedComplex& nc, int n_max);

/// HC_n from the unnormalized first-quadrant cyclic bicomplex with columns
/// alternating b, -b' and rows 1-lambda, N. Verifies the anticommutation
/// identities on the materialized cells.
std::vector<int> cyclic_dims_cc_bicomplex(const MaterializedCyclic& mc, int n_max);

/// d^2 = 0 witness check for a chain complex given as consecutive matrices
/// d[n]: C_n -> C_{n-1}; throws NotAComplex.
void check_complex(const std::vector<SparseMatrix>& d);

/// Euler characteristic identity for a bounded complex: sum (-1)^n dim C_n
/// equals sum (-1)^n dim H_n.
bool euler_check(const std::vector<int>& dims, const std::vector<int>& homology);

}  // namespace hopfcyc
