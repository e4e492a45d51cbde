#pragma once

#include <optional>
#include <vector>

#include "hopfcyc/scalar.hpp"

namespace hopfcyc {

/// Sparse vector: sorted (index, nonzero scalar) pairs.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sv_add(const SparseVec& a, const SparseVec& b);
SparseVec sv_scale(const SparseVec& a, const Scalar& c);
void sv_normalize_leading(SparseVec& v);  // scale so the first entry is 1

/// Exact sparse matrix over one of the coefficient fields. Row-major storage,
/// each row sorted by column; explicit dimensions so an all-zero map is still
/// well formed.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols, FieldId field)
        : rows_(rows), cols_(cols), field_(field), data_(static_cast<size_t>(rows)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldId& field() const { return field_; }
    const SparseVec& row(int i) const { return data_[static_cast<size_t>(i)]; }
    long nnz() const;

    void add_entry(int r, int c, const Scalar& v);  // accumulates; drops zeros
    Scalar at(int r, int c) const;

    SparseMatrix transpose() const;
    SparseMatrix multiply(const SparseMatrix& rhs) const;
    SparseVec apply(const SparseVec& v) const;  // matrix * column vector

    bool is_zero() const;
    /// Columns of rhs whose image is nonzero; empty if this*rhs == 0.
    std::optional<int> first_nonzero_composite_column(const SparseMatrix& rhs) const;

    static SparseMatrix identity(int n, FieldId field);
    /// Stack blocks diagonally/horizontally for total complexes.
    static SparseMatrix from_blocks(int rows, int cols, FieldId field,
                                    const std::vector<std::tuple<int, int, const SparseMatrix*>>& blocks);

private:
    int rows_ = 0, cols_ = 0;
    FieldId field_ = FieldId::rationals();
    std::vector<SparseVec> data_;
};

struct RankNullspace {
    int rank = 0;
    std::vector<SparseVec> nullspace;  // basis of ker, deterministic order
};

/// Reduced row echelon form based rank + kernel basis. Pivot columns are the
/// lexicographically first possible, which makes the kernel basis canonical.
RankNullspace rank_nullspace(const SparseMatrix& m);

struct HomologyResult {
    int dimension = 0;
    std::vector<SparseVec> representatives;  // in the ambient basis of the middle space
    int rank_incoming = 0;
    int rank_outgoing = 0;
    int nullity_outgoing = 0;
};

/// Homology at the middle space of  C_in --incoming--> C --outgoing--> C_out.
/// Checks outgoing*incoming == 0 exactly and throws NotAComplex (with the
/// offending column) otherwise. Representatives are kernel vectors reduced
/// modulo the image, leading coefficient normalized to 1.
HomologyResult homology_of_pair(const SparseMatrix& incoming, const SparseMatrix& outgoing);

/// Quotient of k^ambient by the span of the given vectors: a complement
/// coordinate set with the projection and coordinate-section matrices.
struct Quotient {
    int ambient = 0;
    std::vector<int> free_coords;
    SparseMatrix proj;  // |free| x ambient
    SparseMatrix incl;  // ambient x |free|
};
Quotient quotient_by_span(int ambient_dim, FieldId field, const std::vector<SparseVec>& span);

}  // namespace hopfcyc
