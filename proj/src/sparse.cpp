#include "hopfcyc/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

SparseVec sv_add(const SparseVec& a, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) out.push_back(a[i++]);
        else if (a[i].first > b[j].first) out.push_back(b[j++]);
        else {
            Scalar s = a[i].second + b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, s);
            ++i; ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

SparseVec sv_scale(const SparseVec& a, const Scalar& c) {
    if (c.is_zero()) return {};
    SparseVec out;
    out.reserve(a.size());
    for (const auto& [i, v] : a) {
        Scalar s = v * c;
        if (!s.is_zero()) out.emplace_back(i, s);
    }
    return out;
}

void sv_normalize_leading(SparseVec& v) {
    if (v.empty()) return;
    Scalar inv = v.front().second.inverse();
    for (auto& [i, s] : v) s = s * inv;
}

long SparseMatrix::nnz() const {
    long n = 0;
    for (const auto& r : data_) n += static_cast<long>(r.size());
    return n;
}

void SparseMatrix::add_entry(int r, int c, const Scalar& v) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    if (v.is_zero()) return;
    SparseVec& row = data_[static_cast<size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        Scalar s = it->second + v;
        if (s.is_zero()) row.erase(it);
        else it->second = s;
    } else {
        row.insert(it, {c, v});
    }
}

Scalar SparseMatrix::at(int r, int c) const {
    const SparseVec& row = data_[static_cast<size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Scalar::zero(field_);
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_, field_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[static_cast<size_t>(r)])
            t.data_[static_cast<size_t>(c)].emplace_back(r, v);
    return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
    assert(cols_ == rhs.rows_);
    SparseMatrix out(rows_, rhs.cols_, field_);
    for (int r = 0; r < rows_; ++r) {
        std::map<int, Scalar> acc;
        for (const auto& [k, v] : data_[static_cast<size_t>(r)])
            for (const auto& [c, w] : rhs.data_[static_cast<size_t>(k)]) {
                auto it = acc.find(c);
                if (it == acc.end()) acc.emplace(c, v * w);
                else it->second = it->second + v * w;
            }
        for (const auto& [c, v] : acc)
            if (!v.is_zero()) out.data_[static_cast<size_t>(r)].emplace_back(c, v);
    }
    return out;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (int r = 0; r < rows_; ++r) {
        const SparseVec& row = data_[static_cast<size_t>(r)];
        if (row.empty()) continue;
        Scalar acc = Scalar::zero(field_);
        size_t i = 0, j = 0;
        bool hit = false;
        while (i < row.size() && j < v.size()) {
            if (row[i].first < v[j].first) ++i;
            else if (row[i].first > v[j].first) ++j;
            else {
                acc = hit ? acc + row[i].second * v[j].second : row[i].second * v[j].second;
                hit = true;
                ++i; ++j;
            }
        }
        if (hit && !acc.is_zero()) out.emplace_back(r, acc);
    }
    return out;
}

bool SparseMatrix::is_zero() const {
    for (const auto& r : data_)
        if (!r.empty()) return false;
    return true;
}

std::optional<int> SparseMatrix::first_nonzero_composite_column(const SparseMatrix& rhs) const {
    SparseMatrix prod = multiply(rhs);
    int bad = -1;
    for (int r = 0; r < prod.rows(); ++r)
        for (const auto& [c, v] : prod.row(r))
            if (bad < 0 || c < bad) bad = c;
    if (bad < 0) return std::nullopt;
    return bad;
}

SparseMatrix SparseMatrix::identity(int n, FieldId field) {
    SparseMatrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.add_entry(i, i, Scalar::one(field));
    return m;
}

SparseMatrix SparseMatrix::from_blocks(
    int rows, int cols, FieldId field,
    const std::vector<std::tuple<int, int, const SparseMatrix*>>& blocks) {
    SparseMatrix out(rows, cols, field);
    for (const auto& [r0, c0, m] : blocks) {
        for (int r = 0; r < m->rows(); ++r)
            for (const auto& [c, v] : m->row(r)) out.add_entry(r0 + r, c0 + c, v);
    }
    return out;
}

namespace {

/// Row echelon state: rows kept reduced, pivot map col -> row index.
struct Echelon {
    FieldId field;
    std::vector<SparseVec> rows;      // each row has leading coefficient 1
    std::map<int, int> pivot_of_col;  // leading column -> row index

    explicit Echelon(FieldId f) : field(f) {}

    /// Reduce v against current rows; returns the residue (not inserted).
    SparseVec reduce(SparseVec v) const {
        for (;;) {
            if (v.empty()) return v;
            auto it = pivot_of_col.find(v.front().first);
            if (it == pivot_of_col.end()) return v;
            const SparseVec& r = rows[static_cast<size_t>(it->second)];
            v = sv_add(v, sv_scale(r, -v.front().second));
        }
    }

    /// Reduce fully (also below the leading entry) for canonical output.
    SparseVec reduce_full(SparseVec v) const {
        SparseVec out;
        while (!v.empty()) {
            auto it = pivot_of_col.find(v.front().first);
            if (it == pivot_of_col.end()) {
                out.push_back(v.front());
                v.erase(v.begin());
            } else {
                const SparseVec& r = rows[static_cast<size_t>(it->second)];
                v = sv_add(v, sv_scale(r, -v.front().second));
            }
        }
        return out;
    }

    /// Insert if independent; returns true when the vector added rank.
    bool insert(SparseVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        sv_normalize_leading(v);
        pivot_of_col[v.front().first] = static_cast<int>(rows.size());
        rows.push_back(std::move(v));
        return true;
    }
};

}  // namespace

RankNullspace rank_nullspace(const SparseMatrix& m) {
    // Eliminate on the transpose: columns of m become rows, so pivots select
    // lexicographically-first independent columns and the kernel has the
    // canonical free-column form.
    const FieldId f = m.field();
    SparseMatrix t = m.transpose();

    // Forward elimination over column vectors with bookkeeping of the
    // combination used, to read off kernel vectors: process columns in order;
    // carry an augmented part recording the expression of the reduced column
    // in terms of original columns.
    Echelon ech(f);
    RankNullspace out;
    std::vector<SparseVec> combos;  // parallel to ech.rows: combo in original columns
    for (int c = 0; c < m.cols(); ++c) {
        SparseVec v = t.row(c);                       // column c of m
        SparseVec combo{{c, Scalar::one(f)}};         // v == m * combo
        // reduce, mirroring operations on combo
        for (;;) {
            if (v.empty()) break;
            auto it = ech.pivot_of_col.find(v.front().first);
            if (it == ech.pivot_of_col.end()) break;
            Scalar coef = -v.front().second;
            v = sv_add(v, sv_scale(ech.rows[static_cast<size_t>(it->second)], coef));
            combo = sv_add(combo, sv_scale(combos[static_cast<size_t>(it->second)], coef));
        }
        if (v.empty()) {
            // dependent column: combo is a kernel vector; its coefficient at the
            // free column c is still 1, giving the canonical kernel basis form
            out.nullspace.push_back(std::move(combo));
        } else {
            Scalar inv = v.front().second.inverse();
            v = sv_scale(v, inv);
            combo = sv_scale(combo, inv);
            ech.pivot_of_col[v.front().first] = static_cast<int>(ech.rows.size());
            ech.rows.push_back(std::move(v));
            combos.push_back(std::move(combo));
            ++out.rank;
        }
    }
    return out;
}

Quotient quotient_by_span(int ambient_dim, FieldId field, const std::vector<SparseVec>& span) {
    Echelon ech(field);
    for (const auto& v : span) ech.insert(v);
    Quotient q;
    q.ambient = ambient_dim;
    std::vector<bool> pivot(static_cast<size_t>(ambient_dim), false);
    for (const auto& [col, _] : ech.pivot_of_col) pivot[static_cast<size_t>(col)] = true;
    for (int j = 0; j < ambient_dim; ++j)
        if (!pivot[static_cast<size_t>(j)]) q.free_coords.push_back(j);
    int nfree = static_cast<int>(q.free_coords.size());
    std::vector<int> free_index(static_cast<size_t>(ambient_dim), -1);
    for (int i = 0; i < nfree; ++i) free_index[static_cast<size_t>(q.free_coords[static_cast<size_t>(i)])] = i;

    q.proj = SparseMatrix(nfree, ambient_dim, field);
    for (int j = 0; j < ambient_dim; ++j) {
        SparseVec r = ech.reduce_full(SparseVec{{j, Scalar::one(field)}});
        for (const auto& [i, v] : r) q.proj.add_entry(free_index[static_cast<size_t>(i)], j, v);
    }
    q.incl = SparseMatrix(ambient_dim, nfree, field);
    for (int i = 0; i < nfree; ++i)
        q.incl.add_entry(q.free_coords[static_cast<size_t>(i)], i, Scalar::one(field));
    return q;
}

HomologyResult homology_of_pair(const SparseMatrix& incoming, const SparseMatrix& outgoing) {
    if (incoming.rows() != outgoing.cols())
        throw ConfigError("homology_of_pair: dimension mismatch (" +
                          std::to_string(incoming.rows()) + " vs " + std::to_string(outgoing.cols()) + ")");
    if (incoming.field() != outgoing.field())
        throw FieldMismatch(incoming.field().to_string(), outgoing.field().to_string());

    if (auto bad = outgoing.first_nonzero_composite_column(incoming))
        throw NotAComplex(0, *bad);

    RankNullspace in = rank_nullspace(incoming);
    RankNullspace outk = rank_nullspace(outgoing);

    HomologyResult h;
    h.rank_incoming = in.rank;
    h.rank_outgoing = outk.rank;
    h.nullity_outgoing = static_cast<int>(outk.nullspace.size());
    h.dimension = h.nullity_outgoing - h.rank_incoming;

    // span of the image: columns of `incoming`
    Echelon img(incoming.field());
    SparseMatrix it = incoming.transpose();
    for (int c = 0; c < incoming.cols(); ++c) img.insert(it.row(c));

    for (const auto& k : outk.nullspace) {
        SparseVec r = img.reduce_full(k);
        if (r.empty()) continue;
        sv_normalize_leading(r);
        SparseVec rep = r;
        img.insert(std::move(r));
        h.representatives.push_back(std::move(rep));
        if (static_cast<int>(h.representatives.size()) == h.dimension) break;
    }
    return h;
}

}  // namespace hopfcyc
