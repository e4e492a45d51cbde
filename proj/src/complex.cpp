#include "hopfcyc/complex.hpp"

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

LevelBasis LevelBasis::from_words(std::vector<TensorWord> w) {
    LevelBasis b;
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    b.words = std::move(w);
    for (int i = 0; i < static_cast<int>(b.words.size()); ++i)
        b.index.emplace(b.words[static_cast<size_t>(i)], i);
    return b;
}

SparseVec LevelBasis::vec(const TensorElement& x) const {
    SparseVec out;
    for (const auto& [w, c] : x.terms()) {
        auto it = index.find(w);
        if (it == index.end())
            throw CapExceeded("operator output left the materialized basis (tensor of " +
                              std::to_string(w.size()) + " factors)");
        out.emplace_back(it->second, c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

namespace {

SparseMatrix materialize_op(const LevelBasis& from, const LevelBasis& to, const FieldId& f,
                            const std::function<TensorElement(const TensorWord&)>& op) {
    SparseMatrix m(to.dim(), from.dim(), f);
    for (int j = 0; j < from.dim(); ++j) {
        TensorElement img = op(from.words[static_cast<size_t>(j)]);
        for (const auto& [i, v] : to.vec(img)) m.add_entry(i, j, v);
    }
    return m;
}

}  // namespace

MaterializedCyclic materialize(const CyclicModule& m, int max_level, long bound, long exact_weight) {
    MaterializedCyclic mc;
    mc.field = m.field;
    mc.has_cyclic = m.has_cyclic && static_cast<bool>(m.cyclic);
    for (int n = 0; n <= max_level; ++n) {
        auto words = exact_weight >= 0 ? m.level_words_weight(n, exact_weight)
                                       : m.level_words(n, bound);
        mc.bases.push_back(LevelBasis::from_words(std::move(words)));
    }
    mc.faces.resize(static_cast<size_t>(max_level) + 1);
    mc.degeneracies.resize(static_cast<size_t>(max_level) + 1);
    mc.cyclic.resize(static_cast<size_t>(max_level) + 1);
    for (int n = 0; n <= max_level; ++n) {
        const LevelBasis& here = mc.bases[static_cast<size_t>(n)];
        if (n >= 1) {
            const LevelBasis& below = mc.bases[static_cast<size_t>(n - 1)];
            for (int i = 0; i <= n; ++i)
                mc.faces[static_cast<size_t>(n)].push_back(materialize_op(
                    here, below, m.field, [&](const TensorWord& w) {
                        return m.face(n, i, tensor_of_words(m.field, w));
                    }));
        }
        if (n < max_level) {
            const LevelBasis& above = mc.bases[static_cast<size_t>(n + 1)];
            for (int i = 0; i <= n; ++i)
                mc.degeneracies[static_cast<size_t>(n)].push_back(materialize_op(
                    here, above, m.field, [&](const TensorWord& w) {
                        return m.degeneracy(n, i, tensor_of_words(m.field, w));
                    }));
        }
        if (mc.has_cyclic)
            mc.cyclic[static_cast<size_t>(n)] = materialize_op(
                here, here, m.field,
                [&](const TensorWord& w) { return m.cyclic(n, tensor_of_words(m.field, w)); });
    }
    return mc;
}

MaterializedCyclic transpose_cocyclic(const CocyclicModule& m, int max_level, long bound) {
    MaterializedCyclic mc;
    mc.field = m.field;
    mc.has_cyclic = static_cast<bool>(m.cocyclic);
    for (int n = 0; n <= max_level; ++n)
        mc.bases.push_back(LevelBasis::from_words(m.level_words(n, bound)));
    mc.faces.resize(static_cast<size_t>(max_level) + 1);
    mc.degeneracies.resize(static_cast<size_t>(max_level) + 1);
    mc.cyclic.resize(static_cast<size_t>(max_level) + 1);
    for (int n = 0; n <= max_level; ++n) {
        const LevelBasis& here = mc.bases[static_cast<size_t>(n)];
        if (n >= 1) {
            const LevelBasis& below = mc.bases[static_cast<size_t>(n - 1)];
            // faces of the dual = transposed cofaces
            for (int i = 0; i <= n; ++i)
                mc.faces[static_cast<size_t>(n)].push_back(
                    materialize_op(below, here, m.field,
                                   [&](const TensorWord& w) {
                                       return m.coface(n, i, tensor_of_words(m.field, w));
                                   })
                        .transpose());
        }
        if (n < max_level) {
            const LevelBasis& above = mc.bases[static_cast<size_t>(n + 1)];
            for (int i = 0; i <= n; ++i)
                mc.degeneracies[static_cast<size_t>(n)].push_back(
                    materialize_op(above, here, m.field,
                                   [&](const TensorWord& w) {
                                       return m.codegeneracy(n, i, tensor_of_words(m.field, w));
                                   })
                        .transpose());
        }
        if (mc.has_cyclic)
            mc.cyclic[static_cast<size_t>(n)] =
                materialize_op(here, here, m.field,
                               [&](const TensorWord& w) {
                                   return m.cocyclic(n, tensor_of_words(m.field, w));
                               })
                    .transpose();
    }
    return mc;
}

NormalizedComplex normalize_complex(const MaterializedCyclic& mc, const Algebra* alg_for_labels) {
    NormalizedComplex nc;
    nc.field = mc.field;
    int max_level = static_cast<int>(mc.bases.size()) - 1;

    std::vector<Quotient> quot;
    for (int n = 0; n <= max_level; ++n) {
        std::vector<SparseVec> span;
        if (n >= 1) {
            for (const auto& s : mc.degeneracies[static_cast<size_t>(n - 1)]) {
                SparseMatrix st = s.transpose();
                for (int c = 0; c < st.rows(); ++c)
                    if (!st.row(c).empty()) span.push_back(st.row(c));
            }
        }
        quot.push_back(quotient_by_span(mc.dim(n), mc.field, span));
        nc.dims.push_back(static_cast<int>(quot.back().free_coords.size()));
        std::vector<std::string> lab;
        for (int fc : quot.back().free_coords) {
            const TensorWord& w = mc.bases[static_cast<size_t>(n)].words[static_cast<size_t>(fc)];
            std::string s;
            if (w.empty()) s = "[]";
            for (size_t i = 0; i < w.size(); ++i) {
                if (i) s += "(x)";
                s += alg_for_labels ? alg_for_labels->word_to_string(w[i]) : "?";
            }
            lab.push_back(s);
        }
        nc.labels.push_back(std::move(lab));
    }

    nc.b.resize(static_cast<size_t>(max_level) + 1);
    for (int n = 1; n <= max_level; ++n) {
        SparseMatrix b(mc.dim(n - 1), mc.dim(n), mc.field);
        for (int i = 0; i <= n; ++i) {
            const SparseMatrix& di = mc.faces[static_cast<size_t>(n)][static_cast<size_t>(i)];
            Scalar sign = (i % 2 == 0) ? Scalar::one(mc.field) : -Scalar::one(mc.field);
            for (int r = 0; r < di.rows(); ++r)
                for (const auto& [c, v] : di.row(r)) b.add_entry(r, c, v * sign);
        }
        nc.b[static_cast<size_t>(n)] =
            quot[static_cast<size_t>(n - 1)].proj.multiply(b).multiply(quot[static_cast<size_t>(n)].incl);
    }

    if (mc.has_cyclic) {
        nc.has_B = true;
        nc.B.resize(static_cast<size_t>(max_level) + 1);
        for (int n = 0; n + 1 <= max_level; ++n) {
            // B = (1 - lambda) s N with s = tau_(n+1) . s_n, lambda = (-1)^k tau
            const SparseMatrix& tau_n = mc.cyclic[static_cast<size_t>(n)];
            const SparseMatrix& tau_up = mc.cyclic[static_cast<size_t>(n + 1)];
            Scalar sgn_n = (n % 2 == 0) ? Scalar::one(mc.field) : -Scalar::one(mc.field);
            Scalar sgn_up = ((n + 1) % 2 == 0) ? Scalar::one(mc.field) : -Scalar::one(mc.field);

            SparseMatrix N(mc.dim(n), mc.dim(n), mc.field);
            SparseMatrix pw = SparseMatrix::identity(mc.dim(n), mc.field);
            for (int i = 0; i <= n; ++i) {
                for (int r = 0; r < pw.rows(); ++r)
                    for (const auto& [c, v] : pw.row(r)) N.add_entry(r, c, v);
                // pw <- lambda * pw
                pw = tau_n.multiply(pw);
                if (sgn_n == -Scalar::one(mc.field)) {
                    SparseMatrix neg(pw.rows(), pw.cols(), mc.field);
                    for (int r = 0; r < pw.rows(); ++r)
                        for (const auto& [c, v] : pw.row(r)) neg.add_entry(r, c, -v);
                    pw = neg;
                }
            }
            SparseMatrix sN =
                tau_up.multiply(mc.degeneracies[static_cast<size_t>(n)][static_cast<size_t>(n)].multiply(N));
            SparseMatrix lam_sN = tau_up.multiply(sN);
            SparseMatrix Bfull(mc.dim(n + 1), mc.dim(n), mc.field);
            for (int r = 0; r < sN.rows(); ++r)
                for (const auto& [c, v] : sN.row(r)) Bfull.add_entry(r, c, v);
            for (int r = 0; r < lam_sN.rows(); ++r)
                for (const auto& [c, v] : lam_sN.row(r)) Bfull.add_entry(r, c, -(v * sgn_up));
            nc.B[static_cast<size_t>(n)] = quot[static_cast<size_t>(n + 1)].proj.multiply(Bfull).multiply(
                quot[static_cast<size_t>(n)].incl);
        }
    }
    return nc;
}

std::vector<int> hochschild_dims(const NormalizedComplex& nc, int n_max) {
    int max_level = static_cast<int>(nc.dims.size()) - 1;
    if (n_max + 1 > max_level) throw ConfigError("hochschild_dims: not enough levels materialized");
    std::vector<int> out;
    for (int n = 0; n <= n_max; ++n) {
        SparseMatrix out_map = (n >= 1) ? nc.b[static_cast<size_t>(n)]
                                        : SparseMatrix(0, nc.dims[0], nc.field);
        const SparseMatrix& in_map = nc.b[static_cast<size_t>(n + 1)];
        out.push_back(homology_of_pair(in_map, out_map).dimension);
    }
    return out;
}

namespace {

struct TotBlock {
    std::vector<int> qs;       // level of each block summand (q = n - 2p or n - p)
    std::vector<int> offsets;  // column offsets
    int dim = 0;
};

}  // namespace

std::vector<int> cyclic_dims_bB(const NormalizedComplex& nc, int n_max) {
    int max_level = static_cast<int>(nc.dims.size()) - 1;
    if (!nc.has_B) throw ConfigError("cyclic_dims_bB: no Connes B available");
    if (n_max + 1 > max_level) throw ConfigError("cyclic_dims_bB: not enough levels materialized");

    auto tot = [&](int n) {
        TotBlock t;
        for (int q = n; q >= 0; q -= 2) {
            t.qs.push_back(q);
            t.offsets.push_back(t.dim);
            t.dim += nc.dims[static_cast<size_t>(q)];
        }
        return t;
    };

    auto differential = [&](int n) {
        TotBlock src = tot(n), dst = tot(n - 1);
        SparseMatrix D(dst.dim, src.dim, nc.field);
        auto dst_offset = [&](int q) -> int {
            for (size_t i = 0; i < dst.qs.size(); ++i)
                if (dst.qs[i] == q) return dst.offsets[i];
            return -1;
        };
        for (size_t bi = 0; bi < src.qs.size(); ++bi) {
            int q = src.qs[bi];
            int co = src.offsets[bi];
            if (q >= 1) {
                int ro = dst_offset(q - 1);
                const SparseMatrix& b = nc.b[static_cast<size_t>(q)];
                for (int r = 0; r < b.rows(); ++r)
                    for (const auto& [c, v] : b.row(r)) D.add_entry(ro + r, co + c, v);
            }
            if (int ro = dst_offset(q + 1); ro >= 0) {
                const SparseMatrix& B = nc.B[static_cast<size_t>(q)];
                for (int r = 0; r < B.rows(); ++r)
                    for (const auto& [c, v] : B.row(r)) D.add_entry(ro + r, co + c, v);
            }
        }
        return D;
    };

    std::vector<int> out;
    for (int n = 0; n <= n_max; ++n) {
        SparseMatrix outgoing = (n >= 1) ? differential(n) : SparseMatrix(0, tot(0).dim, nc.field);
        SparseMatrix incoming = differential(n + 1);
        out.push_back(homology_of_pair(incoming, outgoing).dimension);
    }
    return out;
}

std::vector<int> cyclic_dims_cc_bicomplex(const MaterializedCyclic& mc, int n_max) {
    int max_level = static_cast<int>(mc.bases.size()) - 1;
    if (!mc.has_cyclic) throw ConfigError("cc bicomplex needs a cyclic structure");
    if (n_max + 1 > max_level) throw ConfigError("cc bicomplex: not enough levels materialized");
    const FieldId& f = mc.field;

    auto scaled = [&](const SparseMatrix& m, const Scalar& c) {
        SparseMatrix out(m.rows(), m.cols(), f);
        for (int r = 0; r < m.rows(); ++r)
            for (const auto& [col, v] : m.row(r)) out.add_entry(r, col, v * c);
        return out;
    };
    auto add_into = [&](SparseMatrix& acc, const SparseMatrix& m, const Scalar& c) {
        for (int r = 0; r < m.rows(); ++r)
            for (const auto& [col, v] : m.row(r)) acc.add_entry(r, col, v * c);
    };

    // b, b', lambda = (-1)^q tau, N = sum lambda^i per level
    std::vector<SparseMatrix> b(static_cast<size_t>(max_level) + 1),
        bp(static_cast<size_t>(max_level) + 1), one_minus_lambda(static_cast<size_t>(max_level) + 1),
        Nmat(static_cast<size_t>(max_level) + 1);
    for (int q = 0; q <= max_level; ++q) {
        if (q >= 1) {
            SparseMatrix bq(mc.dim(q - 1), mc.dim(q), f), bpq(mc.dim(q - 1), mc.dim(q), f);
            for (int i = 0; i <= q; ++i) {
                Scalar sgn = (i % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
                add_into(bq, mc.faces[static_cast<size_t>(q)][static_cast<size_t>(i)], sgn);
                if (i < q) add_into(bpq, mc.faces[static_cast<size_t>(q)][static_cast<size_t>(i)], sgn);
            }
            b[static_cast<size_t>(q)] = bq;
            bp[static_cast<size_t>(q)] = bpq;
        }
        Scalar sgn_q = (q % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
        SparseMatrix lam = scaled(mc.cyclic[static_cast<size_t>(q)], sgn_q);
        SparseMatrix oml = SparseMatrix::identity(mc.dim(q), f);
        add_into(oml, lam, -Scalar::one(f));
        one_minus_lambda[static_cast<size_t>(q)] = oml;
        SparseMatrix N(mc.dim(q), mc.dim(q), f);
        SparseMatrix pw = SparseMatrix::identity(mc.dim(q), f);
        for (int i = 0; i <= q; ++i) {
            add_into(N, pw, Scalar::one(f));
            pw = lam.multiply(pw);
        }
        Nmat[static_cast<size_t>(q)] = N;
    }

    // anticommutation of materialized squares: b (1-lambda) = (1-lambda) b'
    // and b' N = N b
    for (int q = 1; q <= max_level; ++q) {
        SparseMatrix lhs = b[static_cast<size_t>(q)].multiply(one_minus_lambda[static_cast<size_t>(q)]);
        SparseMatrix rhs = one_minus_lambda[static_cast<size_t>(q - 1)].multiply(bp[static_cast<size_t>(q)]);
        add_into(lhs, rhs, -Scalar::one(f));
        if (!lhs.is_zero()) throw ConfigError("cc bicomplex: b(1-lambda) != (1-lambda)b' at q=" + std::to_string(q));
        SparseMatrix lhs2 = bp[static_cast<size_t>(q)].multiply(Nmat[static_cast<size_t>(q)]);
        SparseMatrix rhs2 = Nmat[static_cast<size_t>(q - 1)].multiply(b[static_cast<size_t>(q)]);
        add_into(lhs2, rhs2, -Scalar::one(f));
        if (!lhs2.is_zero()) throw ConfigError("cc bicomplex: b'N != Nb at q=" + std::to_string(q));
    }

    auto tot = [&](int n) {
        TotBlock t;
        for (int p = 0; p <= n; ++p) {
            t.qs.push_back(n - p);
            t.offsets.push_back(t.dim);
            t.dim += mc.dim(n - p);
        }
        return t;
    };
    auto differential = [&](int n) {
        TotBlock src = tot(n), dst = tot(n - 1);
        SparseMatrix D(dst.dim, src.dim, f);
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            int co = src.offsets[static_cast<size_t>(p)];
            // vertical: (p, q) -> (p, q-1)
            if (q >= 1) {
                int ro = dst.offsets[static_cast<size_t>(p)];
                const SparseMatrix& dv =
                    (p % 2 == 0) ? b[static_cast<size_t>(q)] : bp[static_cast<size_t>(q)];
                Scalar sgn = (p % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
                for (int r = 0; r < dv.rows(); ++r)
                    for (const auto& [c, v] : dv.row(r)) D.add_entry(ro + r, co + c, v * sgn);
            }
            // horizontal: (p, q) -> (p-1, q)
            if (p >= 1) {
                int ro = dst.offsets[static_cast<size_t>(p - 1)];
                const SparseMatrix& dh = (p % 2 == 1) ? one_minus_lambda[static_cast<size_t>(q)]
                                                      : Nmat[static_cast<size_t>(q)];
                for (int r = 0; r < dh.rows(); ++r)
                    for (const auto& [c, v] : dh.row(r)) D.add_entry(ro + r, co + c, v);
            }
        }
        return D;
    };

    std::vector<int> out;
    for (int n = 0; n <= n_max; ++n) {
        SparseMatrix outgoing = (n >= 1) ? differential(n) : SparseMatrix(0, tot(0).dim, f);
        SparseMatrix incoming = differential(n + 1);
        out.push_back(homology_of_pair(incoming, outgoing).dimension);
    }
    return out;
}

void check_complex(const std::vector<SparseMatrix>& d) {
    for (size_t n = 1; n + 1 < d.size(); ++n)
        if (auto bad = d[n].first_nonzero_composite_column(d[n + 1]))
            throw NotAComplex(static_cast<int>(n), *bad);
}

bool euler_check(const std::vector<int>& dims, const std::vector<int>& homology) {
    long a = 0, b = 0;
    for (size_t n = 0; n < dims.size(); ++n) a += (n % 2 == 0 ? dims[n] : -dims[n]);
    for (size_t n = 0; n < homology.size(); ++n) b += (n % 2 == 0 ? homology[n] : -homology[n]);
    return a == b;
}

}  // namespace hopfcyc
