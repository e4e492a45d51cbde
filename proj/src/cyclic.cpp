#include "hopfcyc/cyclic.hpp"

#include <cassert>

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

namespace {

using WordFn = std::function<TensorElement(const TensorWord&)>;

TensorElement linear_ext(const TensorElement& x, const WordFn& f) {
    TensorElement out(x.field());
    for (const auto& [w, c] : x.terms()) out.add(f(w), c);
    return out;
}

/// Iterate over the cartesian product of per-slot coproduct expansions.
/// legs[i] holds the i-th slot's expansion; visit() receives one choice of
/// tensor word per slot together with the product of their coefficients.
void cartesian(const std::vector<TensorElement>& legs, const FieldId& f,
               const std::function<void(const std::vector<const TensorWord*>&, const Scalar&)>& visit) {
    std::vector<std::map<TensorWord, Scalar>::const_iterator> its;
    its.reserve(legs.size());
    for (const auto& l : legs) {
        if (l.is_zero()) return;
        its.push_back(l.terms().begin());
    }
    for (;;) {
        Scalar c = Scalar::one(f);
        std::vector<const TensorWord*> choice;
        choice.reserve(legs.size());
        for (size_t i = 0; i < legs.size(); ++i) {
            choice.push_back(&its[i]->first);
            c = c * its[i]->second;
        }
        visit(choice, c);
        size_t k = legs.size();
        while (k > 0) {
            --k;
            ++its[k];
            if (its[k] != legs[k].terms().end()) break;
            its[k] = legs[k].terms().begin();
            if (k == 0) return;
        }
    }
}

/// Faces of the Hopf-algebra cyclic module (and, shifted, its path space).
TensorElement hopf_face_word(const HopfAlgebra& H, const Character& delta, int n, int i,
                             const TensorWord& w, int offset) {
    const FieldId& f = H.field();
    TensorElement out(f);
    int slots = n + offset;
    assert(static_cast<int>(w.size()) == slots);
    if (i == 0 && offset == 0) {
        TensorWord rest(w.begin() + 1, w.end());
        out.add(rest, H.counit_word(w[0]));
        return out;
    }
    int merge = i - 1 + offset;  // multiply slots merge, merge+1
    if (merge + 1 < slots) {
        Element p = H.product_words(w[static_cast<size_t>(merge)], w[static_cast<size_t>(merge + 1)]);
        for (const auto& [pw, pc] : p.terms()) {
            TensorWord nw(w.begin(), w.begin() + merge);
            nw.push_back(pw);
            nw.insert(nw.end(), w.begin() + merge + 2, w.end());
            out.add(nw, pc);
        }
        return out;
    }
    // last face: the character eats the final slot
    TensorWord rest(w.begin(), w.end() - 1);
    out.add(rest, delta.eval_word(w.back()));
    return out;
}

TensorElement insert_unit(const Algebra& A, const TensorWord& w, int pos) {
    TensorElement out(A.field());
    const Element unit_elt = A.one();
    for (const auto& [uw, uc] : unit_elt.terms()) {
        TensorWord nw(w.begin(), w.begin() + pos);
        nw.push_back(uw);
        nw.insert(nw.end(), w.begin() + pos, w.end());
        out.add(nw, uc);
    }
    return out;
}

/// tau_n(h_1 (x) ... (x) h_n) =
///   sum delta(h_n^(2)) S_sigma(h_1^(1) ... h_n^(1)) (x) h_1^(2) (x) ... (x) h_{n-1}^(2)
TensorElement hopf_tau_word(const HopfAlgebra& H, const Character& delta, const Element& sigma,
                            int n, const TensorWord& w) {
    const FieldId& f = H.field();
    if (n == 0) return tensor_of_words(f, w);
    std::vector<TensorElement> legs;
    legs.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) legs.push_back(H.coproduct_word(w[static_cast<size_t>(i)]));
    TensorElement out(f);
    cartesian(legs, f, [&](const std::vector<const TensorWord*>& t, const Scalar& c) {
        Element prod = H.one();
        for (int i = 0; i < n; ++i) prod = H.product(prod, (*t[static_cast<size_t>(i)])[0]);
        Scalar coeff = c * delta.eval_word((*t[static_cast<size_t>(n - 1)])[1]);
        if (coeff.is_zero()) return;
        Element ssig = H.product(sigma, H.antipode(prod));
        for (const auto& [sw, sc] : ssig.terms()) {
            TensorWord nw{sw};
            for (int i = 0; i + 1 < n; ++i) nw.push_back((*t[static_cast<size_t>(i)])[1]);
            out.add(nw, coeff * sc);
        }
    });
    return out;
}

std::vector<std::vector<BasisWord>> tuples_of_words(const std::vector<BasisWord>& words,
                                                    const Algebra& A, int len, long bound,
                                                    bool exact) {
    std::vector<std::vector<BasisWord>> out;
    std::vector<BasisWord> cur;
    std::function<void(int, long)> rec = [&](int slot, long used) {
        if (slot == len) {
            if (!exact || used == bound) out.push_back(cur);
            return;
        }
        for (const auto& w : words) {
            long d = A.degree(w);
            if (used + d > bound) continue;
            cur.push_back(w);
            rec(slot + 1, used + d);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

CyclicModule build_hopf_cyclic(const HopfAlgebra& H, const ModularPair& pair, bool unchecked,
                               long check_degree_bound) {
    if (!unchecked) {
        CheckReport rep = check_modular_involution(pair, check_degree_bound);
        if (!rep.pass)
            throw InvalidPair(pair.name + " on " + H.name() +
                              (rep.failures.empty() ? "" : ": " + rep.failures.front()));
    }
    CyclicModule m;
    m.name = H.name() + "~" + pair.name;
    m.alg = &H;
    m.field = H.field();
    m.slot_offset = 0;
    m.grading = H.homology_grading();
    const HopfAlgebra* Hp = &H;
    Character delta = pair.delta;
    Element sigma = pair.sigma;
    m.face = [Hp, delta](int n, int i, const TensorElement& x) {
        return linear_ext(x, [&](const TensorWord& w) { return hopf_face_word(*Hp, delta, n, i, w, 0); });
    };
    m.degeneracy = [Hp](int, int i, const TensorElement& x) {
        return linear_ext(x, [&](const TensorWord& w) { return insert_unit(*Hp, w, i); });
    };
    m.cyclic = [Hp, delta, sigma](int n, const TensorElement& x) {
        return linear_ext(x, [&](const TensorWord& w) { return hopf_tau_word(*Hp, delta, sigma, n, w); });
    };
    m.level_words = [Hp](int n, long bound) {
        return tuples_of_words(Hp->basis_up_to(bound), *Hp, n, bound, false);
    };
    m.level_words_weight = [Hp](int n, long w) {
        return tuples_of_words(Hp->basis_up_to(w), *Hp, n, w, true);
    };
    return m;
}

CyclicModule build_algebra_cyclic(const Algebra& A) {
    CyclicModule m;
    m.name = "C(" + A.name() + ")";
    m.alg = &A;
    m.field = A.field();
    m.slot_offset = 1;
    m.grading = A.homology_grading();
    const Algebra* Ap = &A;
    m.face = [Ap](int n, int i, const TensorElement& x) {
        return linear_ext(x, [&](const TensorWord& w) {
            TensorElement out(Ap->field());
            if (i < n) {
                Element p = Ap->product_words(w[static_cast<size_t>(i)], w[static_cast<size_t>(i + 1)]);
                for (const auto& [pw, pc] : p.terms()) {
                    TensorWord nw(w.begin(), w.begin() + i);
                    nw.push_back(pw);
                    nw.insert(nw.end(), w.begin() + i + 2, w.end());
                    out.add(nw, pc);
                }
            } else {
                Element p = Ap->product_words(w[static_cast<size_t>(n)], w[0]);
                for (const auto& [pw, pc] : p.terms()) {
                    TensorWord nw{pw};
                    nw.insert(nw.end(), w.begin() + 1, w.end() - 1);
                    out.add(nw, pc);
                }
            }
            return out;
        });
    };
    m.degeneracy = [Ap](int, int i, const TensorElement& x) {
        return linear_ext(x, [&](const TensorWord& w) { return insert_unit(*Ap, w, i + 1); });
    };
    m.cyclic = [Ap](int, const TensorElement& x) {
        return linear_ext(x, [&](const TensorWord& w) {
            TensorWord nw{w.back()};
            nw.insert(nw.end(), w.begin(), w.end() - 1);
            return tensor_of_words(Ap->field(), nw);
        });
    };
    m.level_words = [Ap](int n, long bound) {
        return tuples_of_words(Ap->basis_up_to(bound), *Ap, n + 1, bound, false);
    };
    m.level_words_weight = [Ap](int n, long w) {
        return tuples_of_words(Ap->basis_up_to(w), *Ap, n + 1, w, true);
    };
    return m;
}

PathSpace build_path_space(const HopfAlgebra& H, bool require_cyclic) {
    if (require_cyclic && !H.cocommutative_flag()) throw NotCocommutative();
    PathSpace E;
    const HopfAlgebra* Hp = &H;
    Character eps = Character::counit(Hp);

    CyclicModule& m = E.simplicial;
    m.name = "E(" + H.name() + ")";
    m.alg = &H;
    m.field = H.field();
    m.slot_offset = 1;
    m.grading = H.homology_grading();
    m.has_cyclic = H.cocommutative_flag();
    E.cyclic_available = m.has_cyclic;

    m.face = [Hp, eps](int n, int i, const TensorElement& x) {
        // the path space shifts the module's faces up by one
        return linear_ext(x, [&](const TensorWord& w) { return hopf_face_word(*Hp, eps, n + 1, i + 1, w, 0); });
    };
    m.degeneracy = [Hp](int, int i, const TensorElement& x) {
        return linear_ext(x, [&](const TensorWord& w) { return insert_unit(*Hp, w, i + 1); });
    };
    if (m.has_cyclic) {
        m.cyclic = [Hp](int n, const TensorElement& x) {
            // t_n(h_0 (x) ... (x) h_n) = sum (h_0 h_1^(1) ... h_n^(1)) (x)
            //     S(h_1^(2) ... h_n^(2)) (x) h_1^(3) (x) ... (x) h_{n-1}^(3)
            const FieldId& f = Hp->field();
            return linear_ext(x, [&](const TensorWord& w) {
                if (n == 0) return tensor_of_words(f, w);
                std::vector<TensorElement> legs;
                for (int i = 1; i <= n; ++i)
                    legs.push_back(Hp->iterated_coproduct(w[static_cast<size_t>(i)], i < n ? 3 : 2));
                TensorElement out(f);
                cartesian(legs, f, [&](const std::vector<const TensorWord*>& t, const Scalar& c) {
                    Element first(f, w[0]);
                    for (int i = 0; i < n; ++i) first = Hp->product(first, (*t[static_cast<size_t>(i)])[0]);
                    Element mid = Hp->one();
                    for (int i = 0; i < n; ++i) mid = Hp->product(mid, (*t[static_cast<size_t>(i)])[1]);
                    Element smid = Hp->antipode(mid);
                    for (const auto& [fw, fc] : first.terms())
                        for (const auto& [sw, sc] : smid.terms()) {
                            TensorWord nw{fw, sw};
                            for (int i = 0; i + 1 < n; ++i) nw.push_back((*t[static_cast<size_t>(i)])[2]);
                            out.add(nw, c * fc * sc);
                        }
                });
                return out;
            });
        };
    }
    m.level_words = [Hp](int n, long bound) {
        return tuples_of_words(Hp->basis_up_to(bound), *Hp, n + 1, bound, false);
    };
    m.level_words_weight = [Hp](int n, long w) {
        return tuples_of_words(Hp->basis_up_to(w), *Hp, n + 1, w, true);
    };

    E.extra_degeneracy = [Hp](int, const TensorElement& x) {
        return linear_ext(x, [&](const TensorWord& w) { return insert_unit(*Hp, w, 0); });
    };
    return E;
}

CocyclicModule build_cm_cocyclic(const HopfAlgebra& H, const ModularPair& pair) {
    CocyclicModule m;
    m.name = "CM(" + H.name() + ")" + pair.name;
    m.alg = &H;
    m.field = H.field();
    m.slot_offset = 0;
    const HopfAlgebra* Hp = &H;
    Character delta = pair.delta;
    Element sigma = pair.sigma;

    m.coface = [Hp, sigma](int n, int i, const TensorElement& x) {
        const FieldId& f = Hp->field();
        return linear_ext(x, [&](const TensorWord& w) {
            TensorElement out(f);
            if (i == 0) {
                const Element unit_elt = (*Hp).one();
                for (const auto& [uw, uc] : unit_elt.terms()) {
                    TensorWord nw{uw};
                    nw.insert(nw.end(), w.begin(), w.end());
                    out.add(nw, uc);
                }
            } else if (i < n) {
                TensorElement split = Hp->coproduct_word(w[static_cast<size_t>(i - 1)]);
                for (const auto& [sw, sc] : split.terms()) {
                    TensorWord nw(w.begin(), w.begin() + (i - 1));
                    nw.push_back(sw[0]);
                    nw.push_back(sw[1]);
                    nw.insert(nw.end(), w.begin() + i, w.end());
                    out.add(nw, sc);
                }
            } else {
                for (const auto& [gw, gc] : sigma.terms()) {
                    TensorWord nw = w;
                    nw.push_back(gw);
                    out.add(nw, gc);
                }
            }
            return out;
        });
    };
    m.codegeneracy = [Hp](int, int i, const TensorElement& x) {
        const FieldId& f = Hp->field();
        return linear_ext(x, [&](const TensorWord& w) {
            TensorElement out(f);
            TensorWord nw(w.begin(), w.begin() + i);
            nw.insert(nw.end(), w.begin() + i + 1, w.end());
            out.add(nw, Hp->counit_word(w[static_cast<size_t>(i)]));
            return out;
        });
    };
    m.cocyclic = [Hp, delta, sigma](int n, const TensorElement& x) {
        const FieldId& f = Hp->field();
        ModularPair pr{Hp, delta, sigma, ""};
        return linear_ext(x, [&](const TensorWord& w) {
            if (n == 0) return tensor_of_words(f, w);
            Element st = twisted_antipode(*Hp, pr, Element(f, w[0]));
            TensorElement D = Hp->iterated_coproduct(st, n);
            TensorElement shifted(f);
            TensorWord tail(w.begin() + 1, w.end());
            for (const auto& [gw, gc] : sigma.terms()) {
                TensorWord nw = tail;
                nw.push_back(gw);
                shifted.add(nw, gc);
            }
            return Hp->tensor_product_elements(D, shifted);
        });
    };
    m.level_words = [Hp](int n, long bound) {
        return tuples_of_words(Hp->basis_up_to(bound), *Hp, n, bound, false);
    };
    return m;
}

CocyclicModule build_commutative_cocyclic(const HopfAlgebra& H) {
    if (!H.commutative_flag()) throw NotCommutative();
    CocyclicModule m;
    m.name = "E*(" + H.name() + ")";
    m.alg = &H;
    m.field = H.field();
    m.slot_offset = 1;
    const HopfAlgebra* Hp = &H;

    m.coface = [Hp](int n, int i, const TensorElement& x) {
        const FieldId& f = Hp->field();
        return linear_ext(x, [&](const TensorWord& w) {
            TensorElement out(f);
            if (i < n) {
                TensorElement split = Hp->coproduct_word(w[static_cast<size_t>(i)]);
                for (const auto& [sw, sc] : split.terms()) {
                    TensorWord nw(w.begin(), w.begin() + i);
                    nw.push_back(sw[0]);
                    nw.push_back(sw[1]);
                    nw.insert(nw.end(), w.begin() + i + 1, w.end());
                    out.add(nw, sc);
                }
            } else {
                const Element unit_elt = (*Hp).one();
                for (const auto& [uw, uc] : unit_elt.terms()) {
                    TensorWord nw = w;
                    nw.push_back(uw);
                    out.add(nw, uc);
                }
            }
            return out;
        });
    };
    m.codegeneracy = [Hp](int, int i, const TensorElement& x) {
        const FieldId& f = Hp->field();
        return linear_ext(x, [&](const TensorWord& w) {
            TensorElement out(f);
            TensorWord nw(w.begin(), w.begin() + (i + 1));
            nw.insert(nw.end(), w.begin() + i + 2, w.end());
            out.add(nw, Hp->counit_word(w[static_cast<size_t>(i + 1)]));
            return out;
        });
    };
    m.cocyclic = [Hp](int n, const TensorElement& x) {
        // tau(h_0 (x) ... (x) h_n) = sum h_0^(1) (x) h_0^(2) S(h_1^(n)) h_2
        //   (x) h_0^(3) S(h_1^(n-1)) h_3 (x) ... (x) h_0^(n+1) S(h_1^(1))
        const FieldId& f = Hp->field();
        return linear_ext(x, [&](const TensorWord& w) {
            if (n == 0) return tensor_of_words(f, w);
            TensorElement D0 = Hp->iterated_coproduct(w[0], n + 1);
            TensorElement D1 = Hp->iterated_coproduct(w[1], n);
            TensorElement out(f);
            for (const auto& [t0, c0] : D0.terms())
                for (const auto& [t1, c1] : D1.terms()) {
                    TensorElement acc = scalar_tensor(f, c0 * c1);
                    acc = tensor_concat(acc, as_tensor(Element(f, t0[0])));
                    for (int j = 1; j < n; ++j) {
                        Element slot = Hp->product(
                            Hp->product(Element(f, t0[static_cast<size_t>(j)]),
                                        Hp->antipode_word(t1[static_cast<size_t>(n - j)])),
                            Element(f, w[static_cast<size_t>(j + 1)]));
                        acc = tensor_concat(acc, as_tensor(slot));
                    }
                    Element last = Hp->product(Element(f, t0[static_cast<size_t>(n)]),
                                               Hp->antipode_word(t1[0]));
                    acc = tensor_concat(acc, as_tensor(last));
                    out.add(acc, Scalar::one(f));
                }
            return out;
        });
    };
    m.level_words = [Hp](int n, long bound) {
        return tuples_of_words(Hp->basis_up_to(bound), *Hp, n + 1, bound, false);
    };
    return m;
}

// ---------------------------------------------------------------------------
// verification

void AxiomReport::merge(const CheckReport& r, const std::string& tag) {
    checked += r.checked;
    if (!r.pass) pass = false;
    for (const auto& f : r.failures)
        if (failures.size() < 32) failures.push_back(tag + ": " + f);
}

namespace {

struct Verifier {
    AxiomReport rep;
    const Algebra* alg;

    void expect(bool ok, const std::string& what, const TensorWord& witness) {
        ++rep.checked;
        if (ok) return;
        rep.pass = false;
        if (rep.failures.size() >= 32) return;
        std::string ws = "(";
        for (size_t i = 0; i < witness.size(); ++i) {
            if (i) ws += ", ";
            ws += alg ? alg->word_to_string(witness[i]) : "?";
        }
        ws += ")";
        rep.failures.push_back(what + " at " + ws);
    }
};

}  // namespace

AxiomReport verify_cyclic_axioms(const CyclicModule& m, int n_max, long degree_bound) {
    Verifier v;
    v.alg = m.alg;
    for (int n = 0; n <= n_max; ++n) {
        auto words = m.level_words(n, degree_bound);
        for (const auto& w : words) {
            TensorElement x = tensor_of_words(m.field, w);

            // simplicial identities (the double face needs two levels below)
            if (n >= 2) {
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j; ++i)
                        v.expect(m.face(n - 1, i, m.face(n, j, x)) ==
                                     m.face(n - 1, j - 1, m.face(n, i, x)),
                                 "d_i d_j (i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                     ") level " + std::to_string(n),
                                 w);
            }
            for (int i = 0; i <= n; ++i)
                for (int j = i; j <= n; ++j)
                    v.expect(m.degeneracy(n + 1, j + 1, m.degeneracy(n, i, x)) ==
                                 m.degeneracy(n + 1, i, m.degeneracy(n, j, x)),
                             "s_i s_j (i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                 ") level " + std::to_string(n),
                             w);
            for (int j = 0; j <= n; ++j) {
                TensorElement sjx = m.degeneracy(n, j, x);
                for (int i = 0; i <= n + 1; ++i) {
                    TensorElement lhs = m.face(n + 1, i, sjx);
                    TensorElement rhs(m.field);
                    if (i < j) rhs = m.degeneracy(n - 1, j - 1, m.face(n, i, x));
                    else if (i == j || i == j + 1) rhs = x;
                    else rhs = m.degeneracy(n - 1, j, m.face(n, i - 1, x));
                    v.expect(lhs == rhs,
                             "d_i s_j (i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                 ") level " + std::to_string(n),
                             w);
                }
            }

            if (!m.has_cyclic || !m.cyclic) continue;
            TensorElement tx = m.cyclic(n, x);

            // (2.2) tau^{ n+1 } = id
            TensorElement pow = tx;
            for (int k = 0; k < n; ++k) pow = m.cyclic(n, pow);
            v.expect(pow == x, "tau^(n+1) = id, level " + std::to_string(n), w);

            if (n >= 1) {
                // (2.3)
                for (int i = 1; i <= n; ++i)
                    v.expect(m.face(n, i, tx) == m.cyclic(n - 1, m.face(n, i - 1, x)),
                             "d_i tau = tau d_{i-1} (i=" + std::to_string(i) + ") level " +
                                 std::to_string(n),
                             w);
                // (2.4)
                v.expect(m.face(n, 0, tx) == m.face(n, n, x),
                         "d_0 tau = d_n, level " + std::to_string(n), w);
            }
            // (2.5)
            for (int i = 1; i <= n; ++i)
                v.expect(m.degeneracy(n, i, tx) == m.cyclic(n + 1, m.degeneracy(n, i - 1, x)),
                         "s_i tau = tau s_{i-1} (i=" + std::to_string(i) + ") level " +
                             std::to_string(n),
                         w);
            // (2.6)
            v.expect(m.degeneracy(n, 0, tx) ==
                         m.cyclic(n + 1, m.cyclic(n + 1, m.degeneracy(n, n, x))),
                     "s_0 tau = tau^2 s_n, level " + std::to_string(n), w);
        }
    }
    return v.rep;
}

AxiomReport verify_cocyclic_axioms(const CocyclicModule& m, int n_max, long degree_bound) {
    Verifier v;
    v.alg = m.alg;
    for (int n = 0; n <= n_max; ++n) {
        auto words = m.level_words(n, degree_bound);
        for (const auto& w : words) {
            TensorElement x = tensor_of_words(m.field, w);

            // cosimplicial identities
            for (int i = 0; i <= n + 1; ++i)
                for (int j = i + 1; j <= n + 2; ++j)
                    v.expect(m.coface(n + 2, j, m.coface(n + 1, i, x)) ==
                                 m.coface(n + 2, i, m.coface(n + 1, j - 1, x)),
                             "d_j d_i (i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                 ") level " + std::to_string(n),
                             w);
            if (n >= 2) {
                for (int j = 0; j <= n - 2; ++j)
                    for (int i = 0; i <= j; ++i)
                        v.expect(m.codegeneracy(n - 2, j, m.codegeneracy(n - 1, i, x)) ==
                                     m.codegeneracy(n - 2, i, m.codegeneracy(n - 1, j + 1, x)),
                                 "s_j s_i (i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                     ") level " + std::to_string(n),
                                 w);
            }
            for (int i = 0; i <= n + 1; ++i) {
                TensorElement dix = m.coface(n + 1, i, x);
                for (int j = 0; j <= n; ++j) {
                    TensorElement lhs = m.codegeneracy(n, j, dix);
                    TensorElement rhs(m.field);
                    if (i < j) rhs = m.coface(n, i, m.codegeneracy(n - 1, j - 1, x));
                    else if (i == j || i == j + 1) rhs = x;
                    else rhs = m.coface(n, i - 1, m.codegeneracy(n - 1, j, x));
                    v.expect(lhs == rhs,
                             "s_j d_i (i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                 ") level " + std::to_string(n),
                             w);
                }
            }

            if (!m.cocyclic) continue;
            TensorElement tx = m.cocyclic(n, x);

            TensorElement pow = tx;
            for (int k = 0; k < n; ++k) pow = m.cocyclic(n, pow);
            v.expect(pow == x, "tau^(n+1) = id, level " + std::to_string(n), w);

            // tau d_i = d_{i-1} tau (1 <= i <= n+1 at target level n+1)
            for (int i = 1; i <= n + 1; ++i)
                v.expect(m.cocyclic(n + 1, m.coface(n + 1, i, x)) ==
                             m.coface(n + 1, i - 1, tx),
                         "tau d_i = d_{i-1} tau (i=" + std::to_string(i) + ") level " +
                             std::to_string(n),
                         w);
            v.expect(m.cocyclic(n + 1, m.coface(n + 1, 0, x)) == m.coface(n + 1, n + 1, x),
                     "tau d_0 = d_{n+1}, level " + std::to_string(n), w);

            if (n >= 1) {
                for (int i = 1; i <= n - 1; ++i)
                    v.expect(m.cocyclic(n - 1, m.codegeneracy(n - 1, i, x)) ==
                                 m.codegeneracy(n - 1, i - 1, tx),
                             "tau s_i = s_{i-1} tau (i=" + std::to_string(i) + ") level " +
                                 std::to_string(n),
                             w);
                v.expect(m.cocyclic(n - 1, m.codegeneracy(n - 1, 0, x)) ==
                             m.codegeneracy(n - 1, n - 1, m.cocyclic(n, tx)),
                         "tau s_0 = s_{n-1} tau^2, level " + std::to_string(n), w);
            }
        }
    }
    return v.rep;
}

AxiomReport verify_cyclic_map(const CyclicMap& f, int n_max, long degree_bound, bool check_cyclic) {
    Verifier v;
    v.alg = f.src->alg;
    for (int n = 0; n <= n_max; ++n) {
        auto words = f.src->level_words(n, degree_bound);
        for (const auto& w : words) {
            TensorElement x = tensor_of_words(f.src->field, w);
            TensorElement fx = f.apply(n, x);
            if (n >= 1)
                for (int i = 0; i <= n; ++i)
                    v.expect(f.apply(n - 1, f.src->face(n, i, x)) == f.dst->face(n, i, fx),
                             f.name + " vs d_" + std::to_string(i) + ", level " + std::to_string(n),
                             w);
            for (int i = 0; i <= n; ++i)
                v.expect(f.apply(n + 1, f.src->degeneracy(n, i, x)) == f.dst->degeneracy(n, i, fx),
                         f.name + " vs s_" + std::to_string(i) + ", level " + std::to_string(n), w);
            if (check_cyclic && f.src->has_cyclic && f.dst->has_cyclic)
                v.expect(f.apply(n, f.src->cyclic(n, x)) == f.dst->cyclic(n, fx),
                         f.name + " vs tau, level " + std::to_string(n), w);
        }
    }
    return v.rep;
}

AxiomReport verify_path_contraction(const PathSpace& E, int n_max, long degree_bound) {
    Verifier v;
    v.alg = E.simplicial.alg;
    const CyclicModule& m = E.simplicial;
    for (int n = 0; n <= n_max; ++n) {
        auto words = m.level_words(n, degree_bound);
        for (const auto& w : words) {
            TensorElement x = tensor_of_words(m.field, w);
            TensorElement sx = E.extra_degeneracy(n, x);
            v.expect(m.face(n + 1, 0, sx) == x, "d_0 s = id, level " + std::to_string(n), w);
            if (n >= 1)
                for (int i = 0; i <= n; ++i)
                    v.expect(m.face(n + 1, i + 1, sx) ==
                                 E.extra_degeneracy(n - 1, m.face(n, i, x)),
                             "d_{i+1} s = s d_i (i=" + std::to_string(i) + "), level " +
                                 std::to_string(n),
                             w);
            // alternating-sum contraction: b s + s b = id for n >= 1; the
            // bottom level contracts onto k through the augmentation, so
            // b s = id - eta . eps there
            const FieldId& f = m.field;
            TensorElement lhs(f);
            for (int i = 0; i <= n + 1; ++i) {
                Scalar sign = (i % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
                lhs.add(m.face(n + 1, i, sx), sign);
            }
            TensorElement rhs = x;
            if (n >= 1) {
                TensorElement bx(f);
                for (int i = 0; i <= n; ++i) {
                    Scalar sign = (i % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
                    bx.add(m.face(n, i, x), sign);
                }
                lhs.add(E.extra_degeneracy(n - 1, bx), Scalar::one(f));
            } else if (const auto* Hp = dynamic_cast<const HopfAlgebra*>(m.alg)) {
                TensorElement eta_eps(f);
                for (const auto& [t, c] : x.terms())
                    eta_eps.add(as_tensor(Hp->one()).scaled(c * Hp->counit_word(t[0])),
                                Scalar::one(f));
                rhs = x - eta_eps;
            }
            v.expect(lhs == rhs,
                     "b s + s b = id (augmented at level 0), level " + std::to_string(n), w);
        }
    }
    return v.rep;
}

TensorElement normalized_b(const CyclicModule& m, int level, const TensorElement& x) {
    const FieldId& f = m.field;
    TensorElement out(f);
    for (int i = 0; i <= level; ++i) {
        Scalar sign = (i % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
        out.add(m.face(level, i, x), sign);
    }
    // normalized complex: drop words containing the unit factor
    if (!m.alg->unit_is_word()) throw ConfigError("normalized_b needs a word unit");
    BasisWord unit = m.alg->unit_word();
    TensorElement proj(f);
    for (const auto& [w, c] : out.terms()) {
        bool degenerate = false;
        for (const auto& s : w)
            if (s == unit) { degenerate = true; break; }
        if (!degenerate) proj.add(w, c);
    }
    return proj;
}

TensorElement connes_B(const CyclicModule& m, int level, const TensorElement& x) {
    const FieldId& f = m.field;
    if (!m.has_cyclic) throw ConfigError("connes_B needs a cyclic structure");
    auto lambda = [&](int n, const TensorElement& y) {
        TensorElement t = m.cyclic(n, y);
        return (n % 2 == 0) ? t : t.scaled(-Scalar::one(f));
    };
    // N = sum_{i=0..n} lambda^i
    TensorElement N(f);
    TensorElement cur = x;
    for (int i = 0; i <= level; ++i) {
        N.add(cur, Scalar::one(f));
        cur = lambda(level, cur);
    }
    // s = tau_{n+1} . s_n
    TensorElement sN = m.cyclic(level + 1, m.degeneracy(level, level, N));
    TensorElement BN = sN - lambda(level + 1, sN);
    // project to the normalized complex
    if (!m.alg->unit_is_word()) throw ConfigError("connes_B needs a word unit");
    BasisWord unit = m.alg->unit_word();
    TensorElement out(f);
    for (const auto& [w, c] : BN.terms()) {
        bool degenerate = false;
        for (const auto& s : w)
            if (s == unit) { degenerate = true; break; }
        if (!degenerate) out.add(w, c);
    }
    return out;
}

}  // namespace hopfcyc
