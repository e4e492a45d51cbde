#include "hopfcyc/hopf.hpp"

#include <cctype>
#include <sstream>

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

Element Algebra::one() const {
    Element e(field());
    e.add(unit_word(), Scalar::one(field()));
    return e;
}

Element Algebra::product(const Element& a, const Element& b) const {
    Element out(field());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) out.add(product_words(wa, wb), ca * cb);
    return out;
}

Element Algebra::product(const Element& a, const BasisWord& b) const {
    Element out(field());
    for (const auto& [wa, ca] : a.terms()) out.add(product_words(wa, b), ca);
    return out;
}

int Algebra::generator_index(const std::string& name) const {
    auto gens = generators();
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return static_cast<int>(i);
    throw UnknownGenerator(name);
}

Element Algebra::normalize_expression(const std::string& expr) const {
    auto gens = generators();
    Element acc = one();
    size_t pos = 0;
    auto skip = [&] { while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos; };
    bool expect_factor = true;
    while (true) {
        skip();
        if (pos >= expr.size()) break;
        if (!expect_factor) {
            if (expr[pos] != '*') throw ParseError("expected '*' in word expression: " + expr);
            ++pos;
            expect_factor = true;
            continue;
        }
        if (expr[pos] == '1' &&
            (pos + 1 >= expr.size() || !std::isalnum(static_cast<unsigned char>(expr[pos + 1])))) {
            ++pos;
            expect_factor = false;
            continue;
        }
        size_t start = pos;
        while (pos < expr.size() &&
               (std::isalnum(static_cast<unsigned char>(expr[pos])) || expr[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected generator name in: " + expr);
        std::string name = expr.substr(start, pos - start);
        int exponent = 1;
        skip();
        if (pos < expr.size() && expr[pos] == '^') {
            ++pos;
            skip();
            bool neg = pos < expr.size() && expr[pos] == '-';
            if (neg) ++pos;
            size_t ds = pos;
            while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
            if (ds == pos) throw ParseError("expected exponent in: " + expr);
            exponent = std::stoi(expr.substr(ds, pos - ds));
            if (neg) exponent = -exponent;
        }
        int gi = generator_index(name);
        if (exponent < 0 && !gens[static_cast<size_t>(gi)].invertible)
            throw NonInvertibleInverse(name);
        acc = product(acc, generator_power(gi, exponent));
        expect_factor = false;
    }
    return acc;
}

std::string Algebra::element_to_string(const Element& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        if (cs == "1") os << word_to_string(w);
        else if (cs == "-1") os << "-" << word_to_string(w);
        else os << (cs.find_first_of("+-/ ") != std::string::npos && cs[0] != '-' ? "(" + cs + ")" : cs)
                << "*" << word_to_string(w);
    }
    return os.str();
}

std::string Algebra::tensor_to_string(const TensorElement& t) const {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : t.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        if (cs != "1") os << "(" << cs << ")*";
        if (w.empty()) os << "[]";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << "(x)";
            os << word_to_string(w[i]);
        }
    }
    return os.str();
}

TensorElement HopfAlgebra::coproduct(const Element& e) const {
    TensorElement out(field());
    for (const auto& [w, c] : e.terms()) out.add(coproduct_word(w).scaled(c), Scalar::one(field()));
    return out;
}

Scalar HopfAlgebra::counit(const Element& e) const {
    Scalar out = Scalar::zero(field());
    for (const auto& [w, c] : e.terms()) out = out + counit_word(w) * c;
    return out;
}

Element HopfAlgebra::antipode(const Element& e) const {
    Element out(field());
    for (const auto& [w, c] : e.terms()) out.add(antipode_word(w).scaled(c), Scalar::one(field()));
    return out;
}

TensorElement HopfAlgebra::iterated_coproduct(const BasisWord& w, int n) const {
    Element e(field());
    e.add(w, Scalar::one(field()));
    return iterated_coproduct(e, n);
}

TensorElement HopfAlgebra::iterated_coproduct(const Element& e, int n) const {
    if (n == 0) return scalar_tensor(field(), counit(e));
    TensorElement cur = as_tensor(e);
    for (int round = 1; round < n; ++round) {
        TensorElement next(field());
        for (const auto& [w, c] : cur.terms()) {
            // expand the first slot; coassociativity makes the choice immaterial
            TensorElement split = coproduct_word(w[0]);
            for (const auto& [sw, sc] : split.terms()) {
                TensorWord nw = sw;
                nw.insert(nw.end(), w.begin() + 1, w.end());
                next.add(nw, c * sc);
            }
        }
        cur = next;
    }
    return cur;
}

TensorElement HopfAlgebra::tensor_product_elements(const TensorElement& a,
                                                   const TensorElement& b) const {
    TensorElement out(field());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            if (wa.size() != wb.size()) throw ConfigError("tensor product: slot mismatch");
            // componentwise product; expand sums slot by slot
            std::vector<TensorWord> partial{{}};
            std::vector<Scalar> coeffs{ca * cb};
            for (size_t i = 0; i < wa.size(); ++i) {
                Element p = product_words(wa[i], wb[i]);
                std::vector<TensorWord> np;
                std::vector<Scalar> nc;
                for (size_t t = 0; t < partial.size(); ++t)
                    for (const auto& [pw, pc] : p.terms()) {
                        TensorWord ext = partial[t];
                        ext.push_back(pw);
                        np.push_back(std::move(ext));
                        nc.push_back(coeffs[t] * pc);
                    }
                partial = std::move(np);
                coeffs = std::move(nc);
            }
            for (size_t t = 0; t < partial.size(); ++t) out.add(partial[t], coeffs[t]);
        }
    return out;
}

// ---------------------------------------------------------------------------
// characters

Character Character::counit(const HopfAlgebra* H) {
    Character c;
    c.alg_ = H;
    c.counit_ = H;
    c.name_ = "epsilon";
    return c;
}

Character Character::on_generators(const Algebra* A, std::vector<Scalar> values, std::string name) {
    Character c;
    c.alg_ = A;
    c.values_ = std::move(values);
    c.name_ = std::move(name);
    return c;
}

Scalar Character::eval_word(const BasisWord& w) const {
    if (counit_) return counit_->counit_word(w);
    Scalar out = Scalar::one(alg_->field());
    for (const auto& [gen, exp] : alg_->factor_word(w)) {
        const Scalar& v = values_[static_cast<size_t>(gen)];
        if (exp >= 0) {
            for (int i = 0; i < exp; ++i) out = out * v;
        } else {
            Scalar inv = v.inverse();
            for (int i = 0; i < -exp; ++i) out = out * inv;
        }
    }
    return out;
}

Scalar Character::eval(const Element& e) const {
    Scalar out = Scalar::zero(e.field());
    for (const auto& [w, c] : e.terms()) out = out + eval_word(w) * c;
    return out;
}

// ---------------------------------------------------------------------------
// twisted antipodes and checks

Element sigma_antipode(const HopfAlgebra& H, const Element& e, const Element& sigma) {
    if (auto defect = grouplike_defect(H, sigma)) throw NotGrouplike(*defect);
    return H.product(sigma, H.antipode(e));
}

Element twisted_antipode(const HopfAlgebra& H, const ModularPair& pair, const Element& e) {
    Element acc(H.field());
    for (const auto& [w, c] : e.terms()) {
        TensorElement split = H.coproduct_word(w);
        for (const auto& [sw, sc] : split.terms())
            acc.add(H.antipode_word(sw[0]).scaled(pair.delta.eval_word(sw[1]) * sc * c),
                    Scalar::one(H.field()));
    }
    return H.product(pair.sigma, acc);
}

std::optional<std::string> grouplike_defect(const HopfAlgebra& H, const Element& sigma) {
    TensorElement lhs = H.coproduct(sigma);
    TensorElement rhs = tensor_concat(as_tensor(sigma), as_tensor(sigma));
    if (lhs != rhs) return "coproduct(sigma) != sigma(x)sigma for sigma = " + H.element_to_string(sigma);
    if (!H.counit(sigma).is_one()) return "counit(sigma) != 1 for sigma = " + H.element_to_string(sigma);
    return std::nullopt;
}

CheckReport check_character(const HopfAlgebra& H, const Character& chi, long degree_bound) {
    CheckReport rep;
    auto words = H.basis_up_to(degree_bound);
    if (!chi.eval(H.one()).is_one()) rep.note_failure("character: chi(1) != 1");
    ++rep.checked;
    long tested = 0;
    for (const auto& a : words) {
        for (const auto& b : words) {
            if (H.degree(a) + H.degree(b) > degree_bound) continue;
            if (tested >= 2000) break;
            Element ab = H.product_words(a, b);
            Scalar lhs = chi.eval(ab);
            Scalar rhs = chi.eval_word(a) * chi.eval_word(b);
            ++rep.checked;
            ++tested;
            if (lhs != rhs)
                rep.note_failure("character not multiplicative at " + H.word_to_string(a) + " * " +
                                 H.word_to_string(b));
        }
    }
    return rep;
}

CheckReport check_modular_involution(const ModularPair& pair, long degree_bound) {
    const HopfAlgebra& H = *pair.H;
    CheckReport rep;
    if (auto defect = grouplike_defect(H, pair.sigma)) rep.note_failure(*defect);
    ++rep.checked;
    if (pair.delta.eval(pair.sigma) != Scalar::one(H.field()))
        rep.note_failure("delta(sigma) != 1");
    ++rep.checked;
    rep.merge(check_character(H, pair.delta, degree_bound));

    auto words = H.basis_up_to(degree_bound);
    for (const auto& w : words) {
        Element e(H.field());
        e.add(w, Scalar::one(H.field()));
        Element twice = twisted_antipode(H, pair, twisted_antipode(H, pair, e));
        ++rep.checked;
        if (twice != e)
            rep.note_failure("S~^2 != id at word " + H.word_to_string(w) + ": got " +
                             H.element_to_string(twice));
    }
    // guard: composite words, i.e. products of basis pairs
    long tested = 0;
    for (const auto& a : words) {
        for (const auto& b : words) {
            if (H.degree(a) + H.degree(b) > degree_bound) continue;
            if (++tested > 200) break;
            Element ab = H.product_words(a, b);
            Element twice = twisted_antipode(H, pair, twisted_antipode(H, pair, ab));
            ++rep.checked;
            if (twice != ab)
                rep.note_failure("S~^2 != id at product " + H.word_to_string(a) + " * " +
                                 H.word_to_string(b));
        }
        if (tested > 200) break;
    }
    return rep;
}

CheckReport check_hopf_axioms(const HopfAlgebra& H, long degree_bound) {
    CheckReport rep;
    const FieldId& f = H.field();
    auto words = H.basis_up_to(degree_bound);

    for (const auto& w : words) {
        Element e(f);
        e.add(w, Scalar::one(f));
        TensorElement d2 = H.coproduct(e);

        // coassociativity
        TensorElement left(f), right(f);
        for (const auto& [t, c] : d2.terms()) {
            left.add(tensor_concat(H.coproduct_word(t[0]), tensor_of_words(f, {t[1]})), c);
            right.add(tensor_concat(tensor_of_words(f, {t[0]}), H.coproduct_word(t[1])), c);
        }
        ++rep.checked;
        if (left != right) rep.note_failure("coassociativity fails at " + H.word_to_string(w));

        // counit law
        Element lc(f), rc(f);
        for (const auto& [t, c] : d2.terms()) {
            lc.add(t[1], c * H.counit_word(t[0]));
            rc.add(t[0], c * H.counit_word(t[1]));
        }
        ++rep.checked;
        if (lc != e || rc != e) rep.note_failure("counit law fails at " + H.word_to_string(w));

        // antipode identity
        Element sa(f), sb(f);
        for (const auto& [t, c] : d2.terms()) {
            sa.add(H.product(H.antipode_word(t[0]), t[1]), c);
            sb.add(H.product(Element(f, t[0]), H.antipode_word(t[1])).scaled(c), Scalar::one(f));
        }
        Element eta_eps = H.one().scaled(H.counit_word(w));
        ++rep.checked;
        if (sa != eta_eps || sb != eta_eps)
            rep.note_failure("antipode identity fails at " + H.word_to_string(w));
    }

    // bialgebra compatibility on word pairs
    long tested = 0;
    for (const auto& a : words) {
        for (const auto& b : words) {
            if (H.degree(a) + H.degree(b) > degree_bound) continue;
            if (++tested > 500) break;
            Element ab = H.product_words(a, b);
            TensorElement lhs = H.coproduct(ab);
            TensorElement rhs = H.tensor_product_elements(H.coproduct_word(a), H.coproduct_word(b));
            ++rep.checked;
            if (lhs != rhs)
                rep.note_failure("coproduct not multiplicative at " + H.word_to_string(a) + " * " +
                                 H.word_to_string(b));
            ++rep.checked;
            if (H.counit(ab) != H.counit_word(a) * H.counit_word(b))
                rep.note_failure("counit not multiplicative at " + H.word_to_string(a) + " * " +
                                 H.word_to_string(b));
        }
        if (tested > 500) break;
    }
    return rep;
}

CheckReport check_flags(const HopfAlgebra& H, long degree_bound) {
    CheckReport rep;
    auto words = H.basis_up_to(degree_bound);
    bool comm = true, cocomm = true;
    std::string comm_wit, cocomm_wit;
    long tested = 0;
    for (const auto& a : words) {
        TensorElement d = H.coproduct_word(a);
        TensorElement flip(H.field());
        for (const auto& [t, c] : d.terms()) flip.add(TensorWord{t[1], t[0]}, c);
        if (flip != d && cocomm) {
            cocomm = false;
            cocomm_wit = H.word_to_string(a);
        }
        for (const auto& b : words) {
            if (H.degree(a) + H.degree(b) > degree_bound || ++tested > 500) continue;
            if (H.product_words(a, b) != H.product_words(b, a) && comm) {
                comm = false;
                comm_wit = H.word_to_string(a) + "," + H.word_to_string(b);
            }
        }
    }
    rep.checked += static_cast<long>(words.size()) + tested;
    if (comm != H.commutative_flag())
        rep.note_failure("commutative flag mismatch" + (comm ? "" : " witness " + comm_wit));
    if (cocomm != H.cocommutative_flag())
        rep.note_failure("cocommutative flag mismatch" + (cocomm ? "" : " witness " + cocomm_wit));
    return rep;
}

// ---------------------------------------------------------------------------
// coactions and traces

TensorElement CoactionStructure::beta(const Element& e) const {
    TensorElement out(e.field());
    for (const auto& [w, c] : e.terms()) out.add(beta_word(w).scaled(c), Scalar::one(e.field()));
    return out;
}

CoactionStructure trivial_coaction(const Algebra& A, const HopfAlgebra& H) {
    CoactionStructure c;
    c.A = &A;
    c.H = &H;
    c.name = "trivial";
    const HopfAlgebra* Hp = &H;
    FieldId f = A.field();
    c.beta_word = [Hp, f](const BasisWord& w) {
        return tensor_concat(as_tensor(Element(f, w)), as_tensor(Hp->one()));
    };
    return c;
}

CoactionStructure self_coaction(const HopfAlgebra& H) {
    CoactionStructure c;
    c.A = &H;
    c.H = &H;
    c.name = "self";
    const HopfAlgebra* Hp = &H;
    c.beta_word = [Hp](const BasisWord& w) { return Hp->coproduct_word(w); };
    return c;
}

namespace {

/// Product in A (x) H with the untwisted tensor algebra structure.
TensorElement mixed_product(const Algebra& A, const HopfAlgebra& H, const TensorElement& x,
                            const TensorElement& y) {
    TensorElement out(x.field());
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) {
            Element pa = A.product_words(wx[0], wy[0]);
            Element ph = H.product_words(wx[1], wy[1]);
            for (const auto& [a, ca] : pa.terms())
                for (const auto& [h, ch] : ph.terms()) out.add(TensorWord{a, h}, cx * cy * ca * ch);
        }
    return out;
}

}  // namespace

CheckReport check_comodule_axioms(const CoactionStructure& c, long degree_bound) {
    CheckReport rep;
    const Algebra& A = *c.A;
    const HopfAlgebra& H = *c.H;
    const FieldId& f = A.field();
    auto words = A.basis_up_to(degree_bound);

    for (const auto& w : words) {
        TensorElement b = c.beta_word(w);

        // coassociativity: (beta (x) id) beta = (id (x) Delta) beta
        TensorElement lhs(f), rhs(f);
        for (const auto& [t, cc] : b.terms()) {
            lhs.add(tensor_concat(c.beta_word(t[0]), tensor_of_words(f, {t[1]})), cc);
            rhs.add(tensor_concat(tensor_of_words(f, {t[0]}), H.coproduct_word(t[1])), cc);
        }
        ++rep.checked;
        if (lhs != rhs) rep.note_failure("coaction coassociativity fails at " + A.word_to_string(w));

        // counit law: (id (x) eps) beta = id
        Element back(f);
        for (const auto& [t, cc] : b.terms()) back.add(t[0], cc * H.counit_word(t[1]));
        ++rep.checked;
        if (back != Element(f, w))
            rep.note_failure("coaction counit law fails at " + A.word_to_string(w));
    }

    long tested = 0;
    for (const auto& a : words) {
        for (const auto& b : words) {
            if (A.degree(a) + A.degree(b) > degree_bound || ++tested > 500) continue;
            TensorElement lhs = c.beta(A.product_words(a, b));
            TensorElement rhs = mixed_product(A, H, c.beta_word(a), c.beta_word(b));
            ++rep.checked;
            if (lhs != rhs)
                rep.note_failure("beta not an algebra map at " + A.word_to_string(a) + " * " +
                                 A.word_to_string(b));
        }
    }
    return rep;
}

Scalar TraceFunctional::eval(const Element& e) const {
    Scalar out = Scalar::zero(e.field());
    for (const auto& [w, c] : e.terms()) out = out + tr_word(w) * c;
    return out;
}

TraceReport check_trace_properties(const TraceFunctional& tr, const CoactionStructure& c,
                                   const ModularPair& pair, long degree_bound) {
    TraceReport rep;
    const Algebra& A = *c.A;
    const FieldId& f = A.field();
    auto words = A.basis_up_to(degree_bound);

    long tested = 0;
    for (const auto& a : words) {
        TensorElement ba = c.beta_word(a);

        // sigma invariance: sum Tr(a^(0)) a^(1) = Tr(a) sigma
        Element lhs(f);
        for (const auto& [t, cc] : ba.terms()) lhs.add(t[1], cc * tr.tr_word(t[0]));
        Element rhs = pair.sigma.scaled(tr.tr_word(a));
        ++rep.sigma_invariant.checked;
        if (lhs != rhs)
            rep.sigma_invariant.note_failure("sigma-invariance fails at " + A.word_to_string(a));

        for (const auto& b : words) {
            if (A.degree(a) + A.degree(b) > degree_bound || ++tested > 2000) continue;
            // delta trace: Tr(ab) = sum Tr(b a^(0)) delta(a^(1))
            Scalar l = tr.eval(A.product_words(a, b));
            Scalar r = Scalar::zero(f);
            for (const auto& [t, cc] : ba.terms())
                r = r + tr.eval(A.product_words(b, t[0])) * pair.delta.eval_word(t[1]) * cc;
            ++rep.delta_trace.checked;
            if (l != r)
                rep.delta_trace.note_failure("delta-trace fails at " + A.word_to_string(a) + ", " +
                                             A.word_to_string(b));
        }
    }
    return rep;
}

}  // namespace hopfcyc
