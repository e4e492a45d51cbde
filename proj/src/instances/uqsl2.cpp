#include "hopfcyc/errors.hpp"
#include "hopfcyc/instances.hpp"

namespace hopfcyc {

namespace {
// 1/(q - q^-1) = q/(q^2 - 1)
Scalar qc() {
    return Scalar::ratfun(ZPoly::q_power(1), ZPoly::q_power(2) - ZPoly(Int(1)));
}
}  // namespace

UqSl2::UqSl2() : HopfAlgebra(FieldId::rational_functions()) {}

Element UqSl2::mul_by_generator(const Element& e, int gen, int sign) const {
    const FieldId& f = field();
    Element out(f);
    for (const auto& [w, c] : e.terms()) {
        int l = w.data[0], m = w.data[1], n = w.data[2];
        switch (gen) {
            case 0: {  // sigma^sign: commute left past x^m y^n
                Scalar coef = Scalar::q_power(sign * (2 * n - 2 * m)) * c;
                out.add(BasisWord{{l + sign, m, n}}, coef);
                break;
            }
            case 1: {  // x
                if (n == 0) {
                    out.add(BasisWord{{l, m + 1, 0}}, c);
                } else {
                    // s^l x^m y^n x = (s^l x^m y^{n-1} x) y - c q^{2(n-1)-2m} s^{l+1} x^m y^{n-1}
                    //                                        + c q^{-2(n-1)+2m} s^{l-1} x^m y^{n-1}
                    Element sub(f);
                    sub.add(BasisWord{{l, m, n - 1}}, c);
                    Element sx = mul_by_generator(sub, 1, 1);
                    for (const auto& [sw, sc] : sx.terms())
                        out.add(BasisWord{{sw.data[0], sw.data[1], sw.data[2] + 1}}, sc);
                    out.add(BasisWord{{l + 1, m, n - 1}},
                            -(qc() * Scalar::q_power(2 * (n - 1) - 2 * m) * c));
                    out.add(BasisWord{{l - 1, m, n - 1}},
                            qc() * Scalar::q_power(-2 * (n - 1) + 2 * m) * c);
                }
                break;
            }
            case 2:
                out.add(BasisWord{{l, m, n + 1}}, c);
                break;
            default:
                throw ConfigError("uqsl2: bad generator");
        }
    }
    return out;
}

Element UqSl2::product_words(const BasisWord& a, const BasisWord& b) const {
    Element acc(field(), a);
    int l = b.data[0], m = b.data[1], n = b.data[2];
    int sl = l >= 0 ? 1 : -1;
    for (int i = 0; i < std::abs(l); ++i) acc = mul_by_generator(acc, 0, sl);
    for (int i = 0; i < m; ++i) acc = mul_by_generator(acc, 1, 1);
    for (int i = 0; i < n; ++i) acc = mul_by_generator(acc, 2, 1);
    return acc;
}

std::vector<BasisWord> UqSl2::basis_up_to(long degree_bound) const {
    std::vector<BasisWord> out;
    for (long d = 0; d <= degree_bound; ++d)
        for (long m = 0; m <= d; ++m)
            for (long n = 0; n + m <= d; ++n) {
                long la = d - m - n;
                if (la == 0) {
                    if (d == m + n) out.push_back(BasisWord{{0, static_cast<int32_t>(m), static_cast<int32_t>(n)}});
                } else {
                    out.push_back(BasisWord{{static_cast<int32_t>(la), static_cast<int32_t>(m), static_cast<int32_t>(n)}});
                    out.push_back(BasisWord{{static_cast<int32_t>(-la), static_cast<int32_t>(m), static_cast<int32_t>(n)}});
                }
            }
    return out;
}

std::string UqSl2::word_to_string(const BasisWord& w) const {
    int l = w.data[0], m = w.data[1], n = w.data[2];
    if (!l && !m && !n) return "1";
    std::string s;
    auto app = [&](const std::string& g, int e) {
        if (!e) return;
        if (!s.empty()) s += "*";
        s += g;
        if (e != 1) s += "^" + std::to_string(e);
    };
    app("s", l);
    app("x", m);
    app("y", n);
    return s;
}

std::vector<Algebra::GeneratorInfo> UqSl2::generators() const {
    return {{"s", true}, {"x", false}, {"y", false}};
}

Element UqSl2::generator_power(int gen, int exponent) const {
    if (exponent < 0 && gen != 0) throw NonInvertibleInverse(generators()[static_cast<size_t>(gen)].name);
    BasisWord w{{0, 0, 0}};
    w.data[static_cast<size_t>(gen)] = exponent;
    return Element(field(), w);
}

std::vector<std::pair<int, int>> UqSl2::factor_word(const BasisWord& w) const {
    std::vector<std::pair<int, int>> out;
    if (w.data[0]) out.push_back({0, w.data[0]});
    if (w.data[1]) out.push_back({1, w.data[1]});
    if (w.data[2]) out.push_back({2, w.data[2]});
    return out;
}

TensorElement UqSl2::coproduct_word(const BasisWord& w) const {
    auto it = coproduct_memo_.find(w);
    if (it != coproduct_memo_.end()) return it->second;
    const FieldId& f = field();
    int l = w.data[0], m = w.data[1], n = w.data[2];

    // Delta(s^l) = s^l (x) s^l, Delta(x) = x(x)s + 1(x)x, Delta(y) = y(x)1 + s^-1(x)y
    TensorElement acc = tensor_of_words(f, {BasisWord{{l, 0, 0}}, BasisWord{{l, 0, 0}}});
    TensorElement dx(f), dy(f);
    dx.add(TensorWord{BasisWord{{0, 1, 0}}, BasisWord{{1, 0, 0}}}, Scalar::one(f));
    dx.add(TensorWord{BasisWord{{0, 0, 0}}, BasisWord{{0, 1, 0}}}, Scalar::one(f));
    dy.add(TensorWord{BasisWord{{0, 0, 1}}, BasisWord{{0, 0, 0}}}, Scalar::one(f));
    dy.add(TensorWord{BasisWord{{-1, 0, 0}}, BasisWord{{0, 0, 1}}}, Scalar::one(f));
    for (int i = 0; i < m; ++i) acc = tensor_product_elements(acc, dx);
    for (int i = 0; i < n; ++i) acc = tensor_product_elements(acc, dy);
    coproduct_memo_.emplace(w, acc);
    return acc;
}

Scalar UqSl2::counit_word(const BasisWord& w) const {
    return (w.data[1] == 0 && w.data[2] == 0) ? Scalar::one(field()) : Scalar::zero(field());
}

Element UqSl2::antipode_word(const BasisWord& w) const {
    auto it = antipode_memo_.find(w);
    if (it != antipode_memo_.end()) return it->second;
    const FieldId& f = field();
    int l = w.data[0], m = w.data[1], n = w.data[2];
    // S anti-multiplicative: S(s^l x^m y^n) = S(y)^n S(x)^m s^-l,
    // with S(x) = -x s^-1 and S(y) = -s y.
    Element sy(f);
    sy.add(BasisWord{{1, 0, 1}}, -Scalar::one(f));
    Element sx(f);
    sx.add(BasisWord{{-1, 1, 0}}, -Scalar::q_power(2));  // x s^-1 = q^2 s^-1 x
    Element acc = one();
    for (int i = 0; i < n; ++i) acc = product(acc, sy);
    for (int i = 0; i < m; ++i) acc = product(acc, sx);
    acc = product(acc, Element(f, BasisWord{{-l, 0, 0}}));
    antipode_memo_.emplace(w, acc);
    return acc;
}

CheckReport verify_s2_conjugation(const UqSl2& H, long degree_bound) {
    CheckReport rep;
    Element sig = H.generator_power(0, 1);
    Element sig_inv = H.generator_power(0, -1);
    for (const auto& w : H.basis_up_to(degree_bound)) {
        Element e(H.field(), w);
        Element lhs = H.antipode(H.antipode(e));
        Element rhs = H.product(H.product(sig, e), sig_inv);
        ++rep.checked;
        if (lhs != rhs)
            rep.note_failure("S^2 != sigma (.) sigma^-1 at " + H.word_to_string(w));
    }
    return rep;
}

}  // namespace hopfcyc
