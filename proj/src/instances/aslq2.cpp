#include "hopfcyc/errors.hpp"
#include "hopfcyc/instances.hpp"

namespace hopfcyc {

ASLq2::ASLq2() : HopfAlgebra(FieldId::rational_functions()) {}

Element ASLq2::mul_by_generator(const Element& e, int gen) const {
    const FieldId& f = field();
    Element out(f);
    for (const auto& [w, c] : e.terms()) {
        int i = w.data[0], j = w.data[1], k = w.data[2], l = w.data[3];
        switch (gen) {
            case 0:  // x
                if (l == 0) {
                    out.add(BasisWord{{i + 1, j, k, 0}}, Scalar::q_power(j + k) * c);
                } else {
                    // u^j v^k y^l x = u^j v^k y^{l-1} + q^{2l-1} u^{j+1} v^{k+1} y^{l-1}
                    out.add(BasisWord{{0, j, k, l - 1}}, c);
                    out.add(BasisWord{{0, j + 1, k + 1, l - 1}}, Scalar::q_power(2 * l - 1) * c);
                }
                break;
            case 1:  // u
                out.add(BasisWord{{i, j + 1, k, l}}, Scalar::q_power(l) * c);
                break;
            case 2:  // v
                out.add(BasisWord{{i, j, k + 1, l}}, Scalar::q_power(l) * c);
                break;
            case 3:  // y
                if (i == 0) {
                    out.add(BasisWord{{0, j, k, l + 1}}, c);
                } else {
                    // x^i u^j v^k y = q^{-(j+k)} (x^{i-1} u^j v^k + q^-1 x^{i-1} u^{j+1} v^{k+1})
                    Scalar base = Scalar::q_power(-(j + k)) * c;
                    out.add(BasisWord{{i - 1, j, k, 0}}, base);
                    out.add(BasisWord{{i - 1, j + 1, k + 1, 0}}, Scalar::q_power(-1) * base);
                }
                break;
            default:
                throw ConfigError("aslq2: bad generator");
        }
    }
    return out;
}

Element ASLq2::product_words(const BasisWord& a, const BasisWord& b) const {
    Element acc(field(), a);
    for (int i = 0; i < b.data[0]; ++i) acc = mul_by_generator(acc, 0);
    for (int j = 0; j < b.data[1]; ++j) acc = mul_by_generator(acc, 1);
    for (int k = 0; k < b.data[2]; ++k) acc = mul_by_generator(acc, 2);
    for (int l = 0; l < b.data[3]; ++l) acc = mul_by_generator(acc, 3);
    return acc;
}

std::vector<BasisWord> ASLq2::basis_up_to(long degree_bound) const {
    std::vector<BasisWord> out;
    for (long d = 0; d <= degree_bound; ++d)
        for (long i = 0; i <= d; ++i)
            for (long j = 0; i + j <= d; ++j)
                for (long k = 0; i + j + k <= d; ++k) {
                    long l = d - i - j - k;
                    if (i * l != 0 && i > 0 && l > 0) continue;
                    out.push_back(BasisWord{{static_cast<int32_t>(i), static_cast<int32_t>(j),
                                             static_cast<int32_t>(k), static_cast<int32_t>(l)}});
                }
    return out;
}

std::string ASLq2::word_to_string(const BasisWord& w) const {
    int i = w.data[0], j = w.data[1], k = w.data[2], l = w.data[3];
    if (!i && !j && !k && !l) return "1";
    std::string s;
    auto app = [&](const char* g, int e) {
        if (!e) return;
        if (!s.empty()) s += "*";
        s += g;
        if (e != 1) s += "^" + std::to_string(e);
    };
    app("x", i);
    app("u", j);
    app("v", k);
    app("y", l);
    return s;
}

std::vector<Algebra::GeneratorInfo> ASLq2::generators() const {
    return {{"x", false}, {"u", false}, {"v", false}, {"y", false}};
}

Element ASLq2::generator_power(int gen, int exponent) const {
    if (exponent < 0) throw NonInvertibleInverse(generators()[static_cast<size_t>(gen)].name);
    BasisWord w{{0, 0, 0, 0}};
    w.data[static_cast<size_t>(gen)] = exponent;
    return Element(field(), w);
}

std::vector<std::pair<int, int>> ASLq2::factor_word(const BasisWord& w) const {
    std::vector<std::pair<int, int>> out;
    for (int g = 0; g < 4; ++g)
        if (w.data[static_cast<size_t>(g)]) out.push_back({g, w.data[static_cast<size_t>(g)]});
    return out;
}

TensorElement ASLq2::coproduct_word(const BasisWord& w) const {
    auto it = coproduct_memo_.find(w);
    if (it != coproduct_memo_.end()) return it->second;
    const FieldId& f = field();
    auto wd = [](int i, int j, int k, int l) { return BasisWord{{i, j, k, l}}; };

    TensorElement dx(f), du(f), dv(f), dy(f);
    dx.add(TensorWord{wd(1, 0, 0, 0), wd(1, 0, 0, 0)}, Scalar::one(f));
    dx.add(TensorWord{wd(0, 1, 0, 0), wd(0, 0, 1, 0)}, Scalar::one(f));
    du.add(TensorWord{wd(1, 0, 0, 0), wd(0, 1, 0, 0)}, Scalar::one(f));
    du.add(TensorWord{wd(0, 1, 0, 0), wd(0, 0, 0, 1)}, Scalar::one(f));
    dv.add(TensorWord{wd(0, 0, 1, 0), wd(1, 0, 0, 0)}, Scalar::one(f));
    dv.add(TensorWord{wd(0, 0, 0, 1), wd(0, 0, 1, 0)}, Scalar::one(f));
    dy.add(TensorWord{wd(0, 0, 1, 0), wd(0, 1, 0, 0)}, Scalar::one(f));
    dy.add(TensorWord{wd(0, 0, 0, 1), wd(0, 0, 0, 1)}, Scalar::one(f));

    TensorElement acc = tensor_of_words(f, {wd(0, 0, 0, 0), wd(0, 0, 0, 0)});
    for (int t = 0; t < w.data[0]; ++t) acc = tensor_product_elements(acc, dx);
    for (int t = 0; t < w.data[1]; ++t) acc = tensor_product_elements(acc, du);
    for (int t = 0; t < w.data[2]; ++t) acc = tensor_product_elements(acc, dv);
    for (int t = 0; t < w.data[3]; ++t) acc = tensor_product_elements(acc, dy);
    coproduct_memo_.emplace(w, acc);
    return acc;
}

Scalar ASLq2::counit_word(const BasisWord& w) const {
    return (w.data[1] == 0 && w.data[2] == 0) ? Scalar::one(field()) : Scalar::zero(field());
}

Element ASLq2::antipode_word(const BasisWord& w) const {
    auto it = antipode_memo_.find(w);
    if (it != antipode_memo_.end()) return it->second;
    const FieldId& f = field();
    int i = w.data[0], j = w.data[1], k = w.data[2], l = w.data[3];
    // S(x^i u^j v^k y^l) = S(y)^l S(v)^k S(u)^j S(x)^i
    //                    = x^l (-q^-1 v)^k (-q u)^j y^i
    Element acc(f, BasisWord{{l, 0, 0, 0}});
    for (int t = 0; t < k; ++t) acc = mul_by_generator(acc, 2).scaled(-Scalar::q_power(-1));
    for (int t = 0; t < j; ++t) acc = mul_by_generator(acc, 1).scaled(-Scalar::q_power(1));
    for (int t = 0; t < i; ++t) acc = mul_by_generator(acc, 3);
    antipode_memo_.emplace(w, acc);
    return acc;
}

}  // namespace hopfcyc
