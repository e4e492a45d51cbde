#include "hopfcyc/errors.hpp"
#include "hopfcyc/instances.hpp"

namespace hopfcyc {

FunctionAlgebra::FunctionAlgebra(GroupTable table, FieldId f)
    : HopfAlgebra(std::move(f)), table_(std::move(table)) {}

std::string FunctionAlgebra::name() const { return "fungrp:" + table_.name; }

BasisWord FunctionAlgebra::unit_word() const {
    throw ConfigError("k^G: the unit is not a basis word");
}

Element FunctionAlgebra::one() const {
    Element e(field());
    for (int i = 0; i < table_.order(); ++i) e.add(BasisWord{{i}}, Scalar::one(field()));
    return e;
}

Element FunctionAlgebra::product_words(const BasisWord& a, const BasisWord& b) const {
    Element out(field());
    if (a.data[0] == b.data[0]) out.add(a, Scalar::one(field()));
    return out;
}

std::vector<BasisWord> FunctionAlgebra::basis_up_to(long) const {
    std::vector<BasisWord> out;
    for (int i = 0; i < table_.order(); ++i) out.push_back(BasisWord{{i}});
    return out;
}

std::string FunctionAlgebra::word_to_string(const BasisWord& w) const {
    return "e[" + table_.element_names[static_cast<size_t>(w.data[0])] + "]";
}

std::vector<Algebra::GeneratorInfo> FunctionAlgebra::generators() const {
    std::vector<GeneratorInfo> out;
    for (const auto& n : table_.element_names) out.push_back({"e[" + n + "]", false});
    return out;
}

Element FunctionAlgebra::generator_power(int gen, int exponent) const {
    if (exponent < 0) throw NonInvertibleInverse(generators()[static_cast<size_t>(gen)].name);
    if (exponent == 0) return one();
    return Element(field(), BasisWord{{gen}});  // idempotent basis
}

std::vector<std::pair<int, int>> FunctionAlgebra::factor_word(const BasisWord& w) const {
    return {{w.data[0], 1}};
}

TensorElement FunctionAlgebra::coproduct_word(const BasisWord& w) const {
    // dual of the group law: Delta(e_g) = sum_{ab = g} e_a (x) e_b
    TensorElement out(field());
    int n = table_.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table_.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] == w.data[0])
                out.add(TensorWord{BasisWord{{a}}, BasisWord{{b}}}, Scalar::one(field()));
    return out;
}

Scalar FunctionAlgebra::counit_word(const BasisWord& w) const {
    return w.data[0] == table_.identity ? Scalar::one(field()) : Scalar::zero(field());
}

Element FunctionAlgebra::antipode_word(const BasisWord& w) const {
    return Element(field(), BasisWord{{table_.inverse[static_cast<size_t>(w.data[0])]}});
}

}  // namespace hopfcyc
