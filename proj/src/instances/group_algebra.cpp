#include "hopfcyc/errors.hpp"
#include "hopfcyc/instances.hpp"

namespace hopfcyc {

GroupAlgebra::GroupAlgebra(GroupTable table, FieldId f)
    : HopfAlgebra(std::move(f)), table_(std::move(table)) {}

std::string GroupAlgebra::name() const { return "group:" + table_.name; }

BasisWord GroupAlgebra::unit_word() const { return BasisWord{{table_.identity}}; }

Element GroupAlgebra::product_words(const BasisWord& a, const BasisWord& b) const {
    return Element(field(), BasisWord{{table_.mul[static_cast<size_t>(a.data[0])][static_cast<size_t>(b.data[0])]}});
}

std::vector<BasisWord> GroupAlgebra::basis_up_to(long) const {
    std::vector<BasisWord> out;
    for (int i = 0; i < table_.order(); ++i) out.push_back(BasisWord{{i}});
    return out;
}

std::string GroupAlgebra::word_to_string(const BasisWord& w) const {
    return table_.element_names[static_cast<size_t>(w.data[0])];
}

std::vector<Algebra::GeneratorInfo> GroupAlgebra::generators() const {
    std::vector<GeneratorInfo> out;
    for (const auto& n : table_.element_names) out.push_back({n, true});
    return out;
}

Element GroupAlgebra::generator_power(int gen, int exponent) const {
    int g = exponent >= 0 ? gen : table_.inverse[static_cast<size_t>(gen)];
    int e = exponent >= 0 ? exponent : -exponent;
    int acc = table_.identity;
    for (int i = 0; i < e; ++i) acc = table_.mul[static_cast<size_t>(acc)][static_cast<size_t>(g)];
    return Element(field(), BasisWord{{acc}});
}

std::vector<std::pair<int, int>> GroupAlgebra::factor_word(const BasisWord& w) const {
    if (w.data[0] == table_.identity) return {};
    return {{w.data[0], 1}};
}

TensorElement GroupAlgebra::coproduct_word(const BasisWord& w) const {
    return tensor_of_words(field(), TensorWord{w, w});
}

Scalar GroupAlgebra::counit_word(const BasisWord&) const { return Scalar::one(field()); }

Element GroupAlgebra::antipode_word(const BasisWord& w) const {
    return Element(field(), BasisWord{{table_.inverse[static_cast<size_t>(w.data[0])]}});
}

BasisWord GroupAlgebra::word_of(int element_index) const { return BasisWord{{element_index}}; }

BasisWord GroupAlgebra::element_by_name(const std::string& name) const {
    for (int i = 0; i < table_.order(); ++i)
        if (table_.element_names[static_cast<size_t>(i)] == name) return BasisWord{{i}};
    throw UnknownGenerator(name);
}

}  // namespace hopfcyc
