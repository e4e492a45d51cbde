#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

/// Finite group given by its multiplication table. Validated on construction:
/// two-sided identity, associativity, inverses.
struct GroupTable {
    std::string name;
    std::vector<std::string> element_names;
    std::vector<std::vector<int>> mul;  // mul[i][j] = index of g_i g_j
    int identity = 0;
    std::vector<int> inverse;
    bool commutative = false;

    int order() const { return static_cast<int>(element_names.size()); }
    void validate();  // fills identity/inverse/commutative; throws InvalidGroupTable

    static GroupTable builtin(const std::string& name);  // Z2 Z3 Z4 S3
    static GroupTable cyclic(int n);
    static GroupTable from_file(const std::string& path);
};

/// Group algebra kG. Basis: group elements; Delta(g) = g(x)g, eps(g) = 1,
/// S(g) = g^{-1}.
class GroupAlgebra final : public HopfAlgebra {
public:
    GroupAlgebra(GroupTable table, FieldId f);

    std::string name() const override;
    BasisWord unit_word() const override;
    Element product_words(const BasisWord& a, const BasisWord& b) const override;
    long degree(const BasisWord&) const override { return 0; }
    std::vector<BasisWord> basis_up_to(long) const override;
    bool finite_dimensional() const override { return true; }
    bool commutative_flag() const override { return table_.commutative; }
    GradingKind homology_grading() const override { return GradingKind::Finite; }
    std::string word_to_string(const BasisWord& w) const override;
    std::vector<GeneratorInfo> generators() const override;
    Element generator_power(int gen, int exponent) const override;
    std::vector<std::pair<int, int>> factor_word(const BasisWord& w) const override;

    TensorElement coproduct_word(const BasisWord& w) const override;
    Scalar counit_word(const BasisWord&) const override;
    Element antipode_word(const BasisWord& w) const override;
    bool cocommutative_flag() const override { return true; }

    const GroupTable& table() const { return table_; }
    BasisWord word_of(int element_index) const;
    BasisWord element_by_name(const std::string& name) const;

private:
    GroupTable table_;
};

/// Function algebra k^G on a finite group: delta-function basis, pointwise
/// product, coproduct dual to the group law. The unit is sum_g e_g.
class FunctionAlgebra final : public HopfAlgebra {
public:
    FunctionAlgebra(GroupTable table, FieldId f);

    std::string name() const override;
    bool unit_is_word() const override { return false; }
    BasisWord unit_word() const override;  // throws
    Element one() const override;
    Element product_words(const BasisWord& a, const BasisWord& b) const override;
    long degree(const BasisWord&) const override { return 0; }
    std::vector<BasisWord> basis_up_to(long) const override;
    bool finite_dimensional() const override { return true; }
    bool commutative_flag() const override { return true; }
    GradingKind homology_grading() const override { return GradingKind::Finite; }
    std::string word_to_string(const BasisWord& w) const override;
    std::vector<GeneratorInfo> generators() const override;
    Element generator_power(int gen, int exponent) const override;
    std::vector<std::pair<int, int>> factor_word(const BasisWord& w) const override;

    TensorElement coproduct_word(const BasisWord& w) const override;
    Scalar counit_word(const BasisWord& w) const override;
    Element antipode_word(const BasisWord& w) const override;
    bool cocommutative_flag() const override { return table_.commutative; }

    const GroupTable& table() const { return table_; }

private:
    GroupTable table_;
};

/// Tensor algebra T(V) on dim V letters; letters are primitive. Optional
/// weight cap: any operation whose result exceeds it throws CapExceeded.
class TensorAlgebra final : public HopfAlgebra {
public:
    TensorAlgebra(int dim, FieldId f, long weight_cap = 0);

    std::string name() const override;
    BasisWord unit_word() const override { return BasisWord{}; }
    Element product_words(const BasisWord& a, const BasisWord& b) const override;
    long degree(const BasisWord& w) const override { return static_cast<long>(w.data.size()); }
    std::vector<BasisWord> basis_up_to(long degree_bound) const override;
    bool finite_dimensional() const override { return false; }
    bool commutative_flag() const override { return dim_ <= 1; }
    GradingKind homology_grading() const override { return GradingKind::Weight; }
    std::string word_to_string(const BasisWord& w) const override;
    std::vector<GeneratorInfo> generators() const override;
    Element generator_power(int gen, int exponent) const override;
    std::vector<std::pair<int, int>> factor_word(const BasisWord& w) const override;

    TensorElement coproduct_word(const BasisWord& w) const override;
    Scalar counit_word(const BasisWord& w) const override;
    Element antipode_word(const BasisWord& w) const override;
    bool cocommutative_flag() const override { return true; }

    int dim() const { return dim_; }
    long weight_cap() const { return cap_; }

private:
    int dim_;
    long cap_;
};

/// Laurent polynomials k[z, z^-1]; z is grouplike.
class LaurentAlgebra final : public HopfAlgebra {
public:
    explicit LaurentAlgebra(FieldId f);

    std::string name() const override;
    BasisWord unit_word() const override { return BasisWord{{0}}; }
    Element product_words(const BasisWord& a, const BasisWord& b) const override;
    long degree(const BasisWord& w) const override { return std::abs(static_cast<long>(w.data[0])); }
    std::vector<BasisWord> basis_up_to(long degree_bound) const override;
    bool finite_dimensional() const override { return false; }
    bool commutative_flag() const override { return true; }
    std::string word_to_string(const BasisWord& w) const override;
    std::vector<GeneratorInfo> generators() const override;
    Element generator_power(int gen, int exponent) const override;
    std::vector<std::pair<int, int>> factor_word(const BasisWord& w) const override;

    TensorElement coproduct_word(const BasisWord& w) const override;
    Scalar counit_word(const BasisWord&) const override;
    Element antipode_word(const BasisWord& w) const override;
    bool cocommutative_flag() const override { return true; }

    BasisWord z_power(int l) const { return BasisWord{{l}}; }
};

/// U_q(sl2) over Q(q): PBW basis sigma^l x^m y^n, l in Z, m, n >= 0.
/// Relations: sigma x = q^2 x sigma, sigma y = q^-2 y sigma,
/// xy - yx = (sigma - sigma^-1)/(q - q^-1).
class UqSl2 final : public HopfAlgebra {
public:
    UqSl2();

    std::string name() const override { return "uqsl2"; }
    BasisWord unit_word() const override { return BasisWord{{0, 0, 0}}; }
    Element product_words(const BasisWord& a, const BasisWord& b) const override;
    long degree(const BasisWord& w) const override {
        return std::abs(static_cast<long>(w.data[0])) + w.data[1] + w.data[2];
    }
    std::vector<BasisWord> basis_up_to(long degree_bound) const override;
    bool finite_dimensional() const override { return false; }
    bool commutative_flag() const override { return false; }
    std::string word_to_string(const BasisWord& w) const override;
    std::vector<GeneratorInfo> generators() const override;
    Element generator_power(int gen, int exponent) const override;
    std::vector<std::pair<int, int>> factor_word(const BasisWord& w) const override;

    TensorElement coproduct_word(const BasisWord& w) const override;
    Scalar counit_word(const BasisWord& w) const override;
    Element antipode_word(const BasisWord& w) const override;
    bool cocommutative_flag() const override { return false; }
    long antipode_degree_factor() const override { return 2; }

    BasisWord word_lmn(int l, int m, int n) const { return BasisWord{{l, m, n}}; }

private:
    Element mul_by_generator(const Element& e, int gen, int sign) const;
    mutable std::map<BasisWord, TensorElement> coproduct_memo_;
    mutable std::map<BasisWord, Element> antipode_memo_;
};

/// A(SL_q(2)) over Q(q): basis x^i u^j v^k y^l with i*l = 0.
/// Relations: ux = qxu, vx = qxv, yu = quy, yv = qvy, uv = vu,
/// xy = 1 + q^-1 uv, yx = 1 + q uv.
class ASLq2 final : public HopfAlgebra {
public:
    ASLq2();

    std::string name() const override { return "aslq2"; }
    BasisWord unit_word() const override { return BasisWord{{0, 0, 0, 0}}; }
    Element product_words(const BasisWord& a, const BasisWord& b) const override;
    long degree(const BasisWord& w) const override {
        return w.data[0] + w.data[1] + w.data[2] + w.data[3];
    }
    std::vector<BasisWord> basis_up_to(long degree_bound) const override;
    bool finite_dimensional() const override { return false; }
    bool commutative_flag() const override { return false; }
    std::string word_to_string(const BasisWord& w) const override;
    std::vector<GeneratorInfo> generators() const override;
    Element generator_power(int gen, int exponent) const override;
    std::vector<std::pair<int, int>> factor_word(const BasisWord& w) const override;

    TensorElement coproduct_word(const BasisWord& w) const override;
    Scalar counit_word(const BasisWord& w) const override;
    Element antipode_word(const BasisWord& w) const override;
    bool cocommutative_flag() const override { return false; }
    long antipode_degree_factor() const override { return 1; }

    BasisWord word_ijkl(int i, int j, int k, int l) const { return BasisWord{{i, j, k, l}}; }

private:
    Element mul_by_generator(const Element& e, int gen) const;
    mutable std::map<BasisWord, TensorElement> coproduct_memo_;
    mutable std::map<BasisWord, Element> antipode_memo_;
};

/// Generic rewriting-based Hopf algebra loaded from a presentation file.
/// Basis words are irreducible letter strings for the supplied (confluent)
/// rule set; confluence is checked via critical pairs at load.
class PresentationAlgebra final : public HopfAlgebra {
public:
    static std::unique_ptr<PresentationAlgebra> from_file(const std::string& path);

    std::string name() const override { return name_; }
    BasisWord unit_word() const override { return BasisWord{}; }
    Element product_words(const BasisWord& a, const BasisWord& b) const override;
    long degree(const BasisWord& w) const override;
    std::vector<BasisWord> basis_up_to(long degree_bound) const override;
    bool finite_dimensional() const override { return finite_; }
    bool commutative_flag() const override { return commutative_; }
    std::string word_to_string(const BasisWord& w) const override;
    std::vector<GeneratorInfo> generators() const override;
    Element generator_power(int gen, int exponent) const override;
    std::vector<std::pair<int, int>> factor_word(const BasisWord& w) const override;

    TensorElement coproduct_word(const BasisWord& w) const override;
    Scalar counit_word(const BasisWord& w) const override;
    Element antipode_word(const BasisWord& w) const override;
    bool cocommutative_flag() const override { return cocommutative_; }

private:
    explicit PresentationAlgebra(FieldId f) : HopfAlgebra(f) {}

    struct Rule {
        std::vector<int32_t> lhs;  // signed letters: +i+1 for g_i, -(i+1) for g_i^-1
        Element rhs;
    };

    Element reduce_letters(const std::vector<int32_t>& letters) const;
    void check_confluence() const;

    std::string name_;
    std::vector<GeneratorInfo> gens_;
    std::vector<long> weights_;
    std::vector<Rule> rules_;
    std::vector<TensorElement> coproducts_;  // per generator
    std::vector<Scalar> counits_;
    std::vector<Element> antipodes_;
    bool commutative_ = false, cocommutative_ = false, finite_ = false;
};

// ---------------------------------------------------------------------------
// catalog

/// Build by CLI name: group:Z2|Z3|Z4|S3|<table-file>, fungrp:<same>,
/// tensor:<dimV>, laurent, uqsl2, aslq2, presentation:<file>.
/// The field applies where the instance is field-generic; uqsl2/aslq2 force Qq.
std::unique_ptr<HopfAlgebra> build_instance(const std::string& spec, const FieldId& field,
                                            long weight_cap = 0);

/// Named modular pairs: "epsilon,1"; "delta,1" (aslq2); "epsilon,sigma" and
/// "epsilon,sigma_inv" (uqsl2); "epsilon,<group-element>" (group algebras).
ModularPair make_modular_pair(const HopfAlgebra& H, const std::string& pair_name);

/// Advertised pairs per instance, with provenance notes; every entry passes
/// check_modular_involution at the catalog's default bound.
std::vector<std::pair<std::string, std::string>> advertised_pairs(const HopfAlgebra& H);

struct CoactionBundle {
    std::unique_ptr<HopfAlgebra> A;
    std::unique_ptr<HopfAlgebra> H;
    CoactionStructure coaction;
};

/// The degree coaction of k[z,z^-1] on A(SL_q(2)): beta(x) = x(x)z,
/// beta(u) = u(x)z^-1, beta(v) = v(x)z, beta(y) = y(x)z^-1.
CoactionBundle builtin_coaction_laurent_on_aslq2();

/// S^2(w) = sigma w sigma^{-1} on all basis words of degree <= D.
CheckReport verify_s2_conjugation(const UqSl2& H, long degree_bound);

}  // namespace hopfcyc
