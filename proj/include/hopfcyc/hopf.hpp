#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/words.hpp"

namespace hopfcyc {

enum class GradingKind {
    Finite,  // finite-dimensional, no grading needed
    Weight,  // degree function is a grading preserved by all homology operators
    None,    // infinite-dimensional without a usable grading
};

/// Associative unital algebra with a distinguished normal-form basis.
class Algebra {
public:
    explicit Algebra(FieldId f) : field_(std::move(f)) {}
    virtual ~Algebra() = default;

    const FieldId& field() const { return field_; }
    virtual std::string name() const = 0;

    /// The unit as a basis word where it is one (every built-in except k^G).
    virtual bool unit_is_word() const { return true; }
    virtual BasisWord unit_word() const = 0;
    virtual Element one() const;

    /// Product of two normal-form words, expanded back to normal form.
    virtual Element product_words(const BasisWord& a, const BasisWord& b) const = 0;

    virtual long degree(const BasisWord& w) const = 0;
    virtual std::vector<BasisWord> basis_up_to(long degree_bound) const = 0;
    virtual bool finite_dimensional() const = 0;
    virtual bool commutative_flag() const = 0;
    virtual GradingKind homology_grading() const {
        return finite_dimensional() ? GradingKind::Finite : GradingKind::None;
    }
    virtual std::string word_to_string(const BasisWord& w) const = 0;

    struct GeneratorInfo {
        std::string name;
        bool invertible = false;
    };
    virtual std::vector<GeneratorInfo> generators() const = 0;
    /// g^e as an Element; e may be negative only for invertible generators.
    virtual Element generator_power(int gen, int exponent) const = 0;
    /// Write a basis word as an ordered product of generator powers.
    virtual std::vector<std::pair<int, int>> factor_word(const BasisWord& w) const = 0;

    Element product(const Element& a, const Element& b) const;
    Element product(const Element& a, const BasisWord& b) const;
    int generator_index(const std::string& name) const;  // throws UnknownGenerator

    /// normalize() over a formal product of generators and inverses, e.g.
    /// "y*x" or "s^-1*x^2". Whitespace-insensitive.
    Element normalize_expression(const std::string& expr) const;

    std::string element_to_string(const Element& e) const;
    std::string tensor_to_string(const TensorElement& t) const;

private:
    FieldId field_;
};

/// Hopf algebra structure on top of the basis algebra.
class HopfAlgebra : public Algebra {
public:
    using Algebra::Algebra;

    virtual TensorElement coproduct_word(const BasisWord& w) const = 0;
    virtual Scalar counit_word(const BasisWord& w) const = 0;
    virtual Element antipode_word(const BasisWord& w) const = 0;
    virtual bool cocommutative_flag() const = 0;
    /// Declared constant c with deg(S(w)) <= c * deg(w).
    virtual long antipode_degree_factor() const { return 1; }

    TensorElement coproduct(const Element& e) const;
    Scalar counit(const Element& e) const;
    Element antipode(const Element& e) const;

    /// Delta^(n-1) with n output slots; n = 1 is the identity, n = 0 is the counit.
    TensorElement iterated_coproduct(const BasisWord& w, int n) const;
    TensorElement iterated_coproduct(const Element& e, int n) const;

    /// Componentwise product in H (x) ... (x) H.
    TensorElement tensor_product_elements(const TensorElement& a, const TensorElement& b) const;
};

// ---------------------------------------------------------------------------
// characters, modular pairs, traces, coactions

/// Multiplicative functional. Either the counit or values on generators
/// extended multiplicatively along factor_word().
class Character {
public:
    static Character counit(const HopfAlgebra* H);
    static Character on_generators(const Algebra* A, std::vector<Scalar> values, std::string name);

    Scalar eval_word(const BasisWord& w) const;
    Scalar eval(const Element& e) const;
    bool is_counit() const { return counit_ != nullptr; }
    const std::string& name() const { return name_; }
    const Algebra* algebra() const { return alg_; }

private:
    const Algebra* alg_ = nullptr;
    const HopfAlgebra* counit_ = nullptr;
    std::vector<Scalar> values_;
    std::string name_;
};

struct ModularPair {
    const HopfAlgebra* H = nullptr;
    Character delta;
    Element sigma;  // grouplike element; usually a single basis word
    std::string name;
};

struct CheckReport {
    bool pass = true;
    long checked = 0;
    std::vector<std::string> failures;

    void note_failure(std::string msg) {
        pass = false;
        if (failures.size() < 32) failures.push_back(std::move(msg));
    }
    void merge(const CheckReport& o) {
        checked += o.checked;
        if (!o.pass) pass = false;
        for (const auto& f : o.failures)
            if (failures.size() < 32) failures.push_back(f);
    }
};

/// S_sigma(h) = sigma * S(h); sigma must be grouplike.
Element sigma_antipode(const HopfAlgebra& H, const Element& e, const Element& sigma);
/// Twisted antipode: sigma * sum delta(h^(2)) S(h^(1)).
Element twisted_antipode(const HopfAlgebra& H, const ModularPair& pair, const Element& e);

std::optional<std::string> grouplike_defect(const HopfAlgebra& H, const Element& sigma);
CheckReport check_character(const HopfAlgebra& H, const Character& chi, long degree_bound);
/// Verifies S~_sigma^2 = id on all basis words of degree <= D. Also confirms
/// sigma is grouplike and delta(sigma) = 1, reporting any defect.
CheckReport check_modular_involution(const ModularPair& pair, long degree_bound);
/// Full Hopf axiom suite on words of degree <= D: coassociativity, counit law,
/// antipode identity, bialgebra compatibility, counit multiplicativity.
CheckReport check_hopf_axioms(const HopfAlgebra& H, long degree_bound);
/// Flags (commutative/cocommutative) versus direct tests on words <= D.
CheckReport check_flags(const HopfAlgebra& H, long degree_bound);

/// Right coaction beta: A -> A (x) H, given on basis words of A.
struct CoactionStructure {
    const Algebra* A = nullptr;
    const HopfAlgebra* H = nullptr;
    std::function<TensorElement(const BasisWord&)> beta_word;
    std::string name;

    TensorElement beta(const Element& e) const;
};

CoactionStructure trivial_coaction(const Algebra& A, const HopfAlgebra& H);
CoactionStructure self_coaction(const HopfAlgebra& H);

CheckReport check_comodule_axioms(const CoactionStructure& c, long degree_bound);

struct TraceFunctional {
    const Algebra* A = nullptr;
    std::function<Scalar(const BasisWord&)> tr_word;
    std::string name;

    Scalar eval(const Element& e) const;
};

struct TraceReport {
    CheckReport delta_trace;
    CheckReport sigma_invariant;
    bool pass() const { return delta_trace.pass && sigma_invariant.pass; }
};

/// Definition 3.1 checks on all word pairs of degree <= D:
///   Tr(ab) = sum Tr(b a^(0)) delta(a^(1))  and  sum Tr(a^(0)) a^(1) = Tr(a) sigma.
TraceReport check_trace_properties(const TraceFunctional& tr, const CoactionStructure& c,
                                   const ModularPair& pair, long degree_bound);

}  // namespace hopfcyc
