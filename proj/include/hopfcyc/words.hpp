#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfcyc/scalar.hpp"

namespace hopfcyc {

/// Normal-form basis monomial. The integer payload is instance-specific:
/// group algebras store an element index, U_q(sl2) stores (l, m, n) for
/// sigma^l x^m y^n, the tensor algebra stores the letter sequence, and so on.
struct BasisWord {
    std::vector<int32_t> data;

    bool operator==(const BasisWord& o) const { return data == o.data; }
    bool operator!=(const BasisWord& o) const { return data != o.data; }
    bool operator<(const BasisWord& o) const {
        if (data.size() != o.data.size()) return data.size() < o.data.size();
        return data < o.data;
    }
};

using TensorWord = std::vector<BasisWord>;

/// Sparse linear combination with canonical form: sorted keys, no zero
/// coefficients. Shared by elements, tensor elements and resolution elements.
template <typename Key>
class Combo {
public:
    Combo() : field_(FieldId::rationals()) {}
    explicit Combo(FieldId f) : field_(std::move(f)) {}
    Combo(FieldId f, const Key& k) : field_(f) { terms_.emplace(k, Scalar::one(f)); }

    const FieldId& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<Key, Scalar>& terms() const& { return terms_; }
    // iterating the terms of a temporary dangles in a range-for; forbid it
    const std::map<Key, Scalar>& terms() const&& = delete;

    void add(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add(const Combo& o, const Scalar& c) {
        for (const auto& [k, v] : o.terms_) add(k, v * c);
    }

    Combo operator+(const Combo& o) const {
        Combo out = *this;
        out.add(o, Scalar::one(field_));
        return out;
    }

    Combo operator-(const Combo& o) const {
        Combo out = *this;
        out.add(o, -Scalar::one(field_));
        return out;
    }

    Combo scaled(const Scalar& c) const {
        Combo out(field_);
        if (c.is_zero()) return out;
        for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
        return out;
    }

    Scalar coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    bool operator==(const Combo& o) const { return terms_ == o.terms_; }
    bool operator!=(const Combo& o) const { return !(*this == o); }

private:
    FieldId field_;
    std::map<Key, Scalar> terms_;
};

using Element = Combo<BasisWord>;
using TensorElement = Combo<TensorWord>;

/// Juxtaposition (x (x) y), bilinear.
TensorElement tensor_concat(const TensorElement& a, const TensorElement& b);
TensorElement tensor_of_words(const FieldId& f, const TensorWord& w);
/// Promote an Element to a 1-slot TensorElement.
TensorElement as_tensor(const Element& e);
/// Extract the unique slot of a 1-slot TensorElement.
Element as_element(const TensorElement& t);
/// The scalar carried by a 0-slot TensorElement (level-0 spaces).
Scalar as_scalar(const TensorElement& t);
TensorElement scalar_tensor(const FieldId& f, const Scalar& c);

}  // namespace hopfcyc
