#include "hopfcyc/words.hpp"

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

TensorElement tensor_concat(const TensorElement& a, const TensorElement& b) {
    TensorElement out(a.field());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            TensorWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    return out;
}

TensorElement tensor_of_words(const FieldId& f, const TensorWord& w) {
    TensorElement out(f);
    out.add(w, Scalar::one(f));
    return out;
}

TensorElement as_tensor(const Element& e) {
    TensorElement out(e.field());
    for (const auto& [w, c] : e.terms()) out.add(TensorWord{w}, c);
    return out;
}

Element as_element(const TensorElement& t) {
    Element out(t.field());
    for (const auto& [w, c] : t.terms()) {
        if (w.size() != 1) throw ConfigError("as_element: tensor length != 1");
        out.add(w[0], c);
    }
    return out;
}

Scalar as_scalar(const TensorElement& t) {
    Scalar out = Scalar::zero(t.field());
    for (const auto& [w, c] : t.terms()) {
        if (!w.empty()) throw ConfigError("as_scalar: tensor length != 0");
        out = out + c;
    }
    return out;
}

TensorElement scalar_tensor(const FieldId& f, const Scalar& c) {
    TensorElement out(f);
    out.add(TensorWord{}, c);
    return out;
}

}  // namespace hopfcyc
