#include "hopfcyc/errors.hpp"
#include "hopfcyc/instances.hpp"

namespace hopfcyc {

TensorAlgebra::TensorAlgebra(int dim, FieldId f, long weight_cap)
    : HopfAlgebra(std::move(f)), dim_(dim), cap_(weight_cap) {
    if (dim < 1) throw ConfigError("tensor algebra needs dim >= 1");
}

std::string TensorAlgebra::name() const { return "tensor:" + std::to_string(dim_); }

Element TensorAlgebra::product_words(const BasisWord& a, const BasisWord& b) const {
    BasisWord w;
    w.data = a.data;
    w.data.insert(w.data.end(), b.data.begin(), b.data.end());
    if (cap_ > 0 && static_cast<long>(w.data.size()) > cap_)
        throw CapExceeded("tensor word of weight " + std::to_string(w.data.size()) +
                          " exceeds cap " + std::to_string(cap_));
    return Element(field(), w);
}

std::vector<BasisWord> TensorAlgebra::basis_up_to(long degree_bound) const {
    std::vector<BasisWord> out{BasisWord{}};
    std::vector<BasisWord> layer{BasisWord{}};
    long bound = degree_bound;
    if (cap_ > 0 && cap_ < bound) bound = cap_;
    for (long len = 1; len <= bound; ++len) {
        std::vector<BasisWord> next;
        for (const auto& w : layer)
            for (int32_t c = 0; c < dim_; ++c) {
                BasisWord nw = w;
                nw.data.push_back(c);
                next.push_back(nw);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::string TensorAlgebra::word_to_string(const BasisWord& w) const {
    if (w.data.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.data.size(); ++i) {
        if (i) s += "*";
        s += "v" + std::to_string(w.data[i] + 1);
    }
    return s;
}

std::vector<Algebra::GeneratorInfo> TensorAlgebra::generators() const {
    std::vector<GeneratorInfo> out;
    for (int i = 0; i < dim_; ++i) out.push_back({"v" + std::to_string(i + 1), false});
    return out;
}

Element TensorAlgebra::generator_power(int gen, int exponent) const {
    if (exponent < 0) throw NonInvertibleInverse("v" + std::to_string(gen + 1));
    BasisWord w;
    w.data.assign(static_cast<size_t>(exponent), gen);
    if (cap_ > 0 && exponent > cap_) throw CapExceeded("generator power exceeds cap");
    return Element(field(), w);
}

std::vector<std::pair<int, int>> TensorAlgebra::factor_word(const BasisWord& w) const {
    std::vector<std::pair<int, int>> out;
    for (int32_t c : w.data) {
        if (!out.empty() && out.back().first == c) ++out.back().second;
        else out.push_back({c, 1});
    }
    return out;
}

TensorElement TensorAlgebra::coproduct_word(const BasisWord& w) const {
    // letters are primitive: Delta(w) = sum over subsets of positions,
    // keeping the relative order on both sides
    TensorElement out(field());
    size_t n = w.data.size();
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        BasisWord left, right;
        for (size_t i = 0; i < n; ++i) {
            if (mask & (uint64_t(1) << i)) left.data.push_back(w.data[i]);
            else right.data.push_back(w.data[i]);
        }
        out.add(TensorWord{left, right}, Scalar::one(field()));
    }
    return out;
}

Scalar TensorAlgebra::counit_word(const BasisWord& w) const {
    return w.data.empty() ? Scalar::one(field()) : Scalar::zero(field());
}

Element TensorAlgebra::antipode_word(const BasisWord& w) const {
    BasisWord r;
    r.data.assign(w.data.rbegin(), w.data.rend());
    Scalar sign = (w.data.size() % 2 == 0) ? Scalar::one(field()) : -Scalar::one(field());
    Element out(field());
    out.add(r, sign);
    return out;
}

LaurentAlgebra::LaurentAlgebra(FieldId f) : HopfAlgebra(std::move(f)) {}

std::string LaurentAlgebra::name() const { return "laurent"; }

Element LaurentAlgebra::product_words(const BasisWord& a, const BasisWord& b) const {
    return Element(field(), BasisWord{{a.data[0] + b.data[0]}});
}

std::vector<BasisWord> LaurentAlgebra::basis_up_to(long degree_bound) const {
    std::vector<BasisWord> out;
    for (long l = -degree_bound; l <= degree_bound; ++l)
        out.push_back(BasisWord{{static_cast<int32_t>(l)}});
    return out;
}

std::string LaurentAlgebra::word_to_string(const BasisWord& w) const {
    if (w.data[0] == 0) return "1";
    if (w.data[0] == 1) return "z";
    return "z^" + std::to_string(w.data[0]);
}

std::vector<Algebra::GeneratorInfo> LaurentAlgebra::generators() const { return {{"z", true}}; }

Element LaurentAlgebra::generator_power(int, int exponent) const {
    return Element(field(), BasisWord{{exponent}});
}

std::vector<std::pair<int, int>> LaurentAlgebra::factor_word(const BasisWord& w) const {
    if (w.data[0] == 0) return {};
    return {{0, w.data[0]}};
}

TensorElement LaurentAlgebra::coproduct_word(const BasisWord& w) const {
    return tensor_of_words(field(), TensorWord{w, w});
}

Scalar LaurentAlgebra::counit_word(const BasisWord&) const { return Scalar::one(field()); }

Element LaurentAlgebra::antipode_word(const BasisWord& w) const {
    return Element(field(), BasisWord{{-w.data[0]}});
}

}  // namespace hopfcyc
