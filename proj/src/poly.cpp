#include "hopfcyc/poly.hpp"

#include <cassert>

namespace hopfcyc {

ZPoly ZPoly::q_power(int e, const Int& c) {
    assert(e >= 0);
    if (c == 0) return ZPoly{};
    std::vector<Int> v(static_cast<size_t>(e) + 1, Int(0));
    v.back() = c;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-() const {
    std::vector<Int> v(coeffs_);
    for (auto& c : v) c = -c;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly{};
    std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::scaled(const Int& c) const {
    if (c == 0) return ZPoly{};
    std::vector<Int> v(coeffs_);
    for (auto& x : v) x *= c;
    return ZPoly(std::move(v));
}

Int ZPoly::content() const {
    Int g = 0;
    for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    if (!coeffs_.empty() && coeffs_.back() < 0) g = -g;
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly{};
    Int c = content();
    std::vector<Int> v(coeffs_);
    for (auto& x : v) x /= c;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::divexact(const ZPoly& d) const {
    assert(!d.is_zero());
    if (is_zero()) return ZPoly{};
    std::vector<Int> rem(coeffs_);
    std::vector<Int> quo(coeffs_.size() - d.coeffs_.size() + 1, Int(0));
    int dd = d.degree();
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Int f = rem[i] / d.leading();
        assert(f * d.leading() == rem[i]);
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.coeff(j);
    }
    for (const auto& r : rem) assert(r == 0);
    (void)rem;
    return ZPoly(std::move(quo));
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod b.
ZPoly prem(ZPoly a, const ZPoly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        ZPoly t = ZPoly::q_power(shift, a.leading());
        a = a.scaled(b.leading()) - t * b;
    }
    return a;
}

}  // namespace

ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) {
        if (b.is_zero()) return ZPoly{};
        return b.leading() < 0 ? -b : b;
    }
    if (b.is_zero()) return a.leading() < 0 ? -a : a;
    Int ca = a.content(), cb = b.content();
    if (ca < 0) ca = -ca;
    if (cb < 0) cb = -cb;
    Int cg = boost::multiprecision::gcd(ca, cb);
    ZPoly x = a.primitive_part(), y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        ZPoly r = prem(x, y).primitive_part();
        x = y;
        y = r;
    }
    if (x.leading() < 0) x = -x;
    return x.scaled(cg);
}

std::string ZPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Int c = coeff(i);
        if (c == 0) continue;
        bool first = out.empty();
        Int a = c < 0 ? Int(-c) : c;
        if (first)
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        if (i == 0) {
            out += a.str();
        } else {
            if (a != 1) out += a.str() + "*";
            out += (i == 1) ? "q" : "q^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace hopfcyc
