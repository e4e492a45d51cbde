#include "hopfcyc/scalar.hpp"

#include <cctype>

#include "hopfcyc/errors.hpp"

namespace hopfcyc {

std::string FieldId::to_string() const {
    switch (kind) {
        case FieldKind::Q: return "Q";
        case FieldKind::Fp: return "F" + std::to_string(p);
        case FieldKind::Qq: return "Qq";
    }
    return "?";
}

FieldId FieldId::prime(uint32_t p) {
    if (p < 2) throw ConfigError("prime field modulus must be >= 2");
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw ConfigError(std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw ConfigError("prime too large");
    return {FieldKind::Fp, p};
}

FieldId FieldId::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s == "Qq" || s == "Q(q)") return rational_functions();
    if (s.size() >= 2 && s[0] == 'F') return prime(static_cast<uint32_t>(std::stoul(s.substr(1))));
    throw ConfigError("unknown field: " + s);
}

namespace {

uint64_t fp_inv(uint64_t a, uint64_t p) {
    if (a == 0) throw DivisionByZero();
    // extended Euclid
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a);
    while (newr != 0) {
        int64_t quo = r / newr;
        t -= quo * newt; std::swap(t, newt);
        r -= quo * newr; std::swap(r, newr);
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

RatFun reduce_ratfun(ZPoly num, ZPoly den) {
    if (den.is_zero()) throw ZeroDenominator();
    if (num.is_zero()) return RatFun{ZPoly{}, ZPoly(Int(1))};
    ZPoly g = poly_gcd(num, den);
    num = num.divexact(g);
    den = den.divexact(g);
    if (den.leading() < 0) { num = -num; den = -den; }
    return RatFun{num, den};
}

}  // namespace

Scalar Scalar::zero(const FieldId& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldId& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldId& f, long v) {
    Scalar s;
    s.field_ = f;
    switch (f.kind) {
        case FieldKind::Q: s.payload_ = Rational(v); break;
        case FieldKind::Fp: {
            int64_t r = v % static_cast<int64_t>(f.p);
            if (r < 0) r += f.p;
            s.payload_ = static_cast<uint64_t>(r);
            break;
        }
        case FieldKind::Qq: s.payload_ = RatFun{ZPoly(Int(v)), ZPoly(Int(1))}; break;
    }
    return s;
}

Scalar Scalar::rational(const Rational& r) {
    Scalar s;
    s.field_ = FieldId::rationals();
    s.payload_ = r;
    return s;
}

Scalar Scalar::prime(uint32_t p, long v) { return from_int(FieldId::prime(p), v); }

Scalar Scalar::ratfun(const ZPoly& num, const ZPoly& den) {
    Scalar s;
    s.field_ = FieldId::rational_functions();
    s.payload_ = reduce_ratfun(num, den);
    return s;
}

Scalar Scalar::q_power(int e) {
    if (e >= 0) return ratfun(ZPoly::q_power(e), ZPoly(Int(1)));
    return ratfun(ZPoly(Int(1)), ZPoly::q_power(-e));
}

bool Scalar::is_zero() const {
    switch (field_.kind) {
        case FieldKind::Q: return rat() == 0;
        case FieldKind::Fp: return residue() == 0;
        case FieldKind::Qq: return rf().num.is_zero();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_.kind) {
        case FieldKind::Q: return rat() == 1;
        case FieldKind::Fp: return residue() == 1;
        case FieldKind::Qq: return rf().num.is_one() && rf().den.is_one();
    }
    return false;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw FieldMismatch(field_.to_string(), o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Q: s.payload_ = Rational(rat() + o.rat()); break;
        case FieldKind::Fp: s.payload_ = (residue() + o.residue()) % field_.p; break;
        case FieldKind::Qq: {
            const RatFun &a = rf(), &b = o.rf();
            s.payload_ = reduce_ratfun(a.num * b.den + b.num * a.den, a.den * b.den);
            break;
        }
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Q: s.payload_ = Rational(-rat()); break;
        case FieldKind::Fp: s.payload_ = residue() == 0 ? 0 : field_.p - residue(); break;
        case FieldKind::Qq: s.payload_ = RatFun{-rf().num, rf().den}; break;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Q: s.payload_ = Rational(rat() * o.rat()); break;
        case FieldKind::Fp: {
            unsigned __int128 prod = static_cast<unsigned __int128>(residue()) * o.residue();
            s.payload_ = static_cast<uint64_t>(prod % field_.p);
            break;
        }
        case FieldKind::Qq: {
            const RatFun &a = rf(), &b = o.rf();
            s.payload_ = reduce_ratfun(a.num * b.num, a.den * b.den);
            break;
        }
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar s;
    s.field_ = field_;
    switch (field_.kind) {
        case FieldKind::Q: s.payload_ = Rational(1 / rat()); break;
        case FieldKind::Fp: s.payload_ = fp_inv(residue(), field_.p); break;
        case FieldKind::Qq: s.payload_ = reduce_ratfun(rf().den, rf().num); break;
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return payload_ == o.payload_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same_field(o);
    switch (field_.kind) {
        case FieldKind::Q: return rat() < o.rat();
        case FieldKind::Fp: return residue() < o.residue();
        case FieldKind::Qq: return rf() < o.rf();
    }
    return false;
}

std::string Scalar::to_string() const {
    switch (field_.kind) {
        case FieldKind::Q: {
            const Rational& r = rat();
            if (boost::multiprecision::denominator(r) == 1)
                return boost::multiprecision::numerator(r).str();
            return boost::multiprecision::numerator(r).str() + "/" +
                   boost::multiprecision::denominator(r).str();
        }
        case FieldKind::Fp: return std::to_string(residue());
        case FieldKind::Qq: {
            const RatFun& f = rf();
            if (f.den.is_one()) return f.num.to_string();
            auto nonzero_terms = [](const ZPoly& p) {
                int k = 0;
                for (const auto& c : p.coeffs())
                    if (c != 0) ++k;
                return k;
            };
            std::string n = f.num.to_string(), d = f.den.to_string();
            if (nonzero_terms(f.num) > 1) n = "(" + n + ")";
            if (nonzero_terms(f.den) > 1) d = "(" + d + ")";
            return n + "/" + d;
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

struct Parser {
    const FieldId& field;
    const std::string& s;
    size_t pos = 0;

    void skip() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at position " + std::to_string(pos) + " in '" + s + "'");
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        for (;;) {
            if (eat('+')) v = v + parse_term();
            else if (eat('-')) v = v - parse_term();
            else return v;
        }
    }

    Scalar parse_term() {
        Scalar v = parse_factor();
        for (;;) {
            if (eat('*')) v = v * parse_factor();
            else if (eat('/')) v = v / parse_factor();
            else return v;
        }
    }

    Scalar parse_factor() {
        skip();
        bool neg = false;
        while (eat('-')) neg = !neg;
        Scalar v = parse_atom();
        if (eat('^')) {
            long e = parse_int();
            Scalar r = Scalar::one(field);
            Scalar base = e < 0 ? v.inverse() : v;
            for (long i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
            v = r;
        }
        return neg ? -v : v;
    }

    long parse_int() {
        skip();
        bool neg = eat('-');
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    Scalar parse_atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Scalar v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'q') {
            if (field.kind != FieldKind::Qq) fail("'q' only valid over Q(q)");
            ++pos;
            return Scalar::q_power(1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Scalar::from_int(field, parse_int());
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Scalar parse_scalar(const FieldId& f, const std::string& text) {
    Parser p{f, text};
    Scalar v = p.parse_expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace hopfcyc
