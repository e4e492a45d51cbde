#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <variant>

#include "hopfcyc/poly.hpp"

namespace hopfcyc {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Q, Fp, Qq };

struct FieldId {
    FieldKind kind = FieldKind::Q;
    uint32_t p = 0;  // only for Fp

    bool operator==(const FieldId& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldId& o) const { return !(*this == o); }
    std::string to_string() const;

    static FieldId rationals() { return {FieldKind::Q, 0}; }
    static FieldId prime(uint32_t p);
    static FieldId rational_functions() { return {FieldKind::Qq, 0}; }
    static FieldId parse(const std::string& s);  // "Q" | "F2","F3",... | "Qq"
};

/// Reduced ratio of integer polynomials in q. Invariants: den != 0,
/// gcd(num, den) = 1 in Z[q] (including integer content), den has positive
/// leading coefficient, zero is 0/1.
struct RatFun {
    ZPoly num;
    ZPoly den{Int(1)};
    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
    bool operator<(const RatFun& o) const {
        return num < o.num || (num == o.num && den < o.den);
    }
};

/// Immutable exact field element over one of Q, F_p, Q(q).
class Scalar {
public:
    Scalar() = default;  // 0 in Q
    static Scalar zero(const FieldId& f);
    static Scalar one(const FieldId& f);
    static Scalar from_int(const FieldId& f, long v);
    static Scalar rational(const Rational& r);
    static Scalar prime(uint32_t p, long v);
    /// Canonical element of Q(q); reduces num/den. Throws ZeroDenominator.
    static Scalar ratfun(const ZPoly& num, const ZPoly& den);
    /// q^e with e possibly negative.
    static Scalar q_power(int e);

    const FieldId& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
    Scalar operator-() const;
    Scalar inverse() const;  // throws DivisionByZero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order used only for deterministic container ordering.
    bool operator<(const Scalar& o) const;

    std::string to_string() const;

    const Rational& rat() const { return std::get<Rational>(payload_); }
    uint64_t residue() const { return std::get<uint64_t>(payload_); }
    const RatFun& rf() const { return std::get<RatFun>(payload_); }

private:
    FieldId field_{FieldKind::Q, 0};
    std::variant<Rational, uint64_t, RatFun> payload_ = Rational(0);

    void check_same_field(const Scalar& o) const;
};

/// Parse an arithmetic expression into a Scalar of the given field.
/// Grammar: integers, 'q' (Qq only), + - * / ^ and parentheses; exponents may
/// be negative (q^-1 becomes 1/q).
Scalar parse_scalar(const FieldId& f, const std::string& text);

}  // namespace hopfcyc
