#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace hopfcyc {

using Int = boost::multiprecision::cpp_int;

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
/// Coefficient i is the coefficient of q^i; no trailing zeros are stored, so
/// the zero polynomial has an empty coefficient vector.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(const Int& c) { if (c != 0) coeffs_.push_back(c); }
    explicit ZPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static ZPoly q_power(int e, const Int& c = Int(1));

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const Int& leading() const { return coeffs_.back(); }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Int(0);
    }

    ZPoly operator-() const;
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const ZPoly& o) const { return coeffs_ != o.coeffs_; }
    bool operator<(const ZPoly& o) const { return coeffs_ < o.coeffs_; }

    ZPoly scaled(const Int& c) const;

    /// Content (gcd of coefficients, sign of leading coefficient).
    Int content() const;
    ZPoly primitive_part() const;

    /// Exact division; caller guarantees divisibility.
    ZPoly divexact(const ZPoly& d) const;

    std::string to_string() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Int> coeffs_;
};

/// gcd in Z[q], normalized to positive leading coefficient. Includes the
/// integer content so that e.g. gcd(2q, 2) = 2.
ZPoly poly_gcd(const ZPoly& a, const ZPoly& b);

}  // namespace hopfcyc
