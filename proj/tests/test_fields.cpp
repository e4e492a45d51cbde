#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfcyc/errors.hpp"
#include "hopfcyc/scalar.hpp"

using namespace hopfcyc;

TEST_CASE("rational arithmetic") {
    FieldId Q = FieldId::rationals();
    Scalar half = parse_scalar(Q, "1/2");
    Scalar third = parse_scalar(Q, "1/3");
    CHECK((half + third).to_string() == "5/6");
    CHECK((half * third).to_string() == "1/6");
    CHECK((-half).to_string() == "-1/2");
    CHECK(half.inverse().to_string() == "2");
    CHECK_THROWS_AS(Scalar::zero(Q).inverse(), DivisionByZero);
}

TEST_CASE("prime field arithmetic") {
    FieldId F5 = FieldId::prime(5);
    Scalar a = Scalar::from_int(F5, 3), b = Scalar::from_int(F5, 4);
    CHECK((a + b).to_string() == "2");
    CHECK((a * b).to_string() == "2");
    CHECK(a.inverse().to_string() == "2");  // 3*2 = 6 = 1 mod 5
    CHECK((-a).to_string() == "2");
    CHECK_THROWS_AS(FieldId::prime(6), ConfigError);
    CHECK_THROWS_AS(Scalar::from_int(F5, 1) + Scalar::from_int(FieldId::prime(7), 1), FieldMismatch);
}

TEST_CASE("polynomial product and gcd") {
    FieldId Qq = FieldId::rational_functions();
    Scalar qp1 = parse_scalar(Qq, "q+1");
    Scalar qm1 = parse_scalar(Qq, "q-1");
    CHECK((qp1 * qm1).to_string() == "q^2 - 1");

    // normalization cancels common factors
    Scalar r = Scalar::ratfun(ZPoly(std::vector<Int>{Int(-1), Int(0), Int(1)}),      // q^2-1
                              ZPoly(std::vector<Int>{Int(-1), Int(1)}));             // q-1
    CHECK(r.to_string() == "q + 1");
}

TEST_CASE("ratfun normalization examples") {
    FieldId Qq = FieldId::rational_functions();
    // zero case
    Scalar z = Scalar::ratfun(ZPoly{}, ZPoly::q_power(3));
    CHECK(z.to_string() == "0");
    CHECK(z == Scalar::zero(Qq));
    CHECK_THROWS_AS(Scalar::ratfun(ZPoly(Int(1)), ZPoly{}), ZeroDenominator);

    // 2 / (q - q^-1) where q - q^-1 = (q^2-1)/q
    Scalar d = parse_scalar(Qq, "q - q^-1");
    Scalar two = Scalar::from_int(Qq, 2);
    CHECK((two / d).to_string() == "2*q/(q^2 - 1)");

    // inv(q - q^-1) = q/(q^2-1)
    CHECK(d.inverse().to_string() == "q/(q^2 - 1)");

    // idempotence: renormalizing a canonical value is the identity
    Scalar again = Scalar::ratfun(d.inverse().rf().num, d.inverse().rf().den);
    CHECK(again == d.inverse());

    // denominator sign normalization
    Scalar m = Scalar::ratfun(ZPoly(Int(1)), ZPoly(std::vector<Int>{Int(0), Int(-1)}));
    CHECK(m.to_string() == "-1/q");
}

TEST_CASE("field axioms on randomized triples") {
    std::mt19937 rng(12345);
    auto rnd_int = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    auto rnd_scalar = [&](const FieldId& f) -> Scalar {
        switch (f.kind) {
            case FieldKind::Q:
                return Scalar::rational(Rational(rnd_int(-20, 20), rnd_int(1, 12)));
            case FieldKind::Fp:
                return Scalar::from_int(f, rnd_int(0, static_cast<int>(f.p) - 1));
            case FieldKind::Qq: {
                std::vector<Int> num, den;
                for (int i = 0; i <= rnd_int(0, 2); ++i) num.push_back(Int(rnd_int(-5, 5)));
                for (int i = 0; i <= rnd_int(0, 2); ++i) den.push_back(Int(rnd_int(-5, 5)));
                ZPoly dp(den);
                if (dp.is_zero()) dp = ZPoly(Int(1));
                return Scalar::ratfun(ZPoly(num), dp);
            }
        }
        return Scalar::zero(f);
    };

    for (FieldId f : {FieldId::rationals(), FieldId::prime(7), FieldId::rational_functions()}) {
        for (int trial = 0; trial < 60; ++trial) {
            Scalar a = rnd_scalar(f), b = rnd_scalar(f), c = rnd_scalar(f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a + Scalar::zero(f) == a);
            CHECK(a * Scalar::one(f) == a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar::one(f));
                CHECK(a.inverse().inverse() == a);
            }
        }
    }
}

TEST_CASE("q generic semantics: expression vanishes iff canonical form is zero") {
    FieldId Qq = FieldId::rational_functions();
    CHECK(parse_scalar(Qq, "(q+1)*(q-1) - q^2 + 1").is_zero());
    // nonzero for generic q (q not a root of unity)
    CHECK(!parse_scalar(Qq, "q^2 - 1").is_zero());
    CHECK(!parse_scalar(Qq, "q^3 - 1").is_zero());
}

TEST_CASE("scalar parser handles negative powers and nesting") {
    FieldId Qq = FieldId::rational_functions();
    CHECK(parse_scalar(Qq, "q^-2") == Scalar::q_power(-2));
    CHECK(parse_scalar(Qq, "1/(q-q^-1)").to_string() == "q/(q^2 - 1)");
    CHECK(parse_scalar(Qq, "-(1-q^2)") == parse_scalar(Qq, "q^2-1"));
    CHECK_THROWS_AS(parse_scalar(FieldId::rationals(), "q"), ParseError);
}
