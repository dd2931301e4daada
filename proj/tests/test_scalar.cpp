#include <doctest.h>

#include "bertini/scalar.hpp"
#include "bertini/rng.hpp"

using namespace bertini;

TEST_CASE("rational scalars are kept in lowest terms with positive denominator") {
    CHECK(Scalar::rational(2, 4).str() == "1/2");
    CHECK(Scalar::rational(1, -2).str() == "-1/2");
    CHECK(Scalar::rational(-6, -3).str() == "2");
    CHECK(Scalar::rational(0, 7).is_zero());
}

TEST_CASE("rational arithmetic") {
    Scalar a = Scalar::rational(3, 4);
    Scalar b = Scalar::rational(5, 6);
    CHECK((a + b).str() == "19/12");
    CHECK((a * b).str() == "5/8");
    CHECK((a - b).str() == "-1/12");
    CHECK((a / b).str() == "9/10");
    CHECK((-a).str() == "-3/4");
    CHECK(a.pow(3).str() == "27/64");
    CHECK_THROWS_AS(a / Scalar::rational(0, 1), Error);
}

TEST_CASE("prime field construction validates the modulus") {
    CHECK_THROWS_AS(FieldTag::prime_field(2), ConfigError);
    CHECK_THROWS_AS(FieldTag::prime_field(1), ConfigError);
    CHECK_THROWS_AS(FieldTag::prime_field(9), ConfigError);
    CHECK_THROWS_AS(FieldTag::prime_field(1ull << 32), ConfigError);
    CHECK(FieldTag::prime_field(3).p == 3);
    CHECK(FieldTag::prime_field(2147483647).p == 2147483647);  // 2^31 - 1
}

TEST_CASE("prime field arithmetic stays reduced") {
    FieldTag f7 = FieldTag::prime_field(7);
    Scalar a = Scalar::from_int(f7, 10);  // 3
    Scalar b = Scalar::from_int(f7, -1);  // 6
    CHECK(a.res() == 3);
    CHECK(b.res() == 6);
    CHECK((a + b).res() == 2);
    CHECK((a * b).res() == 4);
    CHECK((a / b).res() == 4);  // 3 * 6^{-1} = 3 * 6 = 18 = 4
    CHECK(a.inverse().res() == 5);
    CHECK((-a).res() == 4);
}

TEST_CASE("mixed-domain operations are rejected") {
    Scalar q = Scalar::rational(1, 2);
    Scalar f = Scalar::from_int(FieldTag::prime_field(5), 1);
    CHECK_THROWS_AS(q + f, FieldMismatchError);
    CHECK_THROWS_AS((void)(q == f), FieldMismatchError);
    CHECK_THROWS_AS(q.res(), FieldMismatchError);
    CHECK_THROWS_AS(f.rat(), FieldMismatchError);
}

TEST_CASE("scalar parsing follows the coefficient grammar") {
    FieldTag q = FieldTag::rationals();
    CHECK(Scalar::parse(q, "42").str() == "42");
    CHECK(Scalar::parse(q, "-17").str() == "-17");
    CHECK(Scalar::parse(q, "3/4").str() == "3/4");
    CHECK(Scalar::parse(q, "-6/4").str() == "-3/2");
    CHECK(Scalar::parse(q, "  5 ").str() == "5");
    CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "3.5"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, ""), ParseError);

    FieldTag f5 = FieldTag::prime_field(5);
    CHECK(Scalar::parse(f5, "7").res() == 2);
    CHECK(Scalar::parse(f5, "-1").res() == 4);
    CHECK_THROWS_AS(Scalar::parse(f5, "1/2"), ParseError);
}

TEST_CASE("parse errors carry their position") {
    try {
        Scalar::parse(FieldTag::rationals(), "12x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("inverse round-trips at 256-bit magnitudes") {
    SplitMix64 rng(20240811);
    for (int iter = 0; iter < 50; ++iter) {
        mpz_class num = 0, den = 0;
        for (int limb = 0; limb < 4; ++limb) {
            num = (num << 64) + mpz_class(static_cast<unsigned long>(rng.next()));
            den = (den << 64) + mpz_class(static_cast<unsigned long>(rng.next()));
        }
        if (num == 0 || den == 0) continue;
        Scalar a = Scalar::rational(mpq_class(num, den));
        Scalar b = Scalar::rational(mpq_class(den, num));
        CHECK((a * b).is_one());
        CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("comparison gives a deterministic total order") {
    CHECK(Scalar::rational(1, 3).compare(Scalar::rational(1, 2)) < 0);
    FieldTag f7 = FieldTag::prime_field(7);
    CHECK(Scalar::from_int(f7, 2).compare(Scalar::from_int(f7, 5)) < 0);
    CHECK(Scalar::from_int(f7, 5).compare(Scalar::from_int(f7, 5)) == 0);
}
