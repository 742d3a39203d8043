#include <doctest.h>

#include <random>

#include "hakenlab/scalar.hpp"
#include "test_support.hpp"

using namespace hakenlab;

TEST_CASE("rational arithmetic stays canonical") {
    Scalar half(1, 2);
    Scalar third(1, 3);
    CHECK((half + third).str() == "5/6");
    CHECK((half - third).str() == "1/6");
    CHECK((half * third).str() == "1/6");
    CHECK((half / third).str() == "3/2");
    CHECK(Scalar(2, 4) == half);
    CHECK(Scalar(-3, -6) == half);
    CHECK((-half).str() == "-1/2");
}

TEST_CASE("surd arithmetic and ordering") {
    Scalar s = Scalar::sqrt_of(5);
    CHECK(s.str() == "0+1*sqrt(5)");
    CHECK((s * s).str() == "5");
    CHECK(s > Scalar(2));
    CHECK(s < Scalar(9, 4));
    Scalar golden = (Scalar(1) + s) / Scalar(2);
    CHECK(golden * golden == golden + Scalar(1));  // x^2 = x + 1
    CHECK(golden.inverse() == golden - Scalar(1));
    CHECK(golden.sign() == 1);
    CHECK((Scalar(1) - s).sign() == -1);
    CHECK((s - s).is_zero());
}

TEST_CASE("radicand normalization strips square parts") {
    Scalar a(mpq_class(0), mpq_class(1), 8);  // sqrt(8) = 2 sqrt(2)
    CHECK(a.radicand() == 2);
    CHECK(a == Scalar(2) * Scalar::sqrt_of(2));
    Scalar b(mpq_class(3), mpq_class(1), 9);  // sqrt(9) = 3
    CHECK(b.is_rational());
    CHECK(b == Scalar(6));
}

TEST_CASE("mixed radicands are rejected") {
    Scalar s2 = Scalar::sqrt_of(2);
    Scalar s3 = Scalar::sqrt_of(3);
    CHECK_THROWS_AS(s2 + s3, MixedRadicals);
    CHECK_THROWS_AS(s2 * s3, MixedRadicals);
    CHECK_NOTHROW(s2 + Scalar(1));  // rationals embed in any extension
}

TEST_CASE("sqrt_in_extension") {
    CHECK(*sqrt_in_extension(Scalar(9, 4), 0) == Scalar(3, 2));
    CHECK(!sqrt_in_extension(Scalar(2), 0));
    CHECK(*sqrt_in_extension(Scalar(20), 5) == Scalar(2) * Scalar::sqrt_of(5));
    Scalar golden = (Scalar(1) + Scalar::sqrt_of(5)) / Scalar(2);
    // (golden)^2 = golden + 1 has the exact root golden back.
    auto r = sqrt_in_extension(golden + Scalar(1), 5);
    REQUIRE(r.has_value());
    CHECK(*r == golden);
    CHECK(!sqrt_in_extension(Scalar(-1), 0));
    CHECK(!sqrt_in_extension(Scalar::sqrt_of(5), 5));
}

TEST_CASE("scalar text format round trips") {
    for (const char* text : {"0", "-7", "5/6", "-12/7", "0+1*sqrt(5)", "1/2+1/2*sqrt(5)",
                             "3-2/7*sqrt(13)", "-1/3-1*sqrt(2)"}) {
        Scalar s = Scalar::parse(text);
        CHECK(Scalar::parse(s.str()) == s);
    }
    CHECK(Scalar::parse(" 3/4 ") == Scalar(3, 4));
    CHECK(Scalar::parse("2/4") == Scalar(1, 2));
    CHECK_THROWS_AS(Scalar::parse("1//2"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1+2*sqrt(-3)"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1+2*sqrt(3"), ParseError);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(testing::test_seed());
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    auto rand_scalar = [&](long d) {
        Scalar a(num(rng), den(rng));
        if (d == 0) return a;
        return a + Scalar(num(rng), den(rng)) * Scalar::sqrt_of(mpz_class(d));
    };
    for (long d : {0L, 2L, 5L, 13L}) {
        for (int i = 0; i < 200; ++i) {
            Scalar a = rand_scalar(d), b = rand_scalar(d), c = rand_scalar(d);
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
            // total order consistent with arithmetic
            if (a < b) CHECK(a + c < b + c);
        }
    }
}
