#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liestruct/field.hpp"

using namespace liestruct;

TEST_CASE("rational parsing normalizes and round-trips") {
    QField q;
    CHECK(q.str(q.parse("6/4")) == "3/2");
    CHECK(q.str(q.parse("-6/4")) == "-3/2");
    CHECK(q.str(q.parse("0/7")) == "0");
    CHECK(q.str(q.parse("5")) == "5");
    CHECK(q.eq(q.parse("2/-4"), q.parse("-1/2")));
    CHECK_THROWS_AS(q.parse("1/0"), ParseError);
    CHECK_THROWS_AS(q.parse("a/b"), ParseError);
    CHECK_THROWS_AS(q.parse(""), ParseError);
}

TEST_CASE("rational arithmetic is exact") {
    QField q;
    auto third = q.parse("1/3");
    auto acc = q.zero();
    for (int i = 0; i < 3; ++i) acc = q.add(acc, third);
    CHECK(q.eq(acc, q.one()));
    CHECK(q.eq(q.mul(q.parse("3/7"), q.parse("7/3")), q.one()));
    CHECK(q.eq(q.inv(q.parse("-2/5")), q.parse("-5/2")));
    CHECK_THROWS_AS(q.inv(q.zero()), DivisionByZero);
}

TEST_CASE("prime field arithmetic wraps mod p") {
    FpField f{7};
    CHECK(f.eq(f.add(f.from_long(5), f.from_long(4)), f.from_long(2)));
    CHECK(f.eq(f.from_long(-1), f.from_long(6)));
    for (long a = 1; a < 7; ++a)
        CHECK(f.eq(f.mul(f.from_long(a), f.inv(f.from_long(a))), f.one()));
    CHECK_THROWS_AS(f.inv(f.zero()), DivisionByZero);
    CHECK(f.str(f.parse("10")) == "3");
    CHECK(f.str(f.parse("-1")) == "6");
}

TEST_CASE("field spec parsing") {
    CHECK(FieldSpec::parse("Q").kind == FieldKind::Rationals);
    auto fp = FieldSpec::parse("Fp:101");
    CHECK(fp.kind == FieldKind::PrimeField);
    CHECK(fp.p == 101);
    CHECK(FieldSpec::parse("Fp:2").str() == "Fp:2");
    CHECK(FieldSpec::rationals().str() == "Q");
    CHECK_THROWS_AS(FieldSpec::parse("Fp:4"), InputError);
    CHECK_THROWS_AS(FieldSpec::parse("Fp:1"), InputError);
    CHECK_THROWS_AS(FieldSpec::parse("R"), ParseError);
    CHECK_THROWS_AS(FieldSpec::prime(2147483648u), BadParams);
}

TEST_CASE("characteristic reporting") {
    QField q;
    FpField f5{5};
    CHECK(q.characteristic() == 0);
    CHECK(f5.characteristic() == 5);
    CHECK(q.spec().str() == "Q");
    CHECK(f5.spec().str() == "Fp:5");
}

TEST_CASE("char guard flags excluded characteristics") {
    CHECK(char_guard(FieldSpec::rationals(), {2, 3}));
    CHECK_FALSE(char_guard(FieldSpec::prime(2), {2}));
    CHECK(char_guard(FieldSpec::prime(2), {3}));
    CHECK(char_guard(FieldSpec::prime(101), {2, 3}));
}

TEST_CASE("residues stay in machine words near the modulus bound") {
    FpField f{2147483647u};  // largest modulus accepted
    auto big = f.from_long(2147483646L);
    CHECK(f.eq(f.mul(big, big), f.one()));  // (-1)^2
    CHECK(f.eq(f.inv(big), big));
}
