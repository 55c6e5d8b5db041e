#include <doctest.h>

#include "test_helpers.hpp"

using namespace loclib;

TEST_CASE("default GF(256) field") {
    FieldSpec f = make_field(8, 0x11D);
    CHECK(f.order() == 256);
    CHECK(f.m() == 8);

    // x * x^7 = x^8 = x^4 + x^3 + x^2 + 1 under 0x11D
    CHECK(f.mul(2, 128) == 29);
    CHECK(f.add(0x35, 0x1D) == 0x28);

    for (unsigned a = 0; a < 256; a++) {
        CHECK(f.add(a, a) == 0);
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(1, a) == a);
    }
    CHECK(f.inv(1) == 1);
    for (unsigned a = 1; a < 256; a++) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.exp(f.log(a)) == a);
    }
}

TEST_CASE("field axioms hold exactly") {
    for (FieldSpec f : {testing::gf4(), make_field(3, 0b1011), testing::gf16()}) {
        const unsigned q = f.order();
        for (unsigned a = 0; a < q; a++)
            for (unsigned b = 0; b < q; b++) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.add(a, b) == f.add(b, a));
                for (unsigned c = 0; c < q; c++) {
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
    }

    // Spot-check the same laws in GF(256).
    FieldSpec f = testing::gf256();
    std::mt19937_64 rng(42);
    for (int t = 0; t < 2000; t++) {
        unsigned a = testing::rand_elem(f, rng);
        unsigned b = testing::rand_elem(f, rng);
        unsigned c = testing::rand_elem(f, rng);
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
}

TEST_CASE("polynomial validation") {
    CHECK_NOTHROW(make_field(2, 0b111));
    CHECK(make_field(2, 0b111).order() == 4);

    CHECK_THROWS_AS(make_field(8, 0x100), NonPrimitivePolynomial);  // x^8 alone
    CHECK_THROWS_AS(make_field(8, 0x11B), NonPrimitivePolynomial);  // irreducible, not primitive
    CHECK_THROWS_AS(make_field(8, 0x0FF), BadDegree);               // degree 7
    CHECK_THROWS_AS(make_field(4, 0x11D), BadDegree);
    CHECK_THROWS_AS(make_field(1, 0b11), BadDegree);
    CHECK_THROWS_AS(make_field(17, 1u << 17 | 1), BadDegree);
}

TEST_CASE("division errors") {
    FieldSpec f = testing::gf16();
    CHECK_THROWS_AS(f.inv(0), DivideByZero);
    CHECK_THROWS_AS((void)f.log(0), DivideByZero);
    CHECK(f.div(0, 5) == 0);
}
