#include <catch2/catch_amalgamated.hpp>

#include "qtree/field.hpp"
#include "qtree/rng.hpp"

using namespace qtree;

TEST_CASE("prime field arithmetic") {
    GFDesc d{5};
    CHECK((GF(d, 2) + GF(d, 3)).is_zero());
    CHECK(GF(d, 2) * GF(d, 3) == GF(d, 1));
    CHECK(GF(d, -1) == GF(d, 4));
    CHECK(GF(d, 3).inv() == GF(d, 2));
    CHECK_THROWS_AS(GF(d, 0).inv(), precondition_error);
}

TEST_CASE("field descriptor validation") {
    CHECK_THROWS_AS(GF(GFDesc{4}, 1), precondition_error);
    CHECK_THROWS_AS(GF(GFDesc{0}, 1), precondition_error);
    CHECK_THROWS_AS(GF(GFDesc{65537}, 1), precondition_error);
    CHECK_NOTHROW(GF(GFDesc{65521}, 1));
}

TEST_CASE("mixed moduli are rejected") {
    GF a(GFDesc{5}, 2), b(GFDesc{7}, 2);
    CHECK_THROWS_AS(a + b, precondition_error);
    CHECK_THROWS_AS(a * b, precondition_error);
}

TEST_CASE("random inverses over several primes") {
    Rng rng(7);
    for (std::uint32_t p : {2u, 3u, 5u, 65521u}) {
        GFDesc d{p};
        for (int i = 0; i < 200; ++i) {
            GF a(d, static_cast<std::int64_t>(rng.below(p - 1) + 1));
            CHECK(a * a.inv() == GF::one(d));
        }
    }
}

TEST_CASE("rationals stay in lowest terms") {
    QQDesc d;
    QQ a(d, BigRat(6, 4));
    CHECK(a.str() == "3/2");
    CHECK((a * QQ(d, 2)).str() == "3");
    CHECK((QQ(d, 1) / QQ(d, -3)).str() == "-1/3");
    CHECK_THROWS_AS(QQ::zero(d).inv(), precondition_error);
}
