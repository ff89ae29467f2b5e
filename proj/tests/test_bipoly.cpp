#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace qtree;
using namespace qtree::testing;

TEST_CASE("basic arithmetic and the spec identities") {
    CHECK(bp(F5, "x + y") * bp(F5, "x - y") == bp(F5, "x^2 - y^2"));
    CHECK((bp(F5, "x^3 + 2*y") * BiPoly<GF>::zero(F5)).is_zero());
    CHECK((bp(F5, "2*x") + bp(F5, "3*x")).is_zero());
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(5150);
    int checked = 0;
    for (GFDesc d : {F3, F5}) {
        for (int it = 0; it < 250; ++it) {
            auto a = random_poly(d, rng, 4);
            auto b = random_poly(d, rng, 4);
            auto c = random_poly(d, rng, 4);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + b == b + a);
            ++checked;
        }
    }
    CHECK(checked == 500);
}

TEST_CASE("graded lex leading term and canonical text") {
    auto f = bp(F5, "1 + y^3 + 3*x^2*y");
    CHECK(f.lt().m == Mono{2, 1});
    CHECK(format_bipoly(f) == "3*x^2*y + y^3 + 1");
    CHECK(bp(F5, format_bipoly(f).c_str()) == f);
}

TEST_CASE("parser accepts the grammar and rejects junk") {
    CHECK(bp(F5, "3*x^2*y - y^3 + 1") == bp(F5, "-y^3+3*x^2*y+1"));
    CHECK_THROWS_AS(bp(F5, "z + 1"), parse_error);
    CHECK_THROWS_AS(bp(F5, "x +"), parse_error);
    CHECK_THROWS_AS(bp(F5, ""), parse_error);
    CHECK_THROWS_AS(bp(F5, "x ** y"), parse_error);
    CHECK_THROWS_AS(parse_unipoly<GF>(F5, "x + 1"), parse_error);
    CHECK(parse_unipoly<GF>(F5, "t^2 - 1").degree() == 2);
    auto [n, d] = parse_frac_parts<GF>(F5, "y / x");
    CHECK(n == bp(F5, "y"));
    CHECK(d == bp(F5, "x"));
}

TEST_CASE("substitution agrees with evaluation") {
    Rng rng(99);
    for (int it = 0; it < 100; ++it) {
        auto f = random_poly(F5, rng, 4);
        auto sx = random_poly(F5, rng, 2);
        auto sy = random_poly(F5, rng, 2);
        GF a(F5, static_cast<std::int64_t>(rng.below(5)));
        GF b(F5, static_cast<std::int64_t>(rng.below(5)));
        CHECK(f.subst(sx, sy).eval(a, b) == f.eval(sx.eval(a, b), sy.eval(a, b)));
    }
}

TEST_CASE("homogeneous components and low degree") {
    auto f = bp(F5, "x^2 + y^3 + x*y^4");
    CHECK(f.low_degree() == 2);
    CHECK(f.component(3) == bp(F5, "y^3"));
    CHECK(f.component(7).is_zero());
}

TEST_CASE("exact division by leading-term reduction") {
    auto f = bp(F5, "x^2 - y^2");
    CHECK(*f.try_divide(bp(F5, "x + y")) == bp(F5, "x - y"));
    CHECK_FALSE(f.try_divide(bp(F5, "x + 2*y")).has_value());
    CHECK(bp(F5, "y").multiplicity_in(bp(F5, "x^2*y^3")) == 3);
    CHECK(bp(F5, "y").multiplicity_in(bp(F5, "y^2 - x^3")) == 0);
}

TEST_CASE("rational coefficients print and parse") {
    QQDesc d;
    auto f = parse_bipoly<QQ>(d, "x^2 - y");
    auto g = parse_bipoly<QQ>(d, "x^2 + y");
    CHECK(format_bipoly(f * g) == "x^4 - y^2");
    CHECK(parse_scalar<QQ>(d, "-7/3").str() == "-7/3");
}
