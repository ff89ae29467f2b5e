#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

#include "qtree/valuation.hpp"

using namespace qtree;
using namespace qtree::testing;

TEST_CASE("ord at the root and at nodes") {
    CHECK(ord_at<GF>({}, fr(F5, "x^2 + y^3")) == 2);
    CHECK(ord_at<GF>({}, fr(F5, "1/x")) == -1);
    auto tr = transform_elem(qp(F5, "[0]"), bp(F5, "y^2 - x^3"));
    CHECK(tr.levels[1].p == bp(F5, "y^2 - x"));
    CHECK(ord_at(qp(F5, "[0]"), Frac<GF>::of(tr.levels[1].p)) == 1);
    CHECK_THROWS_AS(ord_at<GF>({}, Frac<GF>(F5)), precondition_error);
}

TEST_CASE("ord is a valuation") {
    Rng rng(21);
    for (int it = 0; it < 80; ++it) {
        auto path = random_path(F5, rng, static_cast<int>(rng.below(5)));
        Frac<GF> a = Frac<GF>(random_poly(F5, rng, 3), random_poly(F5, rng, 2));
        Frac<GF> b = Frac<GF>(random_poly(F5, rng, 3), random_poly(F5, rng, 2));
        if (a.is_zero() || b.is_zero()) continue;
        int oa = ord_at(path, a), ob = ord_at(path, b);
        CHECK(ord_at(path, a * b) == oa + ob);
        Frac<GF> s = a + b;
        if (!s.is_zero()) {
            int os = ord_at(path, s);
            CHECK(os >= std::min(oa, ob));
            if (oa != ob) CHECK(os == std::min(oa, ob));
        }
    }
}

TEST_CASE("initial forms") {
    CHECK(initial_form(bp(F5, "x^2 + y^3")) == hf(F5, "x^2"));
    CHECK(initial_form(bp(F5, "x*y + x^3 + y^3")) == hf(F5, "x*y"));
    // degree-1 part of y^2 - x, normalized
    CHECK(initial_form(bp(F5, "y^2 - x")) == hf(F5, "x"));
    CHECK_THROWS_AS(initial_form(BiPoly<GF>::zero(F5)), precondition_error);
}

TEST_CASE("initial form is multiplicative up to scalar") {
    Rng rng(22);
    for (int it = 0; it < 80; ++it) {
        auto f = random_poly(F5, rng, 4);
        auto g = random_poly(F5, rng, 4);
        CHECK(initial_form(f * g) == (initial_form(f) * initial_form(g)).normalized());
    }
}

TEST_CASE("to_node rewrites elements") {
    CHECK(to_node(qp(F5, "[0]"), fr(F5, "y/x")) == Frac<GF>::of(bp(F5, "y")));
    CHECK(to_node(qp(F5, "[inf]"), fr(F5, "y/x")) == fr(F5, "1/x"));
    auto w = fr(F5, "x^2 + y / x - 2*y");
    CHECK(to_node<GF>({}, w) == w);
    // outputs of to_node stay reduced (checked against a full gcd)
    Rng rng(23);
    for (int it = 0; it < 40; ++it) {
        auto path = random_path(F5, rng, 1 + static_cast<int>(rng.below(3)));
        Frac<GF> v(random_poly(F5, rng, 3), random_poly(F5, rng, 3));
        Frac<GF> t = to_node(path, v);
        if (t.is_zero()) continue;
        CHECK(bi_gcd(t.num(), t.den()).is_constant());
    }
}

TEST_CASE("membership") {
    CHECK_FALSE(member<GF>({}, fr(F5, "x/y")));
    CHECK(member(qp(F5, "[0]"), fr(F5, "y/x")));
    CHECK_FALSE(member(qp(F5, "[inf]"), fr(F5, "y/x")));
    CHECK(member<GF>({}, Frac<GF>(F5))); // zero is everywhere
}

TEST_CASE("membership grows along chains; units have both directions") {
    Rng rng(24);
    for (int it = 0; it < 60; ++it) {
        auto path = random_path(F5, rng, 1 + static_cast<int>(rng.below(3)));
        auto prefix = QuadPath<GF>(path.begin(),
                                   path.begin() + static_cast<long>(rng.below(path.size())));
        Frac<GF> w(random_poly(F5, rng, 3), random_poly(F5, rng, 3));
        if (member(prefix, w)) CHECK(member(path, w));
        if (!w.is_zero() && member(path, w) && member(path, w.inverse())) {
            Frac<GF> t = to_node(path, w);
            CHECK_FALSE(t.num().at_origin().is_zero());
            CHECK_FALSE(t.den().at_origin().is_zero());
        }
    }
}

TEST_CASE("transform_elem on the spec chains") {
    auto t1 = transform_elem(qp(F5, "[0]"), bp(F5, "y^2 - x^3"));
    CHECK(t1.levels[0].r == 2);
    CHECK(t1.levels[1].p == bp(F5, "y^2 - x"));
    CHECK(t1.passes);
    auto t2 = transform_elem(qp(F5, "[1]"), bp(F5, "y"));
    CHECK(t2.levels[1].p == bp(F5, "y + 1"));
    CHECK(t2.levels[0].r == 1);
    CHECK_FALSE(t2.passes);
    auto t3 = transform_elem(qp(F5, "[0, 0]"), bp(F5, "y"));
    CHECK(t3.levels[1].p == bp(F5, "y"));
    CHECK(t3.levels[2].p == bp(F5, "y"));
    CHECK(t3.passes);
    CHECK_THROWS_AS(transform_elem(qp(F5, "[0]"), BiPoly<GF>::zero(F5)), precondition_error);
}

TEST_CASE("directions on the named elements") {
    auto d1 = directions_of(bp(F5, "y"));
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].factor == HForm<GF>::Y(F5));
    CHECK(d1[0].mult == 1);
    CHECK(d1[0].dir.kind == DirectionClass<GF>::finite);
    CHECK(d1[0].dir.c.is_zero());

    auto d2 = directions_of(bp(F5, "y^2 - x^3"));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].mult == 2);
    CHECK(d2[0].dir.kind == DirectionClass<GF>::finite);

    auto d3 = directions_of(bp(F5, "y^2 - 2*x^2"));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].dir.kind == DirectionClass<GF>::nonrational);
    CHECK(d3[0].dir.degree == 2);

    auto d4 = directions_of(bp(F5, "x*y"));
    REQUIRE(d4.size() == 2);
    CHECK(d4[0].dir.kind == DirectionClass<GF>::infinity);
    CHECK(d4[1].dir.kind == DirectionClass<GF>::finite);

    CHECK_THROWS_AS(directions_of(bp(F5, "3")), precondition_error);
    CHECK_THROWS_AS(directions_of(bp(F5, "x + 1")), precondition_error);
}

TEST_CASE("essential values") {
    auto vy = make_essential(bp(F5, "y"));
    CHECK(essential_value(vy, fr(F5, "x^2*y^3")) == 3);
    auto vyx = make_essential(bp(F5, "y - x"));
    CHECK(essential_value(vyx, fr(F5, "x")) == 0);
    CHECK(essential_value(vy, fr(F5, "y^2 - x^3") / fr(F5, "y")) == -1);
    CHECK_THROWS_AS(essential_value(vy, Frac<GF>(F5)), precondition_error);
    CHECK_THROWS_AS(make_essential(bp(F5, "x^2")), precondition_error);
    CHECK_THROWS_AS(make_essential(bp(F5, "y + 1")), precondition_error);
}

TEST_CASE("containment along chains, both implementations") {
    auto vy = make_essential(bp(F5, "y"));
    auto vx = make_essential(bp(F5, "x"));
    CHECK(contains(vy, qp(F5, "[0]")));
    CHECK_FALSE(contains(vy, qp(F5, "[1]")));
    CHECK(contains(vx, qp(F5, "[inf]")));
    CHECK(contains_by_factorization(vy, qp(F5, "[0]")));
    CHECK_FALSE(contains_by_factorization(vy, qp(F5, "[1]")));
    CHECK(contains_by_factorization(vx, qp(F5, "[inf]")));

    Rng rng(25);
    int agreements = 0;
    for (int it = 0; it < 120; ++it) {
        auto f = random_poly(F5, rng, 4, true);
        auto fac = bi_factor(f);
        std::vector<BiPoly<GF>> through;
        for (auto& [q, m] : fac.factors)
            if (q.at_origin().is_zero()) through.push_back(q);
        if (through.empty()) continue;
        EssentialVal<GF> v{through[rng.below(through.size())]};
        auto path = random_path(F5, rng, static_cast<int>(rng.below(4)));
        REQUIRE(contains(v, path) == contains_by_factorization(v, path));
        ++agreements;
    }
    CHECK(agreements > 60);
}
