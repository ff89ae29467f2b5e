#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

#include "qtree/approx.hpp"

using namespace qtree;
using namespace qtree::testing;

TEST_CASE("bezout_solve on the named cases") {
    auto [a1, b1] = bezout_solve(hf(F5, "x"), hf(F5, "y"), hf(F5, "x^2*y"));
    CHECK(a1.is_zero());
    CHECK(b1 == hf(F5, "x*y"));
    auto [a2, b2] = bezout_solve(hf(F5, "x"), hf(F5, "y"), hf(F5, "x^3"));
    CHECK(a2.is_zero());
    CHECK(b2 == hf(F5, "x^2"));
}

TEST_CASE("bezout identity on random coprime triples") {
    Rng rng(31);
    auto random_form = [&](GFDesc d, int deg) {
        while (true) {
            std::vector<GF> c;
            for (int k = 0; k <= deg; ++k)
                c.push_back(GF(d, static_cast<std::int64_t>(rng.below(d.p))));
            HForm<GF> f(d, c);
            if (!f.is_zero()) return f;
        }
    };
    for (int it = 0; it < 80; ++it) {
        auto G = random_form(F7, 1 + static_cast<int>(rng.below(3)));
        auto H = random_form(F7, 1 + static_cast<int>(rng.below(3)));
        if (!HForm<GF>::coprime(G, H)) continue;
        auto e = random_form(F7, G.degree() + H.degree() + static_cast<int>(rng.below(4)));
        auto [a, b] = bezout_solve(G, H, e);
        CHECK(G * b + H * a == e);
        CHECK(a.degree() == e.degree() - H.degree());
        CHECK(b.degree() == e.degree() - G.degree());
    }
}

TEST_CASE("bezout_solve preconditions") {
    CHECK_THROWS_AS(bezout_solve(hf(F5, "x*y"), hf(F5, "y"), hf(F5, "x^3*y")),
                    precondition_error);
    CHECK_THROWS_AS(bezout_solve(hf(F5, "x^2"), hf(F5, "y^2"), hf(F5, "x^3")),
                    precondition_error);
}

TEST_CASE("lift_factorization on the named cases") {
    auto r = lift_factorization(bp(F5, "x*y + x^3 + y^3"), hf(F5, "x"), hf(F5, "y"), 4);
    CHECK(r.g == bp(F5, "x + y^2"));
    CHECK(r.h == bp(F5, "y + x^2"));
    REQUIRE(r.achieved_order);
    CHECK(*r.achieved_order == 4);
    CHECK(bp(F5, "x*y + x^3 + y^3") - r.g * r.h == bp(F5, "-x^2*y^2"));

    auto r2 = lift_factorization(bp(F5, "x*y"), hf(F5, "x"), hf(F5, "y"), 11);
    CHECK(r2.g == bp(F5, "x"));
    CHECK(r2.h == bp(F5, "y"));
    CHECK_FALSE(r2.achieved_order);

    auto r3 = lift_factorization(bp(F5, "x^2*y + y^4"), hf(F5, "x^2"), hf(F5, "y"), 5);
    CHECK(r3.g == bp(F5, "x^2 + y^3"));
    CHECK(r3.h == bp(F5, "y"));
    CHECK_FALSE(r3.achieved_order);
}

TEST_CASE("lift postconditions on random instances") {
    Rng rng(32);
    auto random_form = [&](GFDesc d, int deg) {
        while (true) {
            std::vector<GF> c;
            for (int k = 0; k <= deg; ++k)
                c.push_back(GF(d, static_cast<std::int64_t>(rng.below(d.p))));
            HForm<GF> f(d, c);
            if (!f.is_zero()) return f;
        }
    };
    for (GFDesc d : {F3, F5, F7}) {
        for (int it = 0; it < 40; ++it) {
            auto G = random_form(d, 1 + static_cast<int>(rng.below(4)));
            auto H = random_form(d, 1 + static_cast<int>(rng.below(4)));
            if (!HForm<GF>::coprime(G, H)) continue;
            int r = G.degree() + H.degree();
            BiPoly<GF> f = G.to_bipoly() * H.to_bipoly();
            for (int deg = r + 1; deg <= 8; ++deg)
                for (int i = 0; i <= deg; ++i)
                    if (rng.below(3) == 0)
                        f = f + BiPoly<GF>::monomial(
                                    d, GF(d, static_cast<std::int64_t>(rng.below(d.p))), i,
                                    deg - i);
            int n = r + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(12 - r)));
            auto lift = lift_factorization(f, G, H, n);
            CHECK(initial_form(lift.g) == G.normalized());
            CHECK(initial_form(lift.h) == H.normalized());
            BiPoly<GF> rem = f - lift.g * lift.h;
            if (!rem.is_zero()) CHECK(rem.low_degree() >= n);
        }
    }
}

TEST_CASE("lifting is degreewise monotone in n") {
    Rng rng(33);
    auto f = bp(F5, "x*y + x^3 + 2*x^2*y^2 + y^5 + x^6");
    auto r1 = lift_factorization(f, hf(F5, "x"), hf(F5, "y"), 4);
    auto r2 = lift_factorization(f, hf(F5, "x"), hf(F5, "y"), 8);
    for (int deg = 0; deg < 4 - 1; ++deg) {
        CHECK(r1.g.component(deg) == r2.g.component(deg));
        CHECK(r1.h.component(deg) == r2.h.component(deg));
    }
}

TEST_CASE("lift preconditions") {
    CHECK_THROWS_AS(lift_factorization(bp(F5, "x*y"), hf(F5, "x"), hf(F5, "y"), 2),
                    precondition_error); // n <= ord f
    CHECK_THROWS_AS(lift_factorization(bp(F5, "x^2"), hf(F5, "x"), hf(F5, "x"), 4),
                    precondition_error); // not coprime
    CHECK_THROWS_AS(lift_factorization(bp(F5, "x*y + x^3"), hf(F5, "x"), hf(F5, "x + y"), 4),
                    precondition_error); // in(f) != G H
}

TEST_CASE("lifting over the rationals") {
    QQDesc d;
    auto f = parse_bipoly<QQ>(d, "x*y + x^3 + y^3");
    auto G = HForm<QQ>::X(d);
    auto H = HForm<QQ>::Y(d);
    auto r = lift_factorization(f, G, H, 4);
    CHECK(r.g == parse_bipoly<QQ>(d, "x + y^2"));
    CHECK(r.h == parse_bipoly<QQ>(d, "y + x^2"));
}
