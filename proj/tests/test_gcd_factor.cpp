#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "test_helpers.hpp"

#include "qtree/bi_factor.hpp"

using namespace qtree;
using namespace qtree::testing;

TEST_CASE("bi_gcd on the named cases") {
    CHECK(bi_gcd(bp(F5, "x^2*y"), bp(F5, "x*y^2")) == bp(F5, "x*y"));
    CHECK(bi_gcd(bp(F5, "y^2 - x^3"), bp(F5, "y")) == BiPoly<GF>::one(F5));
    auto f = bp(F5, "2*x^2 + y");
    CHECK(bi_gcd(f, f) == f.monic_gl());
    CHECK_THROWS_AS(bi_gcd(BiPoly<GF>::zero(F5), BiPoly<GF>::zero(F5)), precondition_error);
    CHECK(bi_gcd(BiPoly<GF>::zero(F5), f) == f.monic_gl());
}

TEST_CASE("bi_gcd divides its inputs and scales with common factors") {
    Rng rng(2024);
    for (int it = 0; it < 60; ++it) {
        auto a = random_poly(F5, rng, 3);
        auto b = random_poly(F5, rng, 3);
        auto c = random_poly(F5, rng, 2);
        auto g = bi_gcd(a, b);
        CHECK(g.divides(a));
        CHECK(g.divides(b));
        auto gc = bi_gcd(a * c, b * c);
        auto expected = (g * c).monic_gl();
        CHECK(gc == expected);
    }
}

TEST_CASE("bi_factor splits x^2 - y^2 over F_5") {
    auto fac = bi_factor(bp(F5, "x^2 - y^2"));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == bp(F5, "x + y"));
    CHECK(fac.factors[1].first == bp(F5, "x + 4*y"));
    CHECK(oracle::factorization_reproduces(bp(F5, "x^2 - y^2"), fac.unit, fac.factors));
}

TEST_CASE("y^2 - x^3 is irreducible over F_5") {
    // oracle: no linear divisor exists (a cubic with a proper factor has one)
    auto cusp = bp(F5, "y^2 - x^3");
    for (const auto& cand : oracle::all_normalized_of_degree(F5, 1))
        REQUIRE_FALSE(cand.divides(cusp));
    CHECK(bi_irreducible(cusp));
    CHECK(bi_irreducible(bp(F5, "y")));
    CHECK_FALSE(bi_irreducible(bp(F5, "x^2")));
}

TEST_CASE("round-trip identity on the spec's cubic") {
    auto f = bp(F5, "x*y + x^3 + y^3");
    auto fac = bi_factor(f);
    CHECK(oracle::factorization_reproduces(f, fac.unit, fac.factors));
}

TEST_CASE("random factor round-trips with exhaustive irreducibility cross-check") {
    Rng rng(313);
    for (GFDesc d : {F2, F3}) {
        for (int it = 0; it < 60; ++it) {
            auto f = random_poly(d, rng, 3 + static_cast<int>(rng.below(3)));
            if (f.is_constant()) continue;
            auto fac = bi_factor(f);
            REQUIRE(oracle::factorization_reproduces(f, fac.unit, fac.factors));
            for (auto& [q, m] : fac.factors)
                if (q.total_degree() <= 3)
                    REQUIRE(oracle::irreducible_exhaustive(q));
        }
    }
    for (int it = 0; it < 40; ++it) {
        auto f = random_poly(F5, rng, 8);
        if (f.is_constant()) continue;
        auto fac = bi_factor(f);
        REQUIRE(oracle::factorization_reproduces(f, fac.unit, fac.factors));
    }
}

TEST_CASE("multiplicities and p-th powers") {
    auto f = bp(F3, "x^2 + 2*x*y + y^2"); // (x + y)^2
    auto fac = bi_factor(f);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].second == 2);
    auto g = bp(F3, "x^3 + y^3"); // (x + y)^3 in char 3
    auto fg = bi_factor(g);
    REQUIRE(fg.factors.size() == 1);
    CHECK(fg.factors[0].first == bp(F3, "x + y"));
    CHECK(fg.factors[0].second == 3);
}

TEST_CASE("bi_factor degree cap and rational field are rejected") {
    BiFactorOptions opt;
    opt.degree_cap = 4;
    CHECK_THROWS_AS(bi_factor(bp(F5, "x^5 + y"), opt), precondition_error);
    BiPoly<QQ> f = parse_bipoly<QQ>(QQDesc{}, "x^2 - y^2");
    CHECK_THROWS_AS(bi_factor(f), precondition_error);
    CHECK_THROWS_AS(bi_factor(BiPoly<GF>::zero(F5)), precondition_error);
}

TEST_CASE("hform_factor on the named cases") {
    auto fac = hform_factor(hf(F5, "x*y"));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == HForm<GF>::X(F5));
    CHECK(fac.factors[1].first == HForm<GF>::Y(F5));

    auto f2 = hform_factor(hf(F5, "y^2"));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].first == HForm<GF>::Y(F5));
    CHECK(f2.factors[0].second == 2);

    // derived via the univariate non-residue case: y^2 - 2 x^2 stays prime
    auto f3 = hform_factor(hf(F5, "y^2 - 2*x^2"));
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].second == 1);
    CHECK(f3.factors[0].first.degree() == 2);
    // the normalized factor is proportional to the input form
    auto prod = f3.factors[0].first.scaled(f3.unit);
    CHECK(prod == hf(F5, "y^2 - 2*x^2"));
}

TEST_CASE("hform_factor is multiplicative on random products") {
    Rng rng(414);
    auto random_form = [&](GFDesc d, int deg) {
        while (true) {
            std::vector<GF> c;
            for (int k = 0; k <= deg; ++k)
                c.push_back(GF(d, static_cast<std::int64_t>(rng.below(d.p))));
            HForm<GF> f(d, c);
            if (!f.is_zero()) return f;
        }
    };
    for (int it = 0; it < 50; ++it) {
        auto F = random_form(F5, 1 + static_cast<int>(rng.below(3)));
        auto G = random_form(F5, 1 + static_cast<int>(rng.below(3)));
        auto fits = hform_factor(F * G);
        auto fa = hform_factor(F);
        auto fb = hform_factor(G);
        std::vector<std::pair<HForm<GF>, int>> merged = fa.factors;
        for (auto& [h, m] : fb.factors) {
            bool found = false;
            for (auto& [h2, m2] : merged)
                if (h2 == h) { m2 += m; found = true; break; }
            if (!found) merged.emplace_back(h, m);
        }
        std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
            return HForm<GF>::cmp(a.first, b.first) < 0;
        });
        REQUIRE(fits.factors == merged);
    }
}

TEST_CASE("hform_factor over the rationals: rational roots only") {
    QQDesc d;
    auto X = HForm<QQ>::X(d), Y = HForm<QQ>::Y(d);
    auto F = X * (Y - X.scaled(QQ(d, 2))) * (Y - X.scaled(QQ(d, 2)));
    auto fac = hform_factor(F);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[1].second == 2);
    auto G = HForm<QQ>(d, {QQ(d, -2), QQ::zero(d), QQ::one(d)}); // Y^2 - 2 X^2
    CHECK_THROWS_AS(hform_factor(G), precondition_error);
}
