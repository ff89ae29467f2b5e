#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "test_helpers.hpp"

#include "qtree/factor.hpp"

using namespace qtree;
using namespace qtree::testing;

TEST_CASE("univariate divrem and gcd") {
    auto f = up(F5, "t^3 + 2*t + 1");
    auto g = up(F5, "t + 3");
    auto [q, r] = UniPoly<GF>::divrem(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    CHECK(UniPoly<GF>::gcd(f * g, g) == g.monic());
    auto [gg, s, t] = UniPoly<GF>::xgcd(up(F5, "t^2+1"), up(F5, "t+1"));
    CHECK(s * up(F5, "t^2+1") + t * up(F5, "t+1") == gg);
}

TEST_CASE("uni_factor splits t^2-1 over F_5") {
    auto fac = uni_factor(up(F5, "t^2 - 1"));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == up(F5, "t + 1"));
    CHECK(fac.factors[1].first == up(F5, "t + 4")); // t - 1
    CHECK(fac.factors[0].second == 1);
    CHECK(oracle::factorization_reproduces_uni(up(F5, "t^2 - 1"), fac.unit, fac.factors));
}

TEST_CASE("t^2-2 is irreducible over F_5 (non-residue)") {
    auto sq = oracle::squares_mod(F5);
    REQUIRE_FALSE(sq[2]); // squares mod 5 are {0, 1, 4}
    auto fac = uni_factor(up(F5, "t^2 - 2"));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == up(F5, "t^2 + 3"));
    CHECK(fac.factors[0].second == 1);
}

TEST_CASE("prime power t^3") {
    auto fac = uni_factor(up(F5, "t^3"));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == up(F5, "t"));
    CHECK(fac.factors[0].second == 3);
}

TEST_CASE("uni_factor rejects constants and the rationals") {
    CHECK_THROWS_AS(uni_factor(up(F5, "3")), precondition_error);
    UniPoly<QQ> f(QQDesc{});
    f.set_coeff(2, QQ::one({}));
    CHECK_THROWS_AS(uni_factor(f), precondition_error);
}

TEST_CASE("random factorizations reproduce the input") {
    Rng rng(101);
    for (GFDesc d : {F2, F3, F5}) {
        for (int it = 0; it < 60; ++it) {
            UniPoly<GF> f(d);
            int deg = 1 + static_cast<int>(rng.below(9));
            for (int i = 0; i <= deg; ++i)
                f.set_coeff(i, GF(d, static_cast<std::int64_t>(rng.below(d.p))));
            if (f.degree() < 1) continue;
            auto fac = uni_factor(f);
            CHECK(oracle::factorization_reproduces_uni(f, fac.unit, fac.factors));
            for (auto& [q, m] : fac.factors) {
                CHECK(q.lc().is_one());
                CHECK(m >= 1);
            }
        }
    }
}

TEST_CASE("inseparable shapes over F_2 and F_3") {
    // t^4 + t^2 + 1 = (t^2 + t + 1)^2 over F_2
    auto fac = uni_factor(up(F2, "t^4 + t^2 + 1"));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == up(F2, "t^2 + t + 1"));
    CHECK(fac.factors[0].second == 2);
    // t^3 - 2 = (t + 1)^3 over F_3
    auto fac3 = uni_factor(up(F3, "t^3 - 2"));
    REQUIRE(fac3.factors.size() == 1);
    CHECK(fac3.factors[0].first == up(F3, "t + 1"));
    CHECK(fac3.factors[0].second == 3);
}
