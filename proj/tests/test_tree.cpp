#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

#include "qtree/report_json.hpp"

using namespace qtree;
using namespace qtree::testing;

TEST_CASE("charts compose as stated") {
    auto ch0 = chart<GF>(F5, qp(F5, "[]"));
    CHECK(ch0.phi == bp(F5, "x"));
    CHECK(ch0.psi == bp(F5, "y"));
    auto ch1 = chart<GF>(F5, qp(F5, "[0]"));
    CHECK(ch1.phi == bp(F5, "x"));
    CHECK(ch1.psi == bp(F5, "x*y"));
    auto ch2 = chart<GF>(F5, qp(F5, "[0, inf]"));
    CHECK(ch2.phi == bp(F5, "x*y"));
    CHECK(ch2.psi == bp(F5, "x*y^2"));
    CHECK(ch2.exceptional == std::vector<int>{0, 1});
    auto chc = chart<GF>(F5, qp(F5, "[2]"));
    CHECK(chc.psi == bp(F5, "x*y + 2*x"));
}

TEST_CASE("charts vanish at the origin and are birational") {
    Rng rng(7);
    for (int it = 0; it < 25; ++it) {
        auto path = random_path(F5, rng, 1 + static_cast<int>(rng.below(4)));
        auto ch = chart<GF>(F5, path);
        CHECK(ch.phi.at_origin().is_zero());
        CHECK(ch.psi.at_origin().is_zero());
        // the inverse expressions pulled through the chart give back the
        // node coordinates
        CHECK(to_node(path, ch.inv_x) == Frac<GF>::of(bp(F5, "x")));
        CHECK(to_node(path, ch.inv_y) == Frac<GF>::of(bp(F5, "y")));
    }
}

TEST_CASE("comparability is the prefix order") {
    CHECK(comparable(qp(F5, "[]"), qp(F5, "[3, inf, 1]")));
    CHECK(comparable(qp(F5, "[0]"), qp(F5, "[0, inf]")));
    CHECK_FALSE(comparable(qp(F5, "[0]"), qp(F5, "[1]")));
    CHECK_FALSE(comparable(qp(F5, "[0, 1]"), qp(F5, "[0, 2]")));
}

TEST_CASE("children enumeration") {
    CHECK(children(F2, {}).size() == 3);
    CHECK(children(F5, qp(F5, "[1, 2]")).size() == 6);
    for (auto& c : children(F5, qp(F5, "[1, 2]")))
        CHECK(is_prefix(qp(F5, "[1, 2]"), c));
    CHECK_THROWS_AS(children(QQDesc{}, QuadPath<QQ>{}), precondition_error);
    auto via = children_along<QQ>(QuadPath<QQ>{},
                                  {Direction<QQ>::finite(QQ(QQDesc{}, 2)),
                                   Direction<QQ>::at_infinity({})});
    CHECK(via.size() == 2);
}

TEST_CASE("path text and JSON round-trips") {
    auto p = qp(F5, "[0, inf, 3]");
    CHECK(format_path(p) == "[0, inf, 3]");
    CHECK(parse_path<GF>(F5, format_path(p)) == p);
    CHECK(parse_path<GF>(F5, "[]").empty());
    CHECK_THROWS_AS(parse_path<GF>(F5, "0, 1"), parse_error);
    CHECK_THROWS_AS(parse_path<GF>(F5, "[0,, 1]"), parse_error);
    Json j = dirs_json(p);
    CHECK(j.dump() == R"({"dirs":[{"finite":"0"},{"infinity":true},{"finite":"3"}]})");
    CHECK(path_from_json<GF>(F5, j) == p);
    CHECK(parse_path_any<GF>(F5, j.dump()) == p);
}

TEST_CASE("paths over the rationals") {
    QQDesc d;
    auto p = parse_path<QQ>(d, "[3/2, inf]");
    REQUIRE(p.size() == 2);
    CHECK(p[0].c.str() == "3/2");
    CHECK(format_path(p) == "[3/2, inf]");
}
