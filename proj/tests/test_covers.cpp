#include "doctest.h"
#include "support.hpp"

using namespace ellfib;
using test::P;

namespace {

RationalMap pi4() { return RationalMap(P("256*s^3*(s-t)"), P("-27*t^4")); }
RationalMap pi2() { return RationalMap(P("64*s^3*(s-t)"), P("(8*s^2-4*s*t-t^2)^2")); }
Point pt(const std::string& s) { return parse_point(s, Field()); }

}  // namespace

TEST_CASE("ramification profiles") {
    CHECK(ramification_profile(pi4(), pt("inf")).indices == std::vector<int>{4});
    CHECK(ramification_profile(pi4(), pt("0")).indices == std::vector<int>{3, 1});
    CHECK(ramification_profile(pi4(), pt("1")).indices == std::vector<int>{2, 1, 1});
    CHECK(ramification_profile(pi4(), pt("1")).to_string() == "(2,1,1)");
    CHECK(ramification_profile(pi2(), pt("inf")).indices == std::vector<int>{2, 2});
    CHECK(ramification_profile(pi4(), pt("5")).indices == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("riemann-hurwitz") {
    std::vector<Point> cusps{pt("0"), pt("1"), pt("inf")};
    CHECK(riemann_hurwitz_verify(pi4(), cusps));
    CHECK(riemann_hurwitz_verify(pi2(), cusps));
    CHECK(riemann_hurwitz_verify(RationalMap::identity(Field()), cusps));
    CHECK_FALSE(riemann_hurwitz_verify(pi4(), {pt("0"), pt("inf")}));
    CHECK(wronskian(pi4()) == P("-27648*s^2*t^3*(4*s-3*t)"));
    CHECK(wronskian(pi4()).degree() == 6);
}

TEST_CASE("hurwitz counts") {
    CHECK_FALSE(hurwitz_count(12, {{12}}, 2, 12).feasible());
    CHECK(hurwitz_count(12, {{12}}, 2, 12).total == 23);
    HurwitzCount h = hurwitz_count(8, {{4, 4}}, 2, 6);
    CHECK(h.total == 16);
    CHECK(h.bound == 14);
    CHECK_FALSE(h.feasible());
    CHECK(hurwitz_feasible(4, {{4}, {3, 1}, {2, 1, 1}}));
    CHECK(hurwitz_count(4, {{4}, {3, 1}, {2, 1, 1}}).total == 6);
    CHECK_THROWS_AS(hurwitz_count(4, {{3, 2}}), Error);
}

TEST_CASE("maps") {
    CHECK_THROWS_AS(RationalMap(P("s^2"), P("t")), Error);
    CHECK_THROWS_AS(RationalMap(P("s*t"), P("s^2")), Error);
    CHECK_THROWS_AS(RationalMap(P("0"), P("t")), Error);
    RationalMap m = parse_map_inline("(4*s-2*t : t)", Field());
    CHECK(m.degree() == 1);
    CHECK_THROWS_AS(parse_map_inline("4*s-2*t, t", Field()), Error);
}

TEST_CASE("moebius maps") {
    RationalMap m = mobius_from_three_points(pt("-2"), pt("2"), pt("inf"));
    // (4s - 2t : t) up to a common scalar
    CHECK(m.N() * P("t") == m.D() * P("4*s-2*t"));
    RationalMap id = mobius_from_three_points(pt("0"), pt("1"), pt("inf"));
    CHECK(id.N() * P("t") == id.D() * P("s"));
    RationalMap phi = mobius_from_three_points(pt("1"), pt("0"), pt("inf"));
    CHECK(phi.N() * P("t") == phi.D() * P("t-s"));
    CHECK_THROWS_AS(mobius_from_three_points(pt("1"), pt("1"), pt("inf")), Error);
}

TEST_CASE("composition") {
    RationalMap c = compose(RationalMap::identity(Field()), pi4());
    CHECK(c.N() * pi4().D() == c.D() * pi4().N());
    RationalMap swap(P("t"), P("s"));
    RationalMap sw = compose(swap, pi4());
    CHECK(ramification_profile(sw, pt("0")).indices == std::vector<int>{4});
    CHECK(ramification_profile(sw, pt("inf")).indices == std::vector<int>{3, 1});
    RationalMap phi(P("t-s"), P("t"));
    CHECK(compose(pi2(), phi).degree() == 4);
}

TEST_CASE("pullbacks") {
    WeierstrassModel x = test::x411();
    CHECK(models_equivalent(pullback(x, RationalMap::identity(Field())), x));
    RationalMap pre = mobius_from_three_points(pt("-2"), pt("2"), pt("inf"));
    WeierstrassModel y = pullback(pullback(x, pre), pi4());
    CHECK(configuration(y).to_string() == "[1,1,1,2,3,16]");
    CHECK(euler_number(y) == 24);

    WeierstrassModel raw = substitute_model(pullback(x, pre), pi4());
    CHECK(raw.A().degree() == 16);
    CHECK(raw.M() == 4);
    CHECK(minimalize(raw).model.M() == 2);

    WeierstrassModel x222 = test::W("-3*(s^2-s*t+t^2)*(s-t)^2", "(s-2*t)*(2*s-t)*(t+s)*(s-t)^3");
    RationalMap ex = mobius_from_three_points(pt("0"), pt("inf"), pt("1"));
    CHECK(configuration(pullback(pullback(x222, ex), pi2())).to_string() == "[2,2,4,4,6,6]");
}

TEST_CASE("extension of scalars") {
    Field gi = test::ext("x^2+1");
    RationalMap m(P("s^2+a*t^2", gi), P("t^2", gi));
    WeierstrassModel x = test::x411();
    WeierstrassModel y = pullback(x, m);
    CHECK(y.field() == gi);
    CHECK(models_equivalent(y, pullback(x.lift(gi), m)));
    CHECK_THROWS_AS(x.lift(gi).lift(Field()), Error);
}

TEST_CASE("transfer of the star") {
    WeierstrassModel x = test::x411();
    WeierstrassModel y = transfer_star(x, P("t"), P("s-2*t"));
    auto cs = classify_fibers(y);
    Configuration c = configuration(y);
    CHECK(c.to_string() == "[1,4,1*]");
    for (auto& f : cs) {
        if (f.place == P("t")) CHECK(f.ktype == KodairaType::In(4));
        if (f.place == P("s-2*t")) CHECK(f.ktype == KodairaType::Instar(1));
        if (f.place == P("s+2*t")) CHECK(f.ktype == KodairaType::In(1));
    }
    CHECK(models_equivalent(transfer_star(y, P("s-2*t"), P("t")), x));
    CHECK_THROWS_AS(transfer_star(x, P("s"), P("s-2*t")), Error);
}

TEST_CASE("map files") {
    MapFile mf = parse_map_file("degree = 6\nN = 729*s^5*(s-t)\nD = -t^3*(135*s^3-9*s*t^2-t^3)\nidentity_check = (9*s^2-3*s*t-t^2)^3\n");
    CHECK(mf.has_identity);
    CHECK(mf.map.degree() == 6);
    try {
        parse_map_file("N = 729*s^5*(s-t)\nD = -t^3*(135*s^3+9*s*t^2+t^3)\nidentity_check = (9*s^2-3*s*t-t^2)^3\n");
        FAIL("expected CatalogCorrupt");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CatalogCorrupt);
    }
    CHECK_THROWS_AS(parse_map_file("degree = 5\nN = s^6\nD = t^6\n"), Error);
    std::string text = format_map(pi4());
    CHECK(parse_map_file(text).map.N() == pi4().N());
}
