#include "doctest.h"
#include "support.hpp"

using namespace ellfib;
using test::P;
using test::W;

namespace {

const FiberCluster* at(const std::vector<FiberCluster>& cs, const HomogPoly& place) {
    for (auto& c : cs)
        if (c.place == place) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("classify X411") {
    auto cs = classify_fibers(test::x411());
    REQUIRE(cs.size() == 2);
    auto inf = at(cs, P("t"));
    REQUIRE(inf);
    CHECK(inf->ktype == KodairaType::Instar(4));
    CHECK(inf->vA == 2);
    CHECK(inf->vB == 3);
    CHECK(inf->vDelta == 10);
    auto two = at(cs, P("s^2-4*t^2"));
    REQUIRE(two);
    CHECK(two->places_count == 2);
    CHECK(two->ktype == KodairaType::In(1));
    CHECK(configuration(test::x411()).to_string() == "[1,1,4*]");
}

TEST_CASE("classify j = 0 family") {
    auto cs = classify_fibers(W("0", "s^5*t"));
    auto a = at(cs, P("t")), b = at(cs, P("s"));
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->ktype.to_string() == "II");
    CHECK(a->vB == 1);
    CHECK(a->vDelta == 2);
    CHECK(a->vA == kInfinite);
    CHECK(b->ktype.to_string() == "II*");
    CHECK(b->vDelta == 10);
}

TEST_CASE("classification needs a minimal model") {
    WeierstrassModel raw(P("s^4") * test::x411().A(), P("s^6") * test::x411().B(), 2);
    CHECK_THROWS_AS(classify_fibers(raw), Error);
}

TEST_CASE("kodaira table") {
    CHECK(classify_orders(0, 0, 5) == KodairaType::In(5));
    CHECK(classify_orders(2, 3, 6) == KodairaType::Instar(0));
    CHECK(classify_orders(3, 3, 6) == KodairaType::Instar(0));
    CHECK(classify_orders(2, 3, 9) == KodairaType::Instar(3));
    CHECK(classify_orders(1, 1, 2).to_string() == "II");
    CHECK(classify_orders(1, 2, 3).to_string() == "III");
    CHECK(classify_orders(2, 2, 4).to_string() == "IV");
    CHECK(classify_orders(3, 4, 8).to_string() == "IV*");
    CHECK(classify_orders(3, 5, 9).to_string() == "III*");
    CHECK(classify_orders(4, 5, 10).to_string() == "II*");
    CHECK_THROWS_AS(classify_orders(4, 6, 12), Error);
    CHECK_THROWS_AS(classify_orders(1, 1, 5), Error);
}

TEST_CASE("twist partners") {
    CHECK(KodairaType::In(3).toggled() == KodairaType::Instar(3));
    CHECK(KodairaType::Instar(0).toggled() == KodairaType::In(0));
    CHECK(Configuration::parse("[II]").counts().begin()->first.toggled().to_string() == "IV*");
    CHECK(Configuration::parse("[III]").counts().begin()->first.toggled().to_string() == "III*");
    CHECK(Configuration::parse("[IV]").counts().begin()->first.toggled().to_string() == "II*");
}

TEST_CASE("configuration strings") {
    Configuration c = Configuration::parse("[1,1,4*]");
    CHECK(c.euler() == 12);
    CHECK(c.fiber_count() == 3);
    CHECK_FALSE(c.all_semistable());
    CHECK(Configuration::parse("[4*,1,1]") == c);
    CHECK(Configuration::parse("[1,3,5,III]").to_string() == "[1,3,5,III]");
    CHECK(Configuration::parse("[0*,III*,III*]").euler() == 24);
    CHECK(Configuration::parse("[2,3,4,4,5,6]").all_semistable());
    CHECK_THROWS_AS(Configuration::parse("[1,V]"), Error);
    CHECK_THROWS_AS(Configuration::parse("[1,,2]"), Error);
    CHECK_THROWS_AS(Configuration::parse("[0,1]"), Error);
}

TEST_CASE("base surfaces") {
    CHECK(configuration(W("-3*s*t*(s-t)^2", "(s-t)^3*(s^3+t^3)")).to_string() == "[2,2,2*]");
    CHECK(configuration(W("-3*(s-t)^3*(s-9*t)", "-2*(s-t)^4*(s^2+18*s*t-27*t^2)")).to_string() == "[1,3,IV*]");
    CHECK(configuration(W("-3*(s-t)^3*(s-4*t)", "-2*(s-t)^5*(s+8*t)")).to_string() == "[1,2,III*]");
}

TEST_CASE("extremality necessary condition") {
    const auto& c = test::builtin();
    Construction k = build(c, *c.entry("fig2"));
    CHECK(check_semistable_extremal_necessary(k.result));
    CHECK_FALSE(check_semistable_extremal_necessary(test::x411()));
    Construction r = build(c, *c.entry("fig17"));
    CHECK_FALSE(check_semistable_extremal_necessary(r.raw));
    CHECK(configuration(r.raw) == Configuration::parse("[1,1,1,2,5,14,0*,0*,0*,0*]"));
}

TEST_CASE("pullback type prediction") {
    CHECK(predict_pullback_type(KodairaType::Instar(4), 4).ktype == KodairaType::In(16));
    CHECK(predict_pullback_type(KodairaType::Instar(4), 1).ktype == KodairaType::Instar(4));
    CHECK(predict_pullback_type(KodairaType::Instar(2), 1).ktype == KodairaType::Instar(2));
    CHECK(predict_pullback_type(KodairaType::Instar(1), 3).ktype == KodairaType::Instar(3));
    CHECK(predict_pullback_type(KodairaType::Instar(1), 2).ktype == KodairaType::In(2));
    CHECK(predict_pullback_type(KodairaType::In(3), 5).ktype == KodairaType::In(15));

    KodairaType ivs{KodairaType::IVstar, 0}, iiis{KodairaType::IIIstar, 0}, ii{KodairaType::II, 0}, iii{KodairaType::III, 0},
        iv{KodairaType::IV, 0};
    CHECK(predict_pullback_type(ivs, 3).ktype == KodairaType::In(0));
    CHECK(predict_pullback_type(ivs, 1).ktype == ivs);
    CHECK(predict_pullback_type(ii, 3).ktype == KodairaType::Instar(0));
    CHECK(predict_pullback_type(iii, 2).ktype == KodairaType::Instar(0));
    CHECK(predict_pullback_type(iv, 3).ktype == KodairaType::In(0));
    CHECK(predict_pullback_type(iiis, 2).ktype == KodairaType::Instar(0));
    CHECK(predict_pullback_type(iiis, 4).ktype == KodairaType::In(0));
    Prediction p = predict_pullback_type(iiis, 3);
    CHECK(p.ktype.to_string() == "III");
    CHECK_FALSE(p.needs_deflation_parity);
    CHECK(predict_pullback_type(ivs, 2).needs_deflation_parity == false);
    CHECK(predict_pullback_type(iiis, 1).needs_deflation_parity);
    CHECK_THROWS_AS(predict_pullback_type(ii, 0), Error);
}
