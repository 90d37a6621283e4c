#include "doctest.h"
#include "support.hpp"

using namespace ellfib;
using test::P;
using test::W;

TEST_CASE("discriminant") {
    CHECK(discriminant(test::x411()) == P("11664*t^10*(s-2*t)*(s+2*t)"));
    CHECK(discriminant(W("0", "s^6-t^6")) == P("-432*(s^6-t^6)^2"));
    CHECK_THROWS_AS(W("-3*s^4", "2*s^6"), Error);
    try {
        W("-3*s^4", "2*s^6");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateModel);
    }
    CHECK_THROWS_AS(W("s^3", "t^6"), Error);
}

TEST_CASE("j-invariant") {
    JInvariant j = j_invariant(test::x411());
    CHECK(same_function(j, reduce_fraction(P("256*(s^2-3*t^2)^3"), P("t^4*(s-2*t)*(s+2*t)"))));
    CHECK(j_invariant(W("0", "s^6-t^6")).numerator.is_zero());
    JInvariant k = j_invariant(W("s^4+t^4", "0"));
    CHECK(k.numerator == FieldElem(Field(), 1728L) * k.denominator);
}

TEST_CASE("minimalize") {
    auto m = minimalize(test::x411());
    CHECK(m.removed == P("1"));
    CHECK(is_minimal(test::x411()));

    WeierstrassModel raw(P("s^4") * test::x411().A(), P("s^6") * test::x411().B(), 2);
    CHECK_FALSE(is_minimal(raw));
    m = minimalize(raw);
    CHECK(m.removed == P("s"));
    CHECK(m.model.M() == 1);
    CHECK(m.model.A() == test::x411().A());
    CHECK(minimalize(m.model).removed == P("1"));
}

TEST_CASE("quadratic twists") {
    WeierstrassModel x = test::x411();
    CHECK(models_equivalent(quadratic_twist(x, P("1")), x));
    HomogPoly q = P("(s-t)*(s+3*t)");
    CHECK(models_equivalent(quadratic_twist(quadratic_twist(x, q), q), x));
    CHECK_THROWS_AS(quadratic_twist(x, P("(s-t)^2")), Error);

    // twisting the I4* at infinity together with the I1 at 2 moves the star
    WeierstrassModel y = quadratic_twist(x, P("t*(s-2*t)"));
    CHECK(y.M() == 1);
    CHECK(configuration(y).to_string() == "[1,4,1*]");
    CHECK(models_equivalent(y, W("-3*(s-2*t)^2*(s^2-3*t^2)", "s*(s-2*t)^3*(2*s^2-9*t^2)")));
}

TEST_CASE("odd twists") {
    try {
        quadratic_twist(test::x411(), P("s"));
        FAIL("expected OddTwistImbalance");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OddTwistImbalance);
    }
}

TEST_CASE("rescaling and equivalence") {
    WeierstrassModel x = test::x411();
    FieldElem two(Field(), 2L);
    WeierstrassModel y = rescale(x, two);
    CHECK(y.A() == FieldElem(Field(), 16L) * x.A());
    CHECK(y.B() == FieldElem(Field(), 64L) * x.B());
    FieldElem u;
    CHECK(models_equivalent(x, y, &u));
    CHECK((u == two || u == -two));
    CHECK(models_equivalent(rescale(x, FieldElem(Field(), 1L)), x));
    WeierstrassModel z(FieldElem(Field(), 4L) * x.A(), FieldElem(Field(), 8L) * x.B(), 1);
    CHECK_FALSE(models_equivalent(x, z));
    WeierstrassModel neg(x.A(), -x.B(), 1);
    CHECK_FALSE(models_equivalent(x, neg));
    // u = a: u^4 = 1, u^6 = -1
    Field gi = test::ext("x^2+1");
    CHECK(models_equivalent(x.lift(gi), neg.lift(gi)));
    FieldElem r;
    CHECK(twist_class_ratio(x, z, r));
    CHECK(r == two);
}

TEST_CASE("canonical rescale") {
    WeierstrassModel m = W("16*(s^4+t^4)", "64*s^6+t^6*64");
    WeierstrassModel c = canonical_rescale(m);
    CHECK(c.A() == P("s^4+t^4"));
    CHECK(c.B() == P("s^6+t^6"));
    WeierstrassModel h = W("(s^4+t^4)/16", "(s^6+t^6)/64");
    CHECK(canonical_rescale(h).A() == P("s^4+t^4"));
}

TEST_CASE("euler number") {
    CHECK(euler_number(test::x411()) == 12);
    CHECK(euler_number(W("0", "s^6-t^6")) == 12);
}

TEST_CASE("surface files") {
    std::string text = "field = rationals\nM = 1\nA = -3*t^2*(s^2-3*t^2)\nB = s*t^3*(2*s^2-9*t^2)\n";
    WeierstrassModel m = parse_surface(text);
    CHECK(models_equivalent(m, test::x411()));
    std::string canon = format_surface(m);
    CHECK(format_surface(parse_surface(canon)) == canon);
    Field f = test::ext("x^2+1");
    WeierstrassModel e = test::x411().lift(f);
    CHECK(format_surface(parse_surface(format_surface(e))) == format_surface(e));
    CHECK_THROWS_AS(parse_surface("M = 1\nA = s^4\n"), Error);
    CHECK_THROWS_AS(parse_surface("M = x\nA = s^4\nB = t^6\n"), Error);
}
