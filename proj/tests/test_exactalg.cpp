#include "doctest.h"
#include "support.hpp"

using namespace ellfib;
using test::P;

TEST_CASE("field inverses") {
    Field gi = test::ext("x^2+1");
    FieldElem a = FieldElem::generator(gi), one(gi, 1L);
    CHECK((one + a).inverse() == (one - a) / FieldElem(gi, 2L));
    CHECK(FieldElem(Field(), Q(3, 7)).inverse() == FieldElem(Field(), Q(7, 3)));
    CHECK_THROWS_AS(FieldElem(Field(), 0L).inverse(), Error);

    Field bad = test::ext("x^2-1");
    FieldElem b = FieldElem::generator(bad) - FieldElem(bad, 1L);
    try {
        b.inverse();
        FAIL("expected a zero divisor");
    } catch (const ZeroDivisor& z) {
        CHECK(z.kind() == ErrorKind::ZeroDivisorInModulus);
        CHECK(z.witness() == "a - 1");
    }
}

TEST_CASE("non-monic moduli") {
    Field f = test::ext("5*x^3+12*x^2+12*x+4");
    FieldElem a = FieldElem::generator(f), one(f, 1L);
    FieldElem c = FieldElem(f, -2L) * (a.inverse() + one);
    CHECK(pow(c, 3) == FieldElem(f, 2L));
    FieldElem r = FieldElem(f, 2L) * c - c * c;
    CHECK(pow(r, 3) + FieldElem(f, 12L) * r - FieldElem(f, 12L) == FieldElem(f));
}

TEST_CASE("square roots") {
    FieldElem r;
    CHECK(field_sqrt(FieldElem(Field(), Q(9, 4)), r));
    CHECK(r * r == FieldElem(Field(), Q(9, 4)));
    CHECK_FALSE(field_sqrt(FieldElem(Field(), 2L), r));
    Field f = test::ext("x^2+3");
    CHECK(field_sqrt(FieldElem(f, -3L), r));
    CHECK(r * r == FieldElem(f, -3L));
    CHECK(field_sqrt(FieldElem(f, -12L), r));
    CHECK_FALSE(field_sqrt(FieldElem(f, 2L), r));
}

TEST_CASE("gcd") {
    CHECK(hp_gcd(P("(s-t)*(s+t)"), P("(s-t)^2")) == P("s-t"));
    CHECK(hp_gcd(P("s^3"), P("t^4")).is_constant());
    HomogPoly f = P("256*s^3*(s-t)+27*t^4");
    CHECK(f == P("(4*s-3*t)^2*(16*s^2+8*s*t+3*t^2)"));
    CHECK(hp_gcd(f, d_ds(f)) == P("4*s-3*t"));
    CHECK(hp_gcd(P("t^3*s"), P("t^2*(s+t)")) == P("t^2"));
}

TEST_CASE("squarefree decomposition") {
    auto d = squarefree_decompose(P("11664*t^10*(s^2-4*t^2)"));
    CHECK(d.unit == FieldElem(Field(), 11664L));
    REQUIRE(d.clusters.size() == 2);
    bool seen_t = false, seen_q = false;
    for (auto& c : d.clusters) {
        if (c.factor == P("t")) seen_t = c.multiplicity == 10;
        if (c.factor == P("s^2-4*t^2")) seen_q = c.multiplicity == 1;
    }
    CHECK(seen_t);
    CHECK(seen_q);

    d = squarefree_decompose(P("s-t"));
    REQUIRE(d.clusters.size() == 1);
    CHECK(d.clusters[0].multiplicity == 1);

    d = squarefree_decompose(P("(s-t)^2*(s+t)^3"));
    REQUIRE(d.clusters.size() == 2);
    for (auto& c : d.clusters) CHECK(c.factor == (c.multiplicity == 2 ? P("s-t") : P("s+t")));
}

TEST_CASE("order split") {
    auto v = order_split(P("s*t"), P("-3*t^2*(s^2-3*t^2)"));
    REQUIRE(v.size() == 2);
    for (auto& p : v) CHECK(p.order == (p.factor == P("t") ? 2 : 0));

    v = order_split(P("s-t"), HomogPoly());
    REQUIRE(v.size() == 1);
    CHECK(v[0].order == kInfinite);

    v = order_split(P("s*(s-t)*(s+t)"), P("s^2*(s-t)^5"));
    REQUIRE(v.size() == 3);
    for (auto& p : v) {
        if (p.factor == P("s")) CHECK(p.order == 2);
        else if (p.factor == P("s-t")) CHECK(p.order == 5);
        else CHECK((p.factor == P("s+t") && p.order == 0));
    }
}

TEST_CASE("content normalization") {
    auto n = content_normalize(P("-6*s^2+12*s*t"));
    CHECK(n.unit == FieldElem(Field(), -6L));
    CHECK(n.poly == P("s^2-2*s*t"));
    n = content_normalize(P("s-t"));
    CHECK(n.unit.is_one());
    n = content_normalize(P("2/3*t^4"));
    CHECK(n.unit == FieldElem(Field(), Q(2, 3)));
    CHECK(n.poly == P("t^4"));

    Field f = test::ext("x^2+1");
    n = content_normalize(P("(2*a)*s+t", f));
    CHECK(n.poly.leading().is_one());
    CHECK(n.unit * n.poly == P("(2*a)*s+t", f));
}

TEST_CASE("parser") {
    CHECK(P("(s+t)^2") == P("s^2+2*s*t+t^2"));
    CHECK(P("2^6*3^3*s^5*t") == P("1728*s^5*t"));
    CHECK(P("s/2 - t/3") == P("(3*s-2*t)/6"));
    CHECK(P("0").is_zero());
    try {
        P("s^2+t");
        FAIL("expected NonHomogeneous");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonHomogeneous);
        CHECK(std::string(e.what()).find("t") != std::string::npos);
    }
    CHECK_THROWS_AS(P("s+"), Error);
    CHECK_THROWS_AS(P("s/t"), Error);
    CHECK_THROWS_AS(P("a*s"), Error);
    Field f = test::ext("2*x^2-7*x+28");
    HomogPoly g = P("a*s-(7/2)*t", f);
    CHECK(g.degree() == 1);
}

TEST_CASE("substitution") {
    HomogPoly f = P("s^2*t");
    CHECK(substitute(f, P("s+t"), P("s-t")) == P("(s+t)^2*(s-t)"));
    CHECK(substitute(P("s-t"), P("256*s^3*(s-t)"), P("-27*t^4")) == P("(4*s-3*t)^2*(16*s^2+8*s*t+3*t^2)"));
}
