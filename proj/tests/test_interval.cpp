#include "doctest.h"

#include "hypint/interval.hpp"

using namespace hypint;

TEST_CASE("interval basic arithmetic rounds outward") {
    auto third = RealInterval::from_rat(Rat(1, 3));
    CHECK(third.valid());
    CHECK(!third.is_point());  // 1/3 is not a binary fraction
    CHECK(third.contains(Rat(1, 3)));

    auto a = RealInterval::from_long(2);
    auto b = RealInterval::from_long(3);
    auto s = a + b;
    CHECK(s.contains(Rat(5)));
    auto p = a * b;
    CHECK(p.contains(Rat(6)));
    auto q = a / b;
    CHECK(q.contains(Rat(2, 3)));
    auto d = a - b;
    CHECK(d.contains(Rat(-1)));
}

TEST_CASE("interval multiplication sign cases") {
    auto m = RealInterval::from_endpoints(Rat(-2), Rat(3));
    auto n = RealInterval::from_endpoints(Rat(-5), Rat(-1));
    auto p = m * n;
    CHECK(p.contains(Rat(10)));   // (-2)*(-5)
    CHECK(p.contains(Rat(-15)));  // 3*(-5)
    CHECK(p.contains(Rat(0)));
    auto sq = m.square();
    CHECK(sq.lo().sgn() == 0);
    CHECK(sq.contains(Rat(9)));
    CHECK(!sq.contains(Rat(10)));
}

TEST_CASE("division by interval containing zero is a domain error") {
    auto a = RealInterval::from_long(1);
    auto z = RealInterval::from_endpoints(Rat(-1), Rat(1));
    CHECK_THROWS_AS(a / z, DomainError);
}

// enclosure lies inside a coarse bracketing of the true value
static bool bracketed(const RealInterval& x, const Rat& lo, const Rat& hi) {
    return RealInterval::from_endpoints(lo, hi).contains(x);
}

TEST_CASE("elementary enclosures") {
    auto two = RealInterval::from_long(2);
    auto l = iv_log(two);
    // log 2 = 0.69314718055994530...
    CHECK(bracketed(l, Rat(6931471805599453, 10000000000000000),
                    Rat(6931471805599454, 10000000000000000)));
    CHECK(l.rel_width() < 1e-60);

    auto e = iv_exp(RealInterval::from_long(1));
    CHECK(bracketed(e, Rat(2718281828459045, 1000000000000000),
                    Rat(2718281828459046, 1000000000000000)));

    auto r = iv_sqrt(two);
    CHECK(bracketed(r, Rat(1414213562373095, 1000000000000000),
                    Rat(1414213562373096, 1000000000000000)));

    CHECK_THROWS_AS(iv_log(RealInterval::from_long(0)), DomainError);
    CHECK_THROWS_AS(iv_sqrt(RealInterval::from_long(-1)), DomainError);
}

TEST_CASE("gamma enclosures at the values the regulator bound needs") {
    // Gamma(1) = 1
    auto g1 = iv_gamma(RealInterval::from_long(1));
    CHECK(g1.contains(Rat(1)));
    CHECK(g1.rel_width() < 1e-60);
    // Gamma(3/2) = sqrt(pi)/2 = 0.88622692545275801...
    auto g32 = iv_gamma(RealInterval::from_rat(Rat(3, 2)));
    CHECK(bracketed(g32, Rat(886226925452758, 1000000000000000),
                    Rat(886226925452759, 1000000000000000)));
    // wide interval containing the interior minimum
    auto gw = iv_gamma(RealInterval::from_endpoints(Rat(1), Rat(2)));
    CHECK(gw.contains(Rat(1)));
    CHECK(gw.contains(Rat(886, 1000)));      // ~ the minimum value
    CHECK(!gw.contains(Rat(8855, 10000)));   // but not much below it
    CHECK_THROWS_AS(iv_gamma(RealInterval::from_long(0)), DomainError);
}

TEST_CASE("pow with real exponent") {
    auto b = RealInterval::from_long(2);
    auto e = RealInterval::from_rat(Rat(1, 2));
    auto p = iv_pow(b, e);
    CHECK(bracketed(p, Rat(1414213562373095, 1000000000000000),
                    Rat(1414213562373096, 1000000000000000)));
    auto pi = iv_pow_ui(RealInterval::from_endpoints(Rat(-3), Rat(2)), 2);
    CHECK(pi.contains(Rat(9)));
    CHECK(pi.contains(Rat(0)));
    CHECK(!pi.contains(Rat(-1)));
}

TEST_CASE("outward rounding: higher precision nests inside lower") {
    for (long num : {1L, 7L, 22L, -13L}) {
        Rat x(num, 7);
        auto w1 = RealInterval::from_rat(x, 64);
        auto w2 = RealInterval::from_rat(x, 128);
        auto y1 = iv_exp(w1 * w1);
        auto y2 = iv_exp(w2 * w2);
        CHECK(y1.contains(y2));
    }
}

TEST_CASE("complex box arithmetic and abs") {
    auto one = RealInterval::from_long(1);
    auto zero = RealInterval::from_long(0);
    ComplexBox i(zero, one);            // i
    ComplexBox z = i * i;               // -1
    CHECK(z.re().contains(Rat(-1)));
    CHECK(z.im().contains(Rat(0)));
    auto a = ComplexBox(RealInterval::from_long(3), RealInterval::from_long(4)).abs();
    CHECK(a.contains(Rat(5)));
}
