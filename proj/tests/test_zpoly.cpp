#include "doctest.h"

#include "hypint/zpoly.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace hypint;

TEST_CASE("basic polynomial arithmetic") {
    ZPoly f = ZPoly::from_list({8, -16, 0, 0, 0, 1});  // x^5 - 16x + 8
    CHECK(f.degree() == 5);
    CHECK(f.lc() == 1);
    CHECK(f.eval(Int(2)) == 8);  // 32 - 32 + 8
    CHECK(f.str() == "x^5 - 16*x + 8");

    ZPoly g = ZPoly::from_list({-1, 1});  // x - 1
    ZPoly h = f * g;
    CHECK(h.degree() == 6);
    CHECK(h.eval(Int(1)) == 0);
    CHECK(h.divexact(g) == f);
    CHECK_THROWS_AS(f.divexact(ZPoly::from_list({0, 2})), DomainError);
}

TEST_CASE("resultant: derived product-formula cases") {
    // Res(x^2-2, x^2-3) = prod g(alpha) over alpha = +-sqrt(2): (2-3)(2-3) = 1
    ZPoly f = ZPoly::from_list({-2, 0, 1});
    ZPoly g = ZPoly::from_list({-3, 0, 1});
    CHECK(resultant(f, g) == 1);

    // Res(f, 1) = 1
    CHECK(resultant(f, ZPoly::constant(Int(1))) == 1);

    // Res(x - a, g) = g(a)
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        long a = coef(rng);
        std::vector<Int> gc;
        int dg = 1 + (int)(rng() % 5);
        for (int i = 0; i <= dg; ++i) gc.emplace_back(coef(rng));
        ZPoly gg(std::move(gc));
        if (gg.degree() < 1) continue;
        ZPoly lin = ZPoly::from_list({-a, 1});
        CHECK(resultant(lin, gg) == gg.eval(Int(a)));
    }

    CHECK_THROWS_AS(resultant(ZPoly(), f), DomainError);
}

TEST_CASE("resultant agrees with Sylvester/Bareiss oracle on random inputs") {
    std::mt19937 rng(98765);
    std::uniform_int_distribution<long> coef(-20, 20);
    for (int trial = 0; trial < 60; ++trial) {
        int df = 1 + (int)(rng() % 6), dg = 1 + (int)(rng() % 6);
        ZPoly f = test_support::random_poly(rng, df, coef);
        ZPoly g = test_support::random_poly(rng, dg, coef);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(resultant(f, g) == test_support::sylvester_resultant(f, g));
    }
}

TEST_CASE("resultant multiplicativity") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> coef(-8, 8);
    for (int trial = 0; trial < 40; ++trial) {
        ZPoly f = test_support::random_poly(rng, 1 + (int)(rng() % 4), coef);
        ZPoly g = test_support::random_poly(rng, 1 + (int)(rng() % 3), coef);
        ZPoly h = test_support::random_poly(rng, 1 + (int)(rng() % 3), coef);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    }
}

TEST_CASE("discriminant closed forms") {
    // disc(x^2 + c) = -4c
    CHECK(discriminant(ZPoly::from_list({1, 0, 1})) == -4);
    // disc(x^3 + ax + b) = -4a^3 - 27b^2; for x^3 - 2: -108
    CHECK(discriminant(ZPoly::from_list({-2, 0, 0, 1})) == -108);
    // the quintic fixture: disc(x^5 - 16x + 8) = 4^4*(-16)^5 + 5^5*8^4
    ZPoly f = ZPoly::from_list({8, -16, 0, 0, 0, 1});
    Int expect = pow_int(Int(4), 4) * pow_int(Int(-16), 5) + pow_int(Int(5), 5) * pow_int(Int(8), 4);
    CHECK(discriminant(f) == expect);
    CHECK(discriminant(f) == Int(-255635456));
    CHECK_THROWS_AS(discriminant(ZPoly::constant(Int(3))), DomainError);
}

TEST_CASE("sturm real root counts") {
    CHECK(sturm_real_root_count(ZPoly::from_list({-2, 0, 0, 1})) == 1);  // x^3-2
    CHECK(sturm_real_root_count(ZPoly::from_list({1, 0, 1})) == 0);     // x^2+1
    CHECK(sturm_real_root_count(ZPoly::from_list({8, -16, 0, 0, 0, 1})) == 3);

    // bounded range: x^2-2 has one root in (0, 2]
    ZPoly f = ZPoly::from_list({-2, 0, 1});
    CHECK(sturm_real_root_count(f, Rat(0), Rat(2)) == 1);
    CHECK(sturm_real_root_count(f, Rat(-2), Rat(2)) == 2);
    CHECK(sturm_real_root_count(f, Rat(3), Rat(5)) == 0);

    // non-squarefree input is rejected with the gcd named
    ZPoly sq = f * f;
    CHECK_THROWS_AS(sturm_real_root_count(sq), DomainError);
}

TEST_CASE("sturm count matches construction for factored polynomials") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> root(-10, 10);
    for (int trial = 0; trial < 30; ++trial) {
        // build a degree-6 product of distinct linear and irreducible
        // quadratic factors, count the real roots by construction
        std::set<long> used;
        ZPoly f = ZPoly::constant(Int(1));
        int quads = (int)(rng() % 4);        // 0..3 irreducible quadratics
        int real_roots = 6 - 2 * quads;      // distinct linear factors
        for (int i = 0; i < real_roots; ++i) {
            long r;
            do { r = root(rng); } while (used.count(r));
            used.insert(r);
            f = f * ZPoly::from_list({-r, 1});
        }
        for (int i = 0; i < quads; ++i) {
            // x^2 + bx + c with b^2 < 4c: no real roots; c varies so the
            // quadratics stay distinct (squarefree product)
            long b = root(rng);
            long c = b * b / 4 + 1 + i;
            f = f * ZPoly::from_list({c, b, 1});
        }
        CHECK(sturm_real_root_count(f) == real_roots);
    }
}

TEST_CASE("gcd and squarefree part") {
    ZPoly f = ZPoly::from_list({-2, 0, 1});
    ZPoly g = ZPoly::from_list({-3, 0, 1});
    CHECK(gcd(f, g).degree() == 0);
    ZPoly prod = f * f * g;
    ZPoly sf = squarefree_part(prod);
    CHECK(sf == f * g);
    CHECK(is_squarefree(sf));
    CHECK(!is_squarefree(prod));
}

TEST_CASE("interval and box evaluation enclose exact values") {
    ZPoly f = ZPoly::from_list({8, -16, 0, 0, 0, 1});
    auto x = RealInterval::from_rat(Rat(3, 2));
    auto v = f.eval(x);
    // f(3/2) = 243/32 - 24 + 8 = -269/32... compute exactly:
    Rat exact = Rat(243, 32) - Rat(16) * Rat(3, 2) + Rat(8);
    CHECK(v.contains(exact));

    ComplexBox z(RealInterval::from_long(0), RealInterval::from_long(1));  // i
    auto fz = f.eval(z);  // i^5 - 16i + 8 = 8 - 15i
    CHECK(fz.re().contains(Rat(8)));
    CHECK(fz.im().contains(Rat(-15)));
}

TEST_CASE("linear composition helpers") {
    ZPoly f = ZPoly::from_list({1, 2, 1});  // (x+1)^2
    ZPoly g = compose_linear(f, Int(2), Int(-1));  // (2x)^2
    CHECK(g == ZPoly::from_list({0, 0, 4}));
    ZPoly h = compose_x_over(ZPoly::from_list({1, 0, 1}), Int(2));  // num of (x/2)^2+1
    CHECK(h == ZPoly::from_list({4, 0, 1}));
}

TEST_CASE("resultant_compose gives sum-of-roots minimal polynomials") {
    // roots of x^2-2 plus roots of x^2-3: min poly of sqrt2+sqrt3 divides it
    ZPoly f = ZPoly::from_list({-2, 0, 1});
    ZPoly g = ZPoly::from_list({-3, 0, 1});
    ZPoly r = resultant_compose(f, g, Int(-1));  // Res_y(f(y), g(x + y)): roots a+b? sign care
    // use c = -1 so the second factor is g(x + y); roots x = b - a... check
    // the canonical identity instead: c = 1 gives roots a + b of
    // Res_y(f(y), g(x - y)).
    ZPoly r1 = resultant_compose(f, g, Int(1));
    CHECK(r1.degree() == 4);
    // x^4 - 10x^2 + 1 is the classical min poly of sqrt2+sqrt3
    ZPoly expect = ZPoly::from_list({1, 0, -10, 0, 1});
    CHECK(r1.primitive_part() == expect);
    CHECK(r.degree() == 4);
}
