#include "doctest.h"

#include "hypint/rootiso.hpp"

#include <random>

using namespace hypint;

TEST_CASE("real root isolation: simple quadratics") {
    // x^2 - 2: roots +-sqrt(2)
    auto roots = isolate_real_roots(ZPoly::from_list({-2, 0, 1}), 80);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].hi().sgn() < 0);
    CHECK(roots[1].lo().sgn() > 0);
    // Newton-refined oracle value of sqrt(2) to 30 digits
    Rat s2(Int("141421356237309504880168872421"), Int("100000000000000000000000000000"));
    CHECK(roots[1].contains(s2));
    CHECK(roots[0].contains(-s2));
    CHECK(roots[1].rel_width() < 1e-20);

    // x^2 + 1: no real roots
    CHECK(isolate_real_roots(ZPoly::from_list({1, 0, 1}), 64).empty());
}

TEST_CASE("real root isolation: dyadic and rational roots exact") {
    // (x - 1/2)(x - 3) scaled: (2x - 1)(x - 3) = 2x^2 - 7x + 3
    auto roots = isolate_real_roots(ZPoly::from_list({3, -7, 2}), 64);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].contains(Rat(1, 2)));
    CHECK(roots[0].is_point());  // 1/2 is dyadic, hit exactly
    CHECK(roots[1].contains(Rat(3)));
}

TEST_CASE("complex root isolation: x^2 + 1") {
    auto boxes = isolate_roots(ZPoly::from_list({1, 0, 1}), 64);
    REQUIRE(boxes.size() == 2);
    // sorted by (re, im): -i before +i
    CHECK(boxes[0].im().hi().sgn() < 0);
    CHECK(boxes[1].im().lo().sgn() > 0);
    CHECK(boxes[0].re().contains(Rat(0)));
    CHECK(boxes[1].im().contains(Rat(1)));
}

TEST_CASE("root certification: boxes contain zero of f and are disjoint") {
    std::mt19937 rng(31415);
    std::uniform_int_distribution<long> coef(-30, 30);
    for (int trial = 0; trial < 20; ++trial) {
        int deg = 2 + (int)(rng() % 5);
        std::vector<Int> c(deg + 1);
        for (int i = 0; i <= deg; ++i) c[i] = Int(coef(rng));
        if (c[deg] == 0) c[deg] = 1;
        ZPoly f(std::move(c));
        if (f.degree() < 2) continue;
        ZPoly sf = squarefree_part(f);
        auto boxes = isolate_roots(sf, 64);
        REQUIRE((int)boxes.size() == sf.degree());
        for (size_t i = 0; i < boxes.size(); ++i) {
            CHECK(sf.eval(boxes[i]).contains_zero());
            for (size_t j = i + 1; j < boxes.size(); ++j)
                CHECK(boxes[i].disjoint(boxes[j]));
        }
        // sturm count equals the number of real boxes
        int reals = 0;
        for (const auto& b : boxes)
            if (b.is_real_line()) ++reals;
        CHECK(reals == sturm_real_root_count(sf));
    }
}

TEST_CASE("quintic fixture roots and Mahler product cross-check") {
    ZPoly f = ZPoly::from_list({8, -16, 0, 0, 0, 1});  // x^5 - 16x + 8
    auto boxes = isolate_roots(f, 128);
    REQUIRE(boxes.size() == 5);
    int reals = 0;
    for (const auto& b : boxes)
        if (b.is_real_line()) ++reals;
    CHECK(reals == 3);

    // prod max(1,|root|) equals |Res(f, x^k...)|-free Mahler measure; here
    // cross-check against lc * prod |root| = |f(0)| for the full product
    RealInterval prod_all = RealInterval::from_long(1, 192);
    for (const auto& b : boxes) prod_all *= b.abs();
    CHECK(prod_all.contains(Rat(8)));  // |constant term| since lc = 1
}

TEST_CASE("requested precision tightens boxes") {
    ZPoly f = ZPoly::from_list({2, 0, 1});  // x^2 + 2, roots +-i sqrt 2
    auto lo = isolate_roots(f, 40);
    auto hi = isolate_roots(f, 160);
    REQUIRE(lo.size() == 2);
    REQUIRE(hi.size() == 2);
    CHECK(hi[1].im().width().to_double() < lo[1].im().width().to_double());
    CHECK(lo[1].im().contains(hi[1].im()));
}
