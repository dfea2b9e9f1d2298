#include "doctest.h"

#include "hypint/zfactor.hpp"

#include <random>

using namespace hypint;

TEST_CASE("factor squarefree products of known irreducibles") {
    ZPoly a = ZPoly::from_list({-2, 0, 1});       // x^2 - 2
    ZPoly b = ZPoly::from_list({-3, 0, 1});       // x^2 - 3
    ZPoly c = ZPoly::from_list({1, 1, 1});        // x^2 + x + 1
    ZPoly d = ZPoly::from_list({8, -16, 0, 0, 0, 1});  // quintic fixture

    auto facs = factor_squarefree(a * b * c);
    REQUIRE(facs.size() == 3);
    CHECK(facs[0] * facs[1] * facs[2] == a * b * c);

    auto f2 = factor_squarefree(a * d);
    REQUIRE(f2.size() == 2);
    CHECK(f2[0] == a);
    CHECK(f2[1] == d);
}

TEST_CASE("irreducibility of the fixture quintic and related polys") {
    ZPoly f = ZPoly::from_list({8, -16, 0, 0, 0, 1});
    auto facs = factor_squarefree(f);
    REQUIRE(facs.size() == 1);
    CHECK(facs[0] == f);
    // x^4 - 10x^2 + 1 (min poly of sqrt2+sqrt3) is irreducible
    auto g = factor_squarefree(ZPoly::from_list({1, 0, -10, 0, 1}));
    CHECK(g.size() == 1);
}

TEST_CASE("factor with multiplicities and content") {
    ZPoly a = ZPoly::from_list({-1, 1});  // x - 1
    ZPoly b = ZPoly::from_list({1, 0, 1});
    ZPoly f = (a * a * a * b) * Int(-12);
    auto fac = factor_poly(f);
    CHECK(fac.content == -12);
    REQUIRE(fac.factors.size() == 2);
    Int prod_check = 1;
    ZPoly rebuilt = ZPoly::constant(fac.content);
    for (auto& [g, e] : fac.factors)
        for (int i = 0; i < e; ++i) rebuilt = rebuilt * g;
    CHECK(rebuilt == f);
    (void)prod_check;
}

TEST_CASE("x factors and linear factors recombine correctly") {
    // x * (x - 2) * (3x + 1)
    ZPoly f = ZPoly::from_list({0, 1}) * ZPoly::from_list({-2, 1}) * ZPoly::from_list({1, 3});
    auto facs = factor_squarefree(f);
    REQUIRE(facs.size() == 3);
    ZPoly rebuilt = facs[0] * facs[1] * facs[2];
    CHECK(rebuilt.primitive_part() == f.primitive_part());
}

TEST_CASE("random products reassemble") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long> coef(-12, 12);
    for (int trial = 0; trial < 15; ++trial) {
        // random product of 2..4 random polys, squarefree part factored
        ZPoly f = ZPoly::constant(Int(1));
        int parts = 2 + (int)(rng() % 3);
        for (int i = 0; i < parts; ++i) {
            int dg = 1 + (int)(rng() % 3);
            std::vector<Int> c(dg + 1);
            for (int j = 0; j <= dg; ++j) c[j] = Int(coef(rng));
            if (c[dg] == 0) c[dg] = 1;
            f = f * ZPoly(std::move(c));
        }
        if (f.degree() < 2) continue;
        ZPoly sf = squarefree_part(f);
        auto facs = factor_squarefree(sf);
        ZPoly rebuilt = ZPoly::constant(Int(1));
        for (auto& g : facs) rebuilt = rebuilt * g;
        CHECK(rebuilt.primitive_part() == sf.primitive_part());
        for (auto& g : facs) {
            auto sub = factor_squarefree(g);
            CHECK(sub.size() == 1);  // factors are irreducible
        }
    }
}

TEST_CASE("degree-25 pair resultant factors as 5 + 20 for the fixture") {
    // Res_y(f(y), f(x - y)) for the quintic: the x = a_i + a_j (i != j)
    // part has degree 20; collisions give f(x/2) scaled, degree 5
    ZPoly f = ZPoly::from_list({8, -16, 0, 0, 0, 1});
    ZPoly r = resultant_compose(f, f, Int(1));
    REQUIRE(r.degree() == 25);
    auto facs = factor_squarefree(squarefree_part(r));
    // squarefree part: deg 5 (2a_i values) + deg 20 (a_i + a_j)
    REQUIRE(facs.size() == 2);
    CHECK(facs[0].degree() == 5);
    CHECK(facs[1].degree() == 20);
}

TEST_CASE("integer factorization") {
    auto f = factor_int(Int(-255635456));  // -2^12 * 139 * 449
    REQUIRE(f.complete());
    REQUIRE(f.primes.size() == 3);
    CHECK(f.primes[0] == std::make_pair(Int(2), 12));
    CHECK(f.primes[1] == std::make_pair(Int(139), 1));
    CHECK(f.primes[2] == std::make_pair(Int(449), 1));

    auto g = factor_int(Int("600851475143"));
    CHECK(g.complete());
    Int prod = 1;
    for (auto& [p, e] : g.primes) prod *= pow_int(p, e);
    CHECK(prod == Int("600851475143"));

    CHECK_THROWS_AS(factor_int(Int(0)), DomainError);
}

TEST_CASE("squarefree signed products") {
    auto v = squarefree_products_signed({Int(2), Int(3)});
    // {1,2,3,6} with both signs
    CHECK(v.size() == 8);
    Int sum = 0;
    for (auto& x : v) sum += x;
    CHECK(sum == 0);
}
