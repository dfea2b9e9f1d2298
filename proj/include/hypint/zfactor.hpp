#pragma once

// Factorization of integer polynomials (Zassenhaus: modular factorization,
// linear multifactor Hensel lifting, subset recombination) and small
// integer-factorization utilities.

#include <cstdint>
#include <vector>

#include "hypint/util.hpp"
#include "hypint/zpoly.hpp"

namespace hypint {

struct FactorOptions {
    // recombination gives up once this many candidate subsets were tried
    std::uint64_t max_candidates = 1u << 22;
    // degree-set irreducibility pretest uses this many good primes
    int pretest_primes = 5;
};

struct PolyFactorization {
    Int content;  // signed integer content; f = content * prod factors^mult
    std::vector<std::pair<ZPoly, int>> factors;  // primitive, lc > 0, irreducible
};

// Full factorization over Z.  Throws EffortExceeded when recombination
// exceeds its budget.
PolyFactorization factor_poly(const ZPoly& f, const FactorOptions& opt = {});

// Irreducible factors of a squarefree primitive polynomial.
std::vector<ZPoly> factor_squarefree(const ZPoly& f, const FactorOptions& opt = {});

// Cheap certificate: true means f (squarefree, primitive, deg >= 1) is
// certainly irreducible over Q; false means unknown.
bool proves_irreducible(const ZPoly& f, int num_primes = 5);

// ---- integers ----

struct IntFactorization {
    std::vector<std::pair<Int, int>> primes;  // ascending
    Int cofactor;                             // 1 when complete; always > 0
    bool complete() const { return cofactor == 1; }
};

// Trial division by primes <= trial_bound, then Pollard rho with the given
// iteration budget on what remains. n != 0; sign discarded.
IntFactorization factor_int(const Int& n, unsigned long trial_bound = 1000000,
                            unsigned long rho_budget = 2000000);

// Primes up to n (inclusive), cached sieve.
const std::vector<std::uint32_t>& primes_up_to(std::uint32_t n);

// All square-free products of the given primes, with both signs.
std::vector<Int> squarefree_products_signed(const std::vector<Int>& primes);

} // namespace hypint
