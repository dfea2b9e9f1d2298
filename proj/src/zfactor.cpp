#include "hypint/zfactor.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace hypint {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 powmod_u(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod_u(a % p, p - 2, p); }

// dense polynomial over F_p, lowest degree first, no trailing zeros
using PP = std::vector<u64>;

void pp_trim(PP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int pp_deg(const PP& f) { return (int)f.size() - 1; }

PP pp_mul(const PP& a, const PP& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (u128)a[i] * b[j]) % p;
    }
    pp_trim(r);
    return r;
}

// remainder of a by monic-izable b
PP pp_rem(PP a, const PP& b, u64 p) {
    int db = pp_deg(b);
    if (db < 0) throw DomainError("pp_rem by zero");
    u64 binv = invmod(b.back(), p);
    while (pp_deg(a) >= db) {
        u64 c = mulmod(a.back(), binv, p);
        int shift = pp_deg(a) - db;
        for (int i = 0; i <= db; ++i) {
            u64 t = mulmod(c, b[i], p);
            u64& x = a[i + shift];
            x = (x >= t) ? x - t : x + p - t;
        }
        pp_trim(a);
    }
    return a;
}

PP pp_gcd(PP a, PP b, u64 p) {
    while (!b.empty()) {
        PP r = pp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

PP pp_monic(PP f, u64 p) {
    if (f.empty()) return f;
    u64 inv = invmod(f.back(), p);
    for (auto& c : f) c = mulmod(c, inv, p);
    return f;
}

PP pp_derivative(const PP& f, u64 p) {
    if (f.size() <= 1) return {};
    PP r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = mulmod(f[i], i % p, p);
    pp_trim(r);
    return r;
}

PP pp_powmod(PP base, Int e, const PP& mod, u64 p) {
    PP r{1};
    base = pp_rem(std::move(base), mod, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = pp_rem(pp_mul(r, base, p), mod, p);
        base = pp_rem(pp_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

PP pp_from_zpoly(const ZPoly& f, u64 p) {
    PP r(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i)
        r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    pp_trim(r);
    return r;
}

// exact division of monic-divisor products over F_p (g | f assumed)
PP pp_divexact(const PP& f, const PP& g, u64 p) {
    PP num = f;
    int dg = pp_deg(g);
    int dq = pp_deg(f) - dg;
    u64 ginv = invmod(g.back(), p);
    PP q(dq + 1, 0);
    for (int k = dq; k >= 0; --k) {
        u64 c = mulmod(num[k + dg], ginv, p);
        q[k] = c;
        if (c == 0) continue;
        for (int i = 0; i <= dg; ++i) {
            u64 t = mulmod(c, g[i], p);
            u64& x = num[i + k];
            x = (x >= t) ? x - t : x + p - t;
        }
    }
    pp_trim(q);
    return q;
}

// deterministic splitting randomness
struct Lcg {
    u64 s;
    u64 next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 11;
    }
};

// Cantor-Zassenhaus equal-degree splitting: f monic squarefree over F_p,
// all irreducible factors of degree d.
void cz_equal_degree(const PP& f, int d, u64 p, Lcg& rng, std::vector<PP>& out) {
    if (pp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    Int exp = (pow_int(Int((unsigned long)p), (unsigned long)d) - 1) / 2;
    while (true) {
        PP a(pp_deg(f), 0);
        for (auto& c : a) c = rng.next() % p;
        pp_trim(a);
        if (pp_deg(a) < 1) continue;
        PP g = pp_gcd(f, a, p);
        if (!(pp_deg(g) > 0 && pp_deg(g) < pp_deg(f))) {
            PP b = pp_powmod(a, exp, f, p);
            if (b.empty()) continue;
            b[0] = (b[0] + p - 1) % p;  // b - 1
            pp_trim(b);
            if (b.empty()) continue;
            g = pp_gcd(f, b, p);
            if (!(pp_deg(g) > 0 && pp_deg(g) < pp_deg(f))) continue;
        }
        cz_equal_degree(g, d, p, rng, out);
        cz_equal_degree(pp_divexact(f, g, p), d, p, rng, out);
        return;
    }
}

std::vector<PP> factor_mod_p(const PP& f_monic_sf, u64 p, u64 seed) {
    // distinct-degree then equal-degree splitting
    std::vector<PP> out;
    Lcg rng{seed ^ 0x9e3779b97f4a7c15ull};
    PP f = f_monic_sf;
    PP h{0, 1};  // x
    int d = 0;
    while (pp_deg(f) > 0) {
        ++d;
        if (2 * d > pp_deg(f)) {
            out.push_back(f);
            break;
        }
        h = pp_powmod(std::move(h), Int((unsigned long)p), f, p);
        PP hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        // h - x
        hx[1] = (hx[1] + p - 1) % p;
        pp_trim(hx);
        PP g = hx.empty() ? PP{} : pp_gcd(f, hx, p);
        if (pp_deg(g) > 0) {
            cz_equal_degree(g, d, p, rng, out);
            f = pp_divexact(f, g, p);
            if (pp_deg(f) > 0) h = pp_rem(std::move(h), f, p);
        }
    }
    return out;
}

// deterministic pool of ~30-bit primes for modular work
const std::vector<u64>& modular_primes() {
    static std::vector<u64> ps = [] {
        std::vector<u64> v;
        Int c = (Int(1) << 30) + 3;
        while (v.size() < 40) {
            if (mpz_probab_prime_p(c.get_mpz_t(), 32)) v.push_back(c.get_ui());
            c += 2;
        }
        return v;
    }();
    return ps;
}

} // namespace

bool proves_irreducible(const ZPoly& f, int num_primes) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    // subset-sum degree sets intersected over several primes
    std::vector<bool> possible(n + 1, true);
    int used = 0;
    for (u64 p : modular_primes()) {
        if (used >= num_primes) break;
        if (mpz_fdiv_ui(f.lc().get_mpz_t(), p) == 0) continue;
        PP fp = pp_monic(pp_from_zpoly(f, p), p);
        PP g = pp_gcd(fp, pp_derivative(fp, p), p);
        if (pp_deg(g) != 0) continue;  // not squarefree mod p
        ++used;
        std::vector<PP> facs = factor_mod_p(fp, p, f.hash());
        std::vector<bool> sums(n + 1, false);
        sums[0] = true;
        for (const auto& g2 : facs) {
            int d = pp_deg(g2);
            for (int s = n; s >= d; --s)
                if (sums[s - d]) sums[s] = true;
        }
        for (int s = 0; s <= n; ++s)
            if (!sums[s]) possible[s] = false;
        bool any_proper = false;
        for (int s = 1; s < n; ++s) any_proper |= possible[s];
        if (!any_proper) return true;
    }
    return false;
}

std::vector<ZPoly> factor_squarefree(const ZPoly& f_in, const FactorOptions& opt) {
    ZPoly f = f_in.primitive_part();
    if (sign(f.lc()) < 0) f = -f;
    if (f.degree() >= 1 && f[0] == 0) {
        // pull out the x factor so every remaining constant term is nonzero
        ZPoly g = f.strip_zero_roots().second;
        std::vector<ZPoly> facs = factor_squarefree(g, opt);
        facs.insert(facs.begin(), ZPoly::from_list({0, 1}));
        return facs;
    }
    int n = f.degree();
    if (n <= 0) return {};
    if (n == 1) return {f};
    if (proves_irreducible(f, opt.pretest_primes)) return {f};

    // choose the prime giving the fewest modular factors among a few
    u64 best_p = 0;
    std::vector<PP> best_facs;
    int tried = 0;
    for (u64 p : modular_primes()) {
        if (mpz_fdiv_ui(f.lc().get_mpz_t(), p) == 0) continue;
        PP fp = pp_monic(pp_from_zpoly(f, p), p);
        PP g = pp_gcd(fp, pp_derivative(fp, p), p);
        if (pp_deg(g) != 0) continue;
        std::vector<PP> facs = factor_mod_p(fp, p, f.hash());
        if (best_facs.empty() || facs.size() < best_facs.size()) {
            best_p = p;
            best_facs = std::move(facs);
        }
        if (++tried >= 3 || best_facs.size() <= 2) break;
    }
    if (best_facs.empty())
        throw EffortExceeded("no usable modular prime for factorization of " + f.str());
    if (best_facs.size() == 1) return {f};

    u64 p = best_p;
    // Landau-Mignotte style bound: coefficients of lc(f)*any monic factor
    // image are below 2^(n+1) * |f|_2 * |lc(f)|
    Int norm2 = 0;
    for (int i = 0; i <= n; ++i) norm2 += f[i] * f[i];
    Int bound = (Int(1) << (n + 2)) * (sqrt(norm2) + 1) * abs(f.lc());
    // lift to p^K > 2*bound
    int K = 1;
    Int pk((unsigned long)p);
    while (pk <= 2 * bound) {
        pk *= Int((unsigned long)p);
        ++K;
    }

    // --- linear multifactor Hensel lifting ---
    int r = (int)best_facs.size();
    std::sort(best_facs.begin(), best_facs.end(),
              [](const PP& a, const PP& b) { return pp_deg(a) < pp_deg(b); });
    // sigma_i = (prod_{j!=i} g_j)^{-1} mod g_i over F_p
    std::vector<PP> sigma(r);
    for (int i = 0; i < r; ++i) {
        PP prod{1};
        for (int j = 0; j < r; ++j)
            if (j != i) prod = pp_rem(pp_mul(prod, best_facs[j], p), best_facs[i], p);
        // inverse mod g_i by extended euclid over F_p
        // compute via powmod in the quotient field only if g_i irreducible --
        // it is (modular factors are irreducible), so a^(p^d-2)?? cheaper:
        // extended euclid:
        PP a = prod, b = best_facs[i];
        PP s0{1}, s1{};
        while (pp_deg(b) >= 0 && !b.empty()) {
            // division a = q*b + rem
            PP q, rem = a;
            int db = pp_deg(b);
            u64 binv = invmod(b.back(), p);
            q.assign(std::max(0, pp_deg(a) - db + 1), 0);
            while (pp_deg(rem) >= db) {
                u64 c = mulmod(rem.back(), binv, p);
                int shift = pp_deg(rem) - db;
                q[shift] = c;
                for (int t2 = 0; t2 <= db; ++t2) {
                    u64 t = mulmod(c, b[t2], p);
                    u64& x = rem[t2 + shift];
                    x = (x >= t) ? x - t : x + p - t;
                }
                pp_trim(rem);
            }
            pp_trim(q);
            // (s0, s1) <- (s1, s0 - q*s1)
            PP qs1 = pp_mul(q, s1, p);
            PP ns(std::max(s0.size(), qs1.size()), 0);
            for (size_t t2 = 0; t2 < ns.size(); ++t2) {
                u64 x = t2 < s0.size() ? s0[t2] : 0;
                u64 y = t2 < qs1.size() ? qs1[t2] : 0;
                ns[t2] = (x >= y) ? x - y : x + p - y;
            }
            pp_trim(ns);
            s0 = std::move(s1);
            s1 = std::move(ns);
            a = std::move(b);
            b = std::move(rem);
        }
        // now a = gcd = constant, s0 satisfies s0*prod = a mod g_i
        if (pp_deg(a) != 0)
            throw EffortExceeded("hensel: modular factors not coprime");
        u64 ainv = invmod(a[0], p);
        for (auto& c : s0) c = mulmod(c, ainv, p);
        sigma[i] = pp_rem(std::move(s0), best_facs[i], p);
    }

    // lifted factors as ZPoly with coefficients in [0, p^K)
    auto sym = [&](const Int& x) {
        Int y = x % pk;
        if (y < 0) y += pk;
        if (2 * y > pk) y -= pk;
        return y;
    };
    std::vector<std::vector<Int>> G(r);
    for (int i = 0; i < r; ++i) {
        G[i].resize(pp_deg(best_facs[i]) + 1);
        for (int j = 0; j <= pp_deg(best_facs[i]); ++j) G[i][j] = Int(best_facs[i][j]);
    }
    Int lc = f.lc();
    u64 lcp = mpz_fdiv_ui(lc.get_mpz_t(), p);
    u64 lcinv = invmod(lcp, p);
    Int pj((unsigned long)p);
    for (int step = 1; step < K; ++step, pj *= Int((unsigned long)p)) {
        // e = f - lc * prod G  (mod p^(step+1)), divisible by p^step
        Int mod_next = pj * Int((unsigned long)p);
        std::vector<Int> prod{lc};
        for (int i = 0; i < r; ++i) {
            std::vector<Int> np(prod.size() + G[i].size() - 1, Int(0));
            for (size_t a2 = 0; a2 < prod.size(); ++a2)
                for (size_t b2 = 0; b2 < G[i].size(); ++b2)
                    np[a2 + b2] = (np[a2 + b2] + prod[a2] * G[i][b2]) % mod_next;
            prod = std::move(np);
        }
        std::vector<Int> e(std::max((size_t)n + 1, prod.size()), Int(0));
        for (int i2 = 0; i2 <= n; ++i2) e[i2] = f[i2];
        for (size_t i2 = 0; i2 < prod.size(); ++i2) e[i2] = (e[i2] - prod[i2]) % mod_next;
        // c = e / p^step mod p  (e is divisible by p^step)
        PP c(e.size(), 0);
        for (size_t i2 = 0; i2 < e.size(); ++i2) {
            Int q = e[i2] / pj;
            c[i2] = mpz_fdiv_ui(q.get_mpz_t(), p);
        }
        pp_trim(c);
        if (c.empty()) continue;
        // delta_i = (c * lc^-1 * sigma_i) mod g_i over F_p
        for (int i = 0; i < r; ++i) {
            PP ci = pp_rem(c, best_facs[i], p);
            for (auto& x : ci) x = mulmod(x, lcinv, p);
            PP di = pp_rem(pp_mul(ci, sigma[i], p), best_facs[i], p);
            for (int j = 0; j <= pp_deg(di); ++j)
                G[i][j] = (G[i][j] + pj * Int(di[j])) % (pj * Int((unsigned long)p));
        }
    }

    // --- recombination ---
    std::vector<ZPoly> lifted(r);
    for (int i = 0; i < r; ++i) {
        std::vector<Int> v = G[i];
        lifted[i] = ZPoly(std::move(v));
    }
    std::vector<ZPoly> result;
    std::vector<int> alive(r);
    for (int i = 0; i < r; ++i) alive[i] = i;
    ZPoly rem_f = f;
    std::uint64_t candidates = 0;

    auto product_mod = [&](const std::vector<int>& idx) {
        std::vector<Int> prod{rem_f.lc()};
        for (int i : idx) {
            const ZPoly& g = lifted[i];
            std::vector<Int> np(prod.size() + g.degree(), Int(0));
            for (size_t a2 = 0; a2 < prod.size(); ++a2)
                for (int b2 = 0; b2 <= g.degree(); ++b2)
                    np[a2 + b2] = (np[a2 + b2] + prod[a2] * g[b2]) % pk;
            prod = std::move(np);
        }
        for (auto& x : prod) x = sym(x);
        return ZPoly(std::move(prod));
    };

    unsigned m = 1;
    while (2 * m <= alive.size()) {
        bool found = false;
        std::vector<unsigned> pick(m);
        for (unsigned i = 0; i < m; ++i) pick[i] = i;
        while (true) {
            if (++candidates > opt.max_candidates)
                throw EffortExceeded("factor recombination exceeded its candidate budget");
            std::vector<int> idx;
            idx.reserve(m);
            for (unsigned i : pick) idx.push_back(alive[i]);
            // cheap test on the constant coefficient
            Int c0 = rem_f.lc();
            for (int i : idx) c0 = c0 * lifted[i][0] % pk;
            c0 = sym(c0);
            bool plausible = (c0 != 0) && ((rem_f[0] * rem_f.lc()) % c0 == 0);
            if (plausible) {
                ZPoly cand = product_mod(idx);
                ZPoly prim = cand.primitive_part();
                if (sign(prim.lc()) < 0) prim = -prim;
                bool divides = true;
                ZPoly quot;
                try {
                    quot = rem_f.divexact(prim);
                } catch (const DomainError&) {
                    divides = false;
                }
                if (divides && prim.degree() >= 1) {
                    result.push_back(prim);
                    rem_f = quot.primitive_part();
                    if (sign(rem_f.lc()) < 0) rem_f = -rem_f;
                    std::vector<int> na;
                    for (unsigned i = 0; i < alive.size(); ++i)
                        if (std::find(pick.begin(), pick.end(), i) == pick.end())
                            na.push_back(alive[i]);
                    alive = std::move(na);
                    found = true;
                    break;
                }
            }
            // next m-subset
            int i = (int)m - 1;
            while (i >= 0 && pick[i] == alive.size() - m + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (unsigned j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++m;
    }
    if (rem_f.degree() >= 1) result.push_back(rem_f);
    std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return result;
}

PolyFactorization factor_poly(const ZPoly& f, const FactorOptions& opt) {
    PolyFactorization out;
    if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
    out.content = f.content();
    if (sign(f.lc()) < 0) out.content = -out.content;
    ZPoly g = f.primitive_part();
    if (sign(g.lc()) < 0) g = -g;
    if (g.degree() < 1) return out;
    // every irreducible factor of g divides the squarefree part once;
    // multiplicities recovered by repeated exact division
    for (const ZPoly& irr : factor_squarefree(squarefree_part(g), opt)) {
        int e = 0;
        while (true) {
            try {
                g = g.divexact(irr);
                ++e;
            } catch (const DomainError&) {
                break;
            }
        }
        out.factors.push_back({irr, e});
    }
    if (g.degree() >= 1)
        throw EffortExceeded("factorization incomplete");  // cannot happen
    return out;
}

const std::vector<std::uint32_t>& primes_up_to(std::uint32_t n) {
    static std::vector<std::uint32_t> cache;
    static std::uint32_t cached_n = 0;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    if (n <= cached_n) return cache;
    std::vector<bool> comp(n + 1, false);
    cache.clear();
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (!comp[i]) {
            cache.push_back(i);
            for (std::uint64_t j = (std::uint64_t)i * i; j <= n; j += i) comp[j] = true;
        }
    }
    cached_n = n;
    return cache;
}

namespace {

Int pollard_rho(const Int& n, unsigned long budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Int x = 2, y = 2, d = 1, c = 1;
    for (unsigned long i = 0; i < budget; ++i) {
        x = (x * x + c) % n;
        y = (y * y + c) % n;
        y = (y * y + c) % n;
        Int diff = x - y;
        if (diff == 0) {
            c += 1;
            x = 2;
            y = 2;
            continue;
        }
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        if (d != 1 && d != n) return d;
    }
    return 1;  // gave up
}

void factor_rec(Int n, unsigned long rho_budget, std::vector<Int>& primes_found, Int& cof) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
        primes_found.push_back(n);
        return;
    }
    Int d = pollard_rho(n, rho_budget);
    if (d == 1) {
        cof *= n;
        return;
    }
    factor_rec(d, rho_budget, primes_found, cof);
    factor_rec(n / d, rho_budget, primes_found, cof);
}

} // namespace

IntFactorization factor_int(const Int& n_in, unsigned long trial_bound, unsigned long rho_budget) {
    if (n_in == 0) throw DomainError("factorization of zero");
    Int n = abs(n_in);
    IntFactorization out;
    out.cofactor = 1;
    std::vector<Int> found;
    for (std::uint32_t p : primes_up_to((std::uint32_t)trial_bound)) {
        if (n == 1) break;
        if (Int(p) * Int(p) > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            found.push_back(Int(p));
            n /= p;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 32))
            found.push_back(n);
        else
            factor_rec(n, rho_budget, found, out.cofactor);
    }
    std::sort(found.begin(), found.end());
    for (size_t i = 0; i < found.size();) {
        size_t j = i;
        while (j < found.size() && found[j] == found[i]) ++j;
        out.primes.push_back({found[i], (int)(j - i)});
        i = j;
    }
    return out;
}

std::vector<Int> squarefree_products_signed(const std::vector<Int>& primes) {
    std::vector<Int> out{Int(1)};
    for (const Int& p : primes) {
        size_t sz = out.size();
        for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * p);
    }
    size_t sz = out.size();
    for (size_t i = 0; i < sz; ++i) out.push_back(-out[i]);
    return out;
}

} // namespace hypint
