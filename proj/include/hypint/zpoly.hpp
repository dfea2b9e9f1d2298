#pragma once

// Exact polynomial arithmetic over Z: resultants (subresultant PRS),
// discriminants, gcd, squarefree decomposition, Sturm chains and
// rigorous evaluation on intervals / complex boxes.

#include <optional>
#include <string>
#include <vector>

#include "hypint/interval.hpp"
#include "hypint/util.hpp"

namespace hypint {

// Coefficients lowest degree first; no trailing zeros; zero poly = empty.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ZPoly constant(Int v) { return ZPoly(std::vector<Int>{std::move(v)}); }
    static ZPoly x_power(int k, Int lead = 1);  // lead * x^k
    // "x^5 - 16*x + 8" is written {8, -16, 0, 0, 0, 1}
    static ZPoly from_list(std::initializer_list<long> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero poly
    const Int& lc() const;
    const Int& operator[](int i) const;
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

    ZPoly operator-() const;
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator*(const Int& k) const;
    ZPoly shifted(int k) const;  // * x^k

    ZPoly derivative() const;
    Int content() const;          // gcd of coefficients, >= 0 (0 for zero poly)
    ZPoly primitive_part() const; // content removed, sign of lc preserved
    // Largest k with x^k | f, and f / x^k.
    std::pair<int, ZPoly> strip_zero_roots() const;

    Int eval(const Int& x) const;
    // Exact sign of f(p/q), q > 0.
    int sign_at(const Int& p, const Int& q) const;
    int sign_at(const Rat& x) const;
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;
    RealInterval eval(const RealInterval& x) const;
    ComplexBox eval(const ComplexBox& z) const;

    // Exact quotient, throws if division is not exact over Z.
    ZPoly divexact(const ZPoly& d) const;
    // Pseudo-remainder scaled by a positive constant: returns r with
    // c*this = q*d + r for some c > 0, deg r < deg d.
    ZPoly pos_prem(const ZPoly& d) const;

    // All real roots lie in (-B, B) with B = 1 + max|c_i|/|lc| rounded up
    // to a power of two (returned as exponent: B = 2^k).
    int root_bound_exp() const;

    std::string str(const std::string& var = "x") const;

    size_t hash() const;

private:
    void trim();
    std::vector<Int> c_;
};

ZPoly gcd(const ZPoly& a, const ZPoly& b);  // primitive, positive lc
ZPoly squarefree_part(const ZPoly& f);
bool is_squarefree(const ZPoly& f);

// Res(f, g); zero input is a domain error.
Int resultant(const ZPoly& f, const ZPoly& g);
// Disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f); deg f >= 1 required.
Int discriminant(const ZPoly& f);

// Number of distinct real roots of squarefree f in (a, b]; unbounded
// ends via nullopt.  Non-squarefree input raises DomainError carrying
// the offending gcd.
struct SturmChain {
    std::vector<ZPoly> seq;
    int variations_at(const Rat& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;
};
SturmChain sturm_chain(const ZPoly& f);
int sturm_real_root_count(const ZPoly& f,
                          std::optional<Rat> lo = std::nullopt,
                          std::optional<Rat> hi = std::nullopt);

// Composition helpers used by the compositum construction.
ZPoly compose_linear(const ZPoly& f, const Int& a, const Int& b); // f(a*x + b)
// numerator of f(x/d): f_0 d^n + f_1 d^{n-1} x + ... ; exact over Z
ZPoly compose_x_over(const ZPoly& f, const Int& d);
// Res_y(f(y), g(x - c*y)) computed by interpolation; both nonzero.
ZPoly resultant_compose(const ZPoly& f, const ZPoly& g, const Int& c);

} // namespace hypint
