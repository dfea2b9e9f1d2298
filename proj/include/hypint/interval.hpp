#pragma once

// Directed-rounded real interval arithmetic on top of MPFR, plus the
// rectangular complex boxes used to carry polynomial root enclosures.
// Every operation rounds outward, so an interval always contains the
// exact real it stands for.

#include <mpfr.h>

#include <string>
#include <utility>

#include "hypint/util.hpp"

namespace hypint {

inline constexpr mpfr_prec_t kDefaultPrec = 256;

// Minimal RAII value wrapper around mpfr_t.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec = kDefaultPrec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Mpfr(const Mpfr& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Mpfr(Mpfr&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Mpfr& operator=(const Mpfr& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Mpfr& operator=(Mpfr&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpfr() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    int sgn() const { return mpfr_sgn(v_); }
    bool is_nan() const { return mpfr_nan_p(v_); }
    bool is_inf() const { return mpfr_inf_p(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

class RealInterval {
public:
    // Degenerate zero interval.
    explicit RealInterval(mpfr_prec_t prec = kDefaultPrec) : lo_(prec), hi_(prec) {}

    static RealInterval from_long(long v, mpfr_prec_t prec = kDefaultPrec);
    static RealInterval from_int(const Int& v, mpfr_prec_t prec = kDefaultPrec);
    static RealInterval from_rat(const Rat& v, mpfr_prec_t prec = kDefaultPrec);
    // Endpoints given as exact rationals; lo rounded down, hi up.
    static RealInterval from_endpoints(const Rat& lo, const Rat& hi,
                                       mpfr_prec_t prec = kDefaultPrec);
    // Decimal string, outward-rounded ("1.8e26", "-0.5", "2159").
    static RealInterval from_decimal(const std::string& s, mpfr_prec_t prec = kDefaultPrec);

    const Mpfr& lo() const { return lo_; }
    const Mpfr& hi() const { return hi_; }
    Mpfr& lo() { return lo_; }
    Mpfr& hi() { return hi_; }
    mpfr_prec_t prec() const { return lo_.prec(); }

    bool valid() const { return mpfr_lessequal_p(lo_.raw(), hi_.raw()); }
    bool is_point() const { return mpfr_equal_p(lo_.raw(), hi_.raw()); }
    bool contains_zero() const { return lo_.sgn() <= 0 && hi_.sgn() >= 0; }
    bool contains(const Rat& x) const;
    bool contains(const RealInterval& o) const;  // o subseteq *this
    bool overlaps(const RealInterval& o) const;
    // Sign if provable, else 0 with *exact=false.
    int certain_sign(bool* exact = nullptr) const;

    bool definitely_lt(const RealInterval& o) const {
        return mpfr_less_p(hi_.raw(), o.lo_.raw());
    }
    bool definitely_gt(const RealInterval& o) const { return o.definitely_lt(*this); }
    // hi <= o.lo, used for certified inequalities where touching is fine.
    bool definitely_le(const RealInterval& o) const {
        return mpfr_lessequal_p(hi_.raw(), o.lo_.raw());
    }

    RealInterval operator-() const;
    RealInterval operator+(const RealInterval& o) const;
    RealInterval operator-(const RealInterval& o) const;
    RealInterval operator*(const RealInterval& o) const;
    RealInterval operator/(const RealInterval& o) const;  // o must exclude 0
    RealInterval& operator+=(const RealInterval& o) { return *this = *this + o; }
    RealInterval& operator-=(const RealInterval& o) { return *this = *this - o; }
    RealInterval& operator*=(const RealInterval& o) { return *this = *this * o; }
    RealInterval& operator/=(const RealInterval& o) { return *this = *this / o; }

    RealInterval abs() const;
    RealInterval square() const;
    RealInterval max_with(const RealInterval& o) const;
    RealInterval min_with(const RealInterval& o) const;

    // Enclosure width as an upper bound.
    Mpfr width() const;
    // width / max(1,|mid|); used by the precision-doubling policy.
    double rel_width() const;
    double to_double() const { return (lo_.to_double() + hi_.to_double()) / 2; }

    // Decimal rendering of one endpoint, correctly rounded in the stated
    // direction; digits chosen from the precision.
    std::string decimal_lo(int digits = 20) const;
    std::string decimal_hi(int digits = 20) const;
    std::string str(int digits = 8) const;  // "[lo, hi]" diagnostic form

private:
    Mpfr lo_, hi_;
};

RealInterval iv_log(const RealInterval& x);    // requires lo > 0
RealInterval iv_exp(const RealInterval& x);
RealInterval iv_sqrt(const RealInterval& x);   // requires lo >= 0
RealInterval iv_pow_ui(const RealInterval& x, unsigned long e);
// x^y for x with lo > 0 and arbitrary real interval y.
RealInterval iv_pow(const RealInterval& x, const RealInterval& y);
// Gamma on intervals contained in (0, +inf).
RealInterval iv_gamma(const RealInterval& x);
RealInterval iv_pi(mpfr_prec_t prec = kDefaultPrec);
// max(interval, point rational) etc. conveniences
RealInterval iv_max0log(const RealInterval& x);  // log(max(1,x)) for x with lo > 0

// Named elementary-function dispatch mirroring the one-operation surface.
enum class Elementary { Log, Exp, Sqrt, Power, Gamma };
RealInterval interval_elementary(const RealInterval& x, Elementary op,
                                 const RealInterval* exponent = nullptr);

// Axis-aligned box in the complex plane.
class ComplexBox {
public:
    ComplexBox() = default;
    ComplexBox(RealInterval re, RealInterval im) : re_(std::move(re)), im_(std::move(im)) {}

    const RealInterval& re() const { return re_; }
    const RealInterval& im() const { return im_; }
    RealInterval& re() { return re_; }
    RealInterval& im() { return im_; }

    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool is_real_line() const { return im_.lo().sgn() == 0 && im_.hi().sgn() == 0; }
    bool disjoint(const ComplexBox& o) const;

    ComplexBox operator+(const ComplexBox& o) const;
    ComplexBox operator-(const ComplexBox& o) const;
    ComplexBox operator*(const ComplexBox& o) const;
    ComplexBox scaled(const Int& k) const;

    RealInterval abs() const;  // |z| enclosure
    std::string str(int digits = 8) const;

private:
    RealInterval re_, im_;
};

} // namespace hypint
