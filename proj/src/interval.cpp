#include "hypint/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <vector>

namespace hypint {

RealInterval RealInterval::from_long(long v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_si(r.lo_.raw(), v, MPFR_RNDD);
    mpfr_set_si(r.hi_.raw(), v, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_int(const Int& v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_z(r.lo_.raw(), v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_.raw(), v.get_mpz_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_rat(const Rat& v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_q(r.lo_.raw(), v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.raw(), v.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_endpoints(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
    if (mpq_cmp(lo.get_mpq_t(), hi.get_mpq_t()) > 0)
        throw DomainError("interval endpoints out of order");
    RealInterval r(prec);
    mpfr_set_q(r.lo_.raw(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.raw(), hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_decimal(const std::string& s, mpfr_prec_t prec) {
    RealInterval r(prec);
    if (mpfr_set_str(r.lo_.raw(), s.c_str(), 10, MPFR_RNDD) != 0 &&
        mpfr_nan_p(r.lo_.raw()))
        throw DomainError("bad decimal literal: " + s);
    mpfr_set_str(r.hi_.raw(), s.c_str(), 10, MPFR_RNDU);
    return r;
}

bool RealInterval::contains(const Rat& x) const {
    return mpfr_cmp_q(lo_.raw(), x.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_.raw(), x.get_mpq_t()) >= 0;
}

bool RealInterval::contains(const RealInterval& o) const {
    return mpfr_lessequal_p(lo_.raw(), o.lo_.raw()) &&
           mpfr_greaterequal_p(hi_.raw(), o.hi_.raw());
}

bool RealInterval::overlaps(const RealInterval& o) const {
    return !definitely_lt(o) && !o.definitely_lt(*this);
}

int RealInterval::certain_sign(bool* exact) const {
    if (lo_.sgn() > 0) { if (exact) *exact = true; return 1; }
    if (hi_.sgn() < 0) { if (exact) *exact = true; return -1; }
    if (lo_.sgn() == 0 && hi_.sgn() == 0) { if (exact) *exact = true; return 0; }
    if (exact) *exact = false;
    return 0;
}

RealInterval RealInterval::operator-() const {
    RealInterval r(prec());
    mpfr_neg(r.lo_.raw(), hi_.raw(), MPFR_RNDD);
    mpfr_neg(r.hi_.raw(), lo_.raw(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator+(const RealInterval& o) const {
    RealInterval r(std::max(prec(), o.prec()));
    mpfr_add(r.lo_.raw(), lo_.raw(), o.lo_.raw(), MPFR_RNDD);
    mpfr_add(r.hi_.raw(), hi_.raw(), o.hi_.raw(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator-(const RealInterval& o) const {
    RealInterval r(std::max(prec(), o.prec()));
    mpfr_sub(r.lo_.raw(), lo_.raw(), o.hi_.raw(), MPFR_RNDD);
    mpfr_sub(r.hi_.raw(), hi_.raw(), o.lo_.raw(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
    // min/max over the four endpoint products, each computed with both
    // rounding directions.
    RealInterval r(std::max(prec(), o.prec()));
    Mpfr t(r.prec());
    mpfr_srcptr a[2] = {lo_.raw(), hi_.raw()};
    mpfr_srcptr b[2] = {o.lo_.raw(), o.hi_.raw()};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t.raw(), a[i], b[j], MPFR_RNDD);
            if (first || mpfr_less_p(t.raw(), r.lo_.raw()))
                mpfr_set(r.lo_.raw(), t.raw(), MPFR_RNDD);
            mpfr_mul(t.raw(), a[i], b[j], MPFR_RNDU);
            if (first || mpfr_greater_p(t.raw(), r.hi_.raw()))
                mpfr_set(r.hi_.raw(), t.raw(), MPFR_RNDU);
            first = false;
        }
    return r;
}

RealInterval RealInterval::operator/(const RealInterval& o) const {
    if (o.contains_zero())
        throw DomainError("interval division by interval containing zero");
    RealInterval r(std::max(prec(), o.prec()));
    Mpfr t(r.prec());
    mpfr_srcptr a[2] = {lo_.raw(), hi_.raw()};
    mpfr_srcptr b[2] = {o.lo_.raw(), o.hi_.raw()};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(t.raw(), a[i], b[j], MPFR_RNDD);
            if (first || mpfr_less_p(t.raw(), r.lo_.raw()))
                mpfr_set(r.lo_.raw(), t.raw(), MPFR_RNDD);
            mpfr_div(t.raw(), a[i], b[j], MPFR_RNDU);
            if (first || mpfr_greater_p(t.raw(), r.hi_.raw()))
                mpfr_set(r.hi_.raw(), t.raw(), MPFR_RNDU);
            first = false;
        }
    return r;
}

RealInterval RealInterval::abs() const {
    RealInterval r(prec());
    if (lo_.sgn() >= 0) return *this;
    if (hi_.sgn() <= 0) return -*this;
    // straddles zero
    mpfr_set_zero(r.lo_.raw(), 1);
    Mpfr nl(prec());
    mpfr_neg(nl.raw(), lo_.raw(), MPFR_RNDU);
    if (mpfr_greater_p(nl.raw(), hi_.raw()))
        mpfr_set(r.hi_.raw(), nl.raw(), MPFR_RNDU);
    else
        mpfr_set(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::square() const {
    RealInterval a = abs();
    RealInterval r(prec());
    mpfr_sqr(r.lo().raw(), a.lo().raw(), MPFR_RNDD);
    mpfr_sqr(r.hi().raw(), a.hi().raw(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::max_with(const RealInterval& o) const {
    RealInterval r(std::max(prec(), o.prec()));
    mpfr_max(r.lo_.raw(), lo_.raw(), o.lo_.raw(), MPFR_RNDD);
    mpfr_max(r.hi_.raw(), hi_.raw(), o.hi_.raw(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::min_with(const RealInterval& o) const {
    RealInterval r(std::max(prec(), o.prec()));
    mpfr_min(r.lo_.raw(), lo_.raw(), o.lo_.raw(), MPFR_RNDD);
    mpfr_min(r.hi_.raw(), hi_.raw(), o.hi_.raw(), MPFR_RNDU);
    return r;
}

Mpfr RealInterval::width() const {
    Mpfr w(prec());
    mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return w;
}

double RealInterval::rel_width() const {
    double w = width().to_double();
    double m = std::max(std::abs(lo_.to_double()), std::abs(hi_.to_double()));
    return w / std::max(1.0, m);
}

static std::string mpfr_decimal(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
    char buf[96];
    std::string fmt = "%." + std::to_string(digits) + "R*e";
    if (digits + 16 < (int)sizeof(buf)) {
        mpfr_snprintf(buf, sizeof(buf), fmt.c_str(), rnd, v);
        return std::string(buf);
    }
    std::vector<char> big(digits + 32);
    mpfr_snprintf(big.data(), big.size(), fmt.c_str(), rnd, v);
    return std::string(big.data());
}

std::string RealInterval::decimal_lo(int digits) const {
    return mpfr_decimal(lo_.raw(), digits, MPFR_RNDD);
}

std::string RealInterval::decimal_hi(int digits) const {
    return mpfr_decimal(hi_.raw(), digits, MPFR_RNDU);
}

std::string RealInterval::str(int digits) const {
    return "[" + decimal_lo(digits) + ", " + decimal_hi(digits) + "]";
}

RealInterval iv_log(const RealInterval& x) {
    if (x.lo().sgn() <= 0) throw DomainError("log of interval touching (-inf,0]");
    RealInterval r(x.prec());
    mpfr_log(r.lo().raw(), x.lo().raw(), MPFR_RNDD);
    mpfr_log(r.hi().raw(), x.hi().raw(), MPFR_RNDU);
    return r;
}

RealInterval iv_exp(const RealInterval& x) {
    RealInterval r(x.prec());
    mpfr_exp(r.lo().raw(), x.lo().raw(), MPFR_RNDD);
    mpfr_exp(r.hi().raw(), x.hi().raw(), MPFR_RNDU);
    return r;
}

RealInterval iv_sqrt(const RealInterval& x) {
    if (x.lo().sgn() < 0) throw DomainError("sqrt of interval with negative lower end");
    RealInterval r(x.prec());
    mpfr_sqrt(r.lo().raw(), x.lo().raw(), MPFR_RNDD);
    mpfr_sqrt(r.hi().raw(), x.hi().raw(), MPFR_RNDU);
    return r;
}

RealInterval iv_pow_ui(const RealInterval& x, unsigned long e) {
    if (e == 0) return RealInterval::from_long(1, x.prec());
    RealInterval r(x.prec());
    if (e % 2 == 1) {
        // odd powers are monotone on all of R
        mpfr_pow_ui(r.lo().raw(), x.lo().raw(), e, MPFR_RNDD);
        mpfr_pow_ui(r.hi().raw(), x.hi().raw(), e, MPFR_RNDU);
        return r;
    }
    // even power: monotone on |x|
    RealInterval a = x.abs();
    mpfr_pow_ui(r.lo().raw(), a.lo().raw(), e, MPFR_RNDD);
    mpfr_pow_ui(r.hi().raw(), a.hi().raw(), e, MPFR_RNDU);
    return r;
}

RealInterval iv_pow(const RealInterval& x, const RealInterval& y) {
    if (x.lo().sgn() <= 0) throw DomainError("pow requires positive base interval");
    return iv_exp(iv_log(x) * y);
}

RealInterval iv_gamma(const RealInterval& x) {
    if (x.lo().sgn() <= 0)
        throw DomainError("gamma restricted to positive real intervals");
    mpfr_prec_t p = x.prec();
    RealInterval r(p);
    // Gamma is strictly convex on (0,inf): the maximum over [a,b] is at an
    // endpoint; the minimum is at an endpoint unless the global minimiser
    // x0 ~= 1.46163 lies inside, in which case a hard lower bound for
    // Gamma(x0) = 0.8856031944... is used.
    Mpfr ga_lo(p), gb_lo(p), ga_hi(p), gb_hi(p);
    mpfr_gamma(ga_lo.raw(), x.lo().raw(), MPFR_RNDD);
    mpfr_gamma(gb_lo.raw(), x.hi().raw(), MPFR_RNDD);
    mpfr_gamma(ga_hi.raw(), x.lo().raw(), MPFR_RNDU);
    mpfr_gamma(gb_hi.raw(), x.hi().raw(), MPFR_RNDU);
    mpfr_min(r.lo().raw(), ga_lo.raw(), gb_lo.raw(), MPFR_RNDD);
    mpfr_max(r.hi().raw(), ga_hi.raw(), gb_hi.raw(), MPFR_RNDU);
    if (!x.is_point()) {
        // does [a,b] contain the minimiser? compare against bracketing
        // rationals 1.46163 < x0 < 1.46164.
        Rat m_lo(146163, 100000), m_hi(146164, 100000);
        bool maybe_inside = mpfr_cmp_q(x.lo().raw(), m_hi.get_mpq_t()) <= 0 &&
                            mpfr_cmp_q(x.hi().raw(), m_lo.get_mpq_t()) >= 0;
        if (maybe_inside) {
            Mpfr floorv(p);
            mpfr_set_str(floorv.raw(), "0.88560319441", 10, MPFR_RNDD);
            if (mpfr_less_p(floorv.raw(), r.lo().raw()))
                mpfr_set(r.lo().raw(), floorv.raw(), MPFR_RNDD);
        }
    }
    return r;
}

RealInterval iv_pi(mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_const_pi(r.lo().raw(), MPFR_RNDD);
    mpfr_const_pi(r.hi().raw(), MPFR_RNDU);
    return r;
}

RealInterval iv_max0log(const RealInterval& x) {
    RealInterval one = RealInterval::from_long(1, x.prec());
    return iv_log(x.max_with(one));
}

RealInterval interval_elementary(const RealInterval& x, Elementary op,
                                 const RealInterval* exponent) {
    switch (op) {
        case Elementary::Log: return iv_log(x);
        case Elementary::Exp: return iv_exp(x);
        case Elementary::Sqrt: return iv_sqrt(x);
        case Elementary::Power:
            if (!exponent) throw DomainError("power needs an exponent");
            return iv_pow(x, *exponent);
        case Elementary::Gamma: return iv_gamma(x);
    }
    throw DomainError("unknown elementary operation");
}

bool ComplexBox::disjoint(const ComplexBox& o) const {
    return re_.definitely_lt(o.re_) || o.re_.definitely_lt(re_) ||
           im_.definitely_lt(o.im_) || o.im_.definitely_lt(im_);
}

ComplexBox ComplexBox::operator+(const ComplexBox& o) const {
    return {re_ + o.re_, im_ + o.im_};
}

ComplexBox ComplexBox::operator-(const ComplexBox& o) const {
    return {re_ - o.re_, im_ - o.im_};
}

ComplexBox ComplexBox::operator*(const ComplexBox& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
}

ComplexBox ComplexBox::scaled(const Int& k) const {
    RealInterval ki = RealInterval::from_int(k, re_.prec());
    return {re_ * ki, im_ * ki};
}

RealInterval ComplexBox::abs() const {
    return iv_sqrt(re_.square() + im_.square());
}

std::string ComplexBox::str(int digits) const {
    return re_.str(digits) + " + i*" + im_.str(digits);
}

} // namespace hypint
