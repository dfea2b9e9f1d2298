#include "hypint/algebraic.hpp"

namespace hypint {

static ZPoly normalize_min_poly(const ZPoly& p) {
    if (p.degree() < 1) throw DomainError("minimal polynomial must have degree >= 1");
    ZPoly q = p.primitive_part();
    if (sign(q.lc()) < 0) q = -q;
    if (!is_squarefree(q))
        throw DomainError("minimal polynomial must be squarefree: " + p.str());
    return q;
}

AlgebraicNumber AlgebraicNumber::from_poly_root(const ZPoly& min_poly, int root_index,
                                                mpfr_prec_t prec) {
    AlgebraicNumber a;
    a.poly_ = normalize_min_poly(min_poly);
    auto boxes = isolate_roots(a.poly_, prec);
    if (root_index < 0 || root_index >= (int)boxes.size())
        throw DomainError("root index out of range");
    a.box_ = boxes[root_index];
    a.index_ = root_index;
    return a;
}

AlgebraicNumber AlgebraicNumber::from_poly_box(const ZPoly& min_poly, const ComplexBox& hint,
                                               mpfr_prec_t prec) {
    AlgebraicNumber a;
    a.poly_ = normalize_min_poly(min_poly);
    auto boxes = isolate_roots(a.poly_, prec);
    int found = -1;
    for (int i = 0; i < (int)boxes.size(); ++i) {
        if (hint.re().contains(boxes[i].re()) && hint.im().contains(boxes[i].im())) {
            if (found >= 0)
                throw DomainError("root hint box contains more than one conjugate");
            found = i;
        }
    }
    if (found < 0)
        throw DomainError("root hint box contains no conjugate of " + min_poly.str());
    a.box_ = boxes[found];
    a.index_ = found;
    return a;
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& r) {
    AlgebraicNumber a;
    a.poly_ = ZPoly(std::vector<Int>{-r.get_num(), r.get_den()});
    a.box_ = ComplexBox(RealInterval::from_rat(r), RealInterval::from_long(0));
    a.index_ = 0;
    return a;
}

bool AlgebraicNumber::is_zero() const {
    return degree() == 1 && poly_[0] == 0;
}

Rat AlgebraicNumber::as_rational() const {
    if (degree() != 1) throw DomainError("not a rational number");
    Rat r(-poly_[0], poly_[1]);
    r.canonicalize();
    return r;
}

std::vector<ComplexBox> AlgebraicNumber::conjugates(mpfr_prec_t prec) const {
    return isolate_roots(poly_, prec);
}

ComplexBox AlgebraicNumber::refined_box(mpfr_prec_t prec) const {
    return isolate_roots(poly_, prec)[index_];
}

RealInterval abs_log_height(const ZPoly& min_poly, double rel_target, mpfr_prec_t prec) {
    ZPoly p = min_poly.primitive_part();
    if (sign(p.lc()) < 0) p = -p;
    if (p.degree() < 1) throw DomainError("height of zero or constant polynomial");
    if (p.degree() == 1 && p[0] == 0)
        throw DomainError("height of zero");

    const mpfr_prec_t cap = 1 << 16;
    for (mpfr_prec_t wp = prec;; wp *= 2) {
        RealInterval h = iv_log(RealInterval::from_int(p.lc(), wp));
        for (const ComplexBox& b : isolate_roots(p, wp))
            h += iv_max0log(b.abs());
        h = h / RealInterval::from_long(p.degree(), wp);
        // h >= 0 always; clamp the enclosure's lower end at 0
        if (h.lo().sgn() < 0) mpfr_set_zero(h.lo().raw(), 1);
        bool tiny = mpfr_cmp_d(h.hi().raw(), rel_target) < 0;  // h == 0 cases
        if (tiny || h.rel_width() < rel_target || wp >= cap) return h;
    }
}

RealInterval abs_log_height(const AlgebraicNumber& x, double rel_target, mpfr_prec_t prec) {
    if (x.is_zero()) throw DomainError("height of zero");
    return abs_log_height(x.min_poly(), rel_target, prec);
}

RealInterval lehmer_floor(int d, mpfr_prec_t prec) {
    if (d < 1) throw DomainError("field degree must be positive");
    if (d <= 2) {
        return iv_log(RealInterval::from_long(2, prec)) /
               RealInterval::from_long(d, prec);
    }
    RealInterval ld = iv_log(RealInterval::from_long(d, prec));
    RealInterval lld = iv_log(ld);
    RealInterval q = lld / ld;
    return iv_pow_ui(q, 3) / RealInterval::from_long(4, prec);
}

RealInterval lehmer_prime(int d, mpfr_prec_t prec) {
    RealInterval pk = lehmer_floor(d, prec);
    RealInterval pi = iv_pi(prec);
    RealInterval one = RealInterval::from_long(1, prec);
    return iv_sqrt(one + (pi / pk).square());
}

} // namespace hypint
