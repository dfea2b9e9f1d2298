#include "hypint/rootiso.hpp"

#include <algorithm>
#include <cmath>

namespace hypint {

namespace {

// dyadic rational m * 2^-k, k >= 0
struct Dyadic {
    Int m;
    int k = 0;
    Rat to_rat() const {
        Rat r(m);
        r /= Rat(pow_int(Int(2), k));
        r.canonicalize();
        return r;
    }
    Dyadic half_sum(const Dyadic& o) const {
        // (a + b)/2 on a common scale
        int kk = std::max(k, o.k);
        Int ma = m << (kk - k), mb = o.m << (kk - o.k);
        return {ma + mb, kk + 1};
    }
};

int sign_at(const ZPoly& f, const Dyadic& d) {
    return f.sign_at(d.m, pow_int(Int(2), d.k));
}

RealInterval dyadic_interval(const Dyadic& a, const Dyadic& b, mpfr_prec_t prec) {
    return RealInterval::from_endpoints(a.to_rat(), b.to_rat(), prec);
}

// width(b - a) <= 2^-target * max(1, |a|)
bool narrow_enough(const Dyadic& a, const Dyadic& b, int target) {
    Rat w = b.to_rat() - a.to_rat();
    Rat scale = abs(a.to_rat());
    if (scale < 1) scale = 1;
    return w * pow_int(Int(2), target) <= scale;
}

struct Segment {
    Dyadic a, b;
    int va, vb;  // sturm variations at the endpoints
};

} // namespace

std::vector<RealInterval> isolate_real_roots(const ZPoly& f_in, mpfr_prec_t precision) {
    ZPoly f = squarefree_part(f_in.primitive_part());
    std::vector<RealInterval> out;
    if (f.degree() < 1) return out;

    SturmChain ch = sturm_chain(f);
    int bexp = f.root_bound_exp();
    Dyadic lo{-(Int(1) << bexp), 0}, hi{Int(1) << bexp, 0};
    int target = (int)precision;

    std::vector<std::pair<Dyadic, Dyadic>> isolating;  // exact point if a==b
    std::vector<Segment> stack;
    stack.push_back({lo, hi, ch.variations_at(lo.to_rat()), ch.variations_at(hi.to_rat())});

    while (!stack.empty()) {
        Segment s = stack.back();
        stack.pop_back();
        int count = s.va - s.vb;
        if (count <= 0) continue;
        Dyadic mid = s.a.half_sum(s.b);
        if (count == 1) {
            // bisect by sign until narrow, keeping f nonzero at endpoints
            Dyadic a = s.a, b = s.b;
            int sb = sign_at(f, b);
            bool exact = false;
            while (!narrow_enough(a, b, target)) {
                Dyadic m = a.half_sum(b);
                int sm = sign_at(f, m);
                if (sm == 0) {
                    isolating.push_back({m, m});
                    exact = true;
                    break;
                }
                if (sm == sb) b = m; else a = m;
            }
            if (!exact) isolating.push_back({a, b});
            continue;
        }
        int sm = sign_at(f, mid);
        if (sm == 0) {
            // the midpoint is a root; carve out a tiny interval around it
            // that contains no other root, then recurse on both sides
            Dyadic d{Int(1), mid.k};
            while (true) {
                Dyadic l{(mid.m << (d.k - mid.k)) - d.m, d.k};
                Dyadic r{(mid.m << (d.k - mid.k)) + d.m, d.k};
                if (sign_at(f, l) != 0 && sign_at(f, r) != 0) {
                    int vl = ch.variations_at(l.to_rat());
                    int vr = ch.variations_at(r.to_rat());
                    if (vl - vr == 1) {
                        isolating.push_back({mid, mid});
                        stack.push_back({s.a, l, s.va, vl});
                        stack.push_back({r, s.b, vr, s.vb});
                        break;
                    }
                }
                d = {d.m, d.k + 1};
                if (d.k > mid.k + 8 * bexp + 2 * target + 64)
                    throw NonConvergence("real root isolation: cannot separate dyadic root");
            }
            continue;
        }
        int vm = ch.variations_at(mid.to_rat());
        stack.push_back({s.a, mid, s.va, vm});
        stack.push_back({mid, s.b, vm, s.vb});
    }

    std::sort(isolating.begin(), isolating.end(),
              [](const auto& x, const auto& y) { return x.first.to_rat() < y.first.to_rat(); });
    mpfr_prec_t boxprec = std::max<mpfr_prec_t>(precision + 32, kDefaultPrec);
    for (const auto& [a, b] : isolating) out.push_back(dyadic_interval(a, b, boxprec));
    return out;
}

namespace {

// Approximate complex arithmetic at a fixed MPFR precision (round to
// nearest); only used to produce Aberth candidates, never for rigour.
struct CF {
    Mpfr re, im;
    explicit CF(mpfr_prec_t p) : re(p), im(p) {}
};

void cf_set_d(CF& z, double re, double im) {
    mpfr_set_d(z.re.raw(), re, MPFR_RNDN);
    mpfr_set_d(z.im.raw(), im, MPFR_RNDN);
}

void cf_sub(CF& r, const CF& a, const CF& b) {
    mpfr_sub(r.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_sub(r.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
}

void cf_mul(CF& r, const CF& a, const CF& b, Mpfr& t1, Mpfr& t2) {
    // r may not alias a or b
    mpfr_mul(t1.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_mul(t2.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_sub(t1.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
    mpfr_mul(t2.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_set(r.im.raw(), t2.raw(), MPFR_RNDN);
    mpfr_mul(t2.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_add(r.im.raw(), r.im.raw(), t2.raw(), MPFR_RNDN);
    mpfr_set(r.re.raw(), t1.raw(), MPFR_RNDN);
}

void cf_div(CF& r, const CF& a, const CF& b, Mpfr& t1, Mpfr& t2, Mpfr& den) {
    mpfr_sqr(t1.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_sqr(t2.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_add(den.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
    CF conj(b.re.prec());
    mpfr_set(conj.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_neg(conj.im.raw(), b.im.raw(), MPFR_RNDN);
    CF num(b.re.prec());
    cf_mul(num, a, conj, t1, t2);
    mpfr_div(r.re.raw(), num.re.raw(), den.raw(), MPFR_RNDN);
    mpfr_div(r.im.raw(), num.im.raw(), den.raw(), MPFR_RNDN);
}

double cf_abs2_d(const CF& z) {
    double x = z.re.to_double(), y = z.im.to_double();
    return x * x + y * y;
}

// f and f' at z by Horner.
void eval_fd(const ZPoly& f, const ZPoly& fd, const CF& z, CF& fz, CF& fdz,
             mpfr_prec_t p) {
    Mpfr t1(p), t2(p), den(p);
    auto horner = [&](const ZPoly& g, CF& out) {
        CF acc(p);
        cf_set_d(acc, 0, 0);
        for (int i = g.degree(); i >= 0; --i) {
            CF tmp(p);
            cf_mul(tmp, acc, z, t1, t2);
            mpfr_add_z(tmp.re.raw(), tmp.re.raw(), g[i].get_mpz_t(), MPFR_RNDN);
            acc = tmp;
        }
        out = acc;
    };
    horner(f, fz);
    horner(fd, fdz);
    (void)den;
}

// One certification attempt: build disks around the non-real Aberth
// candidates, boxes around them and their conjugates, and check global
// disjointness and the width target. Disjointness from the real-root
// segments is implied by every complex box excluding the real axis.
// Returns empty on failure.
std::vector<ComplexBox> certify(const ZPoly& f, const std::vector<CF>& cand,
                                int real_count, mpfr_prec_t prec,
                                mpfr_prec_t width_target) {
    int d = f.degree();
    int need = (d - real_count) / 2;
    ZPoly fd = f.derivative();
    RealInterval dd = RealInterval::from_long(d, prec);

    // pick the candidates with positive imaginary part, largest first
    std::vector<const CF*> ups;
    for (const auto& z : cand)
        if (z.im.sgn() > 0) ups.push_back(&z);
    if ((int)ups.size() < need) return {};
    std::sort(ups.begin(), ups.end(), [](const CF* a, const CF* b) {
        return mpfr_cmp(a->im.raw(), b->im.raw()) > 0;
    });
    ups.resize(need);

    std::vector<ComplexBox> boxes;
    for (const CF* z : ups) {
        RealInterval zre(prec), zim(prec);
        mpfr_set(zre.lo().raw(), z->re.raw(), MPFR_RNDD);
        mpfr_set(zre.hi().raw(), z->re.raw(), MPFR_RNDU);
        mpfr_set(zim.lo().raw(), z->im.raw(), MPFR_RNDD);
        mpfr_set(zim.hi().raw(), z->im.raw(), MPFR_RNDU);
        ComplexBox zb(zre, zim);
        ComplexBox fz = f.eval(zb);
        ComplexBox fdz = fd.eval(zb);
        RealInterval fdabs = fdz.abs();
        if (fdabs.lo().sgn() <= 0) return {};
        // the disk of radius d|f(z)/f'(z)| around z contains a root
        RealInterval r = dd * fz.abs() / fdabs;
        // width target: 2r <= 2^-target * max(1, |z|)
        Mpfr scale(prec);
        mpfr_abs(scale.raw(), z->re.raw(), MPFR_RNDU);
        if (mpfr_cmp_ui(scale.raw(), 1) < 0) mpfr_set_ui(scale.raw(), 1, MPFR_RNDU);
        Mpfr lim(prec);
        mpfr_mul_2si(lim.raw(), scale.raw(), -(long)width_target - 1, MPFR_RNDD);
        if (mpfr_cmp(r.hi().raw(), lim.raw()) > 0) return {};
        // box = [re - r, re + r] x [im - r, im + r]
        RealInterval bre(prec), bim(prec);
        mpfr_sub(bre.lo().raw(), zre.lo().raw(), r.hi().raw(), MPFR_RNDD);
        mpfr_add(bre.hi().raw(), zre.hi().raw(), r.hi().raw(), MPFR_RNDU);
        mpfr_sub(bim.lo().raw(), zim.lo().raw(), r.hi().raw(), MPFR_RNDD);
        mpfr_add(bim.hi().raw(), zim.hi().raw(), r.hi().raw(), MPFR_RNDU);
        if (!(bim.lo().sgn() > 0)) return {};  // must exclude the real axis
        boxes.emplace_back(bre, bim);
    }
    // conjugate mirrors
    int nup = (int)boxes.size();
    for (int i = 0; i < nup; ++i) {
        const ComplexBox& b = boxes[i];
        boxes.emplace_back(b.re(), -b.im());
    }
    for (size_t i = 0; i < boxes.size(); ++i)
        for (size_t j = i + 1; j < boxes.size(); ++j)
            if (!boxes[i].disjoint(boxes[j])) return {};
    return boxes;
}

} // namespace

std::vector<ComplexBox> isolate_roots(const ZPoly& f_in, mpfr_prec_t precision) {
    ZPoly f = squarefree_part(f_in.primitive_part());
    if (f.degree() < 1) return {};
    int d = f.degree();

    std::vector<RealInterval> reals = isolate_real_roots(f, precision);
    int k = (int)reals.size();
    if ((d - k) % 2 != 0)
        throw NonConvergence("inconsistent real root count");  // cannot happen

    std::vector<ComplexBox> complexes;
    if (d > k) {
        ZPoly fd = f.derivative();
        double radius = std::ldexp(1.0, std::min(f.root_bound_exp(), 500));
        mpfr_prec_t wp = std::max<mpfr_prec_t>(precision + 64, 128);
        bool done = false;
        for (int attempt = 0; attempt < 8 && !done; ++attempt, wp *= 2) {
            // Aberth-Ehrlich from a staggered circle of starting points
            std::vector<CF> z;
            z.reserve(d);
            for (int j = 0; j < d; ++j) {
                CF c(wp);
                double th = 2.0 * M_PI * j / d + 0.7 / d + 0.3;
                double rj = radius * (0.5 + 0.45 * std::cos(1.0 + 3.0 * j));
                cf_set_d(c, rj * std::cos(th), rj * std::sin(th));
                z.push_back(std::move(c));
            }
            Mpfr t1(wp), t2(wp), den(wp);
            int iters = 200 + 30 * d;
            double tol = std::ldexp(1.0, -std::min(1000, (int)wp / 2));
            for (int it = 0; it < iters; ++it) {
                double worst = 0;
                for (int j = 0; j < d; ++j) {
                    CF fz(wp), fdz(wp), w(wp);
                    eval_fd(f, fd, z[j], fz, fdz, wp);
                    if (cf_abs2_d(fdz) == 0) continue;
                    cf_div(w, fz, fdz, t1, t2, den);
                    // subtract the Aberth correction
                    CF sum(wp);
                    cf_set_d(sum, 0, 0);
                    for (int l = 0; l < d; ++l) {
                        if (l == j) continue;
                        CF diff(wp), inv(wp), one(wp);
                        cf_sub(diff, z[j], z[l]);
                        if (cf_abs2_d(diff) == 0) continue;
                        cf_set_d(one, 1, 0);
                        cf_div(inv, one, diff, t1, t2, den);
                        mpfr_add(sum.re.raw(), sum.re.raw(), inv.re.raw(), MPFR_RNDN);
                        mpfr_add(sum.im.raw(), sum.im.raw(), inv.im.raw(), MPFR_RNDN);
                    }
                    CF ws(wp), denom(wp), corr(wp), one(wp);
                    cf_mul(ws, w, sum, t1, t2);
                    cf_set_d(one, 1, 0);
                    cf_sub(denom, one, ws);
                    if (cf_abs2_d(denom) == 0) continue;
                    cf_div(corr, w, denom, t1, t2, den);
                    mpfr_sub(z[j].re.raw(), z[j].re.raw(), corr.re.raw(), MPFR_RNDN);
                    mpfr_sub(z[j].im.raw(), z[j].im.raw(), corr.im.raw(), MPFR_RNDN);
                    double rel = std::sqrt(cf_abs2_d(corr)) /
                                 std::max(1.0, std::sqrt(cf_abs2_d(z[j])));
                    worst = std::max(worst, rel);
                }
                if (worst < tol) break;
            }
            complexes = certify(f, z, k, wp, precision);
            done = !complexes.empty();
        }
        if (!done)
            throw NonConvergence("complex root certification failed at maximum precision");
    }

    std::vector<ComplexBox> out;
    out.reserve(d);
    mpfr_prec_t bp = std::max<mpfr_prec_t>(precision + 32, kDefaultPrec);
    for (const auto& ri : reals)
        out.emplace_back(ri, RealInterval::from_long(0, bp));
    for (auto& b : complexes) out.push_back(std::move(b));

    auto center_cmp = [](const ComplexBox& a, const ComplexBox& b) {
        Mpfr ca(a.re().prec()), cb(b.re().prec());
        mpfr_add(ca.raw(), a.re().lo().raw(), a.re().hi().raw(), MPFR_RNDN);
        mpfr_add(cb.raw(), b.re().lo().raw(), b.re().hi().raw(), MPFR_RNDN);
        int c = mpfr_cmp(ca.raw(), cb.raw());
        if (c != 0) return c < 0;
        mpfr_add(ca.raw(), a.im().lo().raw(), a.im().hi().raw(), MPFR_RNDN);
        mpfr_add(cb.raw(), b.im().lo().raw(), b.im().hi().raw(), MPFR_RNDN);
        return mpfr_cmp(ca.raw(), cb.raw()) < 0;
    };
    std::sort(out.begin(), out.end(), center_cmp);
    return out;
}

} // namespace hypint
