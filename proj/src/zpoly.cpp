#include "hypint/zpoly.hpp"

#include <algorithm>
#include <sstream>

namespace hypint {

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::x_power(int k, Int lead) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = std::move(lead);
    return ZPoly(std::move(v));
}

ZPoly ZPoly::from_list(std::initializer_list<long> coeffs) {
    std::vector<Int> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return ZPoly(std::move(v));
}

const Int& ZPoly::lc() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

const Int& ZPoly::operator[](int i) const {
    static const Int zero(0);
    if (i < 0 || i >= (int)c_.size()) return zero;
    return c_[i];
}

ZPoly ZPoly::operator-() const {
    std::vector<Int> v(c_);
    for (auto& x : v) x = -x;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator*(const Int& k) const {
    if (k == 0) return {};
    std::vector<Int> v(c_);
    for (auto& x : v) x *= k;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<Int> v(c_.size() + k, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<Int> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Int((long)i);
    return ZPoly(std::move(v));
}

Int ZPoly::content() const {
    Int g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    std::vector<Int> v(c_);
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return ZPoly(std::move(v));
}

std::pair<int, ZPoly> ZPoly::strip_zero_roots() const {
    if (is_zero()) return {0, {}};
    size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return {(int)k, ZPoly(std::vector<Int>(c_.begin() + k, c_.end()))};
}

Int ZPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

int ZPoly::sign_at(const Int& p, const Int& q) const {
    // q^deg * f(p/q) via Horner, exact in Z
    Int r = 0;
    Int qk = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * p + *it * qk;
        qk *= q;
    }
    return sign(r);
}

int ZPoly::sign_at(const Rat& x) const {
    return sign_at(x.get_num(), x.get_den());
}

int ZPoly::sign_at_pos_inf() const {
    if (is_zero()) return 0;
    return sign(lc());
}

int ZPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    int s = sign(lc());
    return (degree() % 2 == 0) ? s : -s;
}

RealInterval ZPoly::eval(const RealInterval& x) const {
    RealInterval r(x.prec());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + RealInterval::from_int(*it, x.prec());
    return r;
}

ComplexBox ZPoly::eval(const ComplexBox& z) const {
    mpfr_prec_t p = z.re().prec();
    ComplexBox r{RealInterval(p), RealInterval(p)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * z;
        r = ComplexBox(r.re() + RealInterval::from_int(*it, p), r.im());
    }
    return r;
}

ZPoly ZPoly::divexact(const ZPoly& d) const {
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    if (is_zero()) return {};
    int n = degree(), m = d.degree();
    if (n < m) throw DomainError("inexact polynomial division");
    std::vector<Int> rem(c_);
    std::vector<Int> q(n - m + 1, Int(0));
    for (int k = n - m; k >= 0; --k) {
        if (rem[k + m] == 0) continue;
        Int qi, rr;
        mpz_tdiv_qr(qi.get_mpz_t(), rr.get_mpz_t(), rem[k + m].get_mpz_t(),
                    d.lc().get_mpz_t());
        if (rr != 0) throw DomainError("inexact polynomial division");
        q[k] = qi;
        for (int j = 0; j <= m; ++j) rem[k + j] -= qi * d[j];
    }
    for (int j = 0; j < m; ++j)
        if (rem[j] != 0) throw DomainError("inexact polynomial division");
    return ZPoly(std::move(q));
}

ZPoly ZPoly::pos_prem(const ZPoly& d) const {
    if (d.is_zero()) throw DomainError("pseudo-remainder by zero polynomial");
    int n = degree(), m = d.degree();
    if (n < m) return *this;
    // multiply by lc(d)^(n-m+1); if that factor is negative, square it
    int e = n - m + 1;
    bool neg_mult = sign(d.lc()) < 0 && e % 2 == 1;
    std::vector<Int> r(c_);
    for (int k = n - m; k >= 0; --k) {
        Int top = r[k + m];
        for (auto& x : r) x *= d.lc();
        for (int j = 0; j <= m; ++j) r[k + j] -= top * d[j];
    }
    ZPoly rem{std::vector<Int>(r.begin(), r.begin() + m)};
    return neg_mult ? (rem * Int(-1)) : rem;
}

int ZPoly::root_bound_exp() const {
    if (degree() < 1) return 0;
    Int m = 0;
    for (int i = 0; i < degree(); ++i) {
        Int a = abs(c_[i]);
        if (a > m) m = a;
    }
    Int l = abs(lc());
    // B = 1 + m/l <= 1 + ceil(m/l)
    Int q = m / l + 2;
    int k = 1;
    Int two = 2;
    while (two < q) { two *= 2; ++k; }
    return k;
}

std::string ZPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[i];
        if (a == 0) continue;
        if (!first) os << (sign(a) > 0 ? " + " : " - ");
        else if (sign(a) < 0) os << "-";
        Int aa = abs(a);
        if (aa != 1 || i == 0) os << aa.get_str();
        if (i > 0) {
            if (aa != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

size_t ZPoly::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& x : c_) {
        h ^= (std::uint64_t)mpz_fdiv_ui(x.get_mpz_t(), 0x7fffffffu) + (sign(x) < 0 ? 1u : 0u);
        h *= 1099511628211ull;
    }
    return (size_t)h;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) {
        ZPoly g = b.primitive_part();
        return sign(g.lc()) < 0 ? -g : g;
    }
    if (b.is_zero()) {
        ZPoly g = a.primitive_part();
        return sign(g.lc()) < 0 ? -g : g;
    }
    ZPoly f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        ZPoly r = f.pos_prem(g).primitive_part();
        f = g;
        g = r;
    }
    return sign(f.lc()) < 0 ? -f : f;
}

ZPoly squarefree_part(const ZPoly& f) {
    if (f.degree() < 1) return f;
    // gcd(f, f') is primitive, so it divides the primitive part of f over Z
    ZPoly g = gcd(f, f.derivative());
    ZPoly sf = f.primitive_part().divexact(g);
    return sign(sf.lc()) < 0 ? -sf : sf;
}

bool is_squarefree(const ZPoly& f) {
    if (f.degree() < 1) return !f.is_zero();
    return gcd(f, f.derivative()).degree() == 0;
}

// Subresultant PRS resultant (Cohen, Algorithm 3.3.7).
Int resultant(const ZPoly& f, const ZPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw DomainError("resultant of zero polynomial");
    if (f.degree() == 0) return pow_int(f[0], g.degree());
    if (g.degree() == 0) return pow_int(g[0], f.degree());

    ZPoly A = f, B = g;
    Int s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() % 2) == 1 && (B.degree() % 2) == 1) s = -1;
    }
    // pull out contents: Res(c*A, B) = c^degB * Res(A,B)
    Int ca = A.content(), cb = B.content();
    Int acc = pow_int(ca, B.degree()) * pow_int(cb, A.degree());
    A = A.primitive_part();
    B = B.primitive_part();

    Int gcoef = 1, h = 1;
    while (true) {
        int delta = A.degree() - B.degree();
        if ((A.degree() % 2) == 1 && (B.degree() % 2) == 1) s = -s;
        // pseudo remainder with multiplier lc(B)^(delta+1)
        ZPoly R;
        {
            int n = A.degree(), m = B.degree();
            std::vector<Int> r(A.coeffs());
            for (int k = n - m; k >= 0; --k) {
                Int top = r[k + m];
                for (auto& x : r) x *= B.lc();
                for (int j = 0; j <= m; ++j) r[k + j] -= top * B[j];
            }
            r.resize(m);
            R = ZPoly(std::move(r));
        }
        A = B;
        Int divisor = gcoef * pow_int(h, delta);
        {
            std::vector<Int> v(R.coeffs());
            for (auto& x : v)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
            B = ZPoly(std::move(v));
        }
        gcoef = A.lc();
        // h = h^(1-delta) * g^delta
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = gcoef;
        } else {
            Int num = pow_int(gcoef, delta);
            Int den = pow_int(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (B.is_zero()) return 0;
        if (B.degree() == 0) {
            // res = s * t * lc(B)^degA / h^(degA-1), division exact
            int dA = A.degree();
            Int num = pow_int(B[0], dA);
            if (dA <= 1) return s * acc * num;
            Int den = pow_int(h, dA - 1);
            Int res;
            mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return s * acc * res;
        }
    }
}

Int discriminant(const ZPoly& f) {
    if (f.degree() < 1)
        throw DomainError("discriminant requires degree >= 1");
    if (f.degree() == 1) return 1;
    Int r = resultant(f, f.derivative());
    Int d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.lc().get_mpz_t());
    int e = f.degree() * (f.degree() - 1) / 2;
    return (e % 2 == 1) ? Int(-d) : d;
}

SturmChain sturm_chain(const ZPoly& f) {
    ZPoly g = gcd(f, f.derivative());
    if (g.degree() > 0)
        throw DomainError("sturm chain requires squarefree input; gcd with derivative is " +
                          g.str());
    SturmChain ch;
    ch.seq.push_back(f.primitive_part());
    ch.seq.push_back(f.derivative().primitive_part());
    while (!ch.seq.back().is_zero() && ch.seq.back().degree() > 0) {
        const ZPoly& a = ch.seq[ch.seq.size() - 2];
        const ZPoly& b = ch.seq.back();
        ZPoly r = -(a.pos_prem(b));
        ch.seq.push_back(r.primitive_part());
    }
    if (ch.seq.back().is_zero()) ch.seq.pop_back();
    return ch;
}

static int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::variations_at(const Rat& x) const {
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& p : seq) s.push_back(p.sign_at(x));
    return count_variations(s);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> s;
    for (const auto& p : seq) s.push_back(p.sign_at_pos_inf());
    return count_variations(s);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> s;
    for (const auto& p : seq) s.push_back(p.sign_at_neg_inf());
    return count_variations(s);
}

int sturm_real_root_count(const ZPoly& f, std::optional<Rat> lo, std::optional<Rat> hi) {
    if (f.degree() < 1) return 0;
    SturmChain ch = sturm_chain(f);
    int va = lo ? ch.variations_at(*lo) : ch.variations_at_neg_inf();
    int vb = hi ? ch.variations_at(*hi) : ch.variations_at_pos_inf();
    return va - vb;
}

ZPoly compose_linear(const ZPoly& f, const Int& a, const Int& b) {
    // Horner: f(a x + b)
    ZPoly r;
    ZPoly lin({std::vector<Int>{b, a}});
    for (int i = f.degree(); i >= 0; --i) {
        r = r * lin + ZPoly::constant(f[i]);
    }
    return r;
}

ZPoly compose_x_over(const ZPoly& f, const Int& d) {
    int n = f.degree();
    std::vector<Int> v(n + 1);
    Int dk = 1;
    for (int i = n; i >= 0; --i) {
        v[i] = f[i] * dk;
        dk *= d;
    }
    return ZPoly(std::move(v));
}

ZPoly resultant_compose(const ZPoly& f, const ZPoly& g, const Int& c) {
    if (f.is_zero() || g.is_zero())
        throw DomainError("resultant_compose of zero polynomial");
    // R(x) = Res_y(f(y), g(x - c y)) has degree deg f * deg g in x
    // (for c != 0, or when g's leading structure keeps it exact).
    int n = f.degree() * g.degree();
    // interpolate from n+1 integer sample points
    std::vector<Rat> xs, ys;
    xs.reserve(n + 1);
    ys.reserve(n + 1);
    for (int t = 0; t <= n; ++t) {
        Int x0((t % 2 == 0) ? t / 2 : -(t / 2 + 1));
        // g(x0 - c y) as poly in y
        ZPoly gy = compose_linear(g, -c, x0);
        Int val = gy.is_zero() ? Int(0) : resultant(f, gy);
        if (gy.is_zero() || gy.degree() < g.degree()) {
            // leading coefficient of g(x0 - c y) in y must stay (-c)^deg g *
            // lc(g); that holds for all x0 when c != 0, so this indicates
            // a degenerate call
            throw DomainError("resultant_compose: degenerate linear substitution");
        }
        xs.emplace_back(x0);
        ys.emplace_back(val);
    }
    // Newton's divided differences over Q, then clear denominators (result
    // is known to have integer coefficients).
    std::vector<Rat> dd(ys);
    for (int j = 1; j <= n; ++j)
        for (int i = n; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    // accumulate poly in rational arithmetic
    std::vector<Rat> poly{dd[n]};
    for (int i = n - 1; i >= 0; --i) {
        // poly = poly * (x - xs[i]) + dd[i]
        std::vector<Rat> np(poly.size() + 1, Rat(0));
        for (size_t k = 0; k < poly.size(); ++k) {
            np[k + 1] += poly[k];
            np[k] -= poly[k] * xs[i];
        }
        np[0] += dd[i];
        poly = std::move(np);
    }
    std::vector<Int> zc(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        poly[i].canonicalize();
        if (poly[i].get_den() != 1)
            throw DomainError("resultant_compose: interpolation not integral");
        zc[i] = poly[i].get_num();
    }
    return ZPoly(std::move(zc));
}

} // namespace hypint
