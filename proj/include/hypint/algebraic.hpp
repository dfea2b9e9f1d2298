#pragma once

// Exact algebraic numbers (primitive integer minimal polynomial plus a
// certified root box) and absolute logarithmic heights.

#include <vector>

#include "hypint/interval.hpp"
#include "hypint/rootiso.hpp"
#include "hypint/zpoly.hpp"

namespace hypint {

class AlgebraicNumber {
public:
    // min_poly must be irreducible over Q (constructor obligation of the
    // producing code path); it is normalized to primitive with positive
    // leading coefficient.  root_index selects a conjugate in the
    // (Re, Im)-sorted root ordering.
    static AlgebraicNumber from_poly_root(const ZPoly& min_poly, int root_index,
                                          mpfr_prec_t prec = kDefaultPrec);
    // Select the conjugate whose certified box lies inside `hint`.
    static AlgebraicNumber from_poly_box(const ZPoly& min_poly, const ComplexBox& hint,
                                         mpfr_prec_t prec = kDefaultPrec);
    static AlgebraicNumber from_rational(const Rat& r);
    static AlgebraicNumber from_int(const Int& n) { return from_rational(Rat(n)); }

    const ZPoly& min_poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    const ComplexBox& root_box() const { return box_; }
    int root_index() const { return index_; }

    bool is_zero() const;
    bool is_rational() const { return degree() == 1; }
    Rat as_rational() const;  // degree-1 only

    // All conjugates' boxes at the requested precision (sorted).
    std::vector<ComplexBox> conjugates(mpfr_prec_t prec = kDefaultPrec) const;
    // Tighter box for the selected root.
    ComplexBox refined_box(mpfr_prec_t prec) const;

private:
    AlgebraicNumber() = default;
    ZPoly poly_;
    ComplexBox box_;
    int index_ = 0;
};

// Absolute logarithmic height via the Mahler-measure product over all
// conjugates: h = (log|lc| + sum log max(1,|a_i|)) / deg.  The enclosure
// is tightened by doubling the working precision until its relative
// width is below rel_target (or the hard cap is hit).
RealInterval abs_log_height(const AlgebraicNumber& x, double rel_target = 1e-8,
                            mpfr_prec_t prec = kDefaultPrec);
// Same, for the root set of an irreducible polynomial.
RealInterval abs_log_height(const ZPoly& irreducible_min_poly, double rel_target = 1e-8,
                            mpfr_prec_t prec = kDefaultPrec);

// Voutier's lower bound for deg(a) * h(a) over non-torsion a in a field
// of degree d ("Lehmer floor").
RealInterval lehmer_floor(int d, mpfr_prec_t prec = kDefaultPrec);
// (1 + pi^2 / floor^2)^(1/2)
RealInterval lehmer_prime(int d, mpfr_prec_t prec = kDefaultPrec);

} // namespace hypint
