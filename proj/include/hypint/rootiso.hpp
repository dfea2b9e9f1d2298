#pragma once

// Certified root isolation. Real roots are isolated by exact Sturm/dyadic
// bisection; complex roots by Aberth iteration followed by rigorous disk
// certification (each disk provably contains at least one root; pairwise
// disjointness then gives exactly one each).

#include <vector>

#include "hypint/interval.hpp"
#include "hypint/zpoly.hpp"

namespace hypint {

// Exact dyadic intervals [lo, hi] each containing exactly one real root,
// ascending; endpoints are never roots unless lo == hi (exact dyadic root).
// Width <= 2^-precision * max(1, |root|).
std::vector<RealInterval> isolate_real_roots(const ZPoly& f, mpfr_prec_t precision);

// All deg(f) roots of the squarefree part as pairwise-disjoint boxes,
// sorted by (Re, Im) of box centers. Real roots come with a zero-width
// imaginary part; non-real boxes provably exclude the real axis.
// The squarefree part is taken internally.
std::vector<ComplexBox> isolate_roots(const ZPoly& f, mpfr_prec_t precision);

} // namespace hypint
