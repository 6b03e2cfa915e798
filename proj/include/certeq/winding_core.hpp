#pragma once

#include <functional>

#include "certeq/ball.hpp"

namespace certeq {

// Axis-aligned rectangle with exact rational corners.
struct RatRect {
    mpq_class re_lo, re_hi, im_lo, im_hi;

    mpq_class width() const { return re_hi - re_lo; }
    mpq_class height() const { return im_hi - im_lo; }
    bool valid() const { return re_lo < re_hi && im_lo < im_hi; }
};

using ComplexEval = std::function<BallComplex(const BallComplex&, Prec)>;

// Number of zeros (counted with multiplicity) of an analytic function inside
// rect, by the discrete argument principle: the boundary is subdivided until
// the image of every piece lies in a ball that excludes 0 with argument
// spread below pi/6, then certified argument increments are accumulated and
// the total is rounded to a multiple of 2*pi with a rigorous error bound.
//
// Throws BoundaryZero when some boundary piece never excludes 0 within the
// subdivision and precision budget; propagates DomainViolation /
// BranchCutStraddle from the evaluator.
int winding_number_fn(const ComplexEval& f, const RatRect& rect, Prec prec,
                      int max_edge_depth = 26);

} // namespace certeq
