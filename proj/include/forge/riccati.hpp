#pragma once

#include "forge/connection.hpp"

namespace forge {

// Scalar Riccati equation dw + c2 w^2 + 2 c1 w + c0 = 0 for the projective
// coordinate w = s^0/s^1 of horizontal sections (ds = -A s).
struct RiccatiForm {
    ChartPtr chart;
    OneForm c2, c1, c0;

    bool equals(const RiccatiForm& o) const {
        return c2.equals(o.c2) && c1.equals(o.c1) && c0.equals(o.c0);
    }
};

RiccatiForm riccati(const ConnMatrix& A);

// Rewrites the Riccati equation under the projective change w = (p w' + q) /
// (r w' + s); m is the matrix [[p, q], [r, s]]. Matches the gauge action:
// riccati(gauge(A, M)) == mobius_transform(riccati(A), M).
RiccatiForm mobius_transform(const RiccatiForm& R, const GaugeMatrix& m);

// Pullback of the coefficients along a base substitution.
RiccatiForm pullback(const RiccatiForm& R, const Substitution& s);

}  // namespace forge
