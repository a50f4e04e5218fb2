#pragma once

#include <vector>

#include "forge/numeric.hpp"
#include "forge/scalar.hpp"

namespace forge {

// Parameters of a generic line y = a x + b t, z_i = c_i x + d_i t, together
// with the coordinate xt = -(a/b) x on it.
struct LineParams {
    Scalar a, b;
    std::vector<Scalar> c, d;  // size n-2

    int n() const { return static_cast<int>(c.size()) + 2; }
};

// A point of the etale cover: the line plus chosen square roots
// btilde^2 = 4(a+b-ab) and dtilde_i^2 = disc_xt(f_i).
struct TildePoint {
    LineParams base;
    Cplx btilde;
    std::vector<Cplx> dtilde;
    std::vector<bool> branch;  // branch[0] flips btilde, branch[1+i] flips dtilde_i

    int n() const { return base.n(); }
};

// Coefficients (A, B, C) of f(a,b,xt) = A xt^2 + B xt + C, exactly.
std::array<Scalar, 3> line_conic_coeffs(const LineParams& p);
// Coefficients of f_i(a,b,c_i,d_i,xt).
std::array<Scalar, 3> line_quadric_coeffs(const LineParams& p, int i);

// Checks the genericity guards and takes the square roots; branch flags flip
// the principal choice. Throws NonGeneric naming the violated guard.
TildePoint etale_lift(const LineParams& p, const std::vector<bool>& branch = {});

// The 2n-2 moving poles [t_1, t_2, t_3, ..., t_{2n-2}]: t_1, t_2 are the
// roots of f(a,b,xt) labelled by the btilde branch, t_{2i+1}, t_{2i+2} the
// roots of f_i labelled by the dtilde_i branch. Verifies all 2n+1 poles
// (including 0, 1, infinity) stay pairwise distinct.
std::vector<Cplx> singular_locus(const TildePoint& tp);

// The formulas printed in the source text for t_1 and t_{2i+1} deviate from
// the true roots; these evaluate them for the deviation ledger.
Cplx printed_t1_formula(const TildePoint& tp);
Cplx printed_t_odd_formula(const TildePoint& tp, int i);

// Re-lifts at perturbed parameters keeping the square-root branches
// continuous with `anchor`.
TildePoint continuous_lift(const LineParams& p, const TildePoint& anchor);

// Jacobian d t_k / d u_m of the pole positions with respect to the etale
// coordinates u = (a, b, c_1..c_{n-2}, d_1..d_{n-2}), by central differences
// with branch continuity. Throws SingularJacobian if |det| < 1e-12.
std::vector<std::vector<Cplx>> jacobian_t(const TildePoint& tp, double h);

}  // namespace forge
