#include "forge/split.hpp"

namespace forge {

SplitReport verify_split(int n, const LambdaSpec& lambda) {
    ConnMatrix A = build_connection(n, lambda);
    ChartPtr cxy = A.chart;

    // Untwist the rank-1 factor d - (1/2) dy/y.
    Poly y = Poly::var(cxy, "y");
    OneForm eta1 = OneForm::dlog(y) * Scalar(1, 2);
    ConnMatrix A1 = twist(A, eta1);

    // Undo the gauge by M2.
    ConnMatrix A2 = gauge(A1, gauge_m2(n, lambda).inverse());
    bool middle_ok = A2.equals(middle_connection(n, lambda));

    // Pull back under the degree-two cover x = (1-u0)(1-u1), y = u0 u1.
    ConnMatrix A3 = pullback(A2, cover_substitution(n, lambda));

    // Untwist d - (1/2) d(u0-u1)/(u0-u1).
    ChartPtr cu = A3.chart;
    Poly u0 = Poly::var(cu, "u0"), u1 = Poly::var(cu, "u1");
    OneForm eta0 = OneForm::dlog(u0 - u1) * Scalar(1, 2);
    ConnMatrix A4 = twist(A3, eta0);

    // Undo the gauge by M1.
    ConnMatrix A5 = gauge(A4, gauge_m1(n, lambda).inverse());

    OneForm half = (omega0(n, lambda) + psi_n(n, lambda)) * Scalar(1, 2);
    ConnMatrix D = ConnMatrix::zero(cu);
    D.at(0, 0) = half;
    D.at(1, 1) = -half;

    SplitReport rep;
    rep.middle_identity_ok = middle_ok;
    rep.residual = ConnMatrix::zero(cu);
    for (int k = 0; k < 4; ++k) rep.residual.e[k] = A5.e[k] - D.e[k];
    rep.off_diagonal_zero = rep.residual.at(0, 1).is_zero() && rep.residual.at(1, 0).is_zero();
    rep.diagonal_matches = rep.residual.at(0, 0).is_zero() && rep.residual.at(1, 1).is_zero();
    return rep;
}

}  // namespace forge
