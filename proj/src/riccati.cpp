#include "forge/riccati.hpp"

namespace forge {

RiccatiForm riccati(const ConnMatrix& A) {
    // With ds = -A s and w = s^0/s^1:
    //   dw = c w^2 + (d - a) w - b   for A = [[a, b], [c, d]],
    // so dw + (-c) w^2 + 2((a-d)/2) w + b = 0.
    RiccatiForm R;
    R.chart = A.chart;
    R.c2 = -A.at(1, 0);
    R.c1 = (A.at(0, 0) - A.at(1, 1)) * Scalar(1, 2);
    R.c0 = A.at(0, 1);
    return R;
}

RiccatiForm mobius_transform(const RiccatiForm& R, const GaugeMatrix& m) {
    if (!same_chart(R.chart, m.chart)) throw ChartMismatch("mobius_transform");
    const RationalFn &p = m.at(0, 0), &q = m.at(0, 1), &r = m.at(1, 0), &s = m.at(1, 1);
    RationalFn det = p * s - q * r;
    if (det.is_zero()) throw SingularMobius("projective change with zero determinant");
    RationalFn di = det.reciprocal();

    OneForm dp = exterior_derivative(p), dq = exterior_derivative(q);
    OneForm dr = exterior_derivative(r), ds = exterior_derivative(s);

    RiccatiForm T;
    T.chart = R.chart;
    T.c2 = (dp * r - dr * p + R.c2 * (p * p) + R.c1 * (p * r * Scalar(2)) + R.c0 * (r * r)) * di;
    T.c1 = (dp * s + dq * r - ds * p - dr * q + R.c2 * (p * q * Scalar(2)) +
            R.c1 * ((p * s + q * r) * Scalar(2)) + R.c0 * (r * s * Scalar(2))) *
           (di * Scalar(1, 2));
    T.c0 = (dq * s - ds * q + R.c2 * (q * q) + R.c1 * (q * s * Scalar(2)) + R.c0 * (s * s)) * di;
    return T;
}

RiccatiForm pullback(const RiccatiForm& R, const Substitution& s) {
    RiccatiForm T;
    T.chart = s.to;
    T.c2 = pullback(R.c2, s);
    T.c1 = pullback(R.c1, s);
    T.c0 = pullback(R.c0, s);
    return T;
}

}  // namespace forge
