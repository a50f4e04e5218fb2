#pragma once

#include <array>
#include <optional>

#include "forge/forms.hpp"

namespace forge {

// Lambda parameters: either symbolic ring variables l0..l_{n-1} appended to
// the chart, or exact numeric values substituted into every formula.
struct LambdaSpec {
    bool symbolic = true;
    std::vector<Scalar> values;  // used when !symbolic, size n

    static LambdaSpec sym() { return {true, {}}; }
    static LambdaSpec numeric(std::vector<Scalar> v) { return {false, std::move(v)}; }
};

// Affine chart x, y, z_1..z_{n-2} (t = 1), plus symbolic lambdas if requested.
ChartPtr connection_chart(int n, const LambdaSpec& lambda);
// Double-cover chart u0, u1, z_1..z_{n-2}.
ChartPtr cover_chart(int n, const LambdaSpec& lambda);
// Intermediate chart s1, s2, z_1..z_{n-2}.
ChartPtr symmetric_chart(int n, const LambdaSpec& lambda);

// Coefficient of lambda_j as a rational function on the chart (either the
// variable itself or the numeric value).
RationalFn lambda_coeff(const ChartPtr& chart, const LambdaSpec& lambda, int j);

// The conic f(x,y,1) on a chart carrying x and y (or its (s1,s2) form
// s1^2 - 4 s2 when the chart carries s1, s2).
Poly conic_poly(const ChartPtr& chart);

// The five families of 1-forms from the connection construction.
struct AlphaSet {
    OneForm a0, a1, a2;
    std::vector<OneForm> a0i, a2i;  // indexed i = 1..n-2
};

AlphaSet build_alpha(int n, const LambdaSpec& lambda);
// Same formulas in the (s1, s2) chart.
AlphaSet build_alpha_symmetric(int n, const LambdaSpec& lambda);

// 2x2 matrix of 1-forms on a chart (row-major entries).
struct ConnMatrix {
    ChartPtr chart;
    std::array<OneForm, 4> e;

    static ConnMatrix zero(ChartPtr chart);
    const OneForm& at(int r, int c) const { return e[2 * r + c]; }
    OneForm& at(int r, int c) { return e[2 * r + c]; }
    OneForm trace() const { return at(0, 0) + at(1, 1); }
    bool equals(const ConnMatrix& o) const;
};

struct GaugeMatrix {
    ChartPtr chart;
    std::array<RationalFn, 4> e;

    static GaugeMatrix identity(ChartPtr chart);
    const RationalFn& at(int r, int c) const { return e[2 * r + c]; }
    RationalFn& at(int r, int c) { return e[2 * r + c]; }
    RationalFn det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }
    GaugeMatrix inverse() const;  // SingularGauge when det == 0
};

struct Curvature {
    std::array<TwoForm, 4> e;
    const TwoForm& at(int r, int c) const { return e[2 * r + c]; }
    TwoForm& at(int r, int c) { return e[2 * r + c]; }
    bool is_zero() const;
};

// The connection matrix A_lambda on the chart t = 1.
ConnMatrix build_connection(int n, const LambdaSpec& lambda);

// dA + A /\ A, computed exactly.
Curvature curvature(const ConnMatrix& A);

// M^{-1} dM + M^{-1} A M.
ConnMatrix gauge(const ConnMatrix& A, const GaugeMatrix& M);
// A + eta * Id.
ConnMatrix twist(const ConnMatrix& A, const OneForm& eta);
// Entrywise pullback.
ConnMatrix pullback(const ConnMatrix& A, const Substitution& s);

// Closed 1-forms of the split model on the cover chart.
OneForm omega0(int n, const LambdaSpec& lambda);
OneForm psi_n(int n, const LambdaSpec& lambda);

// Gauges M1(u0,u1) and M2(x,y) of the splitting chain.
GaugeMatrix gauge_m1(int n, const LambdaSpec& lambda);
GaugeMatrix gauge_m2(int n, const LambdaSpec& lambda);

// The middle connection matrix [[a1, a0], [-a2, -a1]] + sum_i [[0, a0i],
// [-a2i, 0]] on the (x, y) chart.
ConnMatrix middle_connection(int n, const LambdaSpec& lambda);

// Substitution of the degree-two cover (u0,u1,z) -> (x,y,z):
// x = (1-u0)(1-u1), y = u0 u1.
Substitution cover_substitution(int n, const LambdaSpec& lambda);
// (x,y,z) -> (s1,s2,z): x = 1 - s1 + s2, y = s2.
Substitution symmetric_substitution(int n, const LambdaSpec& lambda);
// (s1,s2,z) -> (u0,u1,z): s1 = u0 + u1, s2 = u0 u1.
Substitution vieta_substitution(int n, const LambdaSpec& lambda);

}  // namespace forge
