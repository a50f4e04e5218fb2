#pragma once

#include "forge/rational.hpp"

namespace forge {

// 1-form sum c_v dv over the chart's differential variables (dense storage,
// the charts here have at most a handful of them).
class OneForm {
public:
    OneForm() = default;
    explicit OneForm(ChartPtr chart);

    static OneForm zero(ChartPtr chart) { return OneForm(std::move(chart)); }
    // c * dv
    static OneForm d_var(ChartPtr chart, const std::string& var);
    // d(log p) = dp / p
    static OneForm dlog(const Poly& p);

    const ChartPtr& chart() const { return chart_; }
    const RationalFn& coeff(int v) const { return coef_[v]; }
    RationalFn& coeff(int v) { return coef_[v]; }
    int n_coeffs() const { return static_cast<int>(coef_.size()); }
    bool is_zero() const;

    OneForm operator-() const;
    OneForm operator+(const OneForm& o) const;
    OneForm operator-(const OneForm& o) const;
    OneForm operator*(const RationalFn& f) const;
    OneForm operator*(const Scalar& s) const;
    OneForm& operator+=(const OneForm& o) { return *this = *this + o; }
    OneForm& operator-=(const OneForm& o) { return *this = *this - o; }

    bool equals(const OneForm& o) const;

    std::string str() const;

private:
    ChartPtr chart_;
    std::vector<RationalFn> coef_;
};

inline OneForm operator*(const RationalFn& f, const OneForm& w) { return w * f; }
inline OneForm operator*(const Scalar& s, const OneForm& w) { return w * s; }

// 2-form sum c_{vw} dv /\ dw over ordered pairs v < w.
class TwoForm {
public:
    TwoForm() = default;
    explicit TwoForm(ChartPtr chart);

    static TwoForm zero(ChartPtr chart) { return TwoForm(std::move(chart)); }

    const ChartPtr& chart() const { return chart_; }
    const RationalFn& coeff(int v, int w) const;  // requires v < w
    RationalFn& coeff(int v, int w);
    bool is_zero() const;

    TwoForm operator-() const;
    TwoForm operator+(const TwoForm& o) const;
    TwoForm operator-(const TwoForm& o) const;
    bool equals(const TwoForm& o) const;

    std::string str() const;

private:
    ChartPtr chart_;
    std::vector<RationalFn> coef_;  // pair (v,w), v<w, rank-indexed
    int pair_index(int v, int w) const;
};

// Exterior derivative of a function (gradient 1-form over the chart's
// differential variables; parameters are constants).
OneForm exterior_derivative(const RationalFn& f);
// d(sum c_v dv) = sum dc_v /\ dv.
TwoForm exterior_derivative(const OneForm& w);
TwoForm wedge(const OneForm& a, const OneForm& b);

// Pullback along a substitution (chain rule on the differentials).
OneForm pullback(const OneForm& w, const Substitution& s);

}  // namespace forge
