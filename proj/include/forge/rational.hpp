#pragma once

#include <optional>
#include <vector>

#include "forge/poly.hpp"

namespace forge {

// One denominator factor: a monic non-constant polynomial with a positive
// exponent. Factors are "irreducible by construction": they come from the
// known pole divisors and are never factored further.
struct Factor {
    Poly base;
    int exp = 1;
};

class RationalFn;

// Variable-wise substitution from one chart into another: image[v] is a
// rational function on `to` for each variable of `from`. Parameters (symbolic
// lambdas) map to themselves when both charts carry them.
struct Substitution {
    ChartPtr from, to;
    std::vector<RationalFn> image;
};

// Rational function kept as numerator polynomial over a multiset of monic
// factors. No gcd is ever computed: zero testing is numerator-only and
// equality clears denominators.
class RationalFn {
public:
    RationalFn() = default;
    explicit RationalFn(Poly num) : num_(std::move(num)) {}

    static RationalFn zero(ChartPtr chart) { return RationalFn(Poly::zero(std::move(chart))); }
    static RationalFn constant(ChartPtr chart, Scalar c) {
        return RationalFn(Poly::constant(std::move(chart), std::move(c)));
    }
    static RationalFn var(ChartPtr chart, const std::string& name) {
        return RationalFn(Poly::var(std::move(chart), name));
    }
    // num / den with den an arbitrary nonzero polynomial (absorbed as a
    // single monic factor; constants fold into the numerator).
    static RationalFn quotient(Poly num, const Poly& den);

    const ChartPtr& chart() const { return num_.chart(); }
    const Poly& num() const { return num_; }
    const std::vector<Factor>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    RationalFn operator-() const;
    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator*(const Scalar& s) const;
    RationalFn operator*(const Poly& p) const;
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }

    // Appends `den` (monic-normalized) to the denominator.
    RationalFn div_poly(const Poly& den) const;
    RationalFn div_factor(Poly base, int exp) const;
    RationalFn reciprocal() const;
    RationalFn operator/(const RationalFn& o) const { return *this * o.reciprocal(); }
    RationalFn pow(int e) const;

    // Exact equality by cross-multiplication after cancelling shared factors.
    bool equals(const RationalFn& o) const;
    bool operator==(const RationalFn& o) const { return equals(o); }

    Scalar eval(std::span<const Scalar> point) const;
    std::complex<double> eval_complex(std::span<const std::complex<double>> point) const;

    RationalFn derivative(int v) const;
    RationalFn substitute(const Substitution& s) const;

    // Expanded denominator polynomial (product of factor powers).
    Poly den_expanded() const;

    std::string str() const;

private:
    Poly num_;
    std::vector<Factor> den_;  // sorted by Poly::compare, unique bases

    void push_factor(Poly base, int exp);
    void sort_factors();
};

inline RationalFn operator*(const Scalar& s, const RationalFn& r) { return r * s; }

// Substitutes every variable of a polynomial, producing a rational function
// on the target chart.
RationalFn substitute(const Poly& p, const Substitution& s);

}  // namespace forge
