#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "forge/scalar.hpp"

namespace forge {

// An affine chart: an ordered list of variable names. The first n_diff
// variables are geometric coordinates (the exterior derivative acts on them);
// the rest are formal parameters (symbolic lambdas) treated as constants by d.
struct Chart {
    std::vector<std::string> vars;
    int n_diff = 0;

    int index_of(const std::string& name) const;
    bool operator==(const Chart& o) const { return vars == o.vars && n_diff == o.n_diff; }
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<std::string> vars, int n_diff);
bool same_chart(const ChartPtr& a, const ChartPtr& b);

// Packed monomial: byte 0 caches the total degree so that a plain
// lexicographic byte comparison realizes graded-lex order on the chart's
// variable list. Up to kMaxVars variables, individual exponents < 256.
struct Mono {
    static constexpr int kMaxVars = 15;
    std::array<std::uint8_t, kMaxVars + 1> b{};

    int deg() const { return b[0]; }
    int exp(int v) const { return b[1 + v]; }
    void set_exp(int v, int e);

    bool operator==(const Mono& o) const { return b == o.b; }
    // Graded-lex, larger first in Poly storage.
    bool operator<(const Mono& o) const { return std::memcmp(b.data(), o.b.data(), b.size()) < 0; }
    bool operator>(const Mono& o) const { return o < *this; }

    static Mono one() { return Mono{}; }
    static Mono of_var(int v) {
        Mono m;
        m.set_exp(v, 1);
        return m;
    }
    Mono operator*(const Mono& o) const;
    bool divisible_by(const Mono& o) const;
    Mono operator/(const Mono& o) const;
};

struct Term {
    Mono m;
    Scalar c;
};

// Sparse multivariate polynomial over Q(i) on a fixed chart. Terms are kept
// sorted descending in graded-lex order with no zero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(ChartPtr chart) : chart_(std::move(chart)) {}

    static Poly zero(ChartPtr chart) { return Poly(std::move(chart)); }
    static Poly constant(ChartPtr chart, Scalar c);
    static Poly var(ChartPtr chart, int v);
    static Poly var(ChartPtr chart, const std::string& name);
    static Poly from_terms(ChartPtr chart, std::vector<Term> terms);  // normalizes

    const ChartPtr& chart() const { return chart_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.deg() == 0); }
    Scalar constant_value() const;
    int total_degree() const { return terms_.empty() ? -1 : terms_[0].m.deg(); }
    int degree_in(int v) const;
    std::size_t n_terms() const { return terms_.size(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& s) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const;

    Poly pow(int e) const;
    Poly derivative(int v) const;
    Scalar eval(std::span<const Scalar> point) const;
    std::complex<double> eval_complex(std::span<const std::complex<double>> point) const;

    // Leading coefficient in graded-lex order.
    const Scalar& leading_coeff() const;
    // Divides through by the leading coefficient; returns it.
    Scalar make_monic();

    // Total order on polynomials of one chart (graded-lex on term lists);
    // used to keep denominator factor lists canonical.
    int compare(const Poly& o) const;

    std::string str() const;

private:
    ChartPtr chart_;
    std::vector<Term> terms_;

    void normalize();
    friend class RationalFn;
};

inline Poly operator*(const Scalar& s, const Poly& p) { return p * s; }

}  // namespace forge
