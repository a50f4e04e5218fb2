#include "forge/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace forge {

RationalFn RationalFn::quotient(Poly num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    RationalFn r(std::move(num));
    return r.div_poly(den);
}

void RationalFn::push_factor(Poly base, int exp) {
    if (exp == 0 || base.is_constant()) return;
    for (auto& f : den_) {
        if (f.base == base) {
            f.exp += exp;
            return;
        }
    }
    den_.push_back({std::move(base), exp});
}

void RationalFn::sort_factors() {
    std::sort(den_.begin(), den_.end(),
              [](const Factor& a, const Factor& b) { return a.base.compare(b.base) < 0; });
}

RationalFn RationalFn::div_poly(const Poly& den) const { return div_factor(den, 1); }

RationalFn RationalFn::div_factor(Poly base, int exp) const {
    if (base.is_zero()) throw DivisionByZero("division by zero polynomial");
    RationalFn r = *this;
    if (base.is_constant()) {
        r.num_ = r.num_ * base.constant_value().inv().pow(exp);
        return r;
    }
    Scalar lead = base.make_monic();
    r.num_ = r.num_ * lead.inv().pow(exp);
    r.push_factor(std::move(base), exp);
    r.sort_factors();
    return r;
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    if (!same_chart(chart(), o.chart())) throw ChartMismatch("rational add");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // lcm denominator: per-base max exponent; numerators get the cofactors.
    RationalFn r;
    r.den_ = den_;
    for (const auto& f : o.den_) {
        bool found = false;
        for (auto& g : r.den_) {
            if (g.base == f.base) {
                g.exp = std::max(g.exp, f.exp);
                found = true;
                break;
            }
        }
        if (!found) r.den_.push_back(f);
    }
    auto cofactor = [&](const std::vector<Factor>& own) {
        Poly c = Poly::constant(chart(), Scalar(1));
        for (const auto& g : r.den_) {
            int have = 0;
            for (const auto& f : own)
                if (f.base == g.base) have = f.exp;
            if (g.exp > have) c = c * g.base.pow(g.exp - have);
        }
        return c;
    };
    r.num_ = num_ * cofactor(den_) + o.num_ * cofactor(o.den_);
    if (r.num_.is_zero()) r.den_.clear();
    r.sort_factors();
    return r;
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

RationalFn RationalFn::operator*(const RationalFn& o) const {
    if (!same_chart(chart(), o.chart())) throw ChartMismatch("rational mul");
    RationalFn r(num_ * o.num_);
    if (r.num_.is_zero()) return r;
    r.den_ = den_;
    for (const auto& f : o.den_) r.push_factor(f.base, f.exp);
    r.sort_factors();
    return r;
}

RationalFn RationalFn::operator*(const Scalar& s) const {
    RationalFn r = *this;
    r.num_ = r.num_ * s;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

RationalFn RationalFn::operator*(const Poly& p) const {
    RationalFn r = *this;
    r.num_ = r.num_ * p;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

RationalFn RationalFn::reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero rational function");
    RationalFn r(den_expanded());
    return r.div_poly(num_);
}

RationalFn RationalFn::pow(int e) const {
    if (e < 0) return reciprocal().pow(-e);
    RationalFn r(num_.pow(e));
    if (e > 0 && !r.num_.is_zero())
        for (const auto& f : den_) r.push_factor(f.base, f.exp * e);
    r.sort_factors();
    return r;
}

Poly RationalFn::den_expanded() const {
    Poly d = Poly::constant(chart(), Scalar(1));
    for (const auto& f : den_) d = d * f.base.pow(f.exp);
    return d;
}

bool RationalFn::equals(const RationalFn& o) const {
    if (!same_chart(chart(), o.chart())) return false;
    // Cancel the shared part of the denominators, then cross-multiply.
    Poly lhs = num_, rhs = o.num_;
    for (const auto& f : o.den_) {
        int shared = 0;
        for (const auto& g : den_)
            if (g.base == f.base) shared = std::min(g.exp, f.exp);
        if (f.exp > shared) lhs = lhs * f.base.pow(f.exp - shared);
    }
    for (const auto& g : den_) {
        int shared = 0;
        for (const auto& f : o.den_)
            if (f.base == g.base) shared = std::min(g.exp, f.exp);
        if (g.exp > shared) rhs = rhs * g.base.pow(g.exp - shared);
    }
    return lhs == rhs;
}

Scalar RationalFn::eval(std::span<const Scalar> point) const {
    Scalar d(1);
    for (const auto& f : den_) {
        Scalar v = f.base.eval(point);
        if (v.is_zero())
            throw DenominatorZero("factor (" + f.base.str() + ") vanishes at evaluation point");
        d = d * v.pow(f.exp);
    }
    return num_.eval(point) * d.inv();
}

std::complex<double> RationalFn::eval_complex(std::span<const std::complex<double>> point) const {
    std::complex<double> d(1.0, 0.0);
    for (const auto& f : den_) {
        std::complex<double> v = f.base.eval_complex(point);
        for (int q = 0; q < f.exp; ++q) d *= v;
    }
    return num_.eval_complex(point) / d;
}

RationalFn RationalFn::derivative(int v) const {
    // d(N / prod g_i^{e_i}): only factors that depend on v gain an exponent.
    std::vector<const Factor*> dep;
    for (const auto& f : den_)
        if (!f.base.derivative(v).is_zero()) dep.push_back(&f);
    Poly G = Poly::constant(chart(), Scalar(1));
    for (const auto* f : dep) G = G * f->base;
    Poly numer = num_.derivative(v) * G;
    for (const auto* f : dep) {
        Poly cof = Poly::constant(chart(), Scalar(-f->exp));
        cof = cof * num_ * f->base.derivative(v);
        for (const auto* g : dep)
            if (g != f) cof = cof * g->base;
        numer += cof;
    }
    RationalFn r(std::move(numer));
    if (r.num_.is_zero()) return r;
    for (const auto& f : den_) {
        bool d = std::find(dep.begin(), dep.end(), &f) != dep.end();
        r.push_factor(f.base, f.exp + (d ? 1 : 0));
    }
    r.sort_factors();
    return r;
}

RationalFn substitute(const Poly& p, const Substitution& s) {
    if (!same_chart(p.chart(), s.from)) throw ChartMismatch("substitute: wrong source chart");
    RationalFn acc = RationalFn::zero(s.to);
    // Memoized powers of each image.
    std::vector<std::vector<RationalFn>> powers(s.image.size());
    auto power = [&](std::size_t v, int e) -> const RationalFn& {
        auto& tab = powers[v];
        if (tab.empty()) tab.push_back(RationalFn::constant(s.to, Scalar(1)));
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * s.image[v]);
        return tab[e];
    };
    for (const auto& t : p.terms()) {
        RationalFn term = RationalFn::constant(s.to, t.c);
        for (std::size_t v = 0; v < s.image.size(); ++v) {
            int e = t.m.exp(static_cast<int>(v));
            if (e) term = term * power(v, e);
        }
        acc += term;
    }
    return acc;
}

RationalFn RationalFn::substitute(const Substitution& s) const {
    RationalFn r = forge::substitute(num_, s);
    for (const auto& f : den_) {
        RationalFn img = forge::substitute(f.base, s);
        if (img.is_zero())
            throw DegenerateSubstitution("denominator factor (" + f.base.str() +
                                         ") pulls back to zero");
        r = r * img.reciprocal().pow(f.exp);
    }
    return r;
}

std::string RationalFn::str() const {
    std::string n = num_.n_terms() > 1 ? "(" + num_.str() + ")" : num_.str();
    if (den_.empty()) return num_.str();
    std::ostringstream os;
    os << n << " / (";
    bool first = true;
    for (const auto& f : den_) {
        if (!first) os << " * ";
        first = false;
        bool bare = f.base.n_terms() == 1 && f.base.total_degree() == 1 && f.base.leading_coeff().is_one();
        os << (bare ? f.base.str() : "(" + f.base.str() + ")");
        if (f.exp > 1) os << "^" << f.exp;
    }
    os << ")";
    return os.str();
}

}  // namespace forge
