#include "forge/poly.hpp"

#include <algorithm>
#include <sstream>

namespace forge {

int Chart::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    throw Error("UnknownVariable", "variable '" + name + "' not on chart");
}

ChartPtr make_chart(std::vector<std::string> vars, int n_diff) {
    if (static_cast<int>(vars.size()) > Mono::kMaxVars)
        throw Error("ChartTooLarge", "more than 15 variables");
    Chart c;
    c.vars = std::move(vars);
    c.n_diff = n_diff;
    return std::make_shared<const Chart>(std::move(c));
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void Mono::set_exp(int v, int e) {
    int d = deg() - exp(v) + e;
    if (e > 255 || d > 255) throw Error("DegreeOverflow", "monomial exponent exceeds 255");
    b[1 + v] = static_cast<std::uint8_t>(e);
    b[0] = static_cast<std::uint8_t>(d);
}

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    int d = deg() + o.deg();
    if (d > 255) throw Error("DegreeOverflow", "monomial degree exceeds 255");
    for (std::size_t i = 0; i < b.size(); ++i) r.b[i] = static_cast<std::uint8_t>(b[i] + o.b[i]);
    return r;
}

bool Mono::divisible_by(const Mono& o) const {
    for (std::size_t i = 1; i < b.size(); ++i)
        if (b[i] < o.b[i]) return false;
    return true;
}

Mono Mono::operator/(const Mono& o) const {
    Mono r;
    for (std::size_t i = 0; i < b.size(); ++i) r.b[i] = static_cast<std::uint8_t>(b[i] - o.b[i]);
    return r;
}

Poly Poly::constant(ChartPtr chart, Scalar c) {
    Poly p(std::move(chart));
    if (!c.is_zero()) p.terms_.push_back({Mono::one(), std::move(c)});
    return p;
}

Poly Poly::var(ChartPtr chart, int v) {
    Poly p(std::move(chart));
    p.terms_.push_back({Mono::of_var(v), Scalar(1)});
    return p;
}

Poly Poly::var(ChartPtr chart, const std::string& name) {
    int v = chart->index_of(name);
    return var(std::move(chart), v);
}

Poly Poly::from_terms(ChartPtr chart, std::vector<Term> terms) {
    Poly p(std::move(chart));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.m > b.m; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

Scalar Poly::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw Error("NotConstant", "constant_value of non-constant polynomial");
    return terms_[0].c;
}

int Poly::degree_in(int v) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.exp(v));
    return d;
}

Poly Poly::operator-() const {
    Poly r(chart_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m, -t.c});
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    if (!same_chart(chart_, o.chart_)) throw ChartMismatch("poly add");
    Poly r(chart_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].m == o.terms_[j].m) {
            Scalar c = terms_[i].c + o.terms_[j].c;
            if (!c.is_zero()) r.terms_.push_back({terms_[i].m, std::move(c)});
            ++i, ++j;
        } else if (terms_[i].m > o.terms_[j].m) {
            r.terms_.push_back(terms_[i]);
            ++i;
        } else {
            r.terms_.push_back(o.terms_[j]);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (!same_chart(chart_, o.chart_)) throw ChartMismatch("poly mul");
    Poly r(chart_);
    if (terms_.empty() || o.terms_.empty()) return r;
    // Multiply the smaller into the larger.
    const Poly& big = terms_.size() >= o.terms_.size() ? *this : o;
    const Poly& small = terms_.size() >= o.terms_.size() ? o : *this;
    if (small.terms_.size() == 1) {
        const Term& s = small.terms_[0];
        r.terms_.reserve(big.terms_.size());
        for (const auto& t : big.terms_) r.terms_.push_back({t.m * s.m, t.c * s.c});
        if (s.m.deg() == 0) return r;  // order preserved by a constant monomial
        r.normalize();
        return r;
    }
    r.terms_.reserve(big.terms_.size() * small.terms_.size());
    for (const auto& a : big.terms_)
        for (const auto& b : small.terms_) r.terms_.push_back({a.m * b.m, a.c * b.c});
    r.normalize();
    return r;
}

Poly Poly::operator*(const Scalar& s) const {
    if (s.is_zero()) return Poly(chart_);
    Poly r(chart_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m, t.c * s});
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!same_chart(chart_, o.chart_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw Error("NegativePower", "poly pow");
    Poly acc = Poly::constant(chart_, Scalar(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::derivative(int v) const {
    Poly r(chart_);
    for (const auto& t : terms_) {
        int e = t.m.exp(v);
        if (e == 0) continue;
        Mono m = t.m;
        m.set_exp(v, e - 1);
        r.terms_.push_back({m, t.c * Scalar(e)});
    }
    r.normalize();
    return r;
}

Scalar Poly::eval(std::span<const Scalar> point) const {
    Scalar acc(0);
    for (const auto& t : terms_) {
        Scalar v = t.c;
        for (std::size_t k = 0; k < chart_->vars.size(); ++k) {
            int e = t.m.exp(static_cast<int>(k));
            if (e) v = v * point[k].pow(e);
        }
        acc += v;
    }
    return acc;
}

std::complex<double> Poly::eval_complex(std::span<const std::complex<double>> point) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& t : terms_) {
        std::complex<double> v = t.c.to_complex();
        for (std::size_t k = 0; k < chart_->vars.size(); ++k) {
            int e = t.m.exp(static_cast<int>(k));
            for (int q = 0; q < e; ++q) v *= point[k];
        }
        acc += v;
    }
    return acc;
}

const Scalar& Poly::leading_coeff() const {
    if (terms_.empty()) throw Error("ZeroPoly", "leading_coeff of zero");
    return terms_[0].c;
}

Scalar Poly::make_monic() {
    Scalar lead = leading_coeff();
    Scalar li = lead.inv();
    for (auto& t : terms_) t.c = t.c * li;
    return lead;
}

int Poly::compare(const Poly& o) const {
    std::size_t n = std::min(terms_.size(), o.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (terms_[i].m > o.terms_[i].m) return 1;
        if (o.terms_[i].m > terms_[i].m) return -1;
        const Scalar &a = terms_[i].c, &b = o.terms_[i].c;
        if (a != b) {
            if (a.re() != b.re()) return a.re() < b.re() ? -1 : 1;
            return a.im() < b.im() ? -1 : 1;
        }
    }
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
    return 0;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.c;
        if (!first) {
            // Fold a plain sign into the separator for real or pure-imaginary
            // negative coefficients.
            bool neg = (c.im() == 0 && c.re() < 0) || (c.re() == 0 && c.im() < 0);
            if (neg) {
                os << " - ";
                c = -c;
            } else {
                os << " + ";
            }
        }
        first = false;
        std::string mono;
        for (std::size_t v = 0; v < chart_->vars.size(); ++v) {
            int e = t.m.exp(static_cast<int>(v));
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += chart_->vars[v];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            os << c.str();
        } else if (c.is_one()) {
            os << mono;
        } else if (c == Scalar(-1)) {
            os << "-" << mono;
        } else {
            os << c.str() << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace forge
