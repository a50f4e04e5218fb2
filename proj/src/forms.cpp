#include "forge/forms.hpp"

#include <sstream>

namespace forge {

OneForm::OneForm(ChartPtr chart) : chart_(std::move(chart)) {
    coef_.assign(chart_->n_diff, RationalFn::zero(chart_));
}

OneForm OneForm::d_var(ChartPtr chart, const std::string& var) {
    OneForm w(chart);
    int v = chart->index_of(var);
    if (v >= chart->n_diff) throw Error("NotDifferential", "d of parameter variable " + var);
    w.coef_[v] = RationalFn::constant(chart, Scalar(1));
    return w;
}

OneForm OneForm::dlog(const Poly& p) {
    OneForm w(p.chart());
    for (int v = 0; v < p.chart()->n_diff; ++v) {
        Poly dv = p.derivative(v);
        if (!dv.is_zero()) w.coef_[v] = RationalFn::quotient(std::move(dv), p);
    }
    return w;
}

bool OneForm::is_zero() const {
    for (const auto& c : coef_)
        if (!c.is_zero()) return false;
    return true;
}

OneForm OneForm::operator-() const {
    OneForm r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

OneForm OneForm::operator+(const OneForm& o) const {
    if (!same_chart(chart_, o.chart_)) throw ChartMismatch("one-form add");
    OneForm r = *this;
    for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] += o.coef_[i];
    return r;
}

OneForm OneForm::operator-(const OneForm& o) const { return *this + (-o); }

OneForm OneForm::operator*(const RationalFn& f) const {
    OneForm r = *this;
    for (auto& c : r.coef_) c = c * f;
    return r;
}

OneForm OneForm::operator*(const Scalar& s) const {
    OneForm r = *this;
    for (auto& c : r.coef_) c = c * s;
    return r;
}

bool OneForm::equals(const OneForm& o) const {
    if (!same_chart(chart_, o.chart_)) return false;
    for (std::size_t i = 0; i < coef_.size(); ++i)
        if (!coef_[i].equals(o.coef_[i])) return false;
    return true;
}

std::string OneForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t v = 0; v < coef_.size(); ++v) {
        if (coef_[v].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coef_[v].str() << ")*d" << chart_->vars[v];
    }
    if (first) return "0";
    return os.str();
}

TwoForm::TwoForm(ChartPtr chart) : chart_(std::move(chart)) {
    int n = chart_->n_diff;
    coef_.assign(n * (n - 1) / 2, RationalFn::zero(chart_));
}

int TwoForm::pair_index(int v, int w) const {
    int n = chart_->n_diff;
    if (!(0 <= v && v < w && w < n)) throw Error("BadPair", "two-form pair out of order");
    // rank of (v,w) with v<w in lexicographic order
    return v * n - v * (v + 1) / 2 + (w - v - 1);
}

const RationalFn& TwoForm::coeff(int v, int w) const { return coef_[pair_index(v, w)]; }
RationalFn& TwoForm::coeff(int v, int w) { return coef_[pair_index(v, w)]; }

bool TwoForm::is_zero() const {
    for (const auto& c : coef_)
        if (!c.is_zero()) return false;
    return true;
}

TwoForm TwoForm::operator-() const {
    TwoForm r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

TwoForm TwoForm::operator+(const TwoForm& o) const {
    if (!same_chart(chart_, o.chart_)) throw ChartMismatch("two-form add");
    TwoForm r = *this;
    for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] += o.coef_[i];
    return r;
}

TwoForm TwoForm::operator-(const TwoForm& o) const { return *this + (-o); }

bool TwoForm::equals(const TwoForm& o) const {
    if (!same_chart(chart_, o.chart_)) return false;
    for (std::size_t i = 0; i < coef_.size(); ++i)
        if (!coef_[i].equals(o.coef_[i])) return false;
    return true;
}

std::string TwoForm::str() const {
    std::ostringstream os;
    bool first = true;
    int n = chart_->n_diff;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) {
            const RationalFn& c = coeff(v, w);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")*d" << chart_->vars[v] << "^d" << chart_->vars[w];
        }
    if (first) return "0";
    return os.str();
}

OneForm exterior_derivative(const RationalFn& f) {
    OneForm w(f.chart());
    for (int v = 0; v < f.chart()->n_diff; ++v) w.coeff(v) = f.derivative(v);
    return w;
}

TwoForm exterior_derivative(const OneForm& w) {
    TwoForm r(w.chart());
    int n = w.chart()->n_diff;
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            r.coeff(v, u) = w.coeff(u).derivative(v) - w.coeff(v).derivative(u);
    return r;
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
    if (!same_chart(a.chart(), b.chart())) throw ChartMismatch("wedge");
    TwoForm r(a.chart());
    int n = a.chart()->n_diff;
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            r.coeff(v, u) = a.coeff(v) * b.coeff(u) - a.coeff(u) * b.coeff(v);
    return r;
}

OneForm pullback(const OneForm& w, const Substitution& s) {
    if (!same_chart(w.chart(), s.from)) throw ChartMismatch("pullback: wrong source chart");
    OneForm r(s.to);
    for (int v = 0; v < s.from->n_diff; ++v) {
        if (w.coeff(v).is_zero()) continue;
        RationalFn c = w.coeff(v).substitute(s);
        r += exterior_derivative(s.image[v]) * c;
    }
    return r;
}

}  // namespace forge
