#include "forge/connection.hpp"

namespace forge {

namespace {

std::vector<std::string> z_names(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n - 2; ++i) out.push_back("z" + std::to_string(i));
    return out;
}

ChartPtr build_chart(std::vector<std::string> geo, int n, const LambdaSpec& lambda) {
    int n_diff = static_cast<int>(geo.size());
    if (lambda.symbolic)
        for (int j = 0; j < n; ++j) geo.push_back("l" + std::to_string(j));
    return make_chart(std::move(geo), n_diff);
}

void require_n(int n) {
    if (n < 2) throw Error("BadDimension", "n must be at least 2");
}

}  // namespace

ChartPtr connection_chart(int n, const LambdaSpec& lambda) {
    require_n(n);
    std::vector<std::string> geo = {"x", "y"};
    for (auto& z : z_names(n)) geo.push_back(z);
    return build_chart(std::move(geo), n, lambda);
}

ChartPtr cover_chart(int n, const LambdaSpec& lambda) {
    require_n(n);
    std::vector<std::string> geo = {"u0", "u1"};
    for (auto& z : z_names(n)) geo.push_back(z);
    return build_chart(std::move(geo), n, lambda);
}

ChartPtr symmetric_chart(int n, const LambdaSpec& lambda) {
    require_n(n);
    std::vector<std::string> geo = {"s1", "s2"};
    for (auto& z : z_names(n)) geo.push_back(z);
    return build_chart(std::move(geo), n, lambda);
}

RationalFn lambda_coeff(const ChartPtr& chart, const LambdaSpec& lambda, int j) {
    if (lambda.symbolic) return RationalFn::var(chart, "l" + std::to_string(j));
    return RationalFn::constant(chart, lambda.values.at(j));
}

Poly conic_poly(const ChartPtr& chart) {
    bool sym = chart->vars[0] == "s1";
    if (sym) {
        // s1^2 - 4 s2
        Poly s1 = Poly::var(chart, "s1"), s2 = Poly::var(chart, "s2");
        return s1 * s1 - Scalar(4) * s2;
    }
    Poly x = Poly::var(chart, "x"), y = Poly::var(chart, "y");
    Poly one = Poly::constant(chart, Scalar(1));
    return x * x + y * y + one - Scalar(2) * (x * y + y + x);
}

namespace {

// Shared construction of alpha^i_0 and alpha^i_2 for both charts: the conic f
// is chart-specific, everything else is literal.
void append_alpha_i(AlphaSet& out, const ChartPtr& chart, const LambdaSpec& lambda, int n,
                    const Poly& f) {
    for (int i = 1; i <= n - 2; ++i) {
        RationalFn li = lambda_coeff(chart, lambda, i + 1);
        Poly zi = Poly::var(chart, "z" + std::to_string(i));
        Poly fz = f - zi * zi;  // f - z_i^2
        // a0i = l_{i+1} ( dz_i - z_i d(f - z_i^2) / (2 (f - z_i^2)) )
        OneForm dzi = OneForm::d_var(chart, "z" + std::to_string(i));
        OneForm w = dzi - OneForm::dlog(fz) * RationalFn(zi) * Scalar(1, 2);
        OneForm a0i = w * li;
        out.a0i.push_back(a0i);
        out.a2i.push_back(-(a0i * RationalFn(Poly::constant(chart, Scalar(1))).div_poly(f)));
    }
}

}  // namespace

AlphaSet build_alpha(int n, const LambdaSpec& lambda) {
    require_n(n);
    ChartPtr chart = connection_chart(n, lambda);
    RationalFn l0 = lambda_coeff(chart, lambda, 0), l1 = lambda_coeff(chart, lambda, 1);
    Poly x = Poly::var(chart, "x"), y = Poly::var(chart, "y");
    Poly one = Poly::constant(chart, Scalar(1));
    Poly f = conic_poly(chart);
    OneForm dx = OneForm::d_var(chart, "x"), dy = OneForm::d_var(chart, "y");

    AlphaSet out;
    // a0 = -((2 l0 + l1) dx - (2 l1 + l0) dy)/2
    //      - (l1 (y-1)/2) dx/x + (l0 (x-1)/2) dy/y
    OneForm lin = dx * (l0 * Scalar(2) + l1) - dy * (l1 * Scalar(2) + l0);
    OneForm polar = dx * (l1 * RationalFn::quotient(y - one, x)) -
                    dy * (l0 * RationalFn::quotient(x - one, y));
    out.a0 = (lin + polar) * Scalar(-1, 2);
    out.a1 = OneForm::dlog(f) * Scalar(-1, 4);
    out.a2 = -(out.a0 * RationalFn(one).div_poly(f));
    append_alpha_i(out, chart, lambda, n, f);
    return out;
}

AlphaSet build_alpha_symmetric(int n, const LambdaSpec& lambda) {
    require_n(n);
    ChartPtr chart = symmetric_chart(n, lambda);
    RationalFn l0 = lambda_coeff(chart, lambda, 0), l1 = lambda_coeff(chart, lambda, 1);
    Poly s1 = Poly::var(chart, "s1"), s2 = Poly::var(chart, "s2");
    Poly one = Poly::constant(chart, Scalar(1));
    Poly g = one - s1 + s2;  // 1 - s1 + s2
    Poly f = conic_poly(chart);
    OneForm ds1 = OneForm::d_var(chart, "s1"), ds2 = OneForm::d_var(chart, "s2");

    AlphaSet out;
    // a0 = (2 l0 (1-s1+s2) + l1 (-s1+2 s2)) / (2 (1-s1+s2)) ds1
    //      - (l0 s1 (1-s1+s2) + l1 s2 (s1-2)) / (2 s2 (1-s1+s2)) ds2
    RationalFn c1 =
        (l0 * Scalar(2) * RationalFn(g) + l1 * RationalFn(-s1 + Scalar(2) * s2)).div_poly(g) *
        Scalar(1, 2);
    RationalFn c2 = (l0 * RationalFn(s1 * g) + l1 * RationalFn(s2 * (s1 - Scalar(2) * one)))
                        .div_poly(s2)
                        .div_poly(g) *
                    Scalar(-1, 2);
    out.a0 = ds1 * c1 + ds2 * c2;
    out.a1 = OneForm::dlog(f) * Scalar(-1, 4);
    out.a2 = -(out.a0 * RationalFn(one).div_poly(f));
    append_alpha_i(out, chart, lambda, n, f);
    return out;
}

ConnMatrix ConnMatrix::zero(ChartPtr chart) {
    ConnMatrix m;
    m.chart = chart;
    for (auto& w : m.e) w = OneForm::zero(chart);
    return m;
}

bool ConnMatrix::equals(const ConnMatrix& o) const {
    for (int k = 0; k < 4; ++k)
        if (!e[k].equals(o.e[k])) return false;
    return true;
}

GaugeMatrix GaugeMatrix::identity(ChartPtr chart) {
    GaugeMatrix m;
    m.chart = chart;
    m.at(0, 0) = RationalFn::constant(chart, Scalar(1));
    m.at(0, 1) = RationalFn::zero(chart);
    m.at(1, 0) = RationalFn::zero(chart);
    m.at(1, 1) = RationalFn::constant(chart, Scalar(1));
    return m;
}

GaugeMatrix GaugeMatrix::inverse() const {
    RationalFn d = det();
    if (d.is_zero()) throw SingularGauge("gauge matrix has identically zero determinant");
    RationalFn di = d.reciprocal();
    GaugeMatrix r;
    r.chart = chart;
    r.at(0, 0) = at(1, 1) * di;
    r.at(0, 1) = -(at(0, 1) * di);
    r.at(1, 0) = -(at(1, 0) * di);
    r.at(1, 1) = at(0, 0) * di;
    return r;
}

bool Curvature::is_zero() const {
    for (const auto& w : e)
        if (!w.is_zero()) return false;
    return true;
}

ConnMatrix build_connection(int n, const LambdaSpec& lambda) {
    AlphaSet a = build_alpha(n, lambda);
    ChartPtr chart = a.a0.chart();
    Poly x = Poly::var(chart, "x"), y = Poly::var(chart, "y");
    Poly one = Poly::constant(chart, Scalar(1));
    RationalFn xm1(x - one);
    RationalFn inv_y = RationalFn(one).div_poly(y);
    OneForm dx = OneForm::d_var(chart, "x"), dy = OneForm::d_var(chart, "y");

    OneForm a11 = a.a2 * xm1 + a.a1 + dy * (inv_y * Scalar(1, 2));
    OneForm a12 = (dx + a.a2 * (xm1 * xm1) + a.a1 * (xm1 * Scalar(2)) + a.a0) * inv_y;
    OneForm a21 = a.a2 * RationalFn(y);
    for (std::size_t i = 0; i < a.a0i.size(); ++i) {
        a11 += a.a2i[i] * xm1;
        a12 += (a.a2i[i] * (xm1 * xm1) + a.a0i[i]) * inv_y;
        a21 += a.a2i[i] * RationalFn(y);
    }

    ConnMatrix A = ConnMatrix::zero(chart);
    A.at(0, 0) = a11;
    A.at(0, 1) = a12;
    A.at(1, 0) = -a21;
    A.at(1, 1) = -a11;
    return A;
}

Curvature curvature(const ConnMatrix& A) {
    Curvature F;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            TwoForm w = exterior_derivative(A.at(r, c));
            for (int k = 0; k < 2; ++k) w = w + wedge(A.at(r, k), A.at(k, c));
            F.at(r, c) = std::move(w);
        }
    return F;
}

ConnMatrix gauge(const ConnMatrix& A, const GaugeMatrix& M) {
    if (!same_chart(A.chart, M.chart)) throw ChartMismatch("gauge");
    GaugeMatrix Mi = M.inverse();
    ConnMatrix R = ConnMatrix::zero(A.chart);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            OneForm w = OneForm::zero(A.chart);
            // M^{-1} dM
            for (int k = 0; k < 2; ++k) w += exterior_derivative(M.at(k, c)) * Mi.at(r, k);
            // M^{-1} A M
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) w += A.at(k, l) * (Mi.at(r, k) * M.at(l, c));
            R.at(r, c) = std::move(w);
        }
    return R;
}

ConnMatrix twist(const ConnMatrix& A, const OneForm& eta) {
    ConnMatrix R = A;
    R.at(0, 0) += eta;
    R.at(1, 1) += eta;
    return R;
}

ConnMatrix pullback(const ConnMatrix& A, const Substitution& s) {
    ConnMatrix R = ConnMatrix::zero(s.to);
    for (int k = 0; k < 4; ++k) R.e[k] = pullback(A.e[k], s);
    return R;
}

OneForm omega0(int n, const LambdaSpec& lambda) {
    ChartPtr chart = cover_chart(n, lambda);
    RationalFn l0 = lambda_coeff(chart, lambda, 0), l1 = lambda_coeff(chart, lambda, 1);
    Poly u0 = Poly::var(chart, "u0"), u1 = Poly::var(chart, "u1");
    Poly one = Poly::constant(chart, Scalar(1));
    OneForm w = (OneForm::dlog(u0) - OneForm::dlog(u1)) * l0;
    w += (OneForm::dlog(u0 - one) - OneForm::dlog(u1 - one)) * l1;
    return w;
}

OneForm psi_n(int n, const LambdaSpec& lambda) {
    ChartPtr chart = cover_chart(n, lambda);
    OneForm w = OneForm::zero(chart);
    Poly u0 = Poly::var(chart, "u0"), u1 = Poly::var(chart, "u1");
    for (int i = 1; i <= n - 2; ++i) {
        Poly zi = Poly::var(chart, "z" + std::to_string(i));
        RationalFn li = lambda_coeff(chart, lambda, i + 1);
        w += (OneForm::dlog(u0 - u1 + zi) - OneForm::dlog(u0 - u1 - zi)) * li;
    }
    return w;
}

GaugeMatrix gauge_m1(int n, const LambdaSpec& lambda) {
    ChartPtr chart = cover_chart(n, lambda);
    Poly u0 = Poly::var(chart, "u0"), u1 = Poly::var(chart, "u1");
    GaugeMatrix m;
    m.chart = chart;
    m.at(0, 0) = RationalFn::constant(chart, Scalar(-1));
    m.at(0, 1) = RationalFn(u1 - u0);
    m.at(1, 0) = RationalFn::constant(chart, Scalar(-1));
    m.at(1, 1) = RationalFn(u0 - u1);
    return m;
}

GaugeMatrix gauge_m2(int n, const LambdaSpec& lambda) {
    ChartPtr chart = connection_chart(n, lambda);
    Poly x = Poly::var(chart, "x"), y = Poly::var(chart, "y");
    Poly one = Poly::constant(chart, Scalar(1));
    GaugeMatrix m;
    m.chart = chart;
    m.at(0, 0) = RationalFn(y);
    m.at(0, 1) = RationalFn(x - one);
    m.at(1, 0) = RationalFn::zero(chart);
    m.at(1, 1) = RationalFn::constant(chart, Scalar(1));
    return m;
}

ConnMatrix middle_connection(int n, const LambdaSpec& lambda) {
    AlphaSet a = build_alpha(n, lambda);
    ConnMatrix B = ConnMatrix::zero(a.a0.chart());
    B.at(0, 0) = a.a1;
    B.at(0, 1) = a.a0;
    B.at(1, 0) = -a.a2;
    B.at(1, 1) = -a.a1;
    for (std::size_t i = 0; i < a.a0i.size(); ++i) {
        B.at(0, 1) += a.a0i[i];
        B.at(1, 0) -= a.a2i[i];
    }
    return B;
}

namespace {

Substitution with_identity_tail(ChartPtr from, ChartPtr to, std::vector<RationalFn> head) {
    Substitution s{std::move(from), std::move(to), std::move(head)};
    for (std::size_t v = s.image.size(); v < s.from->vars.size(); ++v)
        s.image.push_back(RationalFn::var(s.to, s.from->vars[v]));
    return s;
}

}  // namespace

Substitution cover_substitution(int n, const LambdaSpec& lambda) {
    ChartPtr from = connection_chart(n, lambda);
    ChartPtr to = cover_chart(n, lambda);
    Poly u0 = Poly::var(to, "u0"), u1 = Poly::var(to, "u1");
    Poly one = Poly::constant(to, Scalar(1));
    return with_identity_tail(from, to,
                              {RationalFn((one - u0) * (one - u1)), RationalFn(u0 * u1)});
}

Substitution symmetric_substitution(int n, const LambdaSpec& lambda) {
    ChartPtr from = connection_chart(n, lambda);
    ChartPtr to = symmetric_chart(n, lambda);
    Poly s1 = Poly::var(to, "s1"), s2 = Poly::var(to, "s2");
    Poly one = Poly::constant(to, Scalar(1));
    return with_identity_tail(from, to, {RationalFn(one - s1 + s2), RationalFn(s2)});
}

Substitution vieta_substitution(int n, const LambdaSpec& lambda) {
    ChartPtr from = symmetric_chart(n, lambda);
    ChartPtr to = cover_chart(n, lambda);
    Poly u0 = Poly::var(to, "u0"), u1 = Poly::var(to, "u1");
    return with_identity_tail(from, to, {RationalFn(u0 + u1), RationalFn(u0 * u1)});
}

}  // namespace forge
