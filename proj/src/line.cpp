#include "forge/line.hpp"

#include <cmath>

namespace forge {

namespace {

Cplx principal_sqrt_of_rational(const mpq_class& r) {
    double v = r.get_d();
    if (v >= 0) return {std::sqrt(v), 0.0};
    return {0.0, std::sqrt(-v)};
}

Scalar sq(const Scalar& s) { return s * s; }

}  // namespace

std::array<Scalar, 3> line_conic_coeffs(const LineParams& p) {
    // f(a,b,xt) = (a-1)^2 b^2/a^2 xt^2 + 2b(1+a+b-ab)/a xt + (b-1)^2
    const Scalar one(1), two(2);
    Scalar ai = p.a.inv();
    Scalar A = sq(p.a - one) * sq(p.b) * sq(ai);
    Scalar B = two * p.b * (one + p.a + p.b - p.a * p.b) * ai;
    Scalar C = sq(p.b - one);
    return {A, B, C};
}

std::array<Scalar, 3> line_quadric_coeffs(const LineParams& p, int i) {
    // f_i = f - (a d_i - b c_i xt)^2 / a^2
    auto f = line_conic_coeffs(p);
    const Scalar two(2);
    Scalar ai = p.a.inv();
    const Scalar &ci = p.c.at(i - 1), &di = p.d.at(i - 1);
    Scalar A = f[0] - sq(p.b * ci) * sq(ai);
    Scalar B = f[1] + two * p.b * ci * di * ai;
    Scalar C = f[2] - sq(di);
    return {A, B, C};
}

TildePoint etale_lift(const LineParams& p, const std::vector<bool>& branch) {
    const Scalar zero(0), one(1), four(4);
    int n = p.n();
    if (static_cast<int>(p.d.size()) != n - 2) throw NonGeneric("c and d lists differ in length");

    if (p.a == zero) throw NonGeneric("a = 0 (xt coordinate degenerates)");
    if (p.a == one) throw NonGeneric("a = 1 (conic pullback drops degree)");
    if (p.b == zero) throw NonGeneric("b = 0 (xt coordinate degenerates)");
    if (p.b == one) throw NonGeneric("b = 1 (f(a,b,0) = 0 collides the pole at 0)");

    Scalar disc_b = four * (p.a + p.b - p.a * p.b);
    if (disc_b == zero) throw NonGeneric("a+b-ab = 0 (t1 = t2)");
    if (disc_b == four * p.a) throw NonGeneric("btilde^2 = 4a");

    auto f = line_conic_coeffs(p);
    if (f[0] + f[1] + f[2] == zero) throw NonGeneric("f(a,b,1) = 0 collides the pole at 1");

    TildePoint tp;
    tp.base = p;
    tp.branch = branch;
    tp.branch.resize(n - 1, false);
    tp.btilde = principal_sqrt_of_rational(disc_b.re());
    if (!disc_b.is_real()) throw NonGeneric("a+b-ab not real-rational");
    if (tp.branch[0]) tp.btilde = -tp.btilde;

    for (int i = 1; i <= n - 2; ++i) {
        auto fi = line_quadric_coeffs(p, i);
        if (fi[0] == zero) throw NonGeneric("(a-1)^2 = c_" + std::to_string(i) + "^2");
        if (fi[2] == zero)
            throw NonGeneric("f_" + std::to_string(i) + "(0) = 0 collides the pole at 0");
        if (fi[0] + fi[1] + fi[2] == zero)
            throw NonGeneric("f_" + std::to_string(i) + "(1) = 0 collides the pole at 1");
        Scalar disc = fi[1] * fi[1] - four * fi[0] * fi[2];
        if (disc == zero) throw NonGeneric("discriminant of f_" + std::to_string(i) + " vanishes");
        if (!disc.is_real()) throw NonGeneric("discriminant of f_" + std::to_string(i) + " not real");
        Cplx dt = principal_sqrt_of_rational(disc.re());
        if (tp.branch[i]) dt = -dt;
        tp.dtilde.push_back(dt);
    }
    return tp;
}

std::vector<Cplx> singular_locus(const TildePoint& tp) {
    const LineParams& p = tp.base;
    int n = tp.n();
    Cplx a = p.a.to_complex(), b = p.b.to_complex();
    Cplx bt = tp.btilde;

    std::vector<Cplx> t;
    // Roots of f(a,b,xt), labelled by the btilde branch:
    //   t_1 = -a (bt - 2)^2 / (4 (a-1)^2 b),  t_2 with bt -> -bt.
    Cplx denom = 4.0 * (a - 1.0) * (a - 1.0) * b;
    t.push_back(-a * (bt - 2.0) * (bt - 2.0) / denom);
    t.push_back(-a * (bt + 2.0) * (bt + 2.0) / denom);

    for (int i = 1; i <= n - 2; ++i) {
        auto fi = line_quadric_coeffs(p, i);
        Cplx A = fi[0].to_complex(), B = fi[1].to_complex();
        Cplx dt = tp.dtilde[i - 1];
        t.push_back((-B - dt) / (2.0 * A));
        t.push_back((-B + dt) / (2.0 * A));
    }

    // All 2n+1 singular points must stay apart.
    std::vector<Cplx> all = t;
    all.push_back({0.0, 0.0});
    all.push_back({1.0, 0.0});
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (std::abs(all[i] - all[j]) < 1e-9)
                throw CollidingPoles("poles " + std::to_string(i) + " and " + std::to_string(j) +
                                     " coincide");
    return t;
}

Cplx printed_t1_formula(const TildePoint& tp) {
    Cplx a = tp.base.a.to_complex();
    Cplx bt = tp.btilde;
    return a * (bt - 2.0) * (bt - 2.0) / (4.0 * (a - 1.0) * (bt * bt - a));
}

Cplx printed_t_odd_formula(const TildePoint& tp, int i) {
    Cplx a = tp.base.a.to_complex(), b = tp.base.b.to_complex();
    Cplx ci = tp.base.c.at(i - 1).to_complex(), di = tp.base.d.at(i - 1).to_complex();
    Cplx dt = tp.dtilde.at(i - 1);
    Cplx num = 2.0 * a * b * (1.0 + a + b - a * b - ci * di) - a * a * dt;
    Cplx den = 2.0 * b * b * ((a - 1.0) * (a - 1.0) - ci * ci);
    return num / den;
}

TildePoint continuous_lift(const LineParams& p, const TildePoint& anchor) {
    TildePoint tp = etale_lift(p);
    if (std::abs(tp.btilde - anchor.btilde) > std::abs(-tp.btilde - anchor.btilde)) {
        tp.btilde = -tp.btilde;
        tp.branch[0] = !tp.branch[0];
    }
    for (std::size_t i = 0; i < tp.dtilde.size(); ++i) {
        if (std::abs(tp.dtilde[i] - anchor.dtilde[i]) > std::abs(-tp.dtilde[i] - anchor.dtilde[i])) {
            tp.dtilde[i] = -tp.dtilde[i];
            tp.branch[i + 1] = !tp.branch[i + 1];
        }
    }
    return tp;
}

namespace {

LineParams perturbed(const LineParams& p, int coord, const Scalar& dh) {
    LineParams q = p;
    int n = p.n();
    if (coord == 0)
        q.a = q.a + dh;
    else if (coord == 1)
        q.b = q.b + dh;
    else if (coord < 2 + (n - 2))
        q.c[coord - 2] = q.c[coord - 2] + dh;
    else
        q.d[coord - 2 - (n - 2)] = q.d[coord - 2 - (n - 2)] + dh;
    return q;
}

}  // namespace

std::vector<std::vector<Cplx>> jacobian_t(const TildePoint& tp, double h) {
    int n = tp.n();
    int dim = 2 * n - 4 + 2;
    Scalar hs(mpq_class(h), mpq_class(0));
    std::vector<std::vector<Cplx>> J(dim, std::vector<Cplx>(dim));
    for (int m = 0; m < dim; ++m) {
        auto tplus = continuous_lift(perturbed(tp.base, m, hs), tp);
        auto tminus = continuous_lift(perturbed(tp.base, m, -hs), tp);
        auto tp_poles = singular_locus(tplus);
        auto tm_poles = singular_locus(tminus);
        for (int k = 0; k < dim; ++k) J[k][m] = (tp_poles[k] - tm_poles[k]) / (2.0 * h);
    }
    if (abs_det(J) < 1e-12) throw SingularJacobian("pole-position jacobian is singular");
    return J;
}

}  // namespace forge
