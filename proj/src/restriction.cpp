#include "forge/restriction.hpp"

#include <cmath>

namespace forge {

namespace {

// Ascending coefficient list of a univariate polynomial.
std::vector<Scalar> uni_coeffs(const Poly& p) {
    std::vector<Scalar> c(std::max(0, p.total_degree()) + 1, Scalar(0));
    for (const auto& t : p.terms()) c[t.m.exp(0)] = t.c;
    return c;
}

// Coefficients of p(u + r).
std::vector<Scalar> taylor_shift(std::vector<Scalar> c, const Scalar& r) {
    // Synthetic division by (x - r), repeated: after pass k the remainder is
    // the coefficient of u^k.
    int n = static_cast<int>(c.size());
    for (int k = 0; k < n - 1; ++k)
        for (int j = n - 2; j >= k; --j) c[j] += r * c[j + 1];
    return c;
}

struct EntryData {
    std::vector<Scalar> num;             // ascending
    std::vector<const Factor*> factors;  // of the entry's denominator
    int deg_den = 0;
};

// Exact residue (and higher Laurent coefficients) at rational pole r where
// the denominator carries (xt - r)^m.
Scalar residue_at_rational(const EntryData& ed, const Scalar& r, const Poly& linear_base,
                           const std::string& where) {
    int m = 0;
    std::vector<Scalar> dhat = {Scalar(1)};
    auto mul_uni = [](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
        std::vector<Scalar> out(a.size() + b.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    for (const auto* f : ed.factors) {
        if (f->base == linear_base) {
            m = f->exp;
            continue;
        }
        auto fc = uni_coeffs(f->base);
        for (int e = 0; e < f->exp; ++e) dhat = mul_uni(dhat, fc);
    }
    if (m == 0) return Scalar(0);

    std::vector<Scalar> nsh = taylor_shift(ed.num, r);
    std::vector<Scalar> dsh = taylor_shift(dhat, r);
    if (dsh[0].is_zero()) throw CollidingPoles("denominator factors share the root at " + where);

    // Taylor series of N/Dhat up to order m-1.
    std::vector<Scalar> series(m, Scalar(0));
    Scalar d0i = dsh[0].inv();
    for (int k = 0; k < m; ++k) {
        Scalar acc = k < static_cast<int>(nsh.size()) ? nsh[k] : Scalar(0);
        for (int j = 1; j <= k; ++j)
            if (j < static_cast<int>(dsh.size())) acc -= dsh[j] * series[k - j];
        series[k] = acc * d0i;
    }
    // Coefficients below the residue are poles of order >= 2; the restriction
    // of a connection with reduced polar divisor must kill them exactly.
    for (int k = 0; k + 1 < m; ++k)
        if (!series[k].is_zero())
            throw HigherOrderPole("double pole survives at " + where);
    return series[m - 1];
}

Cplx residue_at_quadratic_root(const EntryData& ed, Cplx t, const Poly& quad_base,
                               const std::string& where) {
    const Factor* self = nullptr;
    for (const auto* f : ed.factors)
        if (f->base == quad_base) self = f;
    if (!self) return {0.0, 0.0};
    if (self->exp != 1) throw HigherOrderPole("non-simple quadratic factor at " + where);

    std::array<Cplx, 1> pt = {t};
    Cplx denom = quad_base.derivative(0).eval_complex(pt);
    for (const auto* f : ed.factors) {
        if (f == self) continue;
        Cplx v = f->base.eval_complex(pt);
        for (int e = 0; e < f->exp; ++e) denom *= v;
    }
    Cplx numv = 0.0;
    for (int k = static_cast<int>(ed.num.size()) - 1; k >= 0; --k)
        numv = numv * t + ed.num[k].to_complex();
    return numv / denom;
}

}  // namespace

CMat2 FuchsianSystem::eval(Cplx x) const {
    CMat2 A = CMat2::zero();
    for (std::size_t k = 0; k < poles.size(); ++k) A += residues[k] * (1.0 / (x - poles[k]));
    return A;
}

FuchsianSystem restrict_connection(int n, const std::vector<Scalar>& lambda, const TildePoint& tp) {
    LambdaSpec ls = LambdaSpec::numeric(lambda);
    ConnMatrix A = build_connection(n, ls);
    ChartPtr cxy = A.chart;
    ChartPtr cline = make_chart({"xt"}, 1);

    // x = -(b/a) xt, y = b(1 - xt), z_i = d_i - (b c_i / a) xt.
    const Scalar &a = tp.base.a, &b = tp.base.b;
    Poly xt = Poly::var(cline, "xt");
    Scalar mba = -(b * a.inv());
    std::vector<RationalFn> images;
    images.push_back(RationalFn(xt * mba));
    images.push_back(RationalFn(Poly::constant(cline, b) - xt * b));
    for (int i = 1; i <= n - 2; ++i)
        images.push_back(
            RationalFn(Poly::constant(cline, tp.base.d[i - 1]) + xt * (tp.base.c[i - 1] * mba)));
    Substitution sub{cxy, cline, std::move(images)};

    // Monic images of the divisor factors, for matching denominator factors
    // to poles.
    Poly lin0 = xt;  // from (x = 0)
    Poly lin1 = xt - Poly::constant(cline, Scalar(1));  // from (y = 0)
    auto monic_image = [&](std::array<Scalar, 3> q) {
        Poly p = xt * xt * q[0] + xt * q[1] + Poly::constant(cline, q[2]);
        p.make_monic();
        return p;
    };
    Poly quad_f = monic_image(line_conic_coeffs(tp.base));
    std::vector<Poly> quad_fi;
    for (int i = 1; i <= n - 2; ++i) quad_fi.push_back(monic_image(line_quadric_coeffs(tp.base, i)));

    // Restrict the four entries; each becomes (rational function) * dxt.
    // EntryData keeps pointers into the owning rational functions.
    std::array<RationalFn, 4> backing;
    std::array<EntryData, 4> entries;
    for (int k = 0; k < 4; ++k) {
        OneForm w = pullback(A.e[k], sub);
        backing[k] = w.coeff(0);
        entries[k].num = uni_coeffs(backing[k].num());
        for (const auto& f : backing[k].den()) {
            entries[k].factors.push_back(&f);
            entries[k].deg_den += f.exp * f.base.total_degree();
        }
        // A pole at infinity deeper than simple would show as excess
        // numerator degree (denominator factors are monic).
        int deg_num = static_cast<int>(entries[k].num.size()) - 1;
        if (!backing[k].is_zero() && deg_num >= entries[k].deg_den)
            throw HigherOrderPole("pole at infinity is not simple");
    }

    std::vector<Cplx> moving = singular_locus(tp);

    FuchsianSystem fs;
    fs.poles = moving;
    fs.poles.push_back({0.0, 0.0});
    fs.poles.push_back({1.0, 0.0});

    for (std::size_t kp = 0; kp < fs.poles.size(); ++kp) {
        CMat2 H;
        for (int e = 0; e < 4; ++e) {
            if (kp + 2 == fs.poles.size()) {  // pole 0
                H.e[e] = residue_at_rational(entries[e], Scalar(0), lin0, "xt=0").to_complex();
            } else if (kp + 1 == fs.poles.size()) {  // pole 1
                H.e[e] = residue_at_rational(entries[e], Scalar(1), lin1, "xt=1").to_complex();
            } else {
                const Poly& base = kp < 2 ? quad_f : quad_fi[(kp - 2) / 2];
                H.e[e] = residue_at_quadratic_root(entries[e], fs.poles[kp], base,
                                                   "moving pole " + std::to_string(kp));
            }
        }
        fs.residues.push_back(H);
    }

    // Residue at infinity from the exact degree data: entry ~ -lead(N)/xt for
    // deg N = deg D - 1 (denominators are monic).
    CMat2 Hinf = CMat2::zero();
    for (int e = 0; e < 4; ++e) {
        int deg_num = static_cast<int>(entries[e].num.size()) - 1;
        if (deg_num == entries[e].deg_den - 1) Hinf.e[e] = -entries[e].num.back().to_complex();
    }
    fs.residue_at_infinity = Hinf;
    return fs;
}

ClosedFormResidues closed_form_residues(const TildePoint& tp, const std::vector<Scalar>& lambda) {
    int n = tp.n();
    Cplx a = tp.base.a.to_complex(), b = tp.base.b.to_complex();
    Cplx bt = tp.btilde;
    std::vector<Cplx> lam;
    for (const auto& l : lambda) lam.push_back(l.to_complex());
    std::vector<Cplx> t = singular_locus(tp);

    auto M2 = [&](Cplx x) {
        CMat2 m;
        m.at(0, 0) = -a * b * (x - 1.0);
        m.at(0, 1) = -b * x - a;
        m.at(1, 0) = 0.0;
        m.at(1, 1) = a;
        return m;
    };
    auto alpha0i = [&](int i, Cplx x) {
        Cplx ci = tp.base.c[i - 1].to_complex(), di = tp.base.d[i - 1].to_complex();
        Cplx t_odd = t[2 * i], t_even = t[2 * i + 1];
        return lam[i + 1] * (-b * ci / a - (a * di - b * ci * x) / (2.0 * a * (x - t_odd)) -
                             (a * di - b * ci * x) / (2.0 * a * (x - t_even)));
    };

    ClosedFormResidues out;
    out.finite.resize(2 * n - 2 + 2);

    {  // t_1, t_2 (conic pair)
        CMat2 inner1 = CMat2::diag(-0.25, 0.25);
        inner1.at(1, 0) = -lam[0] * (a - 1.0) / (2.0 * (bt - 2.0 * a)) -
                          lam[1] * (a - 1.0) / (2.0 * (bt - 2.0));
        CMat2 inner2 = CMat2::diag(-0.25, 0.25);
        inner2.at(1, 0) = lam[0] * (a - 1.0) / (2.0 * (bt + 2.0 * a)) +
                          lam[1] * (a - 1.0) / (2.0 * (bt + 2.0));
        for (int i = 1; i <= n - 2; ++i) {
            Cplx scale = a * a / (b * b * (a - 1.0) * (a - 1.0));
            inner1.at(1, 0) += scale * alpha0i(i, t[0]) / (t[0] - t[1]);
            inner2.at(1, 0) += scale * alpha0i(i, t[1]) / (t[1] - t[0]);
        }
        out.finite[0] = inner1.conjugate_by(M2(t[0]));
        out.finite[1] = inner2.conjugate_by(M2(t[1]));
    }

    for (int i = 1; i <= n - 2; ++i) {  // quadric pairs
        for (int s = 0; s < 2; ++s) {
            Cplx tk = t[2 * i + s];
            Cplx ci = tp.base.c[i - 1].to_complex(), di = tp.base.d[i - 1].to_complex();
            CMat2 inner = CMat2::zero();
            inner.at(0, 1) = lam[i + 1] * (a * di - b * ci * tk) / (2.0 * a);
            inner.at(1, 0) = lam[i + 1] * a * (-a * di + b * ci * tk) /
                             (2.0 * b * b * (a - 1.0) * (a - 1.0) * (tk - t[0]) * (tk - t[1]));
            out.finite[2 * i + s] = inner.conjugate_by(M2(tk));
        }
    }

    {  // pole 0
        CMat2 inner = CMat2::zero();
        inner.at(0, 1) = lam[1] * (bt * bt - 4.0) / (8.0 * (a - 1.0));
        inner.at(1, 0) = 2.0 * lam[1] * (a - 1.0) / (bt * bt - 4.0);
        out.finite[2 * n - 4 + 2] = inner.conjugate_by(M2(0.0));
    }
    {  // pole 1
        CMat2 m = CMat2::zero();
        m.at(0, 0) = 1.0;
        m.at(1, 1) = -1.0;
        m.at(0, 1) = 2.0 * (bt * bt + 4.0 * a * a - 8.0 * a) / (bt * bt - 4.0 * a * a);
        CMat2 H = m * ((1.0 - lam[0]) / 2.0);
        Cplx nil = 1.0 + (a + b) * (a + b) /
                             (b * b * (a - 1.0) * (a - 1.0) * (1.0 - t[0]) * (1.0 - t[1]));
        for (int i = 1; i <= n - 2; ++i) {
            CMat2 N = CMat2::zero();
            N.at(0, 1) = nil;
            H += N * alpha0i(i, 1.0);
        }
        out.finite[2 * n - 4 + 3] = H;
    }
    {  // infinity
        CMat2 P;
        P.at(0, 0) = -1.0;
        P.at(0, 1) = a - 2.0;
        P.at(1, 0) = 1.0;
        P.at(1, 1) = a;
        Cplx half = (lam[0] + lam[1]) / 2.0;
        out.infinity = P * CMat2::diag(half, -half) * P.inverse();
    }
    return out;
}

FuchsianSystem normalize_at_infinity(const FuchsianSystem& fs, const Scalar& a) {
    if (a == Scalar(1)) throw SingularConjugator("a = 1 makes [[-1, a-2], [1, a]] singular");
    Cplx ac = a.to_complex();
    CMat2 P;
    P.at(0, 0) = -1.0;
    P.at(0, 1) = ac - 2.0;
    P.at(1, 0) = 1.0;
    P.at(1, 1) = ac;
    FuchsianSystem out;
    out.poles = fs.poles;
    for (const auto& H : fs.residues) out.residues.push_back(H.conjugate_by(P));
    out.residue_at_infinity = fs.residue_at_infinity.conjugate_by(P);
    return out;
}

std::vector<Cplx> expected_exponents(int n, const std::vector<Scalar>& lambda) {
    std::vector<Cplx> e;
    e.push_back({0.25, 0.0});
    e.push_back({0.25, 0.0});
    for (int i = 1; i <= n - 2; ++i) {
        Cplx v = lambda[i + 1].to_complex() / 2.0;
        e.push_back(v);
        e.push_back(v);
    }
    e.push_back(lambda[1].to_complex() / 2.0);
    e.push_back((lambda[0].to_complex() - 1.0) / 2.0);
    e.push_back((lambda[0].to_complex() + lambda[1].to_complex()) / 2.0);
    return e;
}

ResidueReport residue_report(int n, const std::vector<Scalar>& lambda, const TildePoint& tp,
                             const FuchsianSystem& fs) {
    ResidueReport rep;
    auto expect = expected_exponents(n, lambda);
    auto closed = closed_form_residues(tp, lambda);

    auto add = [&](Cplx pole, const CMat2& oracle, const CMat2& cf, Cplx exp_pos) {
        ResidueReport::PerPole pp;
        pp.pole = pole;
        pp.eigenvalues = oracle.eigenvalues();
        pp.expected_exponent = exp_pos;
        double d1 = std::max(std::abs(pp.eigenvalues[0] - exp_pos),
                             std::abs(pp.eigenvalues[1] + exp_pos));
        double d2 = std::max(std::abs(pp.eigenvalues[0] + exp_pos),
                             std::abs(pp.eigenvalues[1] - exp_pos));
        pp.exponent_deviation = std::min(d1, d2);
        pp.closed_form_deviation = dist(oracle, cf);
        pp.residue_trace = std::abs(oracle.trace());
        rep.poles.push_back(pp);
        rep.max_exponent_deviation = std::max(rep.max_exponent_deviation, pp.exponent_deviation);
        rep.max_closed_form_deviation =
            std::max(rep.max_closed_form_deviation, pp.closed_form_deviation);
    };

    for (std::size_t k = 0; k < fs.poles.size(); ++k)
        add(fs.poles[k], fs.residues[k], closed.finite[k], expect[k]);
    add({std::nan(""), 0.0}, fs.residue_at_infinity, closed.infinity, expect.back());

    rep.residue_sum_error = (fs.sum_finite() + fs.residue_at_infinity).norm();
    return rep;
}

}  // namespace forge
