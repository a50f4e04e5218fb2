#include "forge/garnier.hpp"

#include <algorithm>
#include <cmath>

namespace forge {

ThetaData theta_params(const std::vector<Scalar>& lambda, int n) {
    if (n < 2) throw Error("BadDimension", "n must be at least 2");
    ThetaData th;
    th.n = n;
    auto l = [&](int j) { return lambda.at(j).to_complex(); };
    th.theta.push_back(0.5);
    th.theta.push_back(0.5);
    for (int i = 1; i <= n - 2; ++i) {
        th.theta.push_back(l(i + 1));
        th.theta.push_back(l(i + 1));
    }
    th.theta.push_back(l(1));        // pole 0
    th.theta.push_back(l(0) - 1.0);  // pole 1
    th.theta_inf = l(0) + l(1);
    Cplx sum = 0.0;
    for (const auto& t : th.theta) sum += t;
    th.kappa = 0.25 * ((sum - 1.0) * (sum - 1.0) - (th.theta_inf * th.theta_inf + 1.0));
    return th;
}

Cplx hamiltonian(int i, std::span<const Cplx> t, std::span<const Cplx> nu,
                 std::span<const Cplx> rho, const ThetaData& th) {
    int m = static_cast<int>(t.size());      // 2n
    int g = static_cast<int>(nu.size());     // 2n-2
    const double eps = 1e-13;

    auto Lambda_at = [&](Cplx x) {
        Cplx p = 1.0;
        for (int k = 0; k < g; ++k) p *= x - nu[k];
        return p;
    };
    auto T_at = [&](Cplx x) {
        Cplx p = 1.0;
        for (int k = 0; k < m; ++k) p *= x - t[k];
        return p;
    };

    Cplx Tprime = 1.0;
    for (int j = 0; j < m; ++j)
        if (j != i) Tprime *= t[i] - t[j];

    Cplx acc = 0.0;
    for (int k = 0; k < g; ++k) {
        Cplx Lp = 1.0;
        for (int j = 0; j < g; ++j)
            if (j != k) Lp *= nu[k] - nu[j];
        if (std::abs(Lp) < eps) throw PoleCollision("Lambda'(nu_" + std::to_string(k + 1) + ") = 0");
        if (std::abs(nu[k] - t[i]) < eps)
            throw PoleCollision("nu_" + std::to_string(k + 1) + " = t_" + std::to_string(i + 1));
        if (std::abs(nu[k]) < eps || std::abs(nu[k] - 1.0) < eps)
            throw PoleCollision("nu_" + std::to_string(k + 1) + " hits 0 or 1");

        Cplx bracket = rho[k] * rho[k];
        for (int q = 0; q < m; ++q) {
            if (std::abs(nu[k] - t[q]) < eps)
                throw PoleCollision("nu_" + std::to_string(k + 1) + " = t_" + std::to_string(q + 1));
            Cplx num = th.theta[q] - ((q == i) ? 1.0 : 0.0);
            bracket -= num / (nu[k] - t[q]) * rho[k];
        }
        bracket += th.kappa / (nu[k] * (nu[k] - 1.0));
        acc += T_at(nu[k]) / ((nu[k] - t[i]) * Lp) * bracket;
    }
    return -Lambda_at(t[i]) / Tprime * acc;
}

GarnierPoint spectral_coords(const FuchsianSystem& fs, const ThetaData& th, double* lead_rel) {
    int m = static_cast<int>(fs.poles.size());  // 2n
    int g = m - 2;

    // P(x) = sum_k (H_k)_{12} prod_{q != k} (x - t_q), expected degree 2n-2.
    std::vector<Cplx> P(m, 0.0);
    for (int k = 0; k < m; ++k) {
        std::vector<Cplx> prod = {1.0};
        for (int q = 0; q < m; ++q) {
            if (q == k) continue;
            std::vector<Cplx> next(prod.size() + 1, 0.0);
            for (std::size_t d = 0; d < prod.size(); ++d) {
                next[d + 1] += prod[d];
                next[d] -= fs.poles[q] * prod[d];
            }
            prod = std::move(next);
        }
        Cplx b = fs.residues[k].at(0, 1);
        for (std::size_t d = 0; d < prod.size(); ++d) P[d] += b * prod[d];
    }

    double scale = 0.0;
    for (const auto& c : P) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) throw DegreeDrop("spectral numerator vanishes identically");
    double rel = std::abs(P[m - 1]) / scale;
    if (lead_rel) *lead_rel = rel;
    if (std::abs(P[g]) / scale < 1e-8)
        throw DegreeDrop("spectral numerator degree below 2n-2 (broken normalization)");

    P.resize(g + 1);  // drop the residual degree-(2n-1) coefficient
    GarnierPoint pt;
    pt.nu = poly_roots(P);
    if (static_cast<int>(pt.nu.size()) != g) throw DegreeDrop("spectral root count mismatch");
    pt.t.assign(fs.poles.begin(), fs.poles.end() - 2);

    for (int j = 0; j < g; ++j) {
        Cplx r = 0.0;
        for (int k = 0; k < m; ++k)
            r += (fs.residues[k].at(0, 0) + th.theta[k] / 2.0) / (pt.nu[j] - fs.poles[k]);
        pt.rho.push_back(r);
    }
    return pt;
}

namespace {

LineParams perturb_line(const LineParams& p, int coord, const Scalar& dh) {
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

// Reorders `raw` to match `anchor` by nearest neighbour; throws LabelSwap if
// the assignment is not one-to-one.
void match_labels(const std::vector<Cplx>& anchor, std::vector<Cplx>& nu, std::vector<Cplx>& rho) {
    int g = static_cast<int>(anchor.size());
    std::vector<int> pick(g, -1);
    std::vector<bool> used(g, false);
    for (int i = 0; i < g; ++i) {
        double best = 1e300;
        for (int j = 0; j < g; ++j) {
            double d = std::abs(anchor[i] - nu[j]);
            if (d < best) {
                best = d;
                pick[i] = j;
            }
        }
        if (used[pick[i]])
            throw LabelSwap("nearest-neighbour matching of spectral roots is ambiguous");
        used[pick[i]] = true;
    }
    std::vector<Cplx> nn(g), rr(g);
    for (int i = 0; i < g; ++i) {
        nn[i] = nu[pick[i]];
        rr[i] = rho[pick[i]];
    }
    nu = std::move(nn);
    rho = std::move(rr);
}

struct StencilEval {
    std::vector<Cplx> t, nu, rho;
    double lead_rel = 0;
};

StencilEval eval_point(int n, const std::vector<Scalar>& lambda, const TildePoint& tp,
                       const ThetaData& th) {
    FuchsianSystem fs = normalize_at_infinity(restrict_connection(n, lambda, tp), tp.base.a);
    StencilEval ev;
    GarnierPoint gp = spectral_coords(fs, th, &ev.lead_rel);
    ev.t = gp.t;
    ev.nu = gp.nu;
    ev.rho = gp.rho;
    return ev;
}

}  // namespace

GarnierResidual garnier_residual(int n, const std::vector<Scalar>& lambda, const TildePoint& tp,
                                 double h) {
    ThetaData th = theta_params(lambda, n);
    int dim = 2 * n - 2;
    Scalar hs(mpq_class(h), mpq_class(0));

    StencilEval center = eval_point(n, lambda, tp, th);
    GarnierResidual out;
    out.spectral_lead_rel = center.lead_rel;

    // Finite differences of t, nu, rho along the etale coordinates.
    std::vector<std::vector<Cplx>> Jt(dim, std::vector<Cplx>(dim));
    std::vector<std::vector<Cplx>> Jnu(dim, std::vector<Cplx>(dim));
    std::vector<std::vector<Cplx>> Jrho(dim, std::vector<Cplx>(dim));
    for (int mcoord = 0; mcoord < dim; ++mcoord) {
        TildePoint tplus = continuous_lift(perturb_line(tp.base, mcoord, hs), tp);
        TildePoint tminus = continuous_lift(perturb_line(tp.base, mcoord, -hs), tp);
        StencilEval ep = eval_point(n, lambda, tplus, th);
        StencilEval em = eval_point(n, lambda, tminus, th);
        out.spectral_lead_rel = std::max({out.spectral_lead_rel, ep.lead_rel, em.lead_rel});
        match_labels(center.nu, ep.nu, ep.rho);
        match_labels(center.nu, em.nu, em.rho);
        for (int k = 0; k < dim; ++k) {
            Jt[k][mcoord] = (ep.t[k] - em.t[k]) / (2.0 * h);
            Jnu[k][mcoord] = (ep.nu[k] - em.nu[k]) / (2.0 * h);
            Jrho[k][mcoord] = (ep.rho[k] - em.rho[k]) / (2.0 * h);
        }
    }
    if (abs_det(Jt) < 1e-12) throw SingularJacobian("pole-position jacobian is singular");

    // d nu_j / d t_i = (Jnu Jt^{-1})_{ji}: solve Jt^T X^T = Jnu^T columnwise.
    auto times_Jt_inverse = [&](const std::vector<std::vector<Cplx>>& A) {
        // Rows r of A: solve x Jt = A_r, i.e. Jt^T x^T = A_r^T.
        std::vector<std::vector<Cplx>> JtT(dim, std::vector<Cplx>(dim));
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) JtT[r][c] = Jt[c][r];
        std::vector<std::vector<Cplx>> out_rows;
        for (int r = 0; r < dim; ++r) out_rows.push_back(solve_linear(JtT, A[r]));
        return out_rows;
    };
    auto Dnu = times_Jt_inverse(Jnu);    // Dnu[j][i] = d nu_j / d t_i
    auto Drho = times_Jt_inverse(Jrho);  // Drho[j][i] = d rho_j / d t_i

    // Hamiltonian gradients at the center by central differences.
    std::vector<Cplx> tfull = center.t;
    tfull.push_back({0.0, 0.0});
    tfull.push_back({1.0, 0.0});

    out.nu_eq.assign(dim, std::vector<double>(dim, 0.0));
    out.rho_eq.assign(dim, std::vector<double>(dim, 0.0));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            double hr = 1e-6 * (1.0 + std::abs(center.rho[j]));
            std::vector<Cplx> rp = center.rho, rm = center.rho;
            rp[j] += hr;
            rm[j] -= hr;
            Cplx dK_drho = (hamiltonian(i, tfull, center.nu, rp, th) -
                            hamiltonian(i, tfull, center.nu, rm, th)) /
                           (2.0 * hr);

            double hn = 1e-6 * (1.0 + std::abs(center.nu[j]));
            std::vector<Cplx> np = center.nu, nm = center.nu;
            np[j] += hn;
            nm[j] -= hn;
            Cplx dK_dnu = (hamiltonian(i, tfull, np, center.rho, th) -
                           hamiltonian(i, tfull, nm, center.rho, th)) /
                          (2.0 * hn);

            out.nu_eq[i][j] = std::abs(Dnu[j][i] - dK_drho);
            out.rho_eq[i][j] = std::abs(Drho[j][i] + dK_dnu);
            out.max_residual = std::max({out.max_residual, out.nu_eq[i][j], out.rho_eq[i][j]});
        }
    }
    return out;
}

SolutionSample sample_solution(int n, const std::vector<Scalar>& lambda,
                               const std::vector<TildePoint>& grid, double h) {
    ThetaData th = theta_params(lambda, n);
    SolutionSample out;
    for (const auto& tp : grid) {
        SolutionSample::Row row;
        FuchsianSystem fs = normalize_at_infinity(restrict_connection(n, lambda, tp), tp.base.a);
        GarnierPoint gp = spectral_coords(fs, th);
        row.point = gp;
        row.residual = garnier_residual(n, lambda, tp, h).max_residual;
        row.jacobian_det = abs_det(jacobian_t(tp, h));
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace forge
