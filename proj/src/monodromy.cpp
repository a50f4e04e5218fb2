#include "forge/monodromy.hpp"

#include <algorithm>
#include <cmath>

namespace forge {

namespace {

std::vector<std::string> pole_labels(int n_poles_finite) {
    std::vector<std::string> labels;
    for (int k = 1; k <= n_poles_finite - 2; ++k) labels.push_back("t" + std::to_string(k));
    labels.push_back("0");
    labels.push_back("1");
    labels.push_back("inf");
    return labels;
}

}  // namespace

const CMat2& MonodromyRep::by_label(const std::string& l) const {
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (labels[k] == l) return matrices[k];
    throw Error("UnknownLabel", "no monodromy generator labelled " + l);
}

const CMat2& ExpectedRep::by_label(const std::string& l) const {
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (labels[k] == l) return matrices[k];
    throw Error("UnknownLabel", "no expected generator labelled " + l);
}

MonodromyRep monodromy_rep(const FuchsianSystem& fs, const PathPlan& plan, double tol) {
    int m = static_cast<int>(fs.poles.size());
    MonodromyRep rep;
    rep.tol = tol;
    rep.labels = pole_labels(m);

    std::vector<CMat2> M(m);
    for (int k = 0; k < m; ++k) {
        M[k] = transport(fs, plan.loops[k], tol);
        rep.max_det_error = std::max(rep.max_det_error, std::abs(M[k].det() - 1.0));
    }

    // Continuation along a concatenated path composes right-to-left, so the
    // relation loop l_{k1} ... l_{km} transports to M_{km} ... M_{k1}.
    CMat2 comb = CMat2::identity();
    for (int k : plan.angular_order) comb = M[k] * comb;
    rep.boundary = transport(fs, plan.boundary, tol);
    rep.product_identity_error = dist(comb, rep.boundary);

    // Close the labelled relation: gamma_t1 ... gamma_0 gamma_1 gamma_inf = 1.
    CMat2 ordered = CMat2::identity();
    for (int k = 0; k < m; ++k) ordered = M[k] * ordered;
    CMat2 Minf = ordered.inverse();
    rep.max_det_error = std::max(rep.max_det_error, std::abs(Minf.det() - 1.0));

    rep.matrices = std::move(M);
    rep.matrices.push_back(Minf);
    return rep;
}

ExpectedRep expected_rep(int n, const std::vector<Scalar>& lambda) {
    ExpectedRep rep;
    rep.labels = pole_labels(2 * n);
    auto a = [&](int j) {
        Cplx l = lambda.at(j).to_complex();
        return std::exp(Cplx(0.0, -M_PI) * l);
    };
    CMat2 J;
    J.at(0, 1) = 1.0;
    J.at(1, 0) = -1.0;
    rep.matrices.push_back(J);  // t1
    CMat2 J2;
    J2.at(0, 1) = a(0) * a(0);
    J2.at(1, 0) = -1.0 / (a(0) * a(0));
    rep.matrices.push_back(J2);  // t2
    for (int i = 1; i <= n - 2; ++i) {
        rep.matrices.push_back(CMat2::diag(a(i + 1), 1.0 / a(i + 1)));  // t_{2i+1}
        rep.matrices.push_back(CMat2::diag(1.0 / a(i + 1), a(i + 1)));  // t_{2i+2}
    }
    rep.matrices.push_back(CMat2::diag(a(1), 1.0 / a(1)));    // 0
    rep.matrices.push_back(CMat2::diag(-a(0), -1.0 / a(0)));  // 1
    rep.matrices.push_back(CMat2::diag(a(0) / a(1), a(1) / a(0)));  // inf
    return rep;
}

SMat2 SMat2::operator*(const SMat2& o) const {
    SMat2 r;
    r.e[0] = e[0] * o.e[0] + e[1] * o.e[2];
    r.e[1] = e[0] * o.e[1] + e[1] * o.e[3];
    r.e[2] = e[2] * o.e[0] + e[3] * o.e[2];
    r.e[3] = e[2] * o.e[1] + e[3] * o.e[3];
    return r;
}

Scalar unit_circle_point(const Scalar& tau) {
    Scalar one(1);
    Scalar t2 = tau * tau;
    Scalar den = (one + t2).inv();
    return (one - t2 + Scalar(2) * Scalar::i() * tau) * den;
}

double relation_residual(const CMat2& alpha0, const CMat2& gamma0, const CMat2& alphay0,
                         const std::vector<CMat2>& alphayi) {
    CMat2 atil = CMat2::identity();
    for (const auto& m : alphayi) atil = atil * m;
    double r = 0;
    r = std::max(r, dist(alpha0 * gamma0, gamma0 * alpha0));
    r = std::max(r, dist(atil * gamma0, gamma0 * atil));
    CMat2 ga = gamma0 * atil;
    r = std::max(r, dist((ga * alphay0) * (ga * alphay0), (alphay0 * ga) * (alphay0 * ga)));
    r = std::max(r, dist((alphay0 * alpha0) * (alphay0 * alpha0),
                         (alpha0 * alphay0) * (alpha0 * alphay0)));
    return r;
}

bool check_relations_exact(const SMat2& alpha0, const SMat2& gamma0, const SMat2& alphay0,
                           const std::vector<SMat2>& alphayi) {
    SMat2 atil = SMat2::identity();
    for (const auto& m : alphayi) atil = atil * m;
    if (!(alpha0 * gamma0 == gamma0 * alpha0)) return false;
    if (!(atil * gamma0 == gamma0 * atil)) return false;
    SMat2 ga = gamma0 * atil;
    if (!((ga * alphay0) * (ga * alphay0) == (alphay0 * ga) * (alphay0 * ga))) return false;
    if (!((alphay0 * alpha0) * (alphay0 * alpha0) == (alpha0 * alphay0) * (alpha0 * alphay0)))
        return false;
    return true;
}

DihedralReport dihedral_check(const std::vector<CMat2>& rep, double tol) {
    DihedralReport best;
    bool any_candidate = false;
    for (std::size_t g = 0; g < rep.size(); ++g) {
        auto ev = rep[g].eigenvalues();
        if (std::abs(ev[0] - ev[1]) < 1e-8) continue;
        any_candidate = true;
        CMat2 V = rep[g].eigenvectors();
        if (std::abs(V.det()) < 1e-10) continue;

        DihedralReport cur;
        cur.rectifier = static_cast<int>(g);
        cur.conjugator = V;
        cur.ok = true;
        for (const auto& M : rep) {
            CMat2 N = M.conjugate_by(V);
            double off = std::max(std::abs(N.at(0, 1)), std::abs(N.at(1, 0)));
            double dia = std::max(std::abs(N.at(0, 0)), std::abs(N.at(1, 1)));
            double scale = std::max(1.0, N.norm());
            if (off <= tol * scale) {
                cur.kind.push_back('d');
                cur.max_deviation = std::max(cur.max_deviation, off);
            } else if (dia <= tol * scale) {
                cur.kind.push_back('a');
                cur.max_deviation = std::max(cur.max_deviation, dia);
            } else {
                cur.kind.push_back('?');
                cur.ok = false;
                cur.max_deviation = std::max(cur.max_deviation, std::min(off, dia));
            }
        }
        if (cur.ok) return cur;
        if (best.rectifier < 0) best = cur;
    }
    if (!any_candidate)
        throw NoDiagonalizableGenerator("no generator with distinct eigenvalues");
    return best;
}

TraceScan isomonodromy_scan(int n, const std::vector<Scalar>& lambda,
                            const std::vector<TildePoint>& samples, double tol) {
    TraceScan scan;
    for (const auto& tp : samples) {
        FuchsianSystem fs = normalize_at_infinity(restrict_connection(n, lambda, tp), tp.base.a);
        PathPlan plan = build_paths(fs.poles);
        MonodromyRep rep = monodromy_rep(fs, plan, tol);
        if (scan.words.empty()) {
            for (const auto& l : rep.labels) scan.words.push_back(l);
            for (std::size_t i = 0; i < rep.labels.size(); ++i)
                for (std::size_t j = i; j < rep.labels.size(); ++j)
                    scan.words.push_back(rep.labels[i] + "*" + rep.labels[j]);
        }
        std::vector<Cplx> row;
        for (const auto& M : rep.matrices) row.push_back(M.trace());
        for (std::size_t i = 0; i < rep.matrices.size(); ++i)
            for (std::size_t j = i; j < rep.matrices.size(); ++j)
                row.push_back((rep.matrices[i] * rep.matrices[j]).trace());
        scan.traces.push_back(std::move(row));
    }
    for (std::size_t w = 0; w < scan.words.size(); ++w)
        for (std::size_t s = 1; s < scan.traces.size(); ++s)
            scan.max_variation =
                std::max(scan.max_variation, std::abs(scan.traces[s][w] - scan.traces[0][w]));
    return scan;
}

}  // namespace forge
