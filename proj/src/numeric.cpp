#include "forge/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace forge {

CMat2 CMat2::operator+(const CMat2& o) const {
    CMat2 r;
    for (int k = 0; k < 4; ++k) r.e[k] = e[k] + o.e[k];
    return r;
}

CMat2 CMat2::operator-(const CMat2& o) const {
    CMat2 r;
    for (int k = 0; k < 4; ++k) r.e[k] = e[k] - o.e[k];
    return r;
}

CMat2 CMat2::operator*(const CMat2& o) const {
    CMat2 r;
    r.e[0] = e[0] * o.e[0] + e[1] * o.e[2];
    r.e[1] = e[0] * o.e[1] + e[1] * o.e[3];
    r.e[2] = e[2] * o.e[0] + e[3] * o.e[2];
    r.e[3] = e[2] * o.e[1] + e[3] * o.e[3];
    return r;
}

CMat2 CMat2::operator*(Cplx s) const {
    CMat2 r;
    for (int k = 0; k < 4; ++k) r.e[k] = e[k] * s;
    return r;
}

CMat2& CMat2::operator+=(const CMat2& o) {
    for (int k = 0; k < 4; ++k) e[k] += o.e[k];
    return *this;
}

CMat2 CMat2::inverse() const {
    Cplx d = det();
    if (std::abs(d) == 0.0) throw Error("SingularMatrix", "2x2 inverse of singular matrix");
    CMat2 r;
    r.e[0] = e[3] / d;
    r.e[1] = -e[1] / d;
    r.e[2] = -e[2] / d;
    r.e[3] = e[0] / d;
    return r;
}

CMat2 CMat2::conjugate_by(const CMat2& P) const { return P.inverse() * (*this) * P; }

double CMat2::norm() const {
    double m = 0;
    for (const auto& v : e) m = std::max(m, std::abs(v));
    return m;
}

std::array<Cplx, 2> CMat2::eigenvalues() const {
    Cplx t = trace(), d = det();
    Cplx disc = std::sqrt(t * t - 4.0 * d);
    Cplx a = (t + disc) * 0.5, b = (t - disc) * 0.5;
    if (a.real() > b.real() || (a.real() == b.real() && a.imag() > b.imag())) std::swap(a, b);
    return {a, b};
}

CMat2 CMat2::eigenvectors() const {
    auto ev = eigenvalues();
    CMat2 V;
    for (int k = 0; k < 2; ++k) {
        // (A - mu) v = 0: rows (a-mu, b) and (c, d-mu); pick the larger row.
        Cplx r1a = e[0] - ev[k], r1b = e[1];
        Cplx r2a = e[2], r2b = e[3] - ev[k];
        Cplx va, vb;
        if (std::abs(r1a) + std::abs(r1b) >= std::abs(r2a) + std::abs(r2b)) {
            va = -r1b;
            vb = r1a;
        } else {
            va = -r2b;
            vb = r2a;
        }
        double s = std::max(std::abs(va), std::abs(vb));
        if (s == 0.0) {  // scalar matrix: fall back to the standard basis
            va = (k == 0) ? 1.0 : 0.0;
            vb = (k == 0) ? 0.0 : 1.0;
            s = 1.0;
        }
        V.at(0, k) = va / s;
        V.at(1, k) = vb / s;
    }
    return V;
}

double dist(const CMat2& a, const CMat2& b) { return (a - b).norm(); }

std::vector<Cplx> poly_roots(std::vector<Cplx> coef) {
    while (!coef.empty() && std::abs(coef.back()) == 0.0) coef.pop_back();
    if (coef.size() <= 1) return {};
    int deg = static_cast<int>(coef.size()) - 1;
    for (auto& c : coef) c /= coef[deg];

    // Cauchy-style radius bound for initial placement.
    double radius = 0.0;
    for (int k = 0; k < deg; ++k) radius = std::max(radius, std::pow(std::abs(coef[k]), 1.0 / (deg - k)));
    radius = 2.0 * std::max(radius, 0.5);

    std::vector<Cplx> z(deg);
    for (int k = 0; k < deg; ++k) {
        double ang = 2.0 * M_PI * k / deg + 0.35;
        z[k] = radius * Cplx(std::cos(ang), std::sin(ang));
    }
    auto eval = [&](Cplx x) {
        Cplx acc = coef[deg];
        for (int k = deg - 1; k >= 0; --k) acc = acc * x + coef[k];
        return acc;
    };
    for (int iter = 0; iter < 600; ++iter) {
        double moved = 0.0;
        for (int k = 0; k < deg; ++k) {
            Cplx denom = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != k) denom *= z[k] - z[j];
            Cplx step = eval(z[k]) / denom;
            z[k] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-15 * std::max(1.0, radius)) break;
    }
    std::sort(z.begin(), z.end(), [](Cplx a, Cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

std::vector<Cplx> solve_linear(std::vector<std::vector<Cplx>> M, std::vector<Cplx> b) {
    int n = static_cast<int>(M.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
        if (std::abs(M[piv][col]) == 0.0) throw Error("SingularMatrix", "linear solve");
        std::swap(M[piv], M[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < n; ++r) {
            Cplx f = M[r][col] / M[col][col];
            for (int c = col; c < n; ++c) M[r][c] -= f * M[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Cplx> x(n);
    for (int r = n - 1; r >= 0; --r) {
        Cplx acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= M[r][c] * x[c];
        x[r] = acc / M[r][r];
    }
    return x;
}

double abs_det(std::vector<std::vector<Cplx>> M) {
    int n = static_cast<int>(M.size());
    double scale = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
        if (std::abs(M[piv][col]) == 0.0) return 0.0;
        std::swap(M[piv], M[col]);
        for (int r = col + 1; r < n; ++r) {
            Cplx f = M[r][col] / M[col][col];
            for (int c = col; c < n; ++c) M[r][c] -= f * M[col][c];
        }
        scale *= std::abs(M[col][col]);
    }
    return scale;
}

}  // namespace forge
