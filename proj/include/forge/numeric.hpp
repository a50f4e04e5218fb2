#pragma once

#include <array>
#include <complex>
#include <vector>

#include "forge/errors.hpp"

namespace forge {

using Cplx = std::complex<double>;

// Dense complex 2x2 matrix, enough linear algebra for monodromy work.
struct CMat2 {
    std::array<Cplx, 4> e{};  // row-major

    static CMat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
    static CMat2 zero() { return {}; }
    static CMat2 diag(Cplx a, Cplx b) { return {{a, 0.0, 0.0, b}}; }

    Cplx& at(int r, int c) { return e[2 * r + c]; }
    const Cplx& at(int r, int c) const { return e[2 * r + c]; }

    CMat2 operator+(const CMat2& o) const;
    CMat2 operator-(const CMat2& o) const;
    CMat2 operator*(const CMat2& o) const;
    CMat2 operator*(Cplx s) const;
    CMat2& operator+=(const CMat2& o);

    Cplx trace() const { return e[0] + e[3]; }
    Cplx det() const { return e[0] * e[3] - e[1] * e[2]; }
    CMat2 inverse() const;
    CMat2 conjugate_by(const CMat2& P) const;  // P^{-1} * this * P

    double norm() const;  // max-abs entry
    // Eigenvalues ordered by (Re, Im).
    std::array<Cplx, 2> eigenvalues() const;
    // Matrix of eigenvectors (columns), for distinct eigenvalues.
    CMat2 eigenvectors() const;
};

inline CMat2 operator*(Cplx s, const CMat2& m) { return m * s; }

double dist(const CMat2& a, const CMat2& b);

// Roots of a complex-coefficient polynomial (ascending coefficients,
// coef[k] x^k) by the Durand-Kerner iteration. Degree is deduced from the
// highest nonzero coefficient.
std::vector<Cplx> poly_roots(std::vector<Cplx> coef);

// Solves the linear system M x = b for small square complex M.
std::vector<Cplx> solve_linear(std::vector<std::vector<Cplx>> M, std::vector<Cplx> b);

// |det M| for small square complex M (by elimination).
double abs_det(std::vector<std::vector<Cplx>> M);

}  // namespace forge
