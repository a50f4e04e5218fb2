#pragma once

#include <span>

#include "forge/restriction.hpp"

namespace forge {

// Garnier parameters theta_1..theta_{2n}, theta_inf and kappa, indexed like
// the pole list (t_1..t_{2n-2}, 0, 1).
struct ThetaData {
    int n = 0;
    std::vector<Cplx> theta;  // size 2n
    Cplx theta_inf;
    Cplx kappa;
};

ThetaData theta_params(const std::vector<Scalar>& lambda, int n);

// The Hamiltonian K_i of the (2n-2)-variable Garnier system; i indexes the
// deformation times t_1..t_{2n-2} (0-based). `t` carries all 2n finite poles
// with t_{2n-1} = 0, t_{2n} = 1 at the end.
Cplx hamiltonian(int i, std::span<const Cplx> t, std::span<const Cplx> nu,
                 std::span<const Cplx> rho, const ThetaData& th);

struct GarnierPoint {
    std::vector<Cplx> t;    // deformation times (2n-2)
    std::vector<Cplx> nu;   // spectral positions, canonically ordered
    std::vector<Cplx> rho;  // conjugate momenta
};

// Spectral coordinates of a normalized system: nu_j are the roots of
// sum_k (H_k)_{12} / (x - t_k) = 0 and rho_j = sum_k ((H_k)_{11} +
// theta_k/2) / (nu_j - t_k). `lead_rel` reports the relative size of the
// degree-(2n-1) coefficient that the diagonal normalization kills.
GarnierPoint spectral_coords(const FuchsianSystem& fs, const ThetaData& th,
                             double* lead_rel = nullptr);

// Residual of the Garnier equations at tp: finite differences of (nu, rho)
// along the etale coordinates, chain rule through the pole positions, versus
// central-difference gradients of the Hamiltonians.
struct GarnierResidual {
    std::vector<std::vector<double>> nu_eq;   // |d nu_j / d t_i - dK_i/d rho_j|
    std::vector<std::vector<double>> rho_eq;  // |d rho_j / d t_i + dK_i/d nu_j|
    double max_residual = 0;
    double spectral_lead_rel = 0;  // worst leading-coefficient drop over the stencil
};

GarnierResidual garnier_residual(int n, const std::vector<Scalar>& lambda, const TildePoint& tp,
                                 double h);

// Solution samples over a parameter grid, with per-row residuals.
struct SolutionSample {
    struct Row {
        GarnierPoint point;
        double residual = 0;
        double jacobian_det = 0;
    };
    std::vector<Row> rows;
};

SolutionSample sample_solution(int n, const std::vector<Scalar>& lambda,
                               const std::vector<TildePoint>& grid, double h);

}  // namespace forge
