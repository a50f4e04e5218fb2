#pragma once

#include "forge/connection.hpp"
#include "forge/line.hpp"
#include "forge/numeric.hpp"

namespace forge {

// Fuchsian system on P^1: simple poles at `poles` (ordered t_1..t_{2n-2}, 0,
// 1) plus infinity, with 2x2 complex residue matrices.
struct FuchsianSystem {
    std::vector<Cplx> poles;
    std::vector<CMat2> residues;
    CMat2 residue_at_infinity;

    CMat2 sum_finite() const {
        CMat2 s = CMat2::zero();
        for (const auto& r : residues) s += r;
        return s;
    }
    // Connection matrix value at a regular point.
    CMat2 eval(Cplx x) const;
};

// Restricts the connection to the line and extracts residues as exact Laurent
// data in xt, evaluated at the poles. Ground-truth oracle for everything
// downstream. Lambda must be numeric.
FuchsianSystem restrict_connection(int n, const std::vector<Scalar>& lambda, const TildePoint& tp);

// The closed-form residue matrices transcribed verbatim from the source
// displays, same pole order; back() is unused (infinity handled separately).
struct ClosedFormResidues {
    std::vector<CMat2> finite;
    CMat2 infinity;
};
ClosedFormResidues closed_form_residues(const TildePoint& tp, const std::vector<Scalar>& lambda);

// Conjugates every residue by [[-1, a-2], [1, a]]; makes the residue at
// infinity diagonal.
FuchsianSystem normalize_at_infinity(const FuchsianSystem& fs, const Scalar& a);

// Expected local exponents +-theta_k/2 per pole (poles order, then infinity).
std::vector<Cplx> expected_exponents(int n, const std::vector<Scalar>& lambda);

// Diagnostic comparison of oracle residues, Table-1 exponents and the closed
// forms.
struct ResidueReport {
    struct PerPole {
        Cplx pole;                      // NaN real part encodes infinity
        std::array<Cplx, 2> eigenvalues;
        Cplx expected_exponent;         // the positive representative theta/2
        double exponent_deviation = 0;  // multiset distance to {+e, -e}
        double closed_form_deviation = 0;
        double residue_trace = 0;       // |tr| of the oracle residue
    };
    std::vector<PerPole> poles;
    double max_exponent_deviation = 0;
    double max_closed_form_deviation = 0;
    double residue_sum_error = 0;  // |sum finite + infinity|
};

ResidueReport residue_report(int n, const std::vector<Scalar>& lambda, const TildePoint& tp,
                             const FuchsianSystem& fs);

}  // namespace forge
