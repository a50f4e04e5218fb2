#pragma once

#include "forge/connection.hpp"

namespace forge {

// Result of replaying the splitting chain on A_lambda: untwist by
// -(1/2) dy/y, gauge by M2^{-1}, pull back under the double cover, untwist by
// -(1/2) d(u0-u1)/(u0-u1), gauge by M1^{-1}. `residual` is the difference
// from diag((omega0+psi_n)/2, -(omega0+psi_n)/2) on the cover chart.
struct SplitReport {
    bool middle_identity_ok = false;  // recovered matrix equals the alpha-form matrix
    bool off_diagonal_zero = false;
    bool diagonal_matches = false;
    ConnMatrix residual;

    bool ok() const { return middle_identity_ok && off_diagonal_zero && diagonal_matches; }
};

SplitReport verify_split(int n, const LambdaSpec& lambda);

}  // namespace forge
