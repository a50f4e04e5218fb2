#pragma once

#include "forge/paths.hpp"
#include "forge/restriction.hpp"

namespace forge {

struct TransportStats {
    long steps = 0;
    long rejected = 0;
    double max_step_error = 0;
};

// Parallel transport of the fundamental solution along a path: integrates
// Y' = A(z(s)) z'(s) Y with Y(0) = I using an embedded Dormand-Prince 5(4)
// pair with adaptive steps. A loop around a single pole with residue H gives
// exp(2 pi i H).
CMat2 transport(const FuchsianSystem& fs, const LoopPath& path, double tol,
                TransportStats* stats = nullptr);

}  // namespace forge
