#pragma once

#include <cstdint>
#include <random>

#include "forge/line.hpp"

namespace forge {

// Seeded draws for the randomized checks. All distributions are built from
// raw mt19937_64 output, so streams are identical across platforms.
class ParamRng {
public:
    explicit ParamRng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Scalar rational(long num_lo, long num_hi, long den_hi) {
        return Scalar(integer(num_lo, num_hi), integer(2, den_hi));
    }

    // Lambda tuple away from the resonant and degenerate sets: each lambda_j
    // and the combinations entering the monodromy tables stay off (1/2) Z.
    std::vector<Scalar> generic_lambda(int n);

    // Line parameters passing every etale_lift guard.
    TildePoint generic_line(int n);

private:
    std::mt19937_64 eng_;
};

}  // namespace forge
