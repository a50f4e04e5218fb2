#include "forge/transport.hpp"

#include <algorithm>
#include <cmath>

namespace forge {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// Error weights: 5th-order solution minus the embedded 4th-order one.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct PieceSystem {
    const FuchsianSystem* fs;
    const PathPiece* piece;

    CMat2 rhs(double s, const CMat2& Y) const {
        return fs->eval(piece->at(s)) * piece->velocity(s) * Y;
    }
};

}  // namespace

CMat2 transport(const FuchsianSystem& fs, const LoopPath& path, double tol,
                TransportStats* stats) {
    CMat2 Y = CMat2::identity();
    TransportStats local;
    const long kMaxSteps = 4000000;

    for (const auto& piece : path.pieces) {
        if (piece.length() == 0.0) continue;
        PieceSystem sys{&fs, &piece};
        double s = 0.0;
        double h = 0.05;
        CMat2 k1 = sys.rhs(s, Y);
        while (s < 1.0) {
            if (local.steps + local.rejected > kMaxSteps)
                throw ToleranceNotMet("step budget exhausted during transport");
            h = std::min(h, 1.0 - s);
            if (h < 1e-14) throw StepUnderflow("step size underflow during transport");

            CMat2 k2 = sys.rhs(s + c2 * h, Y + (h * a21) * k1);
            CMat2 k3 = sys.rhs(s + c3 * h, Y + (h * a31) * k1 + (h * a32) * k2);
            CMat2 k4 = sys.rhs(s + c4 * h, Y + (h * a41) * k1 + (h * a42) * k2 + (h * a43) * k3);
            CMat2 k5 = sys.rhs(s + c5 * h,
                               Y + (h * a51) * k1 + (h * a52) * k2 + (h * a53) * k3 + (h * a54) * k4);
            CMat2 k6 = sys.rhs(s + h, Y + (h * a61) * k1 + (h * a62) * k2 + (h * a63) * k3 +
                                          (h * a64) * k4 + (h * a65) * k5);
            CMat2 Ynew = Y + (h * b1) * k1 + (h * b3) * k3 + (h * b4) * k4 + (h * b5) * k5 +
                         (h * b6) * k6;
            CMat2 k7 = sys.rhs(s + h, Ynew);
            CMat2 errm = (h * e1) * k1 + (h * e3) * k3 + (h * e4) * k4 + (h * e5) * k5 +
                         (h * e6) * k6 + (h * e7) * k7;

            double scale = tol * std::max({1.0, Y.norm(), Ynew.norm()});
            double err = errm.norm() / scale;
            if (err <= 1.0) {
                s += h;
                Y = Ynew;
                k1 = k7;  // FSAL
                ++local.steps;
                local.max_step_error = std::max(local.max_step_error, err * scale);
            } else {
                ++local.rejected;
            }
            double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
            h *= std::clamp(factor, 0.2, 5.0);
        }
    }
    if (stats) *stats = local;
    return Y;
}

}  // namespace forge
