#include "forge/paths.hpp"

#include <algorithm>
#include <cmath>

namespace forge {

Cplx PathPiece::at(double s) const {
    if (kind == kSegment) return z0 + (z1 - z0) * s;
    double a = ang0 + (ang1 - ang0) * s;
    return center + radius * Cplx(std::cos(a), std::sin(a));
}

Cplx PathPiece::velocity(double s) const {
    if (kind == kSegment) return z1 - z0;
    double a = ang0 + (ang1 - ang0) * s;
    return radius * (ang1 - ang0) * Cplx(-std::sin(a), std::cos(a));
}

double PathPiece::length() const {
    if (kind == kSegment) return std::abs(z1 - z0);
    return radius * std::abs(ang1 - ang0);
}

PathPiece PathPiece::reversed() const {
    if (kind == kSegment) return segment(z1, z0);
    return arc(center, radius, ang1, ang0);
}

double LoopPath::length() const {
    double L = 0;
    for (const auto& p : pieces) L += p.length();
    return L;
}

LoopPath LoopPath::reversed() const {
    LoopPath r;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) r.pieces.push_back(it->reversed());
    return r;
}

PathPlan build_paths(const std::vector<Cplx>& poles, std::optional<Cplx> base) {
    int m = static_cast<int>(poles.size());
    if (m == 0) throw Error("NoPoles", "empty pole list");

    double min_sep = 1e300;
    std::vector<double> nearest(m, 1e300);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) nearest[i] = std::min(nearest[i], std::abs(poles[i] - poles[j]));
    for (int i = 0; i < m; ++i) min_sep = std::min(min_sep, nearest[i]);
    if (m == 1) min_sep = nearest[0] = 1.0;
    if (min_sep < 1e-6) throw PolesTooClose("minimal pole separation below 1e-6");

    double lo = 1e300, hi = -1e300, im_lo = 1e300, im_hi = -1e300;
    for (const auto& p : poles) {
        lo = std::min(lo, p.real());
        hi = std::max(hi, p.real());
        im_lo = std::min(im_lo, p.imag());
        im_hi = std::max(im_hi, p.imag());
    }
    double spread = std::max({hi - lo, im_hi - im_lo, 1.0});

    PathPlan plan;
    plan.min_separation = min_sep;
    plan.base = base.value_or(Cplx(lo - 1.2 * spread - 1.0, 0.0));
    double bus_y = std::min(im_lo, plan.base.imag()) - (0.45 * min_sep + 0.25 * (1.0 + spread));

    // Loop radii and dodge radii.
    plan.radii.resize(m);
    std::vector<double> dodge(m);
    for (int i = 0; i < m; ++i) {
        plan.radii[i] = 0.25 * nearest[i];
        dodge[i] = 0.4 * nearest[i];
    }

    for (int i = 0; i < m; ++i) {
        const Cplx p = poles[i];
        double top = p.imag() - plan.radii[i];

        LoopPath approach;
        approach.pieces.push_back(PathPiece::segment(plan.base, Cplx(plan.base.real(), bus_y)));
        approach.pieces.push_back(
            PathPiece::segment(Cplx(plan.base.real(), bus_y), Cplx(p.real(), bus_y)));

        // Tooth with right-hand dodges around poles crossing it.
        struct Dodge {
            int j;
            double s;  // half-chord
        };
        std::vector<Dodge> dodges;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            double dx = p.real() - poles[j].real();
            if (std::abs(dx) >= dodge[j]) continue;
            double s = std::sqrt(dodge[j] * dodge[j] - dx * dx);
            if (poles[j].imag() - s >= top) continue;  // above the tooth
            if (poles[j].imag() + s <= bus_y) continue;
            dodges.push_back({j, s});
        }
        std::sort(dodges.begin(), dodges.end(),
                  [&](const Dodge& a, const Dodge& b) { return poles[a.j].imag() < poles[b.j].imag(); });

        double ycur = bus_y;
        for (const auto& d : dodges) {
            const Cplx q = poles[d.j];
            double yin = q.imag() - d.s, yout = q.imag() + d.s;
            approach.pieces.push_back(
                PathPiece::segment(Cplx(p.real(), ycur), Cplx(p.real(), yin)));
            double dx = p.real() - q.real();
            double a_in = std::atan2(yin - q.imag(), dx);
            double a_out = std::atan2(yout - q.imag(), dx);
            // Sweep through angle 0: the dodge passes to the right of q.
            if (a_in > 0) a_in -= 2 * M_PI;
            approach.pieces.push_back(PathPiece::arc(q, dodge[d.j], a_in, a_out));
            ycur = yout;
        }
        approach.pieces.push_back(PathPiece::segment(Cplx(p.real(), ycur), Cplx(p.real(), top)));

        LoopPath loop = approach;
        loop.pieces.push_back(PathPiece::arc(p, plan.radii[i], -M_PI / 2, 3 * M_PI / 2));
        LoopPath back = approach.reversed();
        for (auto& piece : back.pieces) loop.pieces.push_back(piece);
        plan.loops.push_back(std::move(loop));
    }

    // Comb order: left to right along the bus; stacked poles (same tooth
    // abscissa) order bottom first, matching the right-hand dodge.
    plan.angular_order.resize(m);
    for (int i = 0; i < m; ++i) plan.angular_order[i] = i;
    std::sort(plan.angular_order.begin(), plan.angular_order.end(), [&](int a, int b) {
        if (poles[a].real() != poles[b].real()) return poles[a].real() < poles[b].real();
        return poles[a].imag() < poles[b].imag();
    });

    // Boundary: counterclockwise circle around everything, based at the
    // leftmost circle point reached along the real axis.
    Cplx c0((lo + hi) / 2.0, (im_lo + im_hi) / 2.0);
    double rbig = 0;
    for (const auto& p : poles) rbig = std::max(rbig, std::abs(p - c0));
    rbig += std::max(0.45 * min_sep, 0.35 * (1.0 + spread));
    Cplx pleft = c0 - Cplx(rbig, 0.0);
    plan.boundary.pieces.push_back(PathPiece::segment(plan.base, pleft));
    double a0 = M_PI;
    plan.boundary.pieces.push_back(PathPiece::arc(c0, rbig, a0, a0 + 2 * M_PI));
    plan.boundary.pieces.push_back(PathPiece::segment(pleft, plan.base));
    return plan;
}

}  // namespace forge
