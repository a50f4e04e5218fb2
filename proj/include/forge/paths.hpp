#pragma once

#include <optional>

#include "forge/numeric.hpp"

namespace forge {

// Smooth path piece: straight segment or circular arc, parametrized on [0,1].
struct PathPiece {
    enum Kind { kSegment, kArc } kind = kSegment;
    Cplx z0, z1;     // segment
    Cplx center;     // arc
    double radius = 0, ang0 = 0, ang1 = 0;

    static PathPiece segment(Cplx a, Cplx b) { return {kSegment, a, b, 0, 0, 0, 0}; }
    static PathPiece arc(Cplx c, double r, double a0, double a1) {
        return {kArc, 0, 0, c, r, a0, a1};
    }

    Cplx at(double s) const;
    Cplx velocity(double s) const;  // d/ds
    double length() const;
    PathPiece reversed() const;
};

struct LoopPath {
    std::vector<PathPiece> pieces;
    double length() const;
    LoopPath reversed() const;
};

// Deterministic loop system: comb construction with the base point on the
// real axis left of every pole, a horizontal bus below the poles, vertical
// teeth up to each pole circle, and right-hand semicircular dodges around
// poles sitting on a tooth.
struct PathPlan {
    Cplx base;
    std::vector<LoopPath> loops;     // one per pole, input order
    LoopPath boundary;               // counterclockwise circle around all poles
    std::vector<int> angular_order;  // comb order (left to right)
    std::vector<double> radii;
    double min_separation = 0;
};

PathPlan build_paths(const std::vector<Cplx>& poles, std::optional<Cplx> base = {});

}  // namespace forge
