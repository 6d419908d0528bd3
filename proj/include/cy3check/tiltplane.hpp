#pragma once

#include "cy3check/invariants.hpp"
#include "cy3check/surd.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cy3 {

/// A point (b, w) of the upper slope plane.
struct TiltPoint {
    QQ b, w;
    bool operator==(const TiltPoint& o) const = default;
};

/// Open region above the parabola w = b^2/2.
bool in_tilt_region(const TiltPoint& p);

/// Projection of a non-torsion class to the slope plane:
/// (c1H/(r m), ch2/(r m)).  Throws for r = 0.
TiltPoint pi_projection(const ChernSurface& v, const SurfaceGeometry& S);

/// A numerical wall.  Either a full affine line w = slope*b + intercept, or
/// (when both classes are torsion) a parallel family determined by the slope
/// alone.  Vertical walls never arise from the operations here.
struct WallLine {
    enum class Form { Line, ParallelFamily };
    Form form = Form::Line;
    QQ slope = 0;
    QQ intercept = 0;  // meaningful for Form::Line

    QQ value_at(const QQ& b) const;
    bool operator==(const WallLine& o) const = default;
    std::string str() const;
};

/// The locus where nu_{b,w}(u) = nu_{b,w}(v): a line in the (b, w) plane.
/// Throws when u and v are proportional or project to the same point.
WallLine wall_through(const ChernSurface& v, const ChernSurface& u, const SurfaceGeometry& S);

/// Lower boundary models for the distinguished family of stability chambers:
/// the parabola itself, the del Pezzo sawtooth, and the K3 sawtooth.
enum class BoundaryKind { Parabola, DelPezzoGamma, K3Phi };

/// Value of the boundary curve at b (the sawtooth kinds are 1-periodic
/// corrections of b^2/2).  m is the surface degree (used by K3Phi only).
QQ boundary_curve(const QQ& b, BoundaryKind kind, const QQ& m);

/// Height of the vertical segments joining the curve pieces at integers
/// (0, 1/4 and 1/m respectively).
QQ boundary_gap(BoundaryKind kind, const QQ& m);

/// A boundary point with exact (possibly quadratic-irrational) coordinates.
struct CurvePoint {
    Surd b, w;
};

/// Leftmost and rightmost intersections of a wall line with the completed
/// boundary curve (pieces plus vertical segments).  Throws
/// std::domain_error("no intersection"/"tangency") when the line misses the
/// curve or only touches it.
std::pair<CurvePoint, CurvePoint> wall_endpoints(const WallLine& line, BoundaryKind kind, const QQ& m);

/// Restriction line in the slope plane attached to a sheaf of slope
/// parameter t on a curve in |sH|: passes through the fixed left vertex of
/// the boundary and has slope t - s/2.  Del Pezzo needs odd s >= 3, K3 even
/// s >= 2.
WallLine slope_bound_line(const CurveClass& C, const QQ& t);

/// Extremes of the tilt slope along the restriction line between its
/// boundary endpoints.
struct SlopeBounds {
    QQ nu_plus_max;   // largest slope nu^+ can take
    QQ nu_minus_min;  // smallest slope nu^- can take
};
SlopeBounds slope_bounds_pushforward(const CurveClass& C, const QQ& t);

/// Slope-gap test mu1 - mu2 <= s (non-strict).
bool mu_gap_ok(const QQ& mu1, const QQ& mu2, const QQ& s);

/// Half-open window [bmin, bmax) of the wall scan.
struct SlopeWindow {
    QQ bmin, bmax;
};

struct DestabilizerCandidate {
    ChernSurface u;  // witness with minimal (|r|, |c1H|, |ch2|)
    WallLine wall;
};

struct WallSearchOptions {
    long rank_cap = 40;   // |ch0(u)| bound; hitting it with an accepted candidate throws
};

/// All numerical walls for v crossing the window: candidates u on the
/// Chern lattice with 0 <= Delta(u), Delta(v-u) and Delta(u) <= Delta(v)
/// whose wall meets the region above the parabola at some b in the window
/// with 0 < c1H(u(-bH)) < c1H(v(-bH)).  One witness per wall, sorted by
/// (slope, intercept).
std::vector<DestabilizerCandidate> enumerate_walls(const ChernSurface& v, const SurfaceGeometry& S,
                                                   const SlopeWindow& win,
                                                   const WallSearchOptions& opt = {});

}  // namespace cy3
