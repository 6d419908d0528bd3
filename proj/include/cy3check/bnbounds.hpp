#pragma once

#include "cy3check/rational.hpp"
#include "cy3check/surd.hpp"

#include <optional>
#include <vector>

namespace cy3 {

/// Where a section bound comes from; used by callers to report provenance.
enum class BoundSource {
    WeakBound,
    CliffordBound,
    VeryGeneral,
    DelPezzoWall,
    K3Wall,
    GonalityLower,
    HyperellipticExact,
    PlanarExact,
    BiellipticExact,
    SectionLower,
};

enum class BoundKind { Upper, Lower, Exact };

/// A bound on the maximal section density bn of a curve (sections per unit
/// rank at degree g-1).  Values are exact: rational, or p + q*sqrt(s).
struct BNBound {
    Surd value;
    BoundSource source;
    BoundKind kind;
};

/// A vertex of a section-counting path in the (ch2, ch1.H) plane.
struct PathPoint {
    QQ x;
    QQ y;
};

enum class SpecialCurve { Hyperelliptic, PlanarOdd, Bielliptic, DoubleCover };

/// What is known about an abstract curve.  `specialParam` carries the datum
/// attached to `special`: the plane degree for PlanarOdd, the base genus for
/// DoubleCover; it is ignored otherwise.
struct CurveProfile {
    long g = 1;
    std::optional<long> gonality;
    std::optional<long> cliffordLB;
    std::optional<SpecialCurve> special;
    long specialParam = 0;
};

/// Upper bound x/2 + 1 on the section density at slope x.  The caller is
/// responsible for x lying in [0, 2g-2].
BNBound weak_bound(const QQ& x);

/// Upper bound (g-1)/2 + 1 - min{cliff, 2}/2 for a smooth curve of genus
/// g >= 4 with Clifford index at least `cliff`.  Throws for g < 4 or
/// negative cliff.
BNBound clifford_bound(long g, long cliff);

/// Upper bound g/4 + 1 + 1/g valid for very general curves of genus g >= 2.
BNBound very_general_bound(long g);

/// True iff  g <= g1*d1 + g2*d2 + (d1-1)*(d2-1).  When false, two covers of
/// degrees d1, d2 to curves of genera g1, g2 cannot coexist without factoring
/// through a common intermediate curve.  Degrees must be >= 1.
bool castelnuovo_severi(long g, long g1, long d1, long g2, long d2);

/// All lower bounds (and exactly-known values) applicable to the profile.
/// When chiOH = chi(O_X(H)) of an ambient polarised threefold is supplied,
/// the restriction of H contributes the lower bound chiOH - 2.
/// Throws std::invalid_argument on an internally inconsistent profile.
std::vector<BNBound> bn_lower(const CurveProfile& profile,
                              std::optional<QQ> chiOH = std::nullopt);

/// Exact per-segment section score on a del Pezzo surface of degree m:
///   y/2 + x                                    for x/y > -1/2,
///   y/(m n)                                    for x/y = -n/2, n a positive
///                                              integer,
///   ((2n+1) y + 2 x) / ((n^2+n) m + 2)         for x/y in (-(n+1)/2, -n/2).
/// Requires y > 0, or y = 0 with x <= 0 (scoring 0, so that flat closing
/// segments of a path contribute nothing).
QQ psi_dp(const QQ& x, const QQ& y, const QQ& m);

/// Exact per-segment section score on a K3 surface of degree m:
///   x/2 + (1/2) sqrt(x^2 + (2m+4)/m^2 * y^2).
Surd omega_k3(const QQ& x, const QQ& y, const QQ& m);

enum class PathScoreKind { PsiDP, OmegaK3 };

struct PathScore {
    PathScoreKind kind;
    QQ m;
};

/// Result of maximising a score over admissible two-vertex paths: the exact
/// maximum and the witness path (O, [middle,] P).
struct PathMax {
    SurdSum value;
    std::vector<PathPoint> path;
};

/// Maximum score over convex paths O -> [P1] -> P with the middle vertex in
/// the triangle O Q P.  Requires y_p > y_q > 0 and x_p/y_p < x_q/y_q; throws
/// std::invalid_argument otherwise.
///
/// For PsiDP the search is exact over the finite candidate set that can carry
/// the maximum: the one-segment path, P1 = Q, P1 on an edge with the other
/// segment's drop ratio at a half-integer break, and interior points with
/// both ratios at breaks.  For OmegaK3 the score satisfies the triangle
/// inequality, so the two-segment path through Q closes the bound.
PathMax convex_path_max(const PathPoint& P, const PathPoint& Q,
                        const PathScore& score);

/// Score (per unit of s*m) of the del Pezzo two-segment path whose middle
/// vertex sits on the steep edge O->Q and whose closing segment drops with
/// ratio -n/2, at the top of the slope window:
///   f(n) = (s+1)/4 * (1 - (s+1)/(2n+s-1)) + (s+1)/(m n (2n+s-1)).
/// Valid for integer n with 2 <= n <= (s+1)/2.
QQ dp_edge_candidate(long s, const QQ& m, long n);

/// Closed-form bound max{1 + (s^2-1) m / 8, s} for a curve in |sH| on a del
/// Pezzo surface of degree m, s odd.  Verifies that dp_edge_candidate is
/// nondecreasing on its range before trusting the closed form.
BNBound bn_upper_delpezzo(long s, const QQ& m);

/// Closed-form bound (s/8) sqrt((2m+8)^2 + (s^2-4) m^2) for a curve in |sH|
/// on a K3 surface of degree m, s even.  For s = 2 the radicand is a perfect
/// square and the value collapses to the rational 2 + m/2.
BNBound bn_upper_k3(long s, const QQ& m);

}  // namespace cy3
