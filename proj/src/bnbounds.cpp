#include "cy3check/bnbounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace cy3 {

namespace {

QQ half(long n) { return QQ(n) / 2; }

}  // namespace

BNBound weak_bound(const QQ& x) {
    return {Surd(x / 2 + 1), BoundSource::WeakBound, BoundKind::Upper};
}

BNBound clifford_bound(long g, long cliff) {
    if (g < 4) throw std::invalid_argument("the Clifford refinement needs genus >= 4");
    if (cliff < 0) throw std::invalid_argument("a Clifford index is never negative");
    long clamped = std::min(cliff, 2L);
    QQ value = QQ(g - 1) / 2 + 1 - QQ(clamped) / 2;
    return {Surd(value), BoundSource::CliffordBound, BoundKind::Upper};
}

BNBound very_general_bound(long g) {
    if (g < 2) throw std::invalid_argument("the very-general bound needs genus >= 2");
    QQ value = QQ(g) / 4 + 1 + QQ(1) / QQ(g);
    return {Surd(value), BoundSource::VeryGeneral, BoundKind::Upper};
}

bool castelnuovo_severi(long g, long g1, long d1, long g2, long d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("cover degrees must be at least 1");
    return g <= g1 * d1 + g2 * d2 + (d1 - 1) * (d2 - 1);
}

std::vector<BNBound> bn_lower(const CurveProfile& profile, std::optional<QQ> chiOH) {
    long g = profile.g;
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
    if (profile.gonality && *profile.gonality < 2)
        throw std::invalid_argument("gonality must be at least 2");
    if (profile.cliffordLB && *profile.cliffordLB < 0)
        throw std::invalid_argument("a Clifford index is never negative");
    // A Clifford lower bound forces the gonality up: index >= 1 rules out
    // hyperelliptic, index >= 2 also rules out trigonal.
    if (profile.gonality && profile.cliffordLB) {
        if (*profile.cliffordLB >= 2 && *profile.gonality < 4)
            throw std::invalid_argument("Clifford index >= 2 needs gonality >= 4");
        if (*profile.cliffordLB >= 1 && *profile.gonality < 3)
            throw std::invalid_argument("Clifford index >= 1 needs gonality >= 3");
    }

    std::vector<BNBound> out;
    if (profile.gonality) {
        QQ value = QQ(floor_z(QQ(g - 1) / *profile.gonality)) + 1;
        out.push_back({Surd(value), BoundSource::GonalityLower, BoundKind::Lower});
    }
    if (profile.special) {
        switch (*profile.special) {
            case SpecialCurve::Hyperelliptic: {
                if (profile.gonality && *profile.gonality != 2)
                    throw std::invalid_argument("hyperelliptic curves have gonality 2");
                if (profile.cliffordLB && *profile.cliffordLB > 0)
                    throw std::invalid_argument("hyperelliptic curves have Clifford index 0");
                QQ value = QQ(floor_z(QQ(g - 1) / 2)) + 1;
                out.push_back({Surd(value), BoundSource::HyperellipticExact, BoundKind::Exact});
                break;
            }
            case SpecialCurve::PlanarOdd: {
                long d = profile.specialParam;
                if (d < 3 || d % 2 == 0)
                    throw std::invalid_argument("the planar value needs odd plane degree >= 3");
                if (2 * g != (d - 1) * (d - 2))
                    throw std::invalid_argument("genus does not match the plane degree");
                out.push_back({Surd(QQ(d * d - 1) / 8), BoundSource::PlanarExact,
                               BoundKind::Exact});
                break;
            }
            case SpecialCurve::Bielliptic: {
                if (g < 4) throw std::invalid_argument("the bielliptic value needs genus >= 4");
                // Exact value only once hyperelliptic and trigonal are excluded.
                if (profile.cliffordLB && *profile.cliffordLB >= 2)
                    out.push_back({Surd(QQ(g - 1) / 2), BoundSource::BiellipticExact,
                                   BoundKind::Exact});
                break;
            }
            case SpecialCurve::DoubleCover:
                // No closed value; the gonality and Clifford routes carry the
                // information for double covers.
                break;
        }
    }
    if (chiOH) out.push_back({Surd(*chiOH - 2), BoundSource::SectionLower, BoundKind::Lower});
    return out;
}

QQ psi_dp(const QQ& x, const QQ& y, const QQ& m) {
    if (m <= 0) throw std::invalid_argument("surface degree m must be positive");
    if (y < 0) throw std::invalid_argument("segment scores need y >= 0");
    if (y == 0) {
        if (x > 0) throw std::invalid_argument("a flat segment can only close leftwards");
        return QQ(0);
    }
    QQ drop = -2 * x / y;  // = n exactly on the ray x/y = -n/2
    if (drop < 1) return y / 2 + x;
    if (is_integer(drop)) {
        QQ n(to_integer(drop));
        return y / (m * n);
    }
    QQ n(floor_z(drop));
    return ((2 * n + 1) * y + 2 * x) / ((n * n + n) * m + 2);
}

Surd omega_k3(const QQ& x, const QQ& y, const QQ& m) {
    if (m <= 0) throw std::invalid_argument("surface degree m must be positive");
    QQ radicand = x * x + (2 * m + 4) / (m * m) * y * y;
    return Surd::sqrt_of(radicand).scaled(QQ(1, 2)) + x / 2;
}

namespace {

// Solves [Q P] * (a, b) = X for the barycentric coordinates of X in the
// triangle O Q P; containment is a, b >= 0 and a + b <= 1.
bool in_triangle(const PathPoint& X, const PathPoint& Q, const PathPoint& P) {
    QQ det = Q.x * P.y - P.x * Q.y;
    QQ a = (X.x * P.y - X.y * P.x) / det;
    QQ b = (Q.x * X.y - Q.y * X.x) / det;
    return a >= 0 && b >= 0 && a + b <= 1;
}

// Integers n >= 1 with -n/2 inside [lo, hi].
std::vector<long> half_integer_drops(const QQ& lo, const QQ& hi) {
    std::vector<long> out;
    if (hi < lo) return out;
    ZZ first = ceil_z(-2 * hi);
    ZZ last = floor_z(-2 * lo);
    if (first < 1) first = 1;
    for (ZZ n = first; n <= last; ++n) out.push_back(n.get_si());
    return out;
}

}  // namespace

PathMax convex_path_max(const PathPoint& P, const PathPoint& Q, const PathScore& score) {
    if (!(Q.y > 0) || !(P.y > Q.y))
        throw std::invalid_argument("path search needs y_p > y_q > 0");
    if (!(P.x * Q.y < Q.x * P.y))
        throw std::invalid_argument("path search needs x_p/y_p < x_q/y_q");
    if (score.m <= 0) throw std::invalid_argument("surface degree m must be positive");

    if (score.kind == PathScoreKind::OmegaK3) {
        // The score obeys the triangle inequality, so routing through Q
        // dominates every admissible path.
        SurdSum value = SurdSum(omega_k3(Q.x, Q.y, score.m)) +
                        SurdSum(omega_k3(P.x - Q.x, P.y - Q.y, score.m));
        return {value, {PathPoint{0, 0}, Q, P}};
    }

    const QQ& m = score.m;
    // Explicit return type: the gmp expression template must not outlive the
    // operands it references.
    auto two_segment = [&](const PathPoint& mid) -> QQ {
        return psi_dp(mid.x, mid.y, m) + psi_dp(P.x - mid.x, P.y - mid.y, m);
    };

    QQ best = psi_dp(P.x, P.y, m);
    std::vector<PathPoint> best_path{PathPoint{0, 0}, P};
    auto consider = [&](const PathPoint& mid) {
        if (!in_triangle(mid, Q, P)) return;
        QQ val = two_segment(mid);
        if (val > best) {
            best = val;
            best_path = {PathPoint{0, 0}, mid, P};
        }
    };

    consider(Q);

    QQ r_op = P.x / P.y;
    QQ r_oq = Q.x / Q.y;
    QQ r_qp = (P.x - Q.x) / (P.y - Q.y);
    // Ratios x1/y1 over the triangle sweep [r_op, r_oq]; closing-segment
    // ratios sweep between the two edge directions at P.
    std::vector<long> first_breaks = half_integer_drops(r_op, r_oq);
    std::vector<long> second_breaks =
        half_integer_drops(std::min(r_op, r_qp), std::max(r_op, r_qp));

    // Middle vertex on O->Q with the closing segment at a break.
    for (long n : second_breaks) {
        QQ den = Q.x + half(n) * Q.y;
        if (den == 0) continue;
        QQ t = (P.x + half(n) * P.y) / den;
        if (t < 0 || t > 1) continue;
        consider({t * Q.x, t * Q.y});
    }
    // Middle vertex on Q->P with the opening segment at a break.
    for (long k : first_breaks) {
        QQ den = (P.x - Q.x) + half(k) * (P.y - Q.y);
        if (den == 0) continue;
        QQ t = -(Q.x + half(k) * Q.y) / den;
        if (t < 0 || t > 1) continue;
        consider({Q.x + t * (P.x - Q.x), Q.y + t * (P.y - Q.y)});
    }
    // Interior vertices with both segments at breaks.
    for (long k : first_breaks) {
        for (long n : second_breaks) {
            if (n == k) continue;
            QQ y1 = (2 * P.x + n * P.y) / (n - k);
            if (y1 <= 0) continue;
            consider({-half(k) * y1, y1});
        }
    }

    return {SurdSum(best), best_path};
}

QQ dp_edge_candidate(long s, const QQ& m, long n) {
    if (s < 3 || s % 2 == 0) throw std::invalid_argument("edge candidates need odd s >= 3");
    if (n < 2 || 2 * n > s + 1) throw std::invalid_argument("candidate index out of range");
    if (m <= 0) throw std::invalid_argument("surface degree m must be positive");
    QQ sp1(s + 1);
    QQ reach(2 * n + s - 1);
    return sp1 / 4 * (1 - sp1 / reach) + sp1 / (m * n * reach);
}

BNBound bn_upper_delpezzo(long s, const QQ& m) {
    if (s < 1 || s % 2 == 0)
        throw std::invalid_argument("the del Pezzo bound applies to odd s >= 1");
    if (m <= 0) throw std::invalid_argument("surface degree m must be positive");
    // The closed form silently assumes the edge-candidate scores peak at the
    // last index; check that before trusting it.
    for (long n = 2; 2 * (n + 1) <= s + 1; ++n)
        if (dp_edge_candidate(s, m, n) > dp_edge_candidate(s, m, n + 1))
            throw std::logic_error("edge-candidate scores failed to be nondecreasing");
    QQ corner = 1 + QQ(s * s - 1) * m / 8;
    QQ value = std::max(corner, QQ(s));
    return {Surd(value), BoundSource::DelPezzoWall, BoundKind::Upper};
}

BNBound bn_upper_k3(long s, const QQ& m) {
    if (s < 2 || s % 2 != 0) throw std::invalid_argument("the K3 bound applies to even s >= 2");
    if (m <= 0) throw std::invalid_argument("surface degree m must be positive");
    QQ radicand = (2 * m + 8) * (2 * m + 8) + QQ(s * s - 4) * m * m;
    Surd value = Surd::sqrt_of(radicand).scaled(QQ(s) / 8);
    return {value, BoundSource::K3Wall, BoundKind::Upper};
}

}  // namespace cy3
