#include "cy3check/tiltplane.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace cy3 {

namespace {

QQ qmin(const QQ& a, const QQ& b) { return a < b ? a : b; }
QQ qmax(const QQ& a, const QQ& b) { return a < b ? b : a; }

}  // namespace

bool in_tilt_region(const TiltPoint& p) { return p.w > p.b * p.b / 2; }

TiltPoint pi_projection(const ChernSurface& v, const SurfaceGeometry& S) {
    S.validate();
    if (v.r == 0) throw std::invalid_argument("projection needs nonzero rank");
    QQ d = v.r * S.m;
    return {v.c1H / d, v.ch2 / d};
}

QQ WallLine::value_at(const QQ& b) const { return slope * b + intercept; }

std::string WallLine::str() const {
    if (form == Form::ParallelFamily) return "slope " + format_rational(slope) + " (parallel family)";
    if (slope == 0) return "w = " + format_rational(intercept);
    std::string out = "w = " + format_rational(slope) + "*b";
    if (intercept > 0) out += " + " + format_rational(intercept);
    if (intercept < 0) out += " - " + format_rational(QQ(-intercept));
    return out;
}

WallLine wall_through(const ChernSurface& v, const ChernSurface& u, const SurfaceGeometry& S) {
    S.validate();
    if ((v.r == 0 && v.c1H == 0) || (u.r == 0 && u.c1H == 0))
        throw std::invalid_argument("class with vanishing rank and degree admits no wall line");
    if (v.proportional_to(u)) throw std::invalid_argument("proportional classes admit no wall line");

    if (v.r != 0 && u.r != 0) {
        TiltPoint pv = pi_projection(v, S);
        TiltPoint pu = pi_projection(u, S);
        // Equal projections would mean proportional classes, already rejected.
        if (pv.b == pu.b) throw std::domain_error("vertical wall between equal-slope classes");
        QQ slope = (pu.w - pv.w) / (pu.b - pv.b);
        return {WallLine::Form::Line, slope, pv.w - slope * pv.b};
    }
    if (v.r == 0 && u.r == 0) {
        // Both slopes are constant in (b, w); only the shared wall direction of v remains.
        return {WallLine::Form::ParallelFamily, v.ch2 / v.c1H, 0};
    }
    const ChernSurface& torsion = (v.r == 0) ? v : u;
    const ChernSurface& ranked = (v.r == 0) ? u : v;
    QQ slope = torsion.ch2 / torsion.c1H;
    TiltPoint a = pi_projection(ranked, S);
    return {WallLine::Form::Line, slope, a.w - slope * a.b};
}

QQ boundary_curve(const QQ& b, BoundaryKind kind, const QQ& m) {
    switch (kind) {
        case BoundaryKind::Parabola:
            return b * b / 2;
        case BoundaryKind::DelPezzoGamma: {
            QQ f = b - QQ(floor_z(b));
            if (f == 0) return b * b / 2;
            QQ sawtooth = f * f / 2 - f / 2 + QQ(1, 4);
            return b * b / 2 - sawtooth;
        }
        case BoundaryKind::K3Phi: {
            if (m <= 0) throw std::invalid_argument("K3 boundary needs a positive degree");
            QQ f = b - QQ(round_half_into(b));
            if (f == 0) return b * b / 2;
            QQ sawtooth = (1 - f * f) / m;
            return b * b / 2 - sawtooth;
        }
    }
    throw std::logic_error("unknown boundary kind");
}

QQ boundary_gap(BoundaryKind kind, const QQ& m) {
    switch (kind) {
        case BoundaryKind::Parabola: return 0;
        case BoundaryKind::DelPezzoGamma: return QQ(1, 4);
        case BoundaryKind::K3Phi:
            if (m <= 0) throw std::invalid_argument("K3 boundary needs a positive degree");
            return QQ(1) / m;
    }
    throw std::logic_error("unknown boundary kind");
}

namespace {

struct ScanHit {
    Surd b, w;
};

/// Crossing of the line sigma*b + icpt with the linear piece of the del Pezzo
/// boundary on the open cell (n, n+1); the piece is the chord
/// (n + 1/2)*b - (n^2+n)/2 - 1/4 between the two bottom corners.
std::optional<ScanHit> cross_linear_piece(const QQ& sigma, const QQ& icpt, const QQ& nq) {
    QQ ds = sigma - nq - QQ(1, 2);
    if (ds == 0) return std::nullopt;
    QQ dc = icpt + (nq * nq + nq) / 2 + QQ(1, 4);
    QQ bc = -dc / ds;
    if (bc > nq && bc < nq + 1) return ScanHit{Surd(bc), Surd(sigma * bc + icpt)};
    return std::nullopt;
}

/// Crossing of the line with the K3 arc centred at k, restricted to the
/// half-cell (left, right] or (left, right).  The difference line-minus-arc is
/// concave and strictly positive at the cell entry, so the first crossing to
/// the right is the larger root of the quadratic.
std::optional<ScanHit> cross_arc(const QQ& sigma, const QQ& icpt, const QQ& m, const QQ& k,
                                 const QQ& left, const QQ& right, bool include_right) {
    QQ A = (m + 2) / (2 * m);
    QQ B = -(2 * k / m + sigma);
    QQ C = (k * k - 1) / m - icpt;
    QQ disc = B * B - 4 * A * C;
    if (disc <= 0) return std::nullopt;  // line entirely above this arc
    Surd rho = (Surd::sqrt_of(disc) - B).scaled(QQ(1) / (2 * A));
    if (rho.compare(left) <= 0) return std::nullopt;
    int cr = rho.compare(right);
    if (cr > 0 || (cr == 0 && !include_right)) return std::nullopt;
    Surd w = rho.scaled(sigma) + icpt;
    return ScanHit{rho, w};
}

/// Rightward scan from b = 0 (where the line is strictly above the boundary):
/// walk the pieces cell by cell and return the first boundary point at or
/// below the line's exit.  Crossing a vertical segment at an integer n shows
/// up as line value in [n^2/2 - gap, n^2/2] there.
ScanHit scan_right(const QQ& sigma, const QQ& icpt, BoundaryKind kind, const QQ& m) {
    QQ cap_q = qmax(2 * abs_q(sigma) + 2, icpt) + 2;
    ZZ cap = ceil_z(cap_q);
    for (ZZ n = 0; n <= cap; ++n) {
        QQ nq(n);
        if (kind == BoundaryKind::DelPezzoGamma) {
            if (auto hit = cross_linear_piece(sigma, icpt, nq)) return *hit;
        } else {
            if (auto hit = cross_arc(sigma, icpt, m, nq, nq, nq + QQ(1, 2), true)) return *hit;
            if (auto hit = cross_arc(sigma, icpt, m, nq + 1, nq + QQ(1, 2), nq + 1, false)) return *hit;
        }
        QQ bnext = nq + 1;
        QQ line_next = sigma * bnext + icpt;
        if (line_next <= bnext * bnext / 2) return ScanHit{Surd(bnext), Surd(line_next)};
    }
    throw std::logic_error("boundary scan failed to terminate");
}

}  // namespace

std::pair<CurvePoint, CurvePoint> wall_endpoints(const WallLine& line, BoundaryKind kind, const QQ& m) {
    if (line.form == WallLine::Form::ParallelFamily)
        throw std::invalid_argument("a parallel family has no distinguished endpoints");
    const QQ& sigma = line.slope;
    const QQ& icpt = line.intercept;

    if (kind == BoundaryKind::Parabola) {
        QQ disc = sigma * sigma + 2 * icpt;
        if (disc < 0) throw std::domain_error("no intersection");
        if (disc == 0) throw std::domain_error("tangency");
        Surd root = Surd::sqrt_of(disc);
        Surd bl = (-root) + sigma;
        Surd br = root + sigma;
        return {CurvePoint{bl, bl.scaled(sigma) + icpt}, CurvePoint{br, br.scaled(sigma) + icpt}};
    }

    if (kind == BoundaryKind::K3Phi && m <= 0)
        throw std::invalid_argument("K3 boundary needs a positive degree");
    // Anchor at b = 0, where the completed boundary tops out at 0.
    if (icpt < 0) throw std::domain_error("no intersection");
    if (icpt == 0) throw std::domain_error("tangency");
    ScanHit right = scan_right(sigma, icpt, kind, m);
    // Both boundary kinds are even in b, so the left endpoint is the mirrored
    // rightward scan of the reflected line.
    ScanHit left = scan_right(QQ(-sigma), icpt, kind, m);
    return {CurvePoint{-left.b, left.w}, CurvePoint{right.b, right.w}};
}

WallLine slope_bound_line(const CurveClass& C, const QQ& t) {
    C.surface.validate();
    QQ s(C.s);
    QQ b0, w0;
    switch (C.surface.kind) {
        case SurfaceKind::DelPezzo:
            if (C.s < 3 || C.s % 2 == 0)
                throw std::invalid_argument("del Pezzo restriction line needs odd s >= 3");
            b0 = -(s + 1) / 2;
            w0 = (s + 1) * (s + 1) / 8;
            break;
        case SurfaceKind::K3:
            if (C.s < 2 || C.s % 2 != 0)
                throw std::invalid_argument("K3 restriction line needs even s >= 2");
            b0 = -s / 2;
            w0 = s * s / 8;
            break;
        case SurfaceKind::Canonical:
            throw std::invalid_argument("restriction line is defined for del Pezzo and K3 kinds only");
    }
    QQ slope = t - s / 2;
    return {WallLine::Form::Line, slope, w0 - slope * b0};
}

SlopeBounds slope_bounds_pushforward(const CurveClass& C, const QQ& t) {
    C.surface.validate();
    QQ s(C.s);
    switch (C.surface.kind) {
        case SurfaceKind::DelPezzo:
            if (C.s < 3 || C.s % 2 == 0)
                throw std::invalid_argument("del Pezzo slope bounds need odd s >= 3");
            return {-(3 * s + 1) / 4 + 2 * s * t / (s - 1), -(s + 1) / 4};
        case SurfaceKind::K3:
            if (C.s < 2 || C.s % 2 != 0)
                throw std::invalid_argument("K3 slope bounds need even s >= 2");
            return {2 * t - 3 * s / 4, -s / 4};
        case SurfaceKind::Canonical:
            break;
    }
    throw std::invalid_argument("slope bounds are defined for del Pezzo and K3 kinds only");
}

bool mu_gap_ok(const QQ& mu1, const QQ& mu2, const QQ& s) { return mu1 - mu2 <= s; }

namespace {

struct WallKey {
    QQ slope, intercept;
    bool operator<(const WallKey& o) const {
        int c = cmp(slope, o.slope);
        if (c != 0) return c < 0;
        return cmp(intercept, o.intercept) < 0;
    }
};

bool witness_less(const ChernSurface& a, const ChernSurface& b) {
    int c = cmp(abs_q(a.r), abs_q(b.r));
    if (c != 0) return c < 0;
    c = cmp(abs_q(a.c1H), abs_q(b.c1H));
    if (c != 0) return c < 0;
    return cmp(abs_q(a.ch2), abs_q(b.ch2)) < 0;
}

}  // namespace

std::vector<DestabilizerCandidate> enumerate_walls(const ChernSurface& v, const SurfaceGeometry& S,
                                                   const SlopeWindow& win,
                                                   const WallSearchOptions& opt) {
    S.validate();
    if (!(win.bmin < win.bmax)) throw std::invalid_argument("wall scan needs a nonempty window");
    if (opt.rank_cap < 1) throw std::invalid_argument("rank cap must be positive");

    ChernSurface vv = v;
    if (vv.r < 0 || (vv.r == 0 && vv.c1H < 0)) vv = -vv;
    if (vv.r == 0 && vv.c1H == 0)
        throw std::invalid_argument("degenerate class: rank and degree both vanish");

    const QQ m = S.m;
    const QQ K = delta_H(vv, S);
    if (K < 0) throw std::invalid_argument("class violates the Bogomolov inequality");

    auto cbar_v = [&](const QQ& b) { return QQ(vv.c1H - b * vv.r * m); };
    const QQ cv0 = cbar_v(win.bmin);
    const QQ cv1 = cbar_v(win.bmax);
    const QQ Cstar = qmax(cv0, cv1);
    if (Cstar <= 0) return {};

    const QQ l1 = S.c1h_step();
    const QQ l2 = S.ch2_step();

    std::map<WallKey, DestabilizerCandidate> found;

    auto accept = [&](const ChernSurface& u) {
        if (u.is_zero() || u.proportional_to(vv)) return;
        QQ du = delta_H(u, S);
        if (du < 0 || du > K) return;
        if (delta_H(vv - u, S) < 0) return;
        // Equal-slope pairs give a vertical wall, which meets no sandwich point.
        if (vv.r != 0 && u.r != 0 && vv.c1H * u.r == u.c1H * vv.r) return;
        WallLine wall = wall_through(vv, u, S);

        // Feasibility: some b in [bmin, bmax) with 0 < cbar_u(b) < cbar_v(b)
        // and the wall strictly above the parabola.  The open linear
        // constraints tighten the window; the parabola test evaluates the
        // concave difference at its clamped vertex.
        QQ lo = win.bmin, hi = win.bmax;
        auto tighten = [&](const QQ& alpha, const QQ& beta) -> bool {
            if (alpha == 0) return beta > 0;
            QQ bound = -beta / alpha;
            if (alpha > 0)
                lo = qmax(lo, bound);
            else
                hi = qmin(hi, bound);
            return true;
        };
        if (!tighten(QQ(-u.r * m), u.c1H)) return;
        if (!tighten(QQ(-(vv.r - u.r) * m), QQ(vv.c1H - u.c1H))) return;
        if (!(lo < hi)) return;
        QQ bstar = wall.slope;
        if (bstar < lo) bstar = lo;
        if (bstar > hi) bstar = hi;
        if (!(wall.value_at(bstar) - bstar * bstar / 2 > 0)) return;

        if (abs_q(u.r) >= opt.rank_cap)
            throw std::runtime_error("wall enumeration hit the rank cap; raise it");

        WallKey key{wall.slope, wall.intercept};
        auto it = found.find(key);
        if (it == found.end())
            found.emplace(key, DestabilizerCandidate{u, wall});
        else if (witness_less(u, it->second.u))
            it->second.u = u;
    };

    // Torsion candidates (rank 0) pair with nonzero-rank v only; two torsion
    // classes share a wall exactly when proportional.
    if (vv.r != 0) {
        TiltPoint pv = pi_projection(vv, S);
        auto chord_slope = [&](const QQ& b) { return QQ((b * b / 2 - pv.w) / (b - pv.b)); };
        ZZ a_hi = floor_div_step(Cstar, l1);
        for (ZZ a = 1; a <= a_hi; ++a) {
            QQ c = QQ(a) * l1;
            if (c * c > K) break;
            if (c >= Cstar) continue;
            // Sandwich forces b below the line where cbar_v equals c.
            QQ bc = pv.b - c / (vv.r * m);
            QQ hi2 = qmin(win.bmax, bc);
            if (!(win.bmin < hi2)) continue;
            QQ lo2 = win.bmin;
            // ch2 range: below from Delta(v-u) >= 0, above from the maximal
            // secant slope of the parabola seen from the projection point.
            QQ emin = vv.ch2 - (vv.c1H - c) * (vv.c1H - c) / (2 * vv.r * m);
            QQ sigma_hi = qmax(qmax(chord_slope(lo2), chord_slope(hi2)), pv.b);
            QQ emax = c * sigma_hi;
            ZZ ei = ceil_div_step(emin, l2);
            ZZ ef = floor_div_step(emax, l2);
            for (ZZ e = ei; e <= ef; ++e) accept({0, c, QQ(e) * l2});
        }
    }

    // Nonzero-rank candidates: the sandwich bounds c1H over the window hull,
    // the discriminant window bounds ch2.
    for (long ar = 1; ar <= opt.rank_cap; ++ar) {
        for (int sr = +1; sr >= -1; sr -= 2) {
            QQ ru(ar * sr);
            QQ c_lo = qmin(win.bmin * ru * m, win.bmax * ru * m);
            QQ c_hi = qmax(win.bmin * ru * m + cv0, win.bmax * ru * m + cv1);
            ZZ ci = ceil_div_step(c_lo, l1);
            ZZ cf = floor_div_step(c_hi, l1);
            for (ZZ ca = ci; ca <= cf; ++ca) {
                QQ c = QQ(ca) * l1;
                if (!(c > c_lo && c < c_hi)) continue;
                QQ eA = c * c / (2 * ru * m);
                QQ eB = (c * c - K) / (2 * ru * m);
                QQ e_lo = qmin(eA, eB);
                QQ e_hi = qmax(eA, eB);
                ZZ ei = ceil_div_step(e_lo, l2);
                ZZ ef = floor_div_step(e_hi, l2);
                for (ZZ e = ei; e <= ef; ++e) accept({ru, c, QQ(e) * l2});
            }
        }
    }

    std::vector<DestabilizerCandidate> out;
    out.reserve(found.size());
    for (auto& kv : found) out.push_back(kv.second);
    return out;
}

}  // namespace cy3
