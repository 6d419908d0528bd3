#include "cy3check/invariants.hpp"

#include <stdexcept>

namespace cy3 {

QQ SurfaceGeometry::c1h_step() const {
    if (c1h_step_override) return *c1h_step_override;
    if (kind == SurfaceKind::K3 && picardRankOne) return m;
    return 1;
}

QQ SurfaceGeometry::ch2_step() const {
    if (ch2_step_override) return *ch2_step_override;
    switch (kind) {
        case SurfaceKind::K3: return 1;
        case SurfaceKind::DelPezzo: return QQ(1, 2);
        case SurfaceKind::Canonical: return QQ(1, 2);
    }
    return QQ(1, 2);
}

void SurfaceGeometry::validate() const {
    if (m <= 0) throw std::invalid_argument("surface degree H^2 must be positive");
    if (c1h_step() <= 0 || ch2_step() <= 0) throw std::invalid_argument("lattice steps must be positive");
}

void ThreefoldGeometry::validate() const {
    if (h3 <= 0) throw std::invalid_argument("H^3 must be positive");
}

bool ChernSurface::proportional_to(const ChernSurface& o) const {
    return r * o.c1H == c1H * o.r && r * o.ch2 == ch2 * o.r && c1H * o.ch2 == ch2 * o.c1H;
}

std::string ChernSurface::str() const {
    return "(" + format_rational(r) + ", " + format_rational(c1H) + ", " + format_rational(ch2) + ")";
}

ChernThreefold ChernThreefold::operator+(const ChernThreefold& o) const {
    return {r + o.r, c1H2 + o.c1H2, ch2H + o.ch2H, ch3 + o.ch3, c1_proportional && o.c1_proportional};
}

std::string ChernThreefold::str() const {
    return "(" + format_rational(r) + ", " + format_rational(c1H2) + ", " + format_rational(ch2H) +
           ", " + format_rational(ch3) + ")";
}

ChernSurface twist(const ChernSurface& v, const QQ& b, const SurfaceGeometry& S) {
    S.validate();
    const QQ& m = S.m;
    return {v.r, v.c1H - b * v.r * m, v.ch2 - b * v.c1H + b * b * v.r * m / 2};
}

ChernThreefold twist(const ChernThreefold& v, const QQ& b, const ThreefoldGeometry& X) {
    X.validate();
    const QQ& h3 = X.h3;
    return {v.r,
            v.c1H2 - b * v.r * h3,
            v.ch2H - b * v.c1H2 + b * b * v.r * h3 / 2,
            v.ch3 - b * v.ch2H + b * b * v.c1H2 / 2 - b * b * b * v.r * h3 / 6,
            v.c1_proportional};
}

std::optional<QQ> mu_H(const ChernSurface& v, const SurfaceGeometry& S) {
    S.validate();
    if (v.r == 0) return std::nullopt;
    return v.c1H / (v.r * S.m);
}

std::optional<QQ> mu_H(const ChernThreefold& v, const ThreefoldGeometry& X) {
    X.validate();
    if (v.r == 0) return std::nullopt;
    return v.c1H2 / (v.r * X.h3);
}

QQ delta_H(const ChernSurface& v, const SurfaceGeometry& S) {
    S.validate();
    return v.c1H * v.c1H - 2 * v.r * S.m * v.ch2;
}

QQ delta_H(const ChernThreefold& v, const ThreefoldGeometry& X) {
    X.validate();
    return v.c1H2 * v.c1H2 - 2 * v.r * X.h3 * v.ch2H;
}

std::optional<QQ> nu_bw(const ChernSurface& v, const QQ& b, const QQ& w, const SurfaceGeometry& S) {
    S.validate();
    QQ denom = v.c1H - b * v.r * S.m;
    if (denom == 0) return std::nullopt;
    return (v.ch2 - w * v.r * S.m) / denom;
}

QQ euler_char(const ChernSurface& v, const SurfaceGeometry& S) {
    S.validate();
    switch (S.kind) {
        case SurfaceKind::DelPezzo: return v.r + v.c1H / 2 + v.ch2;
        case SurfaceKind::K3: return 2 * v.r + v.ch2;
        case SurfaceKind::Canonical:
            throw std::invalid_argument("Riemann-Roch needs the full canonical pairing for this surface kind");
    }
    throw std::logic_error("unreachable");
}

QQ euler_char(const ChernThreefold& v, const ThreefoldGeometry& X) {
    X.validate();
    if (!v.c1_proportional)
        throw std::invalid_argument("Euler characteristic needs ch1 proportional to H");
    return v.ch3 + X.td2H() * (v.c1H2 / X.h3);
}

ZZ genus_of(const CurveClass& C) {
    C.surface.validate();
    if (C.s <= 0) throw std::invalid_argument("curve multiple s must be positive");
    QQ s(C.s);
    QQ two_g_minus_2;
    switch (C.surface.kind) {
        case SurfaceKind::DelPezzo: two_g_minus_2 = s * (s - 1) * C.surface.m; break;
        case SurfaceKind::K3: two_g_minus_2 = s * s * C.surface.m; break;
        case SurfaceKind::Canonical: two_g_minus_2 = s * (s + 1) * C.surface.m; break;
    }
    QQ g = two_g_minus_2 / 2 + 1;
    if (!is_integer(g)) throw std::invalid_argument("non-integral genus for this curve class");
    return to_integer(g);
}

PushforwardResult pushforward_curve_sheaf(const QQ& r, const QQ& d, const CurveClass& C) {
    C.surface.validate();
    if (r <= 0) throw std::invalid_argument("sheaf rank must be positive");
    QQ s(C.s), m = C.surface.m;
    ChernSurface cls{0, r * s * m, d - s * s * r * m / 2};
    QQ t = (d / r) / (s * m);
    QQ nu = cls.ch2 / cls.c1H;  // nu_{0,0}: equals t - s/2
    return {cls, t, nu};
}

ThreefoldGeometry rescale_polarisation(const ThreefoldGeometry& X, const ZZ& k) {
    X.validate();
    if (k < 1) throw std::invalid_argument("polarisation scale must be a positive integer");
    QQ kq(k);
    return {X.name, X.h3 * kq * kq * kq, X.c2H * kq};
}

ThreefoldGeometry etale_transfer(const ThreefoldGeometry& X, const ZZ& deg) {
    X.validate();
    if (deg < 1) throw std::invalid_argument("covering degree must be a positive integer");
    QQ d(deg);
    return {X.name, X.h3 * d, X.c2H * d};
}

}  // namespace cy3
