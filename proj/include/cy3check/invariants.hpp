#pragma once

#include "cy3check/rational.hpp"

#include <optional>
#include <string>

namespace cy3 {

enum class SurfaceKind { DelPezzo, K3, Canonical };

/// A polarised surface (S, H): the kind fixes the Todd class used in
/// Riemann-Roch and the default Chern-character lattice, m = H^2 > 0.
/// picardRankOne marks rank-one lattices where H^2 divides every D.H.
struct SurfaceGeometry {
    SurfaceKind kind = SurfaceKind::Canonical;
    QQ m = 1;
    bool picardRankOne = false;
    std::optional<QQ> c1h_step_override;
    std::optional<QQ> ch2_step_override;

    /// Lattice step of c1.H values for integral classes.
    QQ c1h_step() const;
    /// Lattice step of ch2 values for integral classes.
    QQ ch2_step() const;
    void validate() const;
};

/// A polarised threefold (X, H) with H^3 and c2(X).H.
struct ThreefoldGeometry {
    std::string name;
    QQ h3 = 0;
    QQ c2H = 0;

    QQ td2H() const { return c2H / 12; }
    void validate() const;
};

/// H-degrees of a Chern character on a surface: (ch0, ch1.H, ch2).
struct ChernSurface {
    QQ r, c1H, ch2;

    ChernSurface operator+(const ChernSurface& o) const { return {r + o.r, c1H + o.c1H, ch2 + o.ch2}; }
    ChernSurface operator-(const ChernSurface& o) const { return {r - o.r, c1H - o.c1H, ch2 - o.ch2}; }
    ChernSurface operator-() const { return {-r, -c1H, -ch2}; }
    bool operator==(const ChernSurface& o) const = default;
    bool is_zero() const { return r == 0 && c1H == 0 && ch2 == 0; }
    bool proportional_to(const ChernSurface& o) const;
    std::string str() const;
};

/// H-degrees of a Chern character on a threefold:
/// (ch0, ch1.H^2, ch2.H, ch3).  c1_proportional marks ch1 = (ch1.H^2/H^3) H,
/// which several operations require.
struct ChernThreefold {
    QQ r, c1H2, ch2H, ch3;
    bool c1_proportional = true;

    ChernThreefold operator+(const ChernThreefold& o) const;
    bool operator==(const ChernThreefold& o) const = default;
    std::string str() const;
};

/// Twist by exp(-bH): E -> E(-bH) on H-degrees.
ChernSurface twist(const ChernSurface& v, const QQ& b, const SurfaceGeometry& S);
ChernThreefold twist(const ChernThreefold& v, const QQ& b, const ThreefoldGeometry& X);

/// Slope c1.H / (r H^n); nullopt encodes +infinity (r = 0).
std::optional<QQ> mu_H(const ChernSurface& v, const SurfaceGeometry& S);
std::optional<QQ> mu_H(const ChernThreefold& v, const ThreefoldGeometry& X);

/// Discriminant (ch1.H^{n-1})^2 - 2 (ch0 H^n)(ch2.H^{n-2}); twist-invariant
/// and homogeneous of degree 2.
QQ delta_H(const ChernSurface& v, const SurfaceGeometry& S);
QQ delta_H(const ChernThreefold& v, const ThreefoldGeometry& X);

/// Tilt slope (ch2.H^{n-2} - w ch0 H^n) / (ch1^{bH}.H^{n-1}); nullopt = +inf.
std::optional<QQ> nu_bw(const ChernSurface& v, const QQ& b, const QQ& w, const SurfaceGeometry& S);

/// Euler characteristic via Riemann-Roch.  Surfaces: del Pezzo and K3 only.
/// Threefolds: requires the proportionality flag (chi = ch3 + td2H * c1H2/h3).
QQ euler_char(const ChernSurface& v, const SurfaceGeometry& S);
QQ euler_char(const ChernThreefold& v, const ThreefoldGeometry& X);

/// A curve in |sH| on S; genus via adjunction (throws when non-integral).
struct CurveClass {
    ZZ s;
    SurfaceGeometry surface;
};
ZZ genus_of(const CurveClass& C);

/// Chern character of the pushforward to S of a rank-r degree-d sheaf on a
/// curve in |sH|, plus the induced slope parameter t = mu/(s H^2 r) and the
/// tilt slope nu at (b, w) = (0, 0).
struct PushforwardResult {
    ChernSurface cls;
    QQ t;      // slope of the input sheaf divided by s*H^2 (per unit rank)
    QQ nuBN;   // nu_{0,0} of the pushforward = t*s*... - s/2
};
PushforwardResult pushforward_curve_sheaf(const QQ& r, const QQ& d, const CurveClass& C);

/// Replace H by kH (k >= 1 integer): (H^3, c2.H) -> (k^3 H^3, k c2.H).
ThreefoldGeometry rescale_polarisation(const ThreefoldGeometry& X, const ZZ& k);

/// Pull back along a finite etale cover of degree deg.
ThreefoldGeometry etale_transfer(const ThreefoldGeometry& X, const ZZ& deg);

}  // namespace cy3
