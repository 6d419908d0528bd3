#include "cy3check/invariants.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace cy3;

namespace {

SurfaceGeometry del_pezzo(const QQ& m) { return {SurfaceKind::DelPezzo, m, false, {}, {}}; }
SurfaceGeometry k3(const QQ& m, bool pic1 = false) { return {SurfaceKind::K3, m, pic1, {}, {}}; }

const ThreefoldGeometry quintic_like{"X5", 5, 50};

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("lattice steps per surface kind") {
    CHECK(del_pezzo(1).c1h_step() == 1);
    CHECK(del_pezzo(1).ch2_step() == QQ(1, 2));
    CHECK(k3(2).c1h_step() == 1);
    CHECK(k3(2, true).c1h_step() == 2);
    CHECK(k3(2).ch2_step() == 1);

    SurfaceGeometry overridden = k3(2, true);
    overridden.c1h_step_override = QQ(1, 3);
    overridden.ch2_step_override = QQ(1, 6);
    CHECK(overridden.c1h_step() == QQ(1, 3));
    CHECK(overridden.ch2_step() == QQ(1, 6));

    SurfaceGeometry bad = del_pezzo(0);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("twist on threefold degrees") {
    ChernThreefold v{1, 0, 0, 0};
    ChernThreefold tw = twist(v, QQ(1), quintic_like);
    CHECK(tw.r == 1);
    CHECK(tw.c1H2 == -5);
    CHECK(tw.ch2H == QQ(5, 2));
    CHECK(tw.ch3 == QQ(-5, 6));
}

TEST_CASE("twist composes additively") {
    SurfaceGeometry S = del_pezzo(2);
    std::vector<ChernSurface> vs = {{1, 0, 0}, {2, -3, QQ(1, 2)}, {0, 2, 5}, {-1, 4, -2}};
    std::vector<QQ> bs = {QQ(1, 2), QQ(-2, 3), QQ(3)};
    for (const auto& v : vs)
        for (const auto& b : bs)
            for (const auto& c : bs) {
                CHECK(twist(twist(v, b, S), c, S) == twist(v, b + c, S));
                CHECK(delta_H(twist(v, b, S), S) == delta_H(v, S));
            }
    ChernThreefold w{2, 3, QQ(-1, 2), QQ(5, 6)};
    for (const auto& b : bs)
        for (const auto& c : bs) {
            CHECK(twist(twist(w, b, quintic_like), c, quintic_like) == twist(w, b + c, quintic_like));
            CHECK(delta_H(twist(w, b, quintic_like), quintic_like) == delta_H(w, quintic_like));
        }
}

TEST_CASE("slope and discriminant") {
    SurfaceGeometry S = k3(2);
    ChernSurface v{2, 3, -1};
    REQUIRE(mu_H(v, S).has_value());
    CHECK(*mu_H(v, S) == QQ(3, 4));
    CHECK(!mu_H(ChernSurface{0, 1, 0}, S).has_value());
    CHECK(delta_H(v, S) == 9 + 2 * 2 * 2);  // c1H^2 - 2 r m ch2

    // homogeneity of degree two
    ChernSurface v3{6, 9, -3};
    CHECK(delta_H(v3, S) == 9 * delta_H(v, S));

    // slope shifts by the twist parameter
    for (int num = -4; num <= 4; ++num) {
        QQ b(num, 3);
        b.canonicalize();
        CHECK(*mu_H(twist(v, b, S), S) == *mu_H(v, S) - b);
    }

    ChernThreefold w{2, 7, 0, 1};
    CHECK(*mu_H(w, quintic_like) == QQ(7, 10));
    CHECK(delta_H(w, quintic_like) == 49);
}

TEST_CASE("tilt slope") {
    SurfaceGeometry S = k3(2);
    ChernSurface v{1, 0, -1};
    CHECK(!nu_bw(v, 0, 0, S).has_value());  // slope-zero class: infinite at b = 0
    auto nu = nu_bw(v, -1, 0, S);
    REQUIRE(nu.has_value());
    CHECK(*nu == QQ(-1, 2));
    auto nu2 = nu_bw(v, -1, QQ(1, 2), S);
    REQUIRE(nu2.has_value());
    CHECK(*nu2 == -1);
}

TEST_CASE("Euler characteristics by Riemann-Roch") {
    CHECK(euler_char(ChernSurface{1, 0, 0}, del_pezzo(1)) == 1);
    CHECK(euler_char(ChernSurface{1, 3, QQ(9, 2)}, del_pezzo(1)) == 7);
    CHECK(euler_char(ChernSurface{1, 0, 0}, k3(4)) == 2);
    CHECK(euler_char(ChernSurface{2, 5, -1}, k3(4)) == 3);
    CHECK_THROWS_AS(euler_char(ChernSurface{1, 0, 0}, SurfaceGeometry{SurfaceKind::Canonical, 1, false, {}, {}}),
                    std::invalid_argument);

    // additivity
    SurfaceGeometry S = del_pezzo(3);
    ChernSurface a{1, 2, QQ(1, 2)}, b{-2, 1, QQ(5, 2)};
    CHECK(euler_char(a + b, S) == euler_char(a, S) + euler_char(b, S));

    // threefold: chi(O) = 0 for the structure class, chi(O(H)) = 5 on the quintic-like data
    CHECK(euler_char(ChernThreefold{1, 0, 0, 0}, quintic_like) == 0);
    CHECK(euler_char(ChernThreefold{1, 5, QQ(5, 2), QQ(5, 6)}, quintic_like) == 5);
    ChernThreefold nonprop{1, 5, QQ(5, 2), QQ(5, 6), false};
    CHECK_THROWS_AS(euler_char(nonprop, quintic_like), std::invalid_argument);
}

TEST_CASE("genus by adjunction") {
    CHECK(genus_of(CurveClass{3, del_pezzo(1)}) == 4);   // 2g-2 = s(s-1)m = 6
    CHECK(genus_of(CurveClass{2, k3(2)}) == 5);          // 2g-2 = s^2 m = 8
    CHECK(genus_of(CurveClass{1, del_pezzo(1)}) == 1);
    CHECK(genus_of(CurveClass{1, {SurfaceKind::Canonical, 2, false, {}, {}}}) == 3);  // 2g-2 = s(s+1)m
    CHECK_THROWS_AS(genus_of(CurveClass{1, k3(1)}), std::invalid_argument);  // 2g-2 = 1 odd
    CHECK_THROWS_AS(genus_of(CurveClass{0, del_pezzo(1)}), std::invalid_argument);

    for (long s = 1; s <= 9; s += 2)
        for (long m = 1; m <= 6; ++m)
            CHECK(2 * QQ(genus_of(CurveClass{s, del_pezzo(m)})) - 2 == QQ(s * (s - 1) * m));
    for (long s = 2; s <= 8; s += 2)
        for (long m = 2; m <= 8; m += 2)
            CHECK(2 * QQ(genus_of(CurveClass{s, k3(m)})) - 2 == QQ(s * s * m));
}

TEST_CASE("pushforward of a curve sheaf") {
    CurveClass C{3, del_pezzo(1)};
    PushforwardResult pf = pushforward_curve_sheaf(2, 7, C);
    CHECK(pf.cls.r == 0);
    CHECK(pf.cls.c1H == 6);                   // r s m
    CHECK(pf.cls.ch2 == QQ(7) - QQ(9));       // d - s^2 r m / 2
    CHECK(pf.t == QQ(7, 6));                  // (d/r) / (s m)
    CHECK(pf.nuBN == pf.t - QQ(3, 2));        // nu_{0,0} = t - s/2
    CHECK_THROWS_AS(pushforward_curve_sheaf(0, 1, C), std::invalid_argument);

    // K3 shape: ch2 = d + r(1-g)
    CurveClass CK{2, k3(2)};
    ZZ g = genus_of(CK);
    PushforwardResult pk = pushforward_curve_sheaf(3, 5, CK);
    CHECK(pk.cls.ch2 == QQ(5) + 3 * (1 - QQ(g)));
}

TEST_CASE("polarisation rescale and etale transfer") {
    ThreefoldGeometry X{"X", 5, 50};
    ThreefoldGeometry X1 = rescale_polarisation(X, 1);
    CHECK(X1.h3 == 5);
    CHECK(X1.c2H == 50);
    ThreefoldGeometry X2 = rescale_polarisation(X, 2);
    CHECK(X2.h3 == 40);
    CHECK(X2.c2H == 100);
    CHECK_THROWS_AS(rescale_polarisation(X, 0), std::invalid_argument);

    ThreefoldGeometry Y = etale_transfer(X, 3);
    CHECK(Y.h3 == 15);
    CHECK(Y.c2H == 150);
    // chi(O(H)) scales with the covering degree: 5 -> 15
    CHECK(euler_char(ChernThreefold{1, 15, QQ(15, 2), QQ(5, 2)}, Y) == 15);
}

TEST_CASE("proportionality test") {
    ChernSurface a{1, 2, 3};
    ChernSurface pt{0, 0, 5};
    ChernSurface tor{0, 2, 4};
    CHECK(a.proportional_to(ChernSurface{2, 4, 6}));
    CHECK(a.proportional_to(ChernSurface{-1, -2, -3}));
    CHECK(!a.proportional_to(ChernSurface{1, 2, 4}));
    CHECK(pt.proportional_to(ChernSurface{0, 0, -1}));
    CHECK(tor.proportional_to(ChernSurface{0, 1, 2}));
    CHECK(!tor.proportional_to(ChernSurface{0, 1, 3}));
}

}  // TEST_SUITE
