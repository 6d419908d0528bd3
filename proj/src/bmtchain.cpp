#include "cy3check/bmtchain.hpp"

#include <random>
#include <stdexcept>

namespace cy3 {

namespace {

void require_unit_interval_third(const QQ& eps) {
    if (!(eps > 0) || !(3 * eps < 1))
        throw std::domain_error("eps must lie in (0, 1/3)");
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

QQ f_epsilon(const QQ& x0, const QQ& eps) {
    require_unit_interval_third(eps);
    QQ x = abs_q(x0);
    if (x <= eps) return -x / 2;
    QQ second_break = 2 * eps / (1 - eps);
    if (x <= second_break) return (1 + eps) / (2 * (1 - eps)) * x - eps / (1 - eps);
    return x * x / 2;
}

BGStatus bg_predicate(const ChernSurface& v, const QQ& eps, const SurfaceGeometry& S) {
    S.validate();
    if (!(v.r > 0)) return BGStatus::OutOfRange;
    if (!(v.c1H > 0) || v.c1H > eps * v.r * S.m) return BGStatus::OutOfRange;
    return 2 * v.ch2 < -v.c1H ? BGStatus::Satisfies : BGStatus::Violates;
}

BGStatus bg_predicate(const ChernThreefold& v, const QQ& eps, const ThreefoldGeometry& X) {
    X.validate();
    if (!(v.r > 0)) return BGStatus::OutOfRange;
    if (!(v.c1H2 > 0) || v.c1H2 > eps * v.r * X.h3) return BGStatus::OutOfRange;
    return 2 * v.ch2H < -v.c1H2 ? BGStatus::Satisfies : BGStatus::Violates;
}

QQ q_form(const ChernThreefold& v, const QQ& b, const QQ& w, const QQ& gammaH,
          const ThreefoldGeometry& X) {
    if (!v.c1_proportional)
        throw std::invalid_argument("q_form needs ch1 proportional to H");
    X.validate();
    ChernThreefold t = twist(v, b, X);
    QQ rH3 = v.r * X.h3;
    QQ head = (2 * w - b * b) * (delta_H(v, X) + 3 * (gammaH / X.h3) * rH3 * rH3);
    QQ mid = 2 * t.ch2H * (2 * t.ch2H - 3 * gammaH * v.r);
    QQ cycle_dot_c1 = gammaH * (t.c1H2 / X.h3);
    QQ tail = -6 * t.c1H2 * (t.ch3 - cycle_dot_c1);
    return head + mid + tail;
}

bool bmt_region_contains(const QQ& b, const QQ& w) {
    QQ frac = b - QQ(floor_z(b));
    return w > b * b / 2 + frac * (1 - frac) / 2;
}

GammaCert gamma_cycle(const QQ& eps, const ThreefoldGeometry& X) {
    if (!(eps > 0)) throw std::domain_error("eps must be positive");
    X.validate();
    QQ lower_from_eps = 4 / (X.h3 * eps);
    QQ lower_from_todd = X.td2H() / X.h3;
    QQ gamma = lower_from_eps > lower_from_todd ? lower_from_eps : lower_from_todd;
    GammaCert cert{eps, gamma, gamma * X.h3 - X.td2H()};
    if (cert.gammaH < 0) throw std::logic_error("one-cycle pairing came out negative");
    return cert;
}

bool chain_hypotheses(const ChernThreefold& v, const QQ& eps, const ThreefoldGeometry& X) {
    if (!v.c1_proportional)
        throw std::invalid_argument("chain audit needs ch1 proportional to H");
    if (!(eps > 0)) throw std::domain_error("eps must be positive");
    X.validate();
    if (!(v.c1H2 > 0)) return false;
    if (!(v.r * X.h3 * eps <= v.c1H2)) return false;
    if (!(delta_H(v, X) >= 0)) return false;
    QQ section_cap = v.r + v.c1H2 / (X.h3 * eps) - X.td2H() * (v.c1H2 / X.h3);
    return v.ch3 <= section_cap;
}

std::optional<QQ> chain_check(const ChernThreefold& v, const QQ& eps, const ThreefoldGeometry& X) {
    if (!chain_hypotheses(v, eps, X)) return std::nullopt;
    GammaCert gc = gamma_cycle(eps, X);
    return q_form(v, 0, 0, gc.gammaH, X);
}

bool verify_ch2_chain(long samples, const QQ& eps, const ThreefoldGeometry& X,
                      std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    for (long i = 0; i < samples; ++i) {
        // Per-index seeding keeps the draw for index i independent of how the
        // index range is split across workers.
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i))));
        std::uniform_int_distribution<long> rank(-200, 200);
        std::uniform_int_distribution<long> pos_num(1, 480);
        std::uniform_int_distribution<long> num(-480, 480);
        std::uniform_int_distribution<long> den(1, 24);
        ChernThreefold v{QQ(rank(rng)), QQ(pos_num(rng)) / QQ(den(rng)),
                         QQ(num(rng)) / QQ(den(rng)), QQ(num(rng)) / QQ(den(rng)), true};
        std::optional<QQ> q = chain_check(v, eps, X);
        if (q && *q < 0) return false;
    }
    return true;
}

QQ epsilon_from_delta(const QQ& delta) {
    if (!(delta > 0)) throw std::domain_error("delta must be positive");
    return delta / (2 + 3 * delta);
}

QQ delta_from_epsilon(const QQ& eps) {
    require_unit_interval_third(eps);
    return 2 * eps / (1 - 3 * eps);
}

namespace {

/// Both smooth-case step conditions at delta = k/grid; downward closed in k.
bool smooth_step_ok(long k, long grid, const QQ& m, long n, const QQ& tail_const) {
    QQ d = QQ(k) / QQ(grid);
    if (!(d * d * 2 * m * m * QQ(n) * QQ(n) <= 1)) return false;
    return d * d + d + 2 * tail_const <= 0;
}

/// Largest k >= 1 passing the step conditions, or 0 when none.  The lattice
/// condition fails for all large k, so doubling always brackets the boundary.
long largest_grid_step(long grid, const QQ& m, long n, const QQ& tail_const) {
    if (!smooth_step_ok(1, grid, m, n, tail_const)) return 0;
    long hi = 2;
    while (smooth_step_ok(hi, grid, m, n, tail_const)) hi *= 2;
    long lo = hi / 2;
    while (lo + 1 < hi) {
        long midpoint = lo + (hi - lo) / 2;
        if (smooth_step_ok(midpoint, grid, m, n, tail_const))
            lo = midpoint;
        else
            hi = midpoint;
    }
    return lo;
}

}  // namespace

EpsilonCert epsilon_for_surface(const QQ& A, const QQ& chi, const QQ& m, long g, bool smooth) {
    if (!(m > 0)) throw std::invalid_argument("m must be positive");
    EpsilonCert cert;
    cert.A = A;
    cert.chi = chi;
    cert.m = m;
    cert.g = g;
    cert.smooth = smooth;
    if (smooth) {
        if (!(A < chi)) throw NoCertificate("section bound must be below chi");
        long n = 2;
        while (!(QQ(1) / (QQ(n) * QQ(n)) < chi - A)) ++n;
        cert.n = n;
        QQ tail_const = (A - chi + QQ(1) / (QQ(n) * QQ(n))) / (2 * m);
        long k = largest_grid_step(100, m, n, tail_const);
        long grid = 100;
        if (k == 0) {
            k = largest_grid_step(10000, m, n, tail_const);
            grid = 10000;
        }
        if (k == 0) throw NoCertificate("no positive step at the supported resolution");
        cert.delta = QQ(k) / QQ(grid);
    } else {
        if (!(A < chi - 1)) throw NoCertificate("section bound must be below chi - 1");
        QQ slack_cap = 2 * (chi - 1 - A) / (3 * m);
        QQ genus_cap = QQ(2 * g - 2) / m;
        cert.delta = slack_cap < genus_cap ? slack_cap : genus_cap;
        if (!(cert.delta > 0)) throw NoCertificate("genus admits no positive step");
    }
    cert.epsilon = epsilon_from_delta(cert.delta);
    if (!audit_epsilon_cert(cert)) throw std::logic_error("certificate failed its self-audit");
    return cert;
}

bool audit_epsilon_cert(const EpsilonCert& cert) {
    if (!(cert.delta > 0)) return false;
    if (cert.epsilon != cert.delta / (2 + 3 * cert.delta)) return false;
    if (!(cert.m > 0)) return false;
    if (cert.smooth) {
        if (cert.n < 2) return false;
        QQ n2 = QQ(cert.n) * QQ(cert.n);
        if (!(cert.A < cert.chi - 1 / n2)) return false;
        if (!(cert.delta * cert.delta * 2 * cert.m * cert.m * n2 <= 1)) return false;
        // Supremum over [0, delta) of an increasing polynomial: value at the
        // closed right endpoint must be <= 0.
        QQ at_delta = cert.delta * cert.delta / 2 + cert.delta / 2 +
                      (cert.A - cert.chi + 1 / n2) / (2 * cert.m);
        return at_delta <= 0;
    }
    if (!(cert.A < cert.chi - 1)) return false;
    if (!(cert.delta * cert.m <= 2 * cert.g - 2)) return false;
    QQ at_delta = 3 * cert.delta / 2 + (cert.A - cert.chi + 1) / cert.m;
    return at_delta <= 0;
}

Verdict check_main_criterion(const BNBound& bn, const QQ& chi, bool smooth) {
    if (bn.kind == BoundKind::Lower)
        throw std::invalid_argument("criterion needs an upper or exact bound");
    QQ threshold = smooth ? chi : chi - 1;
    return bn.value.compare(threshold) < 0 ? Verdict::Holds : Verdict::Inconclusive;
}

}  // namespace cy3
