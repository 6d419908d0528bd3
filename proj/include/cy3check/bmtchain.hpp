#pragma once

#include "cy3check/bnbounds.hpp"
#include "cy3check/invariants.hpp"
#include "cy3check/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace cy3 {

/// Outcome of a criterion check: Holds when the inequality chain closes,
/// Fails when a required strict inequality is violated outright, and
/// Inconclusive when the data leave the question open.
enum class Verdict { Holds, Inconclusive, Fails };

/// Thrown when no certificate exists for the requested data (for example the
/// section bound is too large for the target Euler characteristic).
struct NoCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BGStatus { Satisfies, Violates, OutOfRange };

/// Certificate for the curve-to-surface reduction step.  Records the inputs
/// (section bound A, chi = chi(O_S), m = H^2 on the surface, curve genus g)
/// together with the derived data: in the smooth case the lattice parameter
/// n >= 2 with A < chi - 1/n^2, and in both cases the step size delta and the
/// final slope threshold epsilon = delta/(2+3*delta).  g only constrains the
/// singular case; n is 0 for singular certificates.
struct EpsilonCert {
    QQ A;
    QQ chi;
    QQ m;
    long g = 0;
    bool smooth = true;
    long n = 0;
    QQ delta;
    QQ epsilon;
};

/// The corrected one-cycle scale for the ch2-to-ch3 step: gamma is the least
/// admissible multiplier and gammaH = gamma*H^3 - td2(X).H >= 0 is the pairing
/// of the corrected cycle with H.
struct GammaCert {
    QQ epsilon;
    QQ gamma;
    QQ gammaH;
};

/// Even piecewise penalty with three branches on x >= 0: -x/2 up to eps, a
/// connecting line up to 2*eps/(1-eps), then x^2/2.  Continuous, and bounded
/// below by -x/2 with equality exactly on [0, eps].  Requires 0 < eps < 1/3.
QQ f_epsilon(const QQ& x, const QQ& eps);

/// Strengthened discriminant test near slope zero.  OutOfRange unless the
/// class has positive rank and slope in (0, eps]; otherwise Satisfies exactly
/// when ch2.H^{n-2} < -ch1.H^{n-1}/2 holds strictly.
BGStatus bg_predicate(const ChernSurface& v, const QQ& eps, const SurfaceGeometry& S);
BGStatus bg_predicate(const ChernThreefold& v, const QQ& eps, const ThreefoldGeometry& X);

/// Quadratic form of the corrected ch3 inequality at parameters (b, w) with
/// one-cycle pairing gammaH.  Requires the ch1-proportional flag: the cycle
/// pairs against ch1 through gammaH * (ch1^{bH}.H^2 / H^3).
QQ q_form(const ChernThreefold& v, const QQ& b, const QQ& w, const QQ& gammaH,
          const ThreefoldGeometry& X);

/// Parameter region where the ch3 inequality is asserted:
/// w > b^2/2 + frac(b)*(1-frac(b))/2.
bool bmt_region_contains(const QQ& b, const QQ& w);

/// Least admissible one-cycle scale for a given eps > 0:
/// gamma = max{4/(H^3 eps), td2(X).H/H^3}, gammaH = gamma*H^3 - td2(X).H.
GammaCert gamma_cycle(const QQ& eps, const ThreefoldGeometry& X);

/// Hypothesis filter for the ch2-to-ch3 audit: ch1.H^2 > 0, the rank cap
/// ch0 <= ch1.H^2/(H^3 eps), the discriminant inequality Delta_H >= 0, and
/// the section-count cap ch3 <= ch0 + ch1.H^2/(H^3 eps) - td2(X).ch1.
/// Requires the ch1-proportional flag.
bool chain_hypotheses(const ChernThreefold& v, const QQ& eps, const ThreefoldGeometry& X);

/// Value of the (0,0) quadratic form with the least admissible one-cycle for
/// classes passing the hypothesis filter; nullopt for filtered classes.
std::optional<QQ> chain_check(const ChernThreefold& v, const QQ& eps, const ThreefoldGeometry& X);

/// Randomized audit of the ch2-to-ch3 inequality chain: draws `samples`
/// rational classes from a bounded lattice box (|ch0| <= 200, numerators
/// bounded, denominators <= 24) and checks that every class passing
/// chain_hypotheses has nonnegative chain_check value.  Each sample's
/// generator is seeded from (seed, index), so the outcome is deterministic
/// and independent of how the index range is partitioned across workers.
bool verify_ch2_chain(long samples, const QQ& eps, const ThreefoldGeometry& X, std::uint64_t seed);

/// eps = delta/(2+3*delta) for delta > 0, and its exact inverse
/// delta = 2*eps/(1-3*eps) for 0 < eps < 1/3.
QQ epsilon_from_delta(const QQ& delta);
QQ delta_from_epsilon(const QQ& eps);

/// Builds a curve-to-surface reduction certificate.  Smooth case: picks the
/// smallest n >= 2 with A < chi - 1/n^2, then the largest delta on the
/// hundredths grid (falling back to ten-thousandths) satisfying both
/// delta^2 <= 1/(2 m^2 n^2) and x^2/2 + x/2 + (A-chi+1/n^2)/(2m) < 0 for all
/// x in [0, delta).  Singular case: delta is exactly
/// min{(2/3)(chi-1-A)/m, (2g-2)/m}.  Throws NoCertificate when A is too
/// large or no positive delta qualifies.  The returned certificate always
/// passes audit_epsilon_cert.
EpsilonCert epsilon_for_surface(const QQ& A, const QQ& chi, const QQ& m, long g, bool smooth);

/// Independent re-check of a certificate's recorded conditions.
bool audit_epsilon_cert(const EpsilonCert& cert);

/// Strict comparison of an upper or exact section bound against the Euler
/// characteristic threshold: bn < chi (smooth) or bn < chi - 1 (singular)
/// gives Holds, otherwise Inconclusive.  Lower bounds are rejected.
Verdict check_main_criterion(const BNBound& bn, const QQ& chi, bool smooth);

}  // namespace cy3
