#pragma once

#include "cy3check/bmtchain.hpp"
#include "cy3check/bnbounds.hpp"
#include "cy3check/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cy3 {

/// How a family's section bound is obtained.  The two corollary variants
/// differ only in the threshold (c2H > 4*h3 + 12 versus > 4*h3 + 6, the
/// latter available when twice the polarisation is very ample); the embed
/// routes pass through a surface section of the stated kind.
enum class Route {
    Fano4,
    BasepointFreeCor,
    BasepointFreeCorVeryAmple2H,
    K3Embed,
    DelPezzoEmbed,
};

const char* route_name(Route route);

/// Anticanonical hypersurface in a Fano fourfold M of index r with
/// H_M^4 = m.  chiOH is chi(O_X(H)); it is external input unless the record
/// is attached to a weighted-model family, in which case both values are
/// computed and must agree.  Records whose polarisation does not come from
/// the index generator carry an explicit route and degree instead
/// (routeOverride + h3); for those, r and m are bookkeeping only.
struct Fano4Record {
    std::string name;
    long r = 0;
    QQ m = 0;
    bool picardRankOne = false;
    QQ chiOH = 0;
    std::optional<Route> routeOverride;
    QQ h3 = 0;  // only read when routeOverride is set
    std::string notes;
};

/// Complete intersection of the given degrees in weighted projective space,
/// checked with the polarisation scale*H.  The embed routes carry the
/// section data (s, m): the curve lies in |s H_S| on a surface section of
/// degree m.  Quasi-smoothness and the quoted ampleness facts are data
/// assertions recorded in notes, not verified here.
struct WCIFamily {
    std::string name;
    std::vector<long> weights;
    std::vector<long> degrees;
    long scale = 1;
    Route route = Route::BasepointFreeCor;
    long s = 0;
    QQ m = 0;
    std::optional<Fano4Record> fano4;
    std::string notes;
};

/// Degree-d cyclic cover X -> Y of a Fano threefold Y of index r with
/// H_Y^3 = hY3, branched in a general member of the anticanonically
/// determined linear system (so that X is Calabi-Yau); (d-1) must divide r.
struct CoverRecord {
    std::string name;
    long r = 0;
    long d = 0;
    QQ hY3 = 0;
    long picardRank = 1;
    bool branchGeneral = true;
    std::string notes;
};

struct WCIInvariants {
    QQ h3, c2H, chi;
};

/// Degrees of the polarisation kH on the complete intersection:
/// h3 = k^3 prod(d)/prod(w), c2H = k (e2(weights) - e2(degrees)) prod(d)/prod(w),
/// chi = h3/6 + c2H/12.  Requires sum(weights) == sum(degrees) (trivial
/// canonical class) and a nonempty degree list.
WCIInvariants wci_invariants(const std::vector<long>& weights, const std::vector<long>& degrees,
                             long k);

/// Strict threshold test c2H > 4*h3 + 12, or c2H > 4*h3 + 6 when twice the
/// polarisation is very ample.  Returns Holds or Fails.  Also re-checks the
/// algebraic identity making the first threshold equivalent to
/// h3/2 + 1 < chi with chi = h3/6 + c2H/12 (and the second equivalent to
/// h3/2 + 1/2 < chi), throwing std::logic_error if either ever disagrees.
Verdict check_basepoint_free_cor(const QQ& h3, const QQ& c2H, bool veryAmple2H);

/// Outcome for one catalog record.  h3/c2H/chi are at the checking scale.
/// Certificates are attached exactly when the verdict is Holds; the epsilon
/// certificate is built for the smallest convenient rational A at least the
/// section bound.  alternatives lists the outcomes of routes that were
/// considered and rejected (or would fail), for transparency.  error is
/// nonempty when the record could not be processed at all.
struct Report {
    std::string family;
    QQ h3 = 0, c2H = 0, chi = 0;
    long scale = 1;
    std::string route;  // route_name(...) or a cover-branch label
    BNBound bn{Surd(0), BoundSource::WeakBound, BoundKind::Upper};
    Verdict verdict = Verdict::Inconclusive;
    std::optional<EpsilonCert> eps;
    std::optional<GammaCert> gamma;
    std::vector<std::string> alternatives;
    std::string error;
};

/// Check one weighted family along its assigned route.  Fano4 routes require
/// the attached fourfold record and cross-check h3 = r*m at scale 1 (and
/// chiOH when supplied).  Throws std::invalid_argument on malformed data.
Report check_wci(const WCIFamily& fam);

/// Check one anticanonical-in-fourfold record: r >= 4 uses the slope bound
/// h3/2 + 1, r = 3 embeds the curve in a del Pezzo section, r = 2 with
/// Picard rank one embeds it in a K3 section; r = 2 without that hypothesis
/// is Inconclusive.  Records with routeOverride run the threshold test on
/// their explicit (h3, chiOH) data instead.  Rejects r outside [2, 5].
Report check_fano4(const Fano4Record& rec);

/// Check one cyclic-cover record, reproducing the case split on (r, d):
/// weak slope bounds for r >= 2 except the del Pezzo embed at (r,d) = (2,3);
/// for r = 1, d = 2 the branch depends on hY3 and the Picard rank: weak
/// bound for hY3 <= 4, a gonality exclusion plus Clifford bound at hY3 = 6
/// (except Picard rank 10, where the section count is exactly chi and the
/// criterion is inconclusive), and a K3 embed for hY3 > 6 with Picard rank
/// one.  chi(O_X(H)) is computed by summing Riemann-Roch on Y over the
/// pieces of the pushforward of O_X; the computation is cross-checked by
/// chi(O_X) = 0.  Rejects records with (d-1) not dividing r or d < 2.
Report check_cyclic_cover(const CoverRecord& rec);

struct Catalog {
    std::vector<WCIFamily> wci;
    std::vector<Fano4Record> fano4;
    std::vector<CoverRecord> covers;
};

struct CatalogOptions {
    std::optional<std::string> family;  // check only the record with this name
};

/// One report per record, in input order (wci, then fano4, then covers).
/// Exceptions from individual records are captured in the report's error
/// field rather than aborting the run.
std::vector<Report> run_catalog(const Catalog& cat, const CatalogOptions& opt = {});

/// Parse a catalog from its JSON text / load it from a file.  Top-level keys
/// "wci", "fano4", "covers" (each optional) hold arrays of records with
/// fields named as in the structs above; rationals may be integers or "p/q"
/// strings.  Throws std::runtime_error with a descriptive message on
/// malformed input.
Catalog parse_catalog(const std::string& text);
Catalog load_catalog(const std::string& path);

}  // namespace cy3
