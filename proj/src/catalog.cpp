#include "cy3check/catalog.hpp"

#include "cy3check/invariants.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cy3 {

namespace {

/// Second elementary symmetric function, accumulated pairwise (e1-so-far
/// times the next value); the tests recompute this through power sums.
QQ elem2(const std::vector<long>& xs) {
    QQ e1(0), e2(0);
    for (long x : xs) {
        e2 += e1 * x;
        e1 += x;
    }
    return e2;
}

/// chi(O_Y(n H_Y)) for a Fano threefold Y of index r and degree h = H_Y^3,
/// by Riemann-Roch with c2(Y).H_Y = 24/r.
QQ fano_chi_line(long r, const QQ& h, long n) {
    QQ nn(n);
    return nn * nn * nn * h / 6 + r * nn * nn * h / 4 + nn * (QQ(r) * r * h + QQ(24) / r) / 12 + 1;
}

/// chi(O_X(n H)) on the degree-d cyclic cover of Y: the pushforward of O_X
/// splits into line bundles O_Y(n - j*t) with t = r/(d-1), j = 0..d-1.
QQ cover_chi_line(long r, long d, const QQ& hY3, long n) {
    long t = r / (d - 1);
    QQ total(0);
    for (long j = 0; j < d; ++j) total += fano_chi_line(r, hY3, n - j * t);
    return total;
}

/// Smallest convenient rational that is >= the bound and still < chi:
/// the bound itself when rational, otherwise a dyadic ceiling refined until
/// it drops below chi (possible since bound < chi).
QQ rational_at_least(const Surd& bound, const QQ& chi) {
    if (bound.is_rational()) return bound.as_rational();
    ZZ denom(1);
    for (int k = 0; k < 256; ++k) {
        QQ a = (QQ(bound.scaled(QQ(denom)).floor()) + 1) / QQ(denom);
        if (bound.compare(a) <= 0 && a < chi) return a;
        denom *= 2;
    }
    throw std::logic_error("no rational between bound and chi found");
}

std::string threshold_note(const QQ& h3, const QQ& c2H, bool second) {
    QQ rhs = 4 * h3 + (second ? 6 : 12);
    bool pass = c2H > rhs;
    std::string s = second ? "very-ample variant c2H > 4*h3+6: " : "threshold c2H > 4*h3+12: ";
    s += format_rational(c2H);
    s += pass ? " > " : " <= ";
    s += format_rational(rhs);
    s += pass ? ", passes" : ", fails";
    return s;
}

/// Build the two certificates for a report whose verdict is Holds.
void attach_certificates(Report& rep) {
    QQ a = rational_at_least(rep.bn.value, rep.chi);
    long g = is_integer(rep.h3) ? to_integer(rep.h3).get_si() + 1 : 0;
    rep.eps = epsilon_for_surface(a, rep.chi, rep.h3, g, /*smooth=*/true);
    ThreefoldGeometry geom{rep.family, rep.h3, rep.c2H};
    geom.validate();
    rep.gamma = gamma_cycle(rep.eps->epsilon, geom);
}

/// Run the threshold route on already-known degree data and fill the report:
/// the plain form pairs with the slope bound h3/2 + 1, the very-ample form
/// with the Clifford-index-one bound h3/2 + 1/2.
void run_threshold_route(Report& rep, bool veryAmple2H) {
    rep.route = veryAmple2H ? route_name(Route::BasepointFreeCorVeryAmple2H)
                            : route_name(Route::BasepointFreeCor);
    if (veryAmple2H) {
        if (!is_integer(rep.h3))
            throw std::invalid_argument("very-ample route needs an integer degree");
        long g = to_integer(rep.h3).get_si() + 1;
        rep.bn = clifford_bound(g, 1);
        rep.alternatives.push_back(threshold_note(rep.h3, rep.c2H, false));
    } else {
        rep.bn = weak_bound(rep.h3);
    }
    rep.verdict = check_basepoint_free_cor(rep.h3, rep.c2H, veryAmple2H);
    // The threshold is algebraically the strict section-count comparison for
    // this bound; a disagreement here would mean a transcription bug.
    Verdict main = check_main_criterion(rep.bn, rep.chi, /*smooth=*/true);
    if ((rep.verdict == Verdict::Holds) != (main == Verdict::Holds))
        throw std::logic_error("threshold route disagrees with the direct comparison");
}

/// Genus consistency for a curve in |s H_S| on a surface section of degree
/// m: 2(g-1) must equal s(s-1)m on a del Pezzo (anticanonical polarisation)
/// and s^2 m on a K3, and g-1 is the threefold degree at the checking scale.
void check_embed_genus(const QQ& h3, long s, const QQ& m, bool k3) {
    QQ lhs = k3 ? QQ(s) * s * m : QQ(s) * (s - 1) * m;
    if (lhs != 2 * h3) throw std::logic_error("embed parameters inconsistent with the degree");
}

void finish_report(Report& rep) {
    if (rep.verdict == Verdict::Holds) attach_certificates(rep);
}

}  // namespace

const char* route_name(Route route) {
    switch (route) {
        case Route::Fano4: return "Fano4";
        case Route::BasepointFreeCor: return "BasepointFreeCor";
        case Route::BasepointFreeCorVeryAmple2H: return "BasepointFreeCorVeryAmple2H";
        case Route::K3Embed: return "K3Embed";
        case Route::DelPezzoEmbed: return "DelPezzoEmbed";
    }
    return "?";
}

WCIInvariants wci_invariants(const std::vector<long>& weights, const std::vector<long>& degrees,
                             long k) {
    if (degrees.empty()) throw std::invalid_argument("degree list must be nonempty");
    if (k < 1) throw std::invalid_argument("scale must be positive");
    long sw = 0, sd = 0;
    for (long w : weights) {
        if (w <= 0) throw std::invalid_argument("weights must be positive");
        sw += w;
    }
    for (long d : degrees) {
        if (d <= 0) throw std::invalid_argument("degrees must be positive");
        sd += d;
    }
    if (sw != sd) throw std::invalid_argument("weights and degrees must have equal sums");
    QQ deg(1);
    for (long d : degrees) deg *= d;
    for (long w : weights) deg /= w;
    WCIInvariants inv;
    inv.h3 = QQ(k) * k * k * deg;
    inv.c2H = QQ(k) * (elem2(weights) - elem2(degrees)) * deg;
    inv.chi = inv.h3 / 6 + inv.c2H / 12;
    return inv;
}

Verdict check_basepoint_free_cor(const QQ& h3, const QQ& c2H, bool veryAmple2H) {
    QQ chi = h3 / 6 + c2H / 12;
    bool first = c2H > 4 * h3 + 12;
    bool second = c2H > 4 * h3 + 6;
    // Both thresholds are linear rewrites of a section-count comparison;
    // check the identities on every call.
    if (sgn(c2H - 4 * h3 - 12) != sgn(chi - h3 / 2 - 1))
        throw std::logic_error("threshold/section-count identity violated");
    if (second != (h3 / 2 + QQ(1) / 2 < chi))
        throw std::logic_error("very-ample threshold identity violated");
    return (veryAmple2H ? second : first) ? Verdict::Holds : Verdict::Fails;
}

Report check_wci(const WCIFamily& fam) {
    Report rep;
    rep.family = fam.name;
    rep.scale = fam.scale;
    WCIInvariants inv = wci_invariants(fam.weights, fam.degrees, fam.scale);
    rep.h3 = inv.h3;
    rep.c2H = inv.c2H;
    rep.chi = inv.chi;
    switch (fam.route) {
        case Route::BasepointFreeCor:
            run_threshold_route(rep, false);
            break;
        case Route::BasepointFreeCorVeryAmple2H:
            run_threshold_route(rep, true);
            break;
        case Route::Fano4: {
            if (!fam.fano4) throw std::invalid_argument("Fano4 route needs an attached record");
            if (fam.scale != 1)
                throw std::invalid_argument("Fano4 route is checked at the ambient polarisation");
            const Fano4Record& amb = *fam.fano4;
            if (amb.r < 2 || amb.r > 5) throw std::invalid_argument("ambient index out of range");
            // Degree transfer: restricting the ambient polarisation to an
            // anticanonical member multiplies its top degree by the index.
            if (QQ(amb.r) * amb.m != inv.h3)
                throw std::logic_error("ambient record degree disagrees with the weighted model");
            if (amb.chiOH != 0 && amb.chiOH != inv.chi)
                throw std::logic_error("ambient section count disagrees with the weighted model");
            rep.route = route_name(Route::Fano4);
            if (amb.r >= 4) {
                rep.bn = weak_bound(rep.h3);
            } else if (amb.r == 3) {
                check_embed_genus(rep.h3, 3, amb.m, false);
                rep.bn = bn_upper_delpezzo(3, amb.m);
            } else if (amb.picardRankOne) {
                check_embed_genus(rep.h3, 2, amb.m, true);
                rep.bn = bn_upper_k3(2, amb.m);
            } else {
                rep.bn = weak_bound(rep.h3);
                rep.alternatives.push_back("surface-section route needs Picard rank one");
                rep.alternatives.push_back(threshold_note(rep.h3, rep.c2H, false));
                rep.alternatives.push_back(threshold_note(rep.h3, rep.c2H, true));
                rep.verdict = Verdict::Inconclusive;
                return rep;
            }
            rep.verdict = check_main_criterion(rep.bn, rep.chi, /*smooth=*/true);
            rep.alternatives.push_back(threshold_note(rep.h3, rep.c2H, false));
            rep.alternatives.push_back(threshold_note(rep.h3, rep.c2H, true));
            break;
        }
        case Route::K3Embed:
            check_embed_genus(rep.h3, fam.s, fam.m, true);
            rep.route = route_name(Route::K3Embed);
            rep.bn = bn_upper_k3(fam.s, fam.m);
            rep.verdict = check_main_criterion(rep.bn, rep.chi, /*smooth=*/true);
            rep.alternatives.push_back(threshold_note(rep.h3, rep.c2H, false));
            rep.alternatives.push_back(threshold_note(rep.h3, rep.c2H, true));
            break;
        case Route::DelPezzoEmbed:
            check_embed_genus(rep.h3, fam.s, fam.m, false);
            rep.route = route_name(Route::DelPezzoEmbed);
            rep.bn = bn_upper_delpezzo(fam.s, fam.m);
            rep.verdict = check_main_criterion(rep.bn, rep.chi, /*smooth=*/true);
            rep.alternatives.push_back(threshold_note(rep.h3, rep.c2H, false));
            rep.alternatives.push_back(threshold_note(rep.h3, rep.c2H, true));
            break;
    }
    finish_report(rep);
    return rep;
}

Report check_fano4(const Fano4Record& rec) {
    Report rep;
    rep.family = rec.name;
    if (rec.routeOverride) {
        // Polarisation supplied directly; the index plays no role here.
        if (rec.h3 <= 0) throw std::invalid_argument("route override needs the degree h3");
        if (rec.chiOH == 0) throw std::invalid_argument("route override needs chiOH");
        rep.h3 = rec.h3;
        rep.chi = rec.chiOH;
        rep.c2H = 12 * rep.chi - 2 * rep.h3;
        bool second = *rec.routeOverride == Route::BasepointFreeCorVeryAmple2H;
        if (!second && *rec.routeOverride != Route::BasepointFreeCor)
            throw std::invalid_argument("route override must name a threshold route");
        run_threshold_route(rep, second);
        finish_report(rep);
        return rep;
    }
    if (rec.r < 2 || rec.r > 5) throw std::invalid_argument("index out of range [2,5]");
    if (rec.m <= 0) throw std::invalid_argument("fourfold degree must be positive");
    if (rec.chiOH == 0) throw std::invalid_argument("chiOH required for a standalone record");
    rep.h3 = QQ(rec.r) * rec.m;
    rep.chi = rec.chiOH;
    rep.c2H = 12 * rep.chi - 2 * rep.h3;
    rep.route = route_name(Route::Fano4);
    if (rec.r >= 4) {
        rep.bn = weak_bound(rep.h3);
    } else if (rec.r == 3) {
        check_embed_genus(rep.h3, 3, rec.m, false);
        rep.bn = bn_upper_delpezzo(3, rec.m);
    } else if (rec.picardRankOne) {
        check_embed_genus(rep.h3, 2, rec.m, true);
        rep.bn = bn_upper_k3(2, rec.m);
    } else {
        rep.bn = weak_bound(rep.h3);
        rep.alternatives.push_back("surface-section route needs Picard rank one");
        rep.verdict = Verdict::Inconclusive;
        return rep;
    }
    rep.verdict = check_main_criterion(rep.bn, rep.chi, /*smooth=*/true);
    rep.alternatives.push_back(threshold_note(rep.h3, rep.c2H, false));
    finish_report(rep);
    return rep;
}

Report check_cyclic_cover(const CoverRecord& rec) {
    if (rec.d < 2) throw std::invalid_argument("cover degree must be at least 2");
    if (rec.r < 1 || rec.r > 4) throw std::invalid_argument("index out of range [1,4]");
    if (rec.r % (rec.d - 1) != 0)
        throw std::invalid_argument("cover degree incompatible with the index");
    if (rec.hY3 <= 0) throw std::invalid_argument("base degree must be positive");
    Report rep;
    rep.family = rec.name;
    rep.h3 = QQ(rec.d) * rec.hY3;
    rep.chi = cover_chi_line(rec.r, rec.d, rec.hY3, 1);
    rep.c2H = 12 * rep.chi - 2 * rep.h3;
    if (cover_chi_line(rec.r, rec.d, rec.hY3, 0) != 0)
        throw std::logic_error("cover has nonzero structure-sheaf characteristic");
    if (!is_integer(rep.h3)) throw std::invalid_argument("cover degree data must give integer h3");
    long g = to_integer(rep.h3).get_si() + 1;
    if (!rec.branchGeneral) {
        rep.bn = weak_bound(rep.h3);
        rep.route = "WeakBound";
        rep.alternatives.push_back("branch divisor not general: smoothness of the cover unknown");
        rep.verdict = Verdict::Inconclusive;
        return rep;
    }
    if (rec.r >= 3 || (rec.r == 2 && rec.d == 2)) {
        rep.route = "WeakBound";
        rep.bn = weak_bound(rep.h3);
    } else if (rec.r == 2 && rec.d == 3) {
        // Curve sits in |3 H_D| on a del Pezzo section D of the base.
        check_embed_genus(rep.h3, 3, rec.hY3, false);
        rep.route = route_name(Route::DelPezzoEmbed);
        rep.bn = bn_upper_delpezzo(3, rec.hY3);
    } else {  // r == 1, d == 2
        if (rec.hY3 <= 4) {
            rep.route = "WeakBound";
            rep.bn = weak_bound(rep.h3);
        } else if (rec.hY3 == 6 && rec.picardRank == 10) {
            // The known exception: the curve is forced to carry a pencil of
            // degree 2, which pins its section count at exactly chi.
            CurveProfile prof;
            prof.g = g;
            prof.gonality = 2;
            prof.special = SpecialCurve::Hyperelliptic;
            bool found = false;
            for (const BNBound& b : bn_lower(prof, rep.chi)) {
                if (b.kind == BoundKind::Exact) {
                    rep.bn = b;
                    found = true;
                }
            }
            if (!found) throw std::logic_error("no exact value for the special pencil profile");
            rep.route = "HyperellipticExact";
        } else if (rec.hY3 == 6) {
            // Genus 13 curve double-covering a genus 4 curve: a pencil of
            // degree <= 3 would violate the two-cover genus bound, so the
            // gonality is >= 4 and the Clifford index >= 2.
            QQ base_genus = rec.hY3 / 2 + 1;
            if (!is_integer(base_genus)) throw std::logic_error("base curve genus not integral");
            long g1 = to_integer(base_genus).get_si();
            if (castelnuovo_severi(g, g1, 2, 0, 3)) {
                rep.bn = weak_bound(rep.h3);
                rep.route = "WeakBound";
                rep.alternatives.push_back("gonality exclusion unavailable for this genus");
                rep.verdict = Verdict::Inconclusive;
                return rep;
            }
            rep.bn = clifford_bound(g, 2);
            rep.route = "CastelnuovoSeveriClifford";
        } else if (rec.picardRank == 1) {
            check_embed_genus(rep.h3, 2, rec.hY3, true);
            rep.route = route_name(Route::K3Embed);
            rep.bn = bn_upper_k3(2, rec.hY3);
        } else {
            rep.bn = weak_bound(rep.h3);
            rep.route = "WeakBound";
            rep.alternatives.push_back("no branch covers this base degree and Picard rank");
            rep.verdict = Verdict::Inconclusive;
            return rep;
        }
    }
    rep.verdict = check_main_criterion(rep.bn, rep.chi, /*smooth=*/true);
    finish_report(rep);
    return rep;
}

std::vector<Report> run_catalog(const Catalog& cat, const CatalogOptions& opt) {
    std::vector<Report> out;
    auto wanted = [&](const std::string& name) { return !opt.family || *opt.family == name; };
    auto guarded = [&](const std::string& name, auto&& fn) {
        if (!wanted(name)) return;
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            Report rep;
            rep.family = name;
            rep.error = e.what();
            out.push_back(rep);
        }
    };
    for (const WCIFamily& fam : cat.wci) guarded(fam.name, [&] { return check_wci(fam); });
    for (const Fano4Record& rec : cat.fano4) guarded(rec.name, [&] { return check_fano4(rec); });
    for (const CoverRecord& rec : cat.covers)
        guarded(rec.name, [&] { return check_cyclic_cover(rec); });
    return out;
}

namespace {

using nlohmann::json;

QQ json_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return QQ(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw std::runtime_error(where + ": " + e.what());
        }
    }
    throw std::runtime_error(where + ": expected an integer or a \"p/q\" string");
}

Route parse_route(const std::string& text, const std::string& where) {
    for (Route r : {Route::Fano4, Route::BasepointFreeCor, Route::BasepointFreeCorVeryAmple2H,
                    Route::K3Embed, Route::DelPezzoEmbed})
        if (text == route_name(r)) return r;
    throw std::runtime_error(where + ": unknown route \"" + text + "\"");
}

std::vector<long> json_longs(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::runtime_error(where + ": expected an array of integers");
    std::vector<long> out;
    for (const json& v : j) {
        if (!v.is_number_integer()) throw std::runtime_error(where + ": expected integers");
        out.push_back(v.get<long>());
    }
    return out;
}

Fano4Record parse_fano4(const json& j, const std::string& where) {
    Fano4Record rec;
    rec.name = j.value("name", std::string());
    rec.r = j.value("r", 0L);
    if (j.contains("m")) rec.m = json_rational(j.at("m"), where + ".m");
    rec.picardRankOne = j.value("picardRankOne", false);
    if (j.contains("chiOH")) rec.chiOH = json_rational(j.at("chiOH"), where + ".chiOH");
    if (j.contains("routeOverride"))
        rec.routeOverride =
            parse_route(j.at("routeOverride").get<std::string>(), where + ".routeOverride");
    if (j.contains("h3")) rec.h3 = json_rational(j.at("h3"), where + ".h3");
    rec.notes = j.value("notes", std::string());
    return rec;
}

}  // namespace

Catalog parse_catalog(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("catalog parse error: ") + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("catalog must be a JSON object");
    Catalog cat;
    if (doc.contains("wci")) {
        for (const json& j : doc.at("wci")) {
            std::string where = "wci[" + j.value("name", std::string("?")) + "]";
            WCIFamily fam;
            fam.name = j.value("name", std::string());
            fam.weights = json_longs(j.at("weights"), where + ".weights");
            fam.degrees = json_longs(j.at("degrees"), where + ".degrees");
            fam.scale = j.value("scale", 1L);
            fam.route = parse_route(j.at("route").get<std::string>(), where + ".route");
            fam.s = j.value("s", 0L);
            if (j.contains("m")) fam.m = json_rational(j.at("m"), where + ".m");
            if (j.contains("fano4")) fam.fano4 = parse_fano4(j.at("fano4"), where + ".fano4");
            fam.notes = j.value("notes", std::string());
            cat.wci.push_back(std::move(fam));
        }
    }
    if (doc.contains("fano4")) {
        for (const json& j : doc.at("fano4")) {
            std::string where = "fano4[" + j.value("name", std::string("?")) + "]";
            cat.fano4.push_back(parse_fano4(j, where));
        }
    }
    if (doc.contains("covers")) {
        for (const json& j : doc.at("covers")) {
            std::string where = "covers[" + j.value("name", std::string("?")) + "]";
            CoverRecord rec;
            rec.name = j.value("name", std::string());
            rec.r = j.value("r", 0L);
            rec.d = j.value("d", 0L);
            if (j.contains("hY3")) rec.hY3 = json_rational(j.at("hY3"), where + ".hY3");
            rec.picardRank = j.value("picardRank", 1L);
            rec.branchGeneral = j.value("branchGeneral", true);
            rec.notes = j.value("notes", std::string());
            cat.covers.push_back(std::move(rec));
        }
    }
    return cat;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

}  // namespace cy3
