#include "cy3check/catalog.hpp"

#include "cy3check/bmtchain.hpp"
#include "oracles.hpp"

#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace cy3;
using cy3test::oracle_wci_power_sums;

namespace {

bool has_note(const Report& rep, const std::string& needle) {
    for (const std::string& note : rep.alternatives)
        if (note.find(needle) != std::string::npos) return true;
    return false;
}

const Report& by_name(const std::vector<Report>& reports, const std::string& name) {
    for (const Report& rep : reports)
        if (rep.family == name) return rep;
    REQUIRE(false);
    return reports.front();
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("weighted-model degree data against the power-sum oracle") {
    std::vector<long> w5(5, 1);
    std::vector<long> d5{5};
    WCIInvariants quintic = wci_invariants(w5, d5, 1);
    CHECK(quintic.h3 == 5);
    CHECK(quintic.c2H == 50);
    CHECK(quintic.chi == 5);
    cy3test::OracleWCI oq = oracle_wci_power_sums(w5, d5, 1);
    CHECK(oq.h3 == quintic.h3);
    CHECK(oq.c2H == quintic.c2H);
    CHECK(oq.chi == quintic.chi);

    std::vector<long> w8{1, 1, 1, 1, 4};
    std::vector<long> d8{8};
    WCIInvariants octic = wci_invariants(w8, d8, 1);
    CHECK(octic.h3 == 2);
    CHECK(octic.c2H == 44);
    CHECK(octic.chi == 4);
    cy3test::OracleWCI oo = oracle_wci_power_sums(w8, d8, 1);
    CHECK(oo.h3 == octic.h3);
    CHECK(oo.c2H == octic.c2H);
    CHECK(oo.chi == octic.chi);

    std::vector<long> w46{1, 1, 1, 2, 2, 3};
    std::vector<long> d46{4, 6};
    WCIInvariants x46 = wci_invariants(w46, d46, 2);
    CHECK(x46.h3 == 16);
    CHECK(x46.c2H == 64);
    CHECK(x46.chi == 8);
    cy3test::OracleWCI o46 = oracle_wci_power_sums(w46, d46, 2);
    CHECK(o46.h3 == x46.h3);
    CHECK(o46.c2H == x46.c2H);
    CHECK(o46.chi == x46.chi);

    SUBCASE("scaling is cubic in the degree and linear in the slope term") {
        WCIInvariants base = wci_invariants(w46, d46, 1);
        CHECK(x46.h3 == 8 * base.h3);
        CHECK(x46.c2H == 2 * base.c2H);
    }

    SUBCASE("malformed input is rejected") {
        std::vector<long> short_w{1, 1, 1, 1};
        CHECK_THROWS_AS(wci_invariants(short_w, d5, 1), std::invalid_argument);
        std::vector<long> none;
        CHECK_THROWS_AS(wci_invariants(w5, none, 1), std::invalid_argument);
        CHECK_THROWS_AS(wci_invariants(w5, d5, 0), std::invalid_argument);
        std::vector<long> bad_w{1, 1, 1, 1, 0};
        std::vector<long> d4{4};
        CHECK_THROWS_AS(wci_invariants(bad_w, d4, 1), std::invalid_argument);
    }
}

TEST_CASE("threshold test and its section-count identity") {
    CHECK(check_basepoint_free_cor(QQ(3), QQ(42), false) == Verdict::Holds);
    // Equality is not enough for the strict form but the relaxed form passes.
    CHECK(check_basepoint_free_cor(QQ(12), QQ(60), false) == Verdict::Fails);
    CHECK(check_basepoint_free_cor(QQ(12), QQ(60), true) == Verdict::Holds);
    CHECK(check_basepoint_free_cor(QQ(16), QQ(64), false) == Verdict::Fails);
    CHECK(check_basepoint_free_cor(QQ(16), QQ(64), true) == Verdict::Fails);

    SUBCASE("threshold sign equals section-count sign on random data") {
        std::mt19937_64 rng(771204);
        std::uniform_int_distribution<long> num(-600, 600);
        std::uniform_int_distribution<long> den(1, 40);
        for (int i = 0; i < 1000; ++i) {
            QQ h3 = QQ(num(rng)) / den(rng);
            QQ c2H = QQ(num(rng)) / den(rng);
            QQ chi = h3 / 6 + c2H / 12;
            CHECK(sgn(c2H - 4 * h3 - 12) == sgn(chi - h3 / 2 - 1));
            // The checker re-derives the same identity internally.
            CHECK_NOTHROW(check_basepoint_free_cor(h3, c2H, i % 2 == 0));
        }
    }
}

TEST_CASE("bundled thirteen-family catalog") {
    Catalog cat = load_catalog(std::string(CY3_DATA_DIR) + "/hypergeo.json");
    REQUIRE(cat.wci.size() == 13);
    std::vector<Report> reports = run_catalog(cat);
    REQUIRE(reports.size() == 13);

    for (std::size_t i = 0; i < reports.size(); ++i) {
        const Report& rep = reports[i];
        CAPTURE(rep.family);
        CHECK(rep.error.empty());
        CHECK(rep.verdict == Verdict::Holds);
        CHECK(rep.family == cat.wci[i].name);  // input order preserved
        CHECK(is_integer(rep.chi));
        // Every passing report carries both certificates and they re-validate.
        CHECK(rep.bn.value.compare(rep.chi) < 0);
        REQUIRE(rep.eps.has_value());
        CHECK(audit_epsilon_cert(*rep.eps));
        CHECK(rep.eps->chi == rep.chi);
        REQUIRE(rep.gamma.has_value());
        CHECK(rep.gamma->gammaH >= 0);
        CHECK(rep.gamma->epsilon == rep.eps->epsilon);
        // Degree data agrees with the independent symmetric-function route.
        cy3test::OracleWCI ref =
            oracle_wci_power_sums(cat.wci[i].weights, cat.wci[i].degrees, cat.wci[i].scale);
        CHECK(rep.h3 == ref.h3);
        CHECK(rep.c2H == ref.c2H);
        CHECK(rep.chi == ref.chi);
    }

    SUBCASE("spot values") {
        const Report& x5 = by_name(reports, "X(5)");
        QQ bn_x5 = x5.bn.value.as_rational();
        CHECK(bn_x5 == QQ(7) / 2);
        CHECK(x5.chi == 5);
        QQ delta_x5(7, 100);
        QQ eps_x5(7, 221);
        CHECK(x5.eps->delta == delta_x5);
        CHECK(x5.eps->epsilon == eps_x5);

        const Report& x2222 = by_name(reports, "X(2,2,2,2)");
        CHECK(x2222.bn.value.as_rational() == 6);
        CHECK(x2222.chi == 8);
        CHECK(has_note(x2222, "64 <= 76"));
        CHECK(has_note(x2222, "64 <= 70"));

        const Report& x10 = by_name(reports, "X(10)");
        CHECK(x10.h3 == 8);
        CHECK(x10.c2H == 68);
        CHECK(x10.chi == 7);
        CHECK(x10.bn.value.as_rational() == 5);

        const Report& x66 = by_name(reports, "X(6,6)");
        QQ bn_x66 = x66.bn.value.as_rational();
        QQ nine_halves(9, 2);
        CHECK(bn_x66 == nine_halves);
        CHECK(x66.chi == 5);
        CHECK(has_note(x66, "44 <= 44"));  // the strict form misses by equality

        const Report& x46 = by_name(reports, "X(4,6)");
        Surd root48 = Surd::sqrt_of(QQ(48));
        CHECK(x46.bn.value == root48);
        CHECK(x46.chi == 8);
        CHECK(x46.h3 == 16);
        CHECK(x46.route == "K3Embed");
        CHECK(x46.eps->A == 7);  // smallest integer clearing the irrational bound
        QQ delta_x46(1, 50);
        QQ eps_x46(1, 103);
        CHECK(x46.eps->delta == delta_x46);
        CHECK(x46.eps->epsilon == eps_x46);
    }
}

TEST_CASE("fourfold records") {
    SUBCASE("surface-section bound for an index-2 ambient") {
        Fano4Record rec;
        rec.name = "ci222";
        rec.r = 2;
        rec.m = 8;
        rec.picardRankOne = true;
        rec.chiOH = 8;
        Report rep = check_fano4(rec);
        CHECK(rep.h3 == 16);
        CHECK(rep.bn.value.as_rational() == 6);
        CHECK(rep.verdict == Verdict::Holds);
        CHECK(rep.eps.has_value());
    }

    SUBCASE("index 3 takes the del Pezzo ceiling") {
        Fano4Record rec;
        rec.name = "idx3";
        rec.r = 3;
        rec.m = 1;
        rec.picardRankOne = true;
        rec.chiOH = 4;
        Report rep = check_fano4(rec);
        CHECK(rep.bn.value.as_rational() == 3);  // max of 1 + m and 3
        CHECK(rep.verdict == Verdict::Holds);
    }

    SUBCASE("index 2 without the rank hypothesis is inconclusive") {
        Fano4Record rec;
        rec.name = "idx2-high-rank";
        rec.r = 2;
        rec.m = 8;
        rec.picardRankOne = false;
        rec.chiOH = 8;
        Report rep = check_fano4(rec);
        CHECK(rep.verdict == Verdict::Inconclusive);
        CHECK(has_note(rep, "Picard rank one"));
        CHECK(!rep.eps.has_value());
    }

    SUBCASE("explicit-route products") {
        Catalog cat = load_catalog(std::string(CY3_DATA_DIR) + "/examples.json");
        REQUIRE(cat.fano4.size() == 2);
        std::vector<Report> reports = run_catalog(cat);
        const Report& p1y1 = by_name(reports, "P1 x Y1");
        CHECK(p1y1.h3 == 8);
        CHECK(p1y1.c2H == 56);
        CHECK(p1y1.verdict == Verdict::Holds);
        CHECK(p1y1.bn.value.as_rational() == 5);
        const Report& p1p3 = by_name(reports, "P1 x P3");
        CHECK(p1p3.h3 == 14);
        CHECK(p1p3.c2H == 68);
        QQ bn_p1p3 = p1p3.bn.value.as_rational();
        QQ fifteen_halves(15, 2);
        CHECK(bn_p1p3 == fifteen_halves);
        CHECK(p1p3.verdict == Verdict::Holds);
        // The strict threshold misses by exact equality; only the very-ample
        // variant carries this record.
        CHECK(has_note(p1p3, "68 <= 68"));
    }

    SUBCASE("rejects out-of-range or incomplete records") {
        Fano4Record rec;
        rec.name = "bad";
        rec.r = 1;
        rec.m = 2;
        rec.chiOH = 5;
        CHECK_THROWS_AS(check_fano4(rec), std::invalid_argument);
        rec.r = 6;
        CHECK_THROWS_AS(check_fano4(rec), std::invalid_argument);
        rec.r = 4;
        rec.m = 0;
        CHECK_THROWS_AS(check_fano4(rec), std::invalid_argument);
        rec.m = 2;
        rec.chiOH = 0;
        CHECK_THROWS_AS(check_fano4(rec), std::invalid_argument);
    }
}

TEST_CASE("cyclic covers") {
    auto cover = [](long r, long d, const QQ& hY3, long pic) {
        CoverRecord rec;
        rec.name = "cover";
        rec.r = r;
        rec.d = d;
        rec.hY3 = hY3;
        rec.picardRank = pic;
        return rec;
    };

    SUBCASE("section counts match the closed forms of each branch") {
        CHECK(check_cyclic_cover(cover(4, 2, 1, 1)).chi == 4);
        CHECK(check_cyclic_cover(cover(4, 3, 1, 1)).chi == 4);
        // The quintuple cover of projective three-space branched in a quintic
        // surface is the quintic threefold itself: five sections, not four.
        CHECK(check_cyclic_cover(cover(4, 5, 1, 1)).chi == 5);
        CHECK(check_cyclic_cover(cover(3, 2, 2, 1)).chi == 5);
        CHECK(check_cyclic_cover(cover(3, 4, 2, 1)).chi == 6);
        CHECK(check_cyclic_cover(cover(2, 2, 5, 1)).chi == 7);   // base degree + 2
        CHECK(check_cyclic_cover(cover(2, 3, 1, 1)).chi == 4);   // base degree + 3
        CHECK(check_cyclic_cover(cover(1, 2, 2, 1)).chi == 5);   // half base degree + 4
        CHECK(check_cyclic_cover(cover(1, 2, 4, 1)).chi == 6);
        CHECK(check_cyclic_cover(cover(1, 2, 6, 2)).chi == 7);
        CHECK(check_cyclic_cover(cover(1, 2, 8, 1)).chi == 8);
    }

    SUBCASE("branch routing and bounds") {
        Report quintic_cover = check_cyclic_cover(cover(4, 5, 1, 1));
        QQ bn_qc = quintic_cover.bn.value.as_rational();
        QQ seven_halves(7, 2);
        CHECK(bn_qc == seven_halves);
        CHECK(quintic_cover.verdict == Verdict::Holds);

        Report dp = check_cyclic_cover(cover(2, 3, 1, 1));
        CHECK(dp.route == "DelPezzoEmbed");
        CHECK(dp.bn.value.as_rational() == 3);
        CHECK(dp.verdict == Verdict::Holds);

        Report cs = check_cyclic_cover(cover(1, 2, 6, 2));
        CHECK(cs.route == "CastelnuovoSeveriClifford");
        CHECK(cs.bn.value.as_rational() == 6);
        CHECK(cs.bn.source == BoundSource::CliffordBound);
        CHECK(cs.verdict == Verdict::Holds);

        Report k3 = check_cyclic_cover(cover(1, 2, 8, 1));
        CHECK(k3.route == "K3Embed");
        CHECK(k3.bn.value.as_rational() == 6);
        CHECK(k3.verdict == Verdict::Holds);

        Report weak = check_cyclic_cover(cover(1, 2, 4, 1));
        CHECK(weak.route == "WeakBound");
        CHECK(weak.bn.value.as_rational() == 5);
        CHECK(weak.verdict == Verdict::Holds);
    }

    SUBCASE("the product exception is exactly borderline") {
        Report path = check_cyclic_cover(cover(1, 2, 6, 10));
        CHECK(path.route == "HyperellipticExact");
        CHECK(path.bn.kind == BoundKind::Exact);
        CHECK(path.bn.value.as_rational() == 7);
        CHECK(path.chi == 7);
        CHECK(path.verdict == Verdict::Inconclusive);
        CHECK(!path.eps.has_value());
        CHECK(!path.gamma.has_value());
    }

    SUBCASE("hypothesis flags gate the verdict") {
        CoverRecord rec = cover(4, 2, 1, 1);
        rec.branchGeneral = false;
        Report rep = check_cyclic_cover(rec);
        CHECK(rep.verdict == Verdict::Inconclusive);
        CHECK(has_note(rep, "branch divisor"));

        Report odd = check_cyclic_cover(cover(1, 2, 7, 3));  // no branch applies
        CHECK(odd.verdict == Verdict::Inconclusive);
        CHECK(has_note(odd, "no branch"));
    }

    SUBCASE("rejects incompatible records") {
        CHECK_THROWS_AS(check_cyclic_cover(cover(3, 3, 2, 1)), std::invalid_argument);
        CHECK_THROWS_AS(check_cyclic_cover(cover(4, 1, 1, 1)), std::invalid_argument);
        CHECK_THROWS_AS(check_cyclic_cover(cover(5, 2, 1, 1)), std::invalid_argument);
        CHECK_THROWS_AS(check_cyclic_cover(cover(2, 2, 0, 1)), std::invalid_argument);
    }
}

TEST_CASE("catalog files parse, run, and filter") {
    SUBCASE("worked examples all pass") {
        Catalog cat = load_catalog(std::string(CY3_DATA_DIR) + "/examples.json");
        std::vector<Report> reports = run_catalog(cat);
        CHECK(reports.size() == cat.fano4.size() + cat.covers.size());
        for (const Report& rep : reports) {
            CAPTURE(rep.family);
            CHECK(rep.error.empty());
            CHECK(rep.verdict == Verdict::Holds);
            REQUIRE(rep.eps.has_value());
            CHECK(audit_epsilon_cert(*rep.eps));
            REQUIRE(rep.gamma.has_value());
            CHECK(rep.gamma->gammaH >= 0);
        }
    }

    SUBCASE("pathology file is inconclusive") {
        Catalog cat = load_catalog(std::string(CY3_DATA_DIR) + "/pathology.json");
        std::vector<Report> reports = run_catalog(cat);
        REQUIRE(reports.size() == 1);
        CHECK(reports[0].verdict == Verdict::Inconclusive);
        CHECK(reports[0].bn.value.as_rational() == 7);
        CHECK(reports[0].chi == 7);
    }

    SUBCASE("rationals parse from strings and records keep defaults") {
        const char* text = R"({
            "covers": [
                { "name": "fractional base", "r": 1, "d": 2, "hY3": "13/2", "picardRank": 1 }
            ]
        })";
        Catalog cat = parse_catalog(text);
        REQUIRE(cat.covers.size() == 1);
        QQ expected(13, 2);
        CHECK(cat.covers[0].hY3 == expected);
        CHECK(cat.covers[0].branchGeneral);  // default
        Report rep = check_cyclic_cover(cat.covers[0]);
        CHECK(rep.route == "K3Embed");
        QQ bn_frac(21, 4);
        CHECK(rep.bn.value.as_rational() == bn_frac);
        CHECK(rep.verdict == Verdict::Holds);
    }

    SUBCASE("malformed documents are rejected with context") {
        CHECK_THROWS_AS(parse_catalog("not json"), std::runtime_error);
        CHECK_THROWS_AS(parse_catalog("[1,2]"), std::runtime_error);
        CHECK_THROWS_AS(parse_catalog(R"({"wci":[{"name":"x","weights":[1],"degrees":[1],
            "route":"NoSuchRoute"}]})"),
                        std::runtime_error);
        CHECK_THROWS_AS(parse_catalog(R"({"covers":[{"name":"x","r":1,"d":2,"hY3":"7//2"}]})"),
                        std::runtime_error);
        CHECK_THROWS_AS(load_catalog("/nonexistent/path.json"), std::runtime_error);
    }

    SUBCASE("per-record failures are collected, not fatal") {
        Catalog cat;
        CoverRecord bad;
        bad.name = "bad";
        bad.r = 3;
        bad.d = 3;
        bad.hY3 = 2;
        cat.covers.push_back(bad);
        CoverRecord good;
        good.name = "good";
        good.r = 4;
        good.d = 2;
        good.hY3 = 1;
        good.picardRank = 1;
        cat.covers.push_back(good);
        std::vector<Report> reports = run_catalog(cat);
        REQUIRE(reports.size() == 2);
        CHECK(!reports[0].error.empty());
        CHECK(reports[1].error.empty());
        CHECK(reports[1].verdict == Verdict::Holds);
    }

    SUBCASE("name filter selects a single record") {
        Catalog cat = load_catalog(std::string(CY3_DATA_DIR) + "/hypergeo.json");
        CatalogOptions opt;
        opt.family = "X(4,6)";
        std::vector<Report> reports = run_catalog(cat, opt);
        REQUIRE(reports.size() == 1);
        CHECK(reports[0].family == "X(4,6)");
    }
}

}  // TEST_SUITE
