#include "cy3check/bmtchain.hpp"
#include "cy3check/bnbounds.hpp"
#include "cy3check/catalog.hpp"
#include "cy3check/invariants.hpp"
#include "cy3check/rational.hpp"
#include "cy3check/surd.hpp"
#include "cy3check/tiltplane.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using cy3::QQ;
using nlohmann::json;

QQ flag_rational(const std::string& text, const std::string& flag) {
    try {
        return cy3::parse_rational(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
}

std::vector<QQ> flag_rationals(const std::string& text, std::size_t expect,
                               const std::string& flag) {
    std::vector<QQ> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        out.push_back(flag_rational(piece, flag));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != expect)
        throw std::invalid_argument(flag + ": expected " + std::to_string(expect) +
                                    " comma-separated values");
    return out;
}

const char* verdict_name(cy3::Verdict v) {
    switch (v) {
        case cy3::Verdict::Holds: return "Holds";
        case cy3::Verdict::Inconclusive: return "Inconclusive";
        case cy3::Verdict::Fails: return "Fails";
    }
    return "?";
}

const char* source_name(cy3::BoundSource s) {
    switch (s) {
        case cy3::BoundSource::WeakBound: return "WeakBound";
        case cy3::BoundSource::CliffordBound: return "CliffordBound";
        case cy3::BoundSource::VeryGeneral: return "VeryGeneral";
        case cy3::BoundSource::DelPezzoWall: return "DelPezzoWall";
        case cy3::BoundSource::K3Wall: return "K3Wall";
        case cy3::BoundSource::GonalityLower: return "GonalityLower";
        case cy3::BoundSource::HyperellipticExact: return "HyperellipticExact";
        case cy3::BoundSource::PlanarExact: return "PlanarExact";
        case cy3::BoundSource::BiellipticExact: return "BiellipticExact";
        case cy3::BoundSource::SectionLower: return "SectionLower";
    }
    return "?";
}

const char* kind_name(cy3::BoundKind k) {
    switch (k) {
        case cy3::BoundKind::Upper: return "Upper";
        case cy3::BoundKind::Lower: return "Lower";
        case cy3::BoundKind::Exact: return "Exact";
    }
    return "?";
}

json report_to_json(const cy3::Report& rep) {
    json j;
    j["family"] = rep.family;
    j["scale"] = rep.scale;
    if (!rep.error.empty()) {
        j["error"] = rep.error;
        return j;
    }
    j["h3"] = cy3::format_rational(rep.h3);
    j["c2H"] = cy3::format_rational(rep.c2H);
    j["chi"] = cy3::format_rational(rep.chi);
    j["route"] = rep.route;
    j["bn"] = {{"exact", rep.bn.value.exact_string()},
               {"decimal", rep.bn.value.decimal_string(12)},
               {"source", source_name(rep.bn.source)},
               {"kind", kind_name(rep.bn.kind)}};
    j["verdict"] = verdict_name(rep.verdict);
    j["alternatives"] = rep.alternatives;
    if (rep.eps) {
        j["epsilonCert"] = {{"A", cy3::format_rational(rep.eps->A)},
                            {"chi", cy3::format_rational(rep.eps->chi)},
                            {"m", cy3::format_rational(rep.eps->m)},
                            {"g", rep.eps->g},
                            {"smooth", rep.eps->smooth},
                            {"n", rep.eps->n},
                            {"delta", cy3::format_rational(rep.eps->delta)},
                            {"epsilon", cy3::format_rational(rep.eps->epsilon)}};
    }
    if (rep.gamma) {
        j["gammaCert"] = {{"epsilon", cy3::format_rational(rep.gamma->epsilon)},
                          {"gamma", cy3::format_rational(rep.gamma->gamma)},
                          {"gammaH", cy3::format_rational(rep.gamma->gammaH)}};
    }
    return j;
}

void print_table(const std::vector<cy3::Report>& reports) {
    constexpr std::size_t ncol = 8;
    std::vector<std::array<std::string, ncol>> rows;
    rows.push_back({"family", "route", "h3", "c2H", "chi", "bn", "decimal", "verdict"});
    for (const cy3::Report& rep : reports) {
        std::array<std::string, ncol> row;
        row[0] = rep.family;
        if (!rep.error.empty()) {
            for (std::size_t c = 1; c + 1 < ncol; ++c) row[c] = "-";
            row[ncol - 1] = "error: " + rep.error;
        } else {
            row[1] = rep.route;
            row[2] = cy3::format_rational(rep.h3);
            row[3] = cy3::format_rational(rep.c2H);
            row[4] = cy3::format_rational(rep.chi);
            row[5] = rep.bn.value.exact_string();
            row[6] = rep.bn.value.decimal_string(12);
            row[7] = verdict_name(rep.verdict);
        }
        rows.push_back(row);
    }
    std::array<std::size_t, ncol> width{};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < ncol; ++c)
            if (row[c].size() > width[c]) width[c] = row[c].size();
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < ncol; ++c) {
            line += row[c];
            if (c + 1 < ncol) line.append(width[c] - row[c].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
}

int cmd_catalog(const std::string& file, const std::string& family, bool as_json) {
    cy3::Catalog cat;
    try {
        cat = cy3::load_catalog(file);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
    cy3::CatalogOptions opt;
    if (!family.empty()) opt.family = family;
    std::vector<cy3::Report> reports = cy3::run_catalog(cat, opt);
    if (reports.empty()) {
        std::cerr << "input error: no record named \"" << family << "\"\n";
        return 1;
    }
    if (as_json) {
        json arr = json::array();
        for (const cy3::Report& rep : reports) arr.push_back(report_to_json(rep));
        std::cout << arr.dump(2) << "\n";
    } else {
        print_table(reports);
    }
    for (const cy3::Report& rep : reports)
        if (!rep.error.empty() || rep.verdict != cy3::Verdict::Holds) return 2;
    return 0;
}

int cmd_walls(const std::string& geometry, const std::string& m_text, const std::string& cls_text,
              const std::string& win_text, long cap, bool cap_set) {
    cy3::SurfaceGeometry S;
    if (geometry == "k3")
        S.kind = cy3::SurfaceKind::K3;
    else if (geometry == "delpezzo")
        S.kind = cy3::SurfaceKind::DelPezzo;
    else
        throw std::invalid_argument("--geometry: expected k3 or delpezzo");
    S.m = flag_rational(m_text, "--m");
    std::vector<QQ> cls = flag_rationals(cls_text, 3, "--class");
    std::vector<QQ> win = flag_rationals(win_text, 2, "--window");
    cy3::ChernSurface v{cls[0], cls[1], cls[2]};
    cy3::SlopeWindow window{win[0], win[1]};
    cy3::WallSearchOptions opt;
    if (cap_set) {
        opt.rank_cap = cap;
    } else if (const char* env = std::getenv("CY3CHECK_CAP")) {
        try {
            opt.rank_cap = std::stol(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("CY3CHECK_CAP: not an integer");
        }
    }
    std::vector<cy3::DestabilizerCandidate> walls = cy3::enumerate_walls(v, S, window, opt);
    if (walls.empty()) {
        std::cout << "no walls\n";
        return 0;
    }
    bool parallel = v.r == 0;
    for (const cy3::DestabilizerCandidate& c : walls)
        parallel = parallel && c.wall.slope == walls.front().wall.slope;
    if (parallel) {
        std::cout << "slope " << cy3::format_rational(walls.front().wall.slope)
                  << " (parallel family), multiplicity " << walls.size() << "\n";
        return 0;
    }
    for (const cy3::DestabilizerCandidate& c : walls) {
        std::cout << c.wall.str() << "  witness " << cy3::format_rational(c.u.r) << ","
                  << cy3::format_rational(c.u.c1H) << "," << cy3::format_rational(c.u.ch2) << "\n";
    }
    return 0;
}

int cmd_bn(const std::string& surface, long s, const std::string& m_text) {
    QQ m = flag_rational(m_text, "--m");
    cy3::BNBound bn{cy3::Surd(0), cy3::BoundSource::WeakBound, cy3::BoundKind::Upper};
    if (surface == "delpezzo")
        bn = cy3::bn_upper_delpezzo(s, m);
    else if (surface == "k3")
        bn = cy3::bn_upper_k3(s, m);
    else
        throw std::invalid_argument("--surface: expected k3 or delpezzo");
    std::cout << bn.value.exact_string() << "\n";
    if (!bn.value.is_rational()) std::cout << bn.value.decimal_string(12) << "\n";
    return 0;
}

int cmd_bmt(const std::string& h3_text, const std::string& c2h_text, const std::string& eps_text,
            const std::string& cls_text, const std::string& b_text, const std::string& w_text) {
    cy3::ThreefoldGeometry X{"cli", flag_rational(h3_text, "--h3"),
                             flag_rational(c2h_text, "--c2h")};
    X.validate();
    QQ eps = flag_rational(eps_text, "--epsilon");
    cy3::GammaCert cert = cy3::gamma_cycle(eps, X);
    std::cout << "epsilon = " << cy3::format_rational(cert.epsilon) << "\n";
    std::cout << "gamma = " << cy3::format_rational(cert.gamma) << "\n";
    std::cout << "gammaH = " << cy3::format_rational(cert.gammaH) << "\n";
    if (!cls_text.empty()) {
        std::vector<QQ> cls = flag_rationals(cls_text, 4, "--class");
        cy3::ChernThreefold ch{cls[0], cls[1], cls[2], cls[3], true};
        QQ b = flag_rational(b_text, "--b");
        QQ w = flag_rational(w_text, "--w");
        QQ q = cy3::q_form(ch, b, w, cert.gammaH, X);
        std::cout << "Q = " << cy3::format_rational(q) << "\n";
    }
    return 0;
}

int cmd_reduce(const std::string& m_text, const std::string& chi_text, const std::string& bn_text,
               bool singular, long g) {
    QQ m = flag_rational(m_text, "--m");
    QQ chi = flag_rational(chi_text, "--chi");
    QQ a = flag_rational(bn_text, "--bn");
    cy3::EpsilonCert cert = cy3::epsilon_for_surface(a, chi, m, g, !singular);
    std::cout << "kind = " << (cert.smooth ? "smooth" : "singular") << "\n";
    std::cout << "A = " << cy3::format_rational(cert.A) << "\n";
    std::cout << "chi = " << cy3::format_rational(cert.chi) << "\n";
    std::cout << "m = " << cy3::format_rational(cert.m) << "\n";
    if (cert.smooth)
        std::cout << "n = " << cert.n << "\n";
    else
        std::cout << "g = " << cert.g << "\n";
    std::cout << "delta = " << cy3::format_rational(cert.delta) << "\n";
    std::cout << "epsilon = " << cy3::format_rational(cert.epsilon) << "\n";
    return 0;
}

int cmd_audit(const std::string& h3_text, const std::string& c2h_text, const std::string& eps_text,
              long samples, std::uint64_t seed) {
    cy3::ThreefoldGeometry X{"cli", flag_rational(h3_text, "--h3"),
                             flag_rational(c2h_text, "--c2h")};
    X.validate();
    QQ eps = flag_rational(eps_text, "--epsilon");
    bool ok = cy3::verify_ch2_chain(samples, eps, X, seed);
    std::cout << "samples = " << samples << "\n";
    std::cout << "seed = " << seed << "\n";
    std::cout << "result = " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stability checks for polarised Calabi-Yau threefolds"};
    app.require_subcommand(1);

    std::string file, family;
    bool as_json = false;
    CLI::App* catalog = app.add_subcommand("catalog", "run the family catalog");
    catalog->add_option("--file", file, "catalog JSON file")->required();
    catalog->add_option("--family", family, "check a single named record");
    catalog->add_flag("--json", as_json, "machine-readable output");

    std::string geometry, walls_m, walls_class, walls_window;
    long cap = 0;
    CLI::App* walls = app.add_subcommand("walls", "list numerical walls over a slope window");
    walls->add_option("--geometry", geometry, "k3 or delpezzo")->required();
    walls->add_option("--m", walls_m, "surface degree (rational)")->required();
    walls->add_option("--class", walls_class, "r,c1H,ch2 (rationals)")->required();
    walls->add_option("--window", walls_window, "bmin,bmax (rationals)")->required();
    walls->add_option("--cap", cap, "rank cap for the enumeration");

    std::string bn_surface, bn_m;
    long bn_s = 0;
    CLI::App* bn = app.add_subcommand("bn", "section bound for a curve in |sH| on a surface");
    bn->add_option("--surface", bn_surface, "k3 or delpezzo")->required();
    bn->add_option("--s", bn_s, "multiple of the polarisation")->required();
    bn->add_option("--m", bn_m, "surface degree (rational)")->required();

    std::string bmt_h3, bmt_c2h, bmt_eps, bmt_class, bmt_b = "0", bmt_w = "0";
    CLI::App* bmt = app.add_subcommand("bmt", "curve-class correction and quadratic form");
    bmt->add_option("--h3", bmt_h3, "H^3 (rational)")->required();
    bmt->add_option("--c2h", bmt_c2h, "c2.H (rational)")->required();
    bmt->add_option("--epsilon", bmt_eps, "slope window parameter (rational)")->required();
    bmt->add_option("--class", bmt_class, "r,c1H2,ch2H,ch3 to evaluate the form on");
    bmt->add_option("--b", bmt_b, "twist parameter (rational, default 0)");
    bmt->add_option("--w", bmt_w, "vertical parameter (rational, default 0)");

    std::string red_m, red_chi, red_bn;
    bool red_smooth = false, red_singular = false;
    long red_g = 0;
    CLI::App* reduce = app.add_subcommand("reduce", "surface reduction certificate");
    reduce->add_option("--m", red_m, "surface degree (rational)")->required();
    reduce->add_option("--chi", red_chi, "section count to beat (rational)")->required();
    reduce->add_option("--bn", red_bn, "section bound A (rational)")->required();
    reduce->add_flag("--smooth", red_smooth, "smooth surface (default)");
    reduce->add_flag("--singular", red_singular, "singular surface");
    reduce->add_option("--g", red_g, "curve genus (singular case)");

    std::string aud_h3, aud_c2h, aud_eps;
    long samples = 10000;
    std::uint64_t seed = 1;
    CLI::App* audit = app.add_subcommand("audit", "sampled audit of the degree-chain bound");
    audit->add_option("--h3", aud_h3, "H^3 (rational)")->required();
    audit->add_option("--c2h", aud_c2h, "c2.H (rational)")->required();
    audit->add_option("--epsilon", aud_eps, "slope window parameter (rational)")->required();
    audit->add_option("--samples", samples, "number of random classes (default 10000)");
    audit->add_option("--seed", seed, "sampling seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(catalog)) return cmd_catalog(file, family, as_json);
        if (app.got_subcommand(walls))
            return cmd_walls(geometry, walls_m, walls_class, walls_window, cap,
                             walls->count("--cap") > 0);
        if (app.got_subcommand(bn)) return cmd_bn(bn_surface, bn_s, bn_m);
        if (app.got_subcommand(bmt))
            return cmd_bmt(bmt_h3, bmt_c2h, bmt_eps, bmt_class, bmt_b, bmt_w);
        if (app.got_subcommand(reduce)) {
            if (red_smooth && red_singular)
                throw std::invalid_argument("--smooth and --singular are mutually exclusive");
            return cmd_reduce(red_m, red_chi, red_bn, red_singular, red_g);
        }
        if (app.got_subcommand(audit)) return cmd_audit(aud_h3, aud_c2h, aud_eps, samples, seed);
    } catch (const cy3::NoCertificate& e) {
        std::cerr << "no certificate: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
