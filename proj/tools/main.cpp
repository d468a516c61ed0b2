// Command-line front end: per-place reports, global products, bulk
// verification, Sturm chains, 2-torsion matchings and ASCII pictures.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "parityq/global.hpp"
#include "parityq/json_io.hpp"
#include "parityq/mobius.hpp"
#include "parityq/parse.hpp"
#include "parityq/render.hpp"
#include "parityq/verify.hpp"

using namespace parityq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

void print_local_text(const RationalCubic& f, const LocalParityReport& r) {
    std::cout << "cubic: " << f.str() << "\n";
    std::cout << "invariants: b=" << f.b() << " c=" << f.c() << " L=" << f.L()
              << " delta=" << f.delta() << "\n";
    std::cout << "place: " << r.place.str() << "\n";
    if (!r.supported) {
        std::cout << "support: unsupported (" << r.reason << ")\n";
        std::cout << "H: " << r.H << "\n";
        return;
    }
    std::cout << "support: supported\n";
    if (r.real_data) {
        const auto& d = *r.real_data;
        std::cout << "case: " << d.case_id << "  n_E=" << d.n_E
                  << " n_JacEprime=" << d.n_JacEprime << " n_JacC=" << d.n_JacC
                  << " kernel_identity=" << d.kernel_identity << " mu=" << d.mu << "\n";
    }
    if (r.padic_data) {
        const auto& d = *r.padic_data;
        std::cout << "type: " << d.type.str() << "  c_E=" << d.c_E
                  << " c_JacEprime=" << d.c_JacEprime << " c_JacC=" << d.c_JacC << " mu=" << d.mu
                  << "\n";
    }
    std::cout << "w_E: " << *r.w_E << "  w_JacEprime: " << *r.w_JacEprime << "\n";
    std::cout << "lambda: " << *r.lambda << "\n";
    std::cout << "H: " << r.H << "\n";
    std::cout << "identity w_E*w_JacEprime = lambda*H: " << (*r.identity_holds ? "true" : "false")
              << "\n";
}

int cmd_local(const std::string& cubic_text, const std::string& place_text, bool json) {
    RationalCubic f = parse_cubic(cubic_text);
    Place v = parse_place(place_text);
    LocalParityReport r = local_report(f, v);
    if (json) {
        Json j;
        j["cubic"] = cubic_json(f);
        j["report"] = report_json(r);
        std::cout << j.dump(2) << "\n";
    } else {
        print_local_text(f, r);
    }
    return kExitOk;
}

int cmd_global(const std::string& cubic_text, const std::string& mode_text, bool json) {
    RationalCubic f = parse_cubic(cubic_text);
    GlobalMode mode = (mode_text == "strict") ? GlobalMode::Strict : GlobalMode::Inferred;
    GlobalReport g = global_identity(f, mode);
    if (json) {
        Json j;
        j["cubic"] = cubic_json(f);
        j["global"] = global_json(g);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "cubic: " << f.str() << "\n";
        std::cout << "mode: " << (mode == GlobalMode::Strict ? "strict" : "inferred") << "\n";
        for (const auto& r : g.reports) {
            std::cout << "  place " << r.place.str() << ": H=" << r.H;
            if (r.supported)
                std::cout << " lambda=" << *r.lambda << " w_E=" << *r.w_E
                          << " w_JacEprime=" << *r.w_JacEprime
                          << (*r.identity_holds ? "  [identity ok]" : "  [IDENTITY FAILS]");
            else
                std::cout << " lambda=" << *r.lambda << " (inferred: " << r.reason << ")";
            std::cout << "\n";
        }
        std::cout << "product_H: " << g.product_H << "\n";
        std::cout << "product_lambda: " << g.product_lambda << "\n";
        std::cout << "product_w: " << g.product_w << "\n";
        std::cout << "all_identities: " << (g.all_identities ? "true" : "false") << "\n";
    }
    return g.all_identities ? kExitOk : kExitVerifyFail;
}

int cmd_sturm(const std::string& poly_text, const std::string& at_text, bool json) {
    UniPoly f = parse_poly(poly_text);
    SturmSequence s = sturm_sequence(f);
    Json j;
    std::optional<std::pair<Rational, Rational>> window;
    if (!at_text.empty()) {
        auto comma = at_text.find(',');
        if (comma == std::string::npos)
            throw ParseError("--at expects 'a,b'", 0);
        window = {Rational::parse(at_text.substr(0, comma)),
                  Rational::parse(at_text.substr(comma + 1))};
    }
    if (json) {
        j["poly"] = f.str();
        j["sturm"] = sturm_json(s);
        j["sigma"] = {{"-inf", sign_changes(s, SturmPoint::neg_inf())},
                      {"0", sign_changes(s, SturmPoint::at(Rational(0)))},
                      {"+inf", sign_changes(s, SturmPoint::pos_inf())}};
        if (window) {
            j["sigma"][window->first.str()] = sign_changes(s, SturmPoint::at(window->first));
            j["sigma"][window->second.str()] = sign_changes(s, SturmPoint::at(window->second));
        }
        if (s.squarefree) {
            j["roots"] = {{"all", count_real_roots(f)}, {"positive", count_positive_roots(f)}};
            if (window)
                j["roots"]["window"] = count_roots(f, SturmPoint::at(window->first),
                                                   SturmPoint::at(window->second));
        }
        if (!s.degenerate) {
            Json gen;
            for (const Place& v : sturm_relevant_places(s))
                gen[v.str()] = generalized_H(f, v);
            j["generalized_H"] = gen;
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "poly: " << f.str() << "\n";
    for (std::size_t i = 0; i < s.polys.size(); ++i)
        std::cout << "P" << i << ": " << s.polys[i].str() << "\n";
    std::cout << "sigma(-inf)=" << sign_changes(s, SturmPoint::neg_inf())
              << " sigma(0)=" << sign_changes(s, SturmPoint::at(Rational(0)))
              << " sigma(+inf)=" << sign_changes(s, SturmPoint::pos_inf());
    if (window)
        std::cout << " sigma(" << window->first << ")="
                  << sign_changes(s, SturmPoint::at(window->first)) << " sigma(" << window->second
                  << ")=" << sign_changes(s, SturmPoint::at(window->second));
    std::cout << "\n";
    if (s.squarefree) {
        std::cout << "real roots: " << count_real_roots(f)
                  << "  positive roots: " << count_positive_roots(f) << "\n";
        if (window)
            std::cout << "roots in (" << window->first << ", " << window->second
                      << "]: " << count_roots(f, SturmPoint::at(window->first),
                                              SturmPoint::at(window->second))
                      << "\n";
    } else {
        std::cout << "not squarefree; no root counting\n";
    }
    if (s.degenerate) {
        std::cout << "chain degenerate at index " << s.degenerate_index << " ("
                  << s.degenerate_reason << "); no symbol product\n";
    } else {
        std::cout << "generalized H:";
        for (const Place& v : sturm_relevant_places(s))
            std::cout << " " << v.str() << ":" << generalized_H(f, v);
        std::cout << "\n";
    }
    return kExitOk;
}

std::string linear_str(const Rational& p, const Rational& q) {  // p + q*z
    std::string s = p.str();
    s += (q.sign() >= 0) ? " + " + q.str() : " - " + (-q).str();
    return s + "*z";
}

int cmd_mobius(const std::string& t1, const std::string& t2, bool json) {
    // pairing is by the order the factors are written
    std::vector<Rational> r1 = parse_ordered_roots(t1);
    std::vector<Rational> r2 = parse_ordered_roots(t2);
    if (r1.size() != 3 || r2.size() != 3)
        throw UnsupportedPlace("both cubics need three rational roots, in matching order");
    RationalCubic g1 = RationalCubic::from_roots(r1[0], r1[1], r1[2]);
    RationalCubic g2 = RationalCubic::from_roots(r2[0], r2[1], r2[2]);
    RootTriple a{r1[0], r1[1], r1[2]};
    RootTriple b{r2[0], r2[1], r2[2]};
    MobiusMatch m = mobius_match(a, b);
    NormalForm nf = normal_form(m, g1);
    if (json) {
        Json j;
        j["g1"] = cubic_json(g1);
        j["g2"] = cubic_json(g2);
        j["match"] = mobius_json(m, nf);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "A=" << m.A << " B=" << m.B << " C=" << m.C << " D=" << m.D << "\n";
        std::cout << "h(z) = (" << linear_str(-m.B, m.D) << ") / (" << linear_str(m.A, -m.C)
                  << ")\n";
        std::cout << "branch: " << branch_name(m.branch) << "\n";
        std::cout << "d: " << nf.d << "\n";
        if (nf.f_new) std::cout << "f: " << nf.f_new->str() << "\n";
    }
    return kExitOk;
}

int cmd_render(const std::string& cubic_text, const std::string& place_text) {
    RationalCubic f = parse_cubic(cubic_text);
    Place v = parse_place(place_text);
    if (v.is_real()) {
        RealConfiguration rc = real_configuration(f);
        std::cout << "case " << rc.case_id << ": " << render_real(rc) << "\n";
        return kExitOk;
    }
    if (v.is_complex()) throw UnsupportedPlace("nothing to draw at the complex place");
    if (v.p() == 2) throw EvenPrimeUnsupported();
    ClusterPicture cp = cluster_picture(integralize(f).first, v.p());
    if (cp.shape == ClusterPicture::Shape::Unsupported) {
        std::cout << render_cluster(cp) << "\n";
        return kExitUnsupported;
    }
    std::cout << "p=" << v.p().get_str() << ": " << render_cluster(cp) << "\n";
    if (cp.twin) {
        TwinSigns s = twin_signs(*cp.twin, v.p());
        std::cout << "twin " << cp.twin->members << ": depth " << cp.twin->depth
                  << ", n=" << cp.twin->n;
        if (s.sign_E) std::cout << ", sign_E=" << (*s.sign_E > 0 ? "+" : "-");
        std::cout << ", sign_Eprime=" << (s.sign_Eprime > 0 ? "+" : "-") << "\n";
        std::cout << "type: " << reduction_type(integralize(f).first, v.p()).str() << "\n";
    }
    return kExitOk;
}

int cmd_verify(const VerifyConfig& cfg) {
    if (cfg.force_case < 0 || cfg.force_case > 6)
        throw ParseError("--force-case expects 1..6", 0);
    if (cfg.count <= 0) throw ParseError("--count must be positive", 0);
    if (cfg.workers <= 0) throw ParseError("--workers must be positive", 0);
    if (!cfg.force_type.empty()) parse_row_tag(cfg.force_type);
    VerifySummary s = run_verify(cfg);
    if (cfg.json)
        std::cout << verify_json(cfg, s).dump(2) << "\n";
    else
        std::cout << verify_text(cfg, s);
    return s.failures == 0 ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local 2-parity data for rational cubics: Hilbert symbols, cluster "
                 "pictures, component tables, Sturm chains"};
    app.require_subcommand(1);

    std::string cubic_text, place_text = "real", mode_text = "inferred", at_text;
    std::string cubic2_text;
    bool json = false;
    VerifyConfig vcfg;

    auto* local = app.add_subcommand("local", "per-place report for one cubic");
    local->add_option("cubic", cubic_text, "cubic: 'a,b,c' or factored form")->required();
    local->add_option("--place", place_text, "real, complex, or a prime");
    local->add_flag("--json", json, "machine-readable output");

    auto* global = app.add_subcommand("global", "reports over all relevant places");
    global->add_option("cubic", cubic_text)->required();
    global->add_option("--mode", mode_text, "strict or inferred");
    global->add_flag("--json", json);

    auto* verify = app.add_subcommand("verify", "seeded bulk verification");
    verify->add_option("--seed", vcfg.seed);
    verify->add_option("--count", vcfg.count);
    verify->add_option("--height", vcfg.height);
    verify->add_option("--check", vcfg.check,
                       "identity|product-H|scaling|continuity|sturm-consistency|mobius");
    verify->add_option("--force-case", vcfg.force_case, "real case 1..6");
    verify->add_option("--force-type", vcfg.force_type, "2|1n+|1n-|Inn++|Inn+a|Inn+b|Inn--");
    verify->add_option("--workers", vcfg.workers);
    verify->add_flag("--json", vcfg.json);

    auto* sturm = app.add_subcommand("sturm", "Sturm chain, root counts, symbol product");
    sturm->add_option("poly", cubic_text, "poly: monic coefficient list or factored form")
        ->required();
    sturm->add_option("--at", at_text, "a,b window for root counting");
    sturm->add_flag("--json", json);

    auto* mobius = app.add_subcommand("mobius", "match two cubics along their 2-torsion");
    mobius->add_option("cubic1", cubic_text)->required();
    mobius->add_option("cubic2", cubic2_text)->required();
    mobius->add_flag("--json", json);

    auto* render = app.add_subcommand("render", "draw the cluster picture / root layout");
    render->add_option("cubic", cubic_text)->required();
    render->add_option("--place", place_text, "real or an odd prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (local->parsed()) return cmd_local(cubic_text, place_text, json);
        if (global->parsed()) return cmd_global(cubic_text, mode_text, json);
        if (verify->parsed()) return cmd_verify(vcfg);
        if (sturm->parsed()) return cmd_sturm(cubic_text, at_text, json);
        if (mobius->parsed()) return cmd_mobius(cubic_text, cubic2_text, json);
        if (render->parsed()) return cmd_render(cubic_text, place_text);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const StrictModeUnsupported& e) {
        std::cerr << e.what() << "\n";
        return kExitUnsupported;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    }
    return kExitUsage;
}
