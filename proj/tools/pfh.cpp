// pfh: exact twist complexes on the cylinder, the torus and closed surfaces.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pfh/cylinder.hpp"
#include "pfh/report.hpp"
#include "pfh/surface.hpp"
#include "pfh/svg.hpp"
#include "pfh/torus.hpp"
#include "pfh/verify.hpp"

namespace {

using namespace pfh;

constexpr int kPass = 0, kCheckFailed = 1, kUsage = 2;

void print_dims(const std::map<long long, long long>& dims) {
    for (const auto& [g, dim] : dims)
        if (dim != 0) std::printf("grade %lld: %lld\n", g, dim);
}

void print_pages(const std::vector<PageDims>& pages) {
    for (size_t r = 0; r < pages.size(); ++r) {
        std::printf("page %zu:\n", r + 1);
        for (const auto& [key, dim] : pages[r])
            if (dim != 0)
                std::printf("  level %lld grade %lld: %lld\n", key.first, key.second, dim);
    }
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path);
    out << text;
    if (!out.good()) throw Error("write failed for " + path);
}

struct CylinderArgs {
    std::string x1, x2, action, json, svg;
    long long P = 0, Q = 0;
};

int run_cylinder(const CylinderArgs& a) {
    Window w{parse_bound(a.x1), parse_bound(a.x2)};
    if (!(w.x1 < w.x2)) {
        std::fprintf(stderr, "empty interval: %s is not below %s\n", w.x1.str().c_str(),
                     w.x2.str().c_str());
        return kUsage;
    }
    if (a.Q < 1) {
        std::fprintf(stderr, "Q must be at least 1\n");
        return kUsage;
    }
    std::string problem = "cylinder (" + w.x1.str() + ", " + w.x2.str() + "; " +
                          std::to_string(a.P) + ", " + std::to_string(a.Q) + ")";
    CylinderComplex c = cylinder_complex(w, a.P, a.Q);
    std::printf("%s\n", problem.c_str());
    std::printf("generators: %zu\n", c.gens.size());

    Report rep = make_report(problem);
    std::vector<std::string> texts;
    for (const OrbitSet& g : c.gens) texts.push_back(g.str());
    attach_complex(rep, c.cx, texts);

    int code = kPass;
    if (a.action == "homology") {
        print_dims(c.cx.homology_dims());
        Bound slope(Frac(a.P, a.Q));
        bool pass;
        std::string details;
        if (w.x1 < slope && slope < w.x2) {
            HomologyCheck hc = check_cylinder_homology(c);
            pass = hc.ok;
            details = hc.detail.empty() ? "one class at grade 0 and one at grade 1" : hc.detail;
        } else {
            pass = c.gens.empty();
            details = pass ? "slope outside the interval, empty complex"
                           : "slope outside the interval but generators exist";
        }
        add_check(rep, "cylinder homology", pass, details);
        std::printf("homology check: %s (%s)\n", pass ? "pass" : "fail", details.c_str());
        if (!pass) code = kCheckFailed;
    } else {
        auto levels = top_slope_levels(c);
        long long lo = 0, hi = 0;
        for (long long l : levels) {
            lo = std::min(lo, l);
            hi = std::max(hi, l);
        }
        auto pages = top_slope_pages(c, (int)(hi - lo + 2));
        print_pages(pages);
        std::map<long long, long long> stable;
        for (const auto& [key, dim] : pages.back()) stable[key.second] += dim;
        std::map<long long, long long> direct;
        for (const auto& [g, dim] : c.cx.homology_dims())
            if (dim != 0) direct[g] = dim;
        for (auto it = stable.begin(); it != stable.end();)
            it = it->second == 0 ? stable.erase(it) : std::next(it);
        bool pass = stable == direct;
        add_check(rep, "limit page equals homology", pass, "");
        std::printf("limit page check: %s\n", pass ? "pass" : "fail");
        if (!pass) code = kCheckFailed;
    }
    if (!a.json.empty()) write_report(rep, a.json);
    if (!a.svg.empty()) {
        std::vector<ConvexPath> paths;
        for (const OrbitSet& g : c.gens)
            if (g.hyperbolic_count() == 0) paths.push_back(g.path());
        write_text(render_svg(paths, {}), a.svg);
    }
    return code;
}

struct TorusArgs {
    long long n = 1, d = 1, sector = 0;
    std::string action, json;
};

int run_torus(const TorusArgs& a) {
    if (a.n < 1 || a.d < 1) {
        std::fprintf(stderr, "n and d must be at least 1\n");
        return kUsage;
    }
    long long sector = ((a.sector % a.n) + a.n) % a.n;
    std::string problem = "torus n=" + std::to_string(a.n) + " d=" + std::to_string(a.d) +
                          " sector=" + std::to_string(sector);
    Report rep = make_report(problem);
    int code = kPass;

    if (a.action == "wrapping-check") {
        WrappingCheck wc = wrapping_check(a.n, a.d);
        std::printf("%s\n", problem.c_str());
        for (const OrbitSet& t : wc.lifted_terms)
            std::printf("lifted term: %s\n", t.str().c_str());
        for (const TorusOrbitSet& t : wc.projected_terms)
            std::printf("projected term: %s\n", t.str().c_str());
        add_check(rep, "wrapping absorbed", wc.ok, wc.detail);
        std::printf("wrapping check: %s%s%s\n", wc.ok ? "pass" : "fail",
                    wc.detail.empty() ? "" : " ", wc.detail.c_str());
        if (!wc.ok) code = kCheckFailed;
    } else {
        TorusComplex c = torus_complex({a.n, a.d, sector});
        std::printf("%s\n", problem.c_str());
        std::printf("generators: %zu\n", c.gens.size());
        std::vector<std::string> texts;
        for (const TorusOrbitSet& g : c.gens) texts.push_back(g.str());
        attach_complex(rep, c.cx, texts);
        if (a.action == "homology") {
            TorusHomologyCheck hc = torus_homology_check(c);
            print_dims(hc.dims);
            add_check(rep, "torus homology", hc.ok, hc.detail);
            std::printf("homology check: %s%s%s\n", hc.ok ? "pass" : "fail",
                        hc.detail.empty() ? "" : " ", hc.detail.c_str());
            if (!hc.ok) code = kCheckFailed;
        } else {
            auto levels = eh_exponent_levels(c);
            long long span = 0;
            for (long long l : levels) span = std::max(span, l);
            print_pages(eh_exponent_pages(c, (int)span + 2));
        }
    }
    if (!a.json.empty()) write_report(rep, a.json);
    return code;
}

struct SurfaceArgs {
    bool separating = false;
    long long g = 2, g0 = 0, g1 = 0, d = 1, sector = -1;
    std::string json;
};

int run_surface(const SurfaceArgs& a) {
    if (a.d < 0) {
        std::fprintf(stderr, "d must be nonnegative\n");
        return kUsage;
    }
    SurfaceConfig cfg = a.separating ? SurfaceConfig::split(a.g0, a.g1, a.d)
                                     : SurfaceConfig::nonseparating(a.g, a.d);
    SurfaceReport r = verify_surface(cfg);
    std::printf("%s\n", cfg.str().c_str());
    Report rep = make_report(cfg.str());
    SurfaceComplex sc = build_delta0(cfg);
    std::vector<std::string> texts;
    for (size_t i = 0; i < sc.gens.size(); ++i) texts.push_back(sc.gen_str(i));
    attach_complex(rep, sc.cx, texts);

    int code = kPass;
    if (a.separating && a.sector >= 0) {
        if (a.sector > a.d) {
            std::fprintf(stderr, "sector must lie in 0..d\n");
            return kUsage;
        }
        const SectorOutcome& s = r.sectors[(size_t)a.sector];
        std::printf("sector %lld: total %lld (%lld even, %lld odd), expected %lld\n", s.p,
                    s.dim, s.even, s.odd, s.want);
        add_check(rep, "sector dimensions", s.ok, "");
        std::printf("check: %s\n", s.ok ? "pass" : "fail");
        if (!s.ok) code = kCheckFailed;
    } else {
        std::printf("total %lld (%lld even, %lld odd)\n", r.dim, r.even, r.odd);
        std::printf("expected %lld (%lld even, %lld odd)\n", r.want, r.want_even, r.want_odd);
        for (const SectorOutcome& s : r.sectors)
            std::printf("sector %lld: total %lld (%lld even, %lld odd), expected %lld\n", s.p,
                        s.dim, s.even, s.odd, s.want);
        add_check(rep, "surface dimensions", r.ok, r.detail);
        std::printf("check: %s%s%s\n", r.ok ? "pass" : "fail", r.detail.empty() ? "" : " ",
                    r.detail.c_str());
        if (!r.ok) code = kCheckFailed;
    }
    if (!a.json.empty()) write_report(rep, a.json);
    return code;
}

int run_verify(const std::string& json) {
    auto results = run_acceptance();
    Report rep = make_report("acceptance suite");
    bool all = true;
    for (const CriterionResult& r : results) {
        all = all && r.pass;
        std::printf("%s %2d  %-32s %6.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.number,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        add_check(rep, r.name, r.pass, r.detail);
    }
    std::printf("%s: %zu criteria\n", all ? "OK" : "FAILURES", results.size());
    if (!json.empty()) write_report(rep, json);
    return all ? kPass : kCheckFailed;
}

struct RenderArgs {
    std::vector<std::string> paths, labels;
    std::string svg;
};

int run_render(const RenderArgs& a) {
    std::vector<ConvexPath> paths;
    for (const std::string& s : a.paths) paths.push_back(parse_orbit_set(s).path());
    std::vector<SvgLabel> labels;
    for (const std::string& s : a.labels) {
        size_t at = s.rfind('@');
        size_t comma = s.find(',', at == std::string::npos ? 0 : at);
        if (at == std::string::npos || comma == std::string::npos) {
            std::fprintf(stderr, "label must look like text@p,q: %s\n", s.c_str());
            return kUsage;
        }
        Vec2 pos{std::stoll(s.substr(at + 1, comma - at - 1)), std::stoll(s.substr(comma + 1))};
        labels.push_back({s.substr(0, at), pos});
    }
    std::string svg = render_svg(paths, labels);
    if (a.svg.empty())
        std::fputs(svg.c_str(), stdout);
    else
        write_text(svg, a.svg);
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact twist complexes on the cylinder, the torus and closed surfaces"};
    app.require_subcommand(1);

    CylinderArgs ca;
    CLI::App* cyl = app.add_subcommand("cylinder", "twist region complex over a slope interval");
    cyl->add_option("--x1", ca.x1, "lower slope, e.g. 0+eps or -2/9-eps")->required();
    cyl->add_option("--x2", ca.x2, "upper slope, e.g. 3-eps")->required();
    cyl->add_option("--P", ca.P, "total numerator")->required();
    cyl->add_option("--Q", ca.Q, "total denominator")->required();
    cyl->add_option("action", ca.action, "homology or pages")
        ->required()
        ->check(CLI::IsMember({"homology", "pages"}));
    cyl->add_option("--json", ca.json, "write the report here");
    cyl->add_option("--svg", ca.svg, "write the path figure here");

    TorusArgs ta;
    CLI::App* tor = app.add_subcommand("torus", "n-fold twist complex on the torus");
    tor->add_option("--n", ta.n, "parallel twist count")->required();
    tor->add_option("--d", ta.d, "degree")->required();
    tor->add_option("--sector", ta.sector, "total numerator mod n");
    tor->add_option("action", ta.action, "homology, pages or wrapping-check")
        ->required()
        ->check(CLI::IsMember({"homology", "pages", "wrapping-check"}));
    tor->add_option("--json", ta.json, "write the report here");

    SurfaceArgs sa;
    CLI::App* surf = app.add_subcommand("surface", "twist on a closed surface");
    surf->require_subcommand(1);
    CLI::App* nonsep = surf->add_subcommand("nonseparating", "twist along a nonseparating curve");
    nonsep->add_option("--g", sa.g, "genus, at least 1")->required();
    nonsep->add_option("--d", sa.d, "degree")->required();
    nonsep->add_option("--json", sa.json, "write the report here");
    CLI::App* sep = surf->add_subcommand("separating", "twist along a separating curve");
    sep->add_option("--g0", sa.g0, "genus on the zero side")->required();
    sep->add_option("--g1", sa.g1, "genus on the one side")->required();
    sep->add_option("--d", sa.d, "degree")->required();
    sep->add_option("--sector", sa.sector, "restrict to one total numerator");
    sep->add_option("--json", sa.json, "write the report here");

    std::string verify_what, verify_json;
    CLI::App* ver = app.add_subcommand("verify", "run the release checks");
    ver->add_option("what", verify_what, "all")->required()->check(CLI::IsMember({"all"}));
    ver->add_option("--json", verify_json, "write the report here");

    RenderArgs ra;
    CLI::App* ren = app.add_subcommand("render", "draw lattice paths as SVG");
    ren->add_option("--path", ra.paths, "orbit set, e.g. 'e[3/2] e[0]^2'; repeatable");
    ren->add_option("--label", ra.labels, "text@p,q; repeatable");
    ren->add_option("--svg", ra.svg, "output file, stdout if absent");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*cyl) return run_cylinder(ca);
        if (*tor) return run_torus(ta);
        if (*nonsep) {
            sa.separating = false;
            return run_surface(sa);
        }
        if (*sep) {
            sa.separating = true;
            return run_surface(sa);
        }
        if (*ver) return run_verify(verify_json);
        if (*ren) return run_render(ra);
    } catch (const DifferentialNotSquareZero& e) {
        std::fprintf(stderr, "check failed: %s\n", e.what());
        return kCheckFailed;
    } catch (const FiltrationViolated& e) {
        std::fprintf(stderr, "check failed: %s\n", e.what());
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    }
    return kUsage;
}
