#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "adic/io.hpp"

using namespace adic;

namespace {

struct RunConfig {
    long long prime = 5;
    int precision = 8;
    long long window = 8;
    int threshold = -1;  // -1: default N - 2
    std::string format = "json";

    Context context() const { return PadicContext::make(prime, precision); }
    int zero_threshold() const { return threshold < 0 ? precision - 2 : threshold; }

    void validate() const {
        if (precision < 4) throw InvalidSpec("-N must be >= 4");
        if (window < 1) throw InvalidSpec("-D must be >= 1");
        if (threshold >= precision) throw InvalidSpec("--threshold must be < N");
        if (format != "json" && format != "dot" && format != "text")
            throw InvalidSpec("--format must be json, dot or text");
    }
};

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

// default chart for a parsed function: wide enough for the evaluation point
Chart chart_for(const LaurentSeries::CoeffMap& terms, const DiscPoint& at) {
    Rat level = at.type() == DiscPoint::Type::One
                    ? at.center().val()
                    : min(at.center().val(), at.radius_exp());
    bool laurent = !terms.empty() && terms.begin()->first < 0;
    if (laurent) return Chart::circle(level);
    return Chart::disc(min(Rat(0), level));
}

int cmd_cech(const RunConfig& cfg, const std::string& space, const std::string& a,
             const std::string& s0, const std::string& b, const std::string& vq) {
    CechSpaceSpec spec = [&]() {
        if (space == "p1") return CechSpaceSpec::proj_line();
        if (space == "bidisc") return CechSpaceSpec::bidisc_boundary();
        if (space == "annulus")
            return CechSpaceSpec::annulus(parse_rat(a), parse_rat(s0), parse_rat(b));
        if (space == "tate") return CechSpaceSpec::tate_curve(parse_rat(vq));
        throw InvalidSpec("unknown space '" + space + "' (p1, annulus, tate, bidisc)");
    }();
    CohomologyReport rep = cohomology(build_cech(spec, cfg.window, cfg.context()),
                                      cfg.zero_threshold());
    if (cfg.format == "text")
        std::cout << spec.kind_name() << ": h0=" << rep.h0 << " h1=" << rep.h1 << "\n";
    else
        emit(report_json(rep));
    return 0;
}

int cmd_factor(const RunConfig& cfg, const std::string& path, const std::string& target,
               int max_iter) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    LaurentMatrix m = parse_matrix_file(cfg.context(), buf.str(), cfg.window);
    FactorizationResult f = cartan_factor(m, parse_rat(target), max_iter);
    emit(factorization_json(f));
    return 0;
}

int cmd_point(const RunConfig& cfg, const std::string& sub, const std::string& fexpr,
              const std::string& at, const std::string& x, const std::string& y,
              const std::string& model, const std::string& chart) {
    Context ctx = cfg.context();
    if (sub == "eval") {
        DiscPoint pt = parse_point(ctx, at);
        LaurentSeries::CoeffMap terms = parse_series_terms(ctx, fexpr);
        Chart ch = chart.empty() ? chart_for(terms, pt) : [&]() {
            auto colon = chart.find(':');
            if (colon == std::string::npos) throw ParseError("--chart expects a:b");
            return Chart(parse_rat(chart.substr(0, colon)), parse_rat(chart.substr(colon + 1)));
        }();
        LaurentSeries f(ctx, ch, cfg.window, std::move(terms));
        Rank2Val v = seminorm_val(f, pt);
        if (cfg.format == "text")
            std::cout << v.str() << "\n";
        else
            emit(Json{{"val", rank2_json(v)}});
        return 0;
    }
    if (sub == "join") {
        DiscPoint j = join(parse_point(ctx, x), parse_point(ctx, y));
        if (cfg.format == "text")
            std::cout << j.str() << "\n";
        else
            emit(Json{{"point", point_json(j)}});
        return 0;
    }
    if (sub == "retract") {
        Rat r = gm_retract(parse_point(ctx, at));
        if (cfg.format == "text")
            std::cout << r.str() << "\n";
        else
            emit(Json{{"retract", rat_json(r)}});
        return 0;
    }
    if (sub == "specialize") {
        SpecializationTarget t = specialize(parse_disc_model(ctx, model), parse_point(ctx, at));
        if (cfg.format == "text")
            std::cout << t.str() << "\n";
        else
            emit(target_json(t));
        return 0;
    }
    throw InvalidSpec("unknown point subcommand '" + sub + "' (eval, join, retract, specialize)");
}

int cmd_tate(const RunConfig& cfg, const std::string& sub, const std::string& vq,
             const std::string& at, const std::string& breaks, int terms, long long n,
             long long m, bool format_given) {
    Context ctx = cfg.context();
    if (sub == "normalize") {
        TateParams params = TateParams::with_default_q(ctx, parse_rat(vq));
        OrbitRep rep = tate_orbit_normalize(parse_point(ctx, at), params);
        if (cfg.format == "text")
            std::cout << rep.rep.str() << " sheet " << rep.sheet << "\n";
        else
            emit(orbit_json(rep));
        return 0;
    }
    if (sub == "dualgraph") {
        TateParams params(parse_rat(vq));
        DualGraph g = tate_dual_graph(parse_breaks(breaks), params);
        std::string fmt = format_given ? cfg.format : "dot";
        if (fmt == "dot")
            std::cout << dualgraph_dot(g);
        else if (fmt == "text")
            std::cout << g.vertices.size() << " vertices, " << g.edges.size()
                      << " edges, b1=" << g.b1() << "\n";
        else
            emit(dualgraph_json(g));
        return 0;
    }
    if (sub == "jinv") {
        Json arr = Json::array();
        for (const auto& c : j_expansion(terms)) {
            if (c > BigInt(-(1LL << 62)) && c < BigInt(1LL << 62))
                arr.push_back(static_cast<long long>(c));
            else
                arr.push_back(c.str());
        }
        emit(arr);
        return 0;
    }
    if (sub == "disjoint") {
        TateParams params(parse_rat(vq));
        emit(Json{{"n", n}, {"m", m}, {"disjoint", tate_cover_disjoint(n, m, params)}});
        return 0;
    }
    throw InvalidSpec("unknown tate subcommand '" + sub +
                      "' (normalize, dualgraph, jinv, disjoint)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational toolkit for the p-adic disc, its covers and the Tate curve"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("-p,--prime", cfg.prime, "coefficient prime");
    app.add_option("-N,--precision", cfg.precision, "relative precision in digits");
    app.add_option("-D,--window", cfg.window, "Laurent exponent window");
    app.add_option("--threshold", cfg.threshold, "divisor-is-zero valuation threshold");
    auto* fmt_opt = app.add_option("--format", cfg.format, "json, dot or text");

    auto* cech = app.add_subcommand("cech", "cohomology of the named covers");
    std::string space, a_s, s0_s, b_s, vq_s = "1";
    cech->add_option("space", space, "p1, annulus, tate or bidisc")->required();
    cech->add_option("--a", a_s, "outer valuation bound (annulus)");
    cech->add_option("--s0", s0_s, "subdivision circle (annulus)");
    cech->add_option("--b", b_s, "inner valuation bound (annulus)");
    cech->add_option("--vq", vq_s, "valuation of q (tate)");

    auto* factor = app.add_subcommand("factor", "two-sided factorization of a gluing matrix");
    std::string matrix_path, target_s = "10";
    int max_iter = 0;
    factor->add_option("matrix", matrix_path, "sparse matrix file")->required();
    factor->add_option("--target", target_s, "residual valuation target");
    factor->add_option("--max-iter", max_iter, "iteration budget (0 = automatic)");

    auto* point = app.add_subcommand("point", "points of the disc and G_m");
    std::string psub, fexpr, at_s, x_s, y_s, model_s, chart_s;
    point->add_option("op", psub, "eval, join, retract or specialize")->required();
    point->add_option("--f", fexpr, "series expression, e.g. \"T^2-5\"");
    point->add_option("--at", at_s, "point, e.g. \"eta(0,1/2)\" or \"x(7)\"");
    point->add_option("--x", x_s, "first point (join)");
    point->add_option("--y", y_s, "second point (join)");
    point->add_option("--model", model_s, "disc model \"(c,r);(c,r);...\"");
    point->add_option("--chart", chart_s, "series chart a:b (default inferred)");

    auto* tate = app.add_subcommand("tate", "Tate curve operations");
    std::string tsub, tvq_s = "1", tat_s, breaks_s;
    int terms = 3;
    long long n_arg = 0, m_arg = 0;
    tate->add_option("op", tsub, "normalize, dualgraph, jinv or disjoint")->required();
    tate->add_option("--vq", tvq_s, "valuation of q");
    tate->add_option("--at", tat_s, "point of G_m (normalize)");
    tate->add_option("--breaks", breaks_s, "skeleton break points, comma separated");
    tate->add_option("--terms", terms, "number of j coefficients");
    tate->add_option("--n", n_arg, "annulus index");
    tate->add_option("--m", m_arg, "translation lag");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        cfg.validate();
        if (cfg.format == "dot" && !tate->parsed())
            throw InvalidSpec("--format dot is only valid for tate dualgraph");
        if (cech->parsed()) return cmd_cech(cfg, space, a_s, s0_s, b_s, vq_s);
        if (factor->parsed()) return cmd_factor(cfg, matrix_path, target_s, max_iter);
        if (point->parsed()) return cmd_point(cfg, psub, fexpr, at_s, x_s, y_s, model_s, chart_s);
        if (tate->parsed())
            return cmd_tate(cfg, tsub, tvq_s, tat_s, breaks_s, terms, n_arg, m_arg,
                            fmt_opt->count() > 0);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NonConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const Precondition& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
