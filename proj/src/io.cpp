#include "adic/io.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <tuple>

namespace adic {

Rat parse_rat(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw ParseError("empty rational literal");
    if (s == "inf" || s == "+inf") return Rat::infinity();
    if (s == "-inf") return Rat::neg_infinity();
    try {
        if (auto slash = s.find('/'); slash != std::string::npos)
            return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        if (auto dot = s.find('.'); dot != std::string::npos) {
            std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
            if (frac.empty()) return Rat(BigInt(whole));
            BigInt den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
            bool neg = !whole.empty() && whole[0] == '-';
            BigInt w = whole.empty() || whole == "-" || whole == "+" ? BigInt(0) : BigInt(whole);
            BigInt num = w * den + (neg ? -BigInt(frac) : BigInt(frac));
            return Rat(num, den);
        }
        return Rat(BigInt(s));
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + text);
    }
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Json rat_json(const Rat& r) {
    if (r.is_pos_inf()) return "inf";
    if (r.is_neg_inf()) return "-inf";
    if (r.is_integer()) {
        BigInt n = r.numerator_int();
        if (n > BigInt(-(1LL << 62)) && n < BigInt(1LL << 62))
            return static_cast<long long>(n);
    }
    return r.str();
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw ParseError("expected a rational (integer or string), got " + j.dump());
}

Json rank2_json(const Rank2Val& v) { return Json::array({rat_json(v.main), v.eps}); }

Json chart_json(const Chart& c) { return Json{{"a", rat_json(c.a())}, {"b", rat_json(c.b())}}; }

Chart chart_from_json(const Json& j) {
    return Chart(rat_from_json(j.at("a")), rat_from_json(j.at("b")));
}

Json series_json(const LaurentSeries& f) {
    Json coeffs = Json::object();
    for (const auto& [i, c] : f.coeffs()) coeffs[std::to_string(i)] = c.compact_str();
    return Json{{"chart", chart_json(f.chart())},
                {"window", f.window()},
                {"coeffs", coeffs},
                {"truncated", f.truncated()}};
}

LaurentSeries series_from_json(const Context& ctx, const Json& j) {
    LaurentSeries::CoeffMap coeffs;
    for (const auto& [key, val] : j.at("coeffs").items())
        coeffs.emplace(std::stoll(key), ctx->parse(val.get<std::string>()));
    return LaurentSeries(ctx, chart_from_json(j.at("chart")), j.at("window").get<long long>(),
                         std::move(coeffs), j.value("truncated", false));
}

Json point_json(const DiscPoint& x) {
    Json j{{"c", x.center().compact_str()}};
    switch (x.type()) {
        case DiscPoint::Type::One: j["kind"] = "type1"; break;
        case DiscPoint::Type::Two:
            j["kind"] = "type2";
            j["r"] = rat_json(x.radius_exp());
            break;
        case DiscPoint::Type::Five:
            j["kind"] = "type5";
            j["r"] = rat_json(x.radius_exp());
            j["side"] = x.side() == Side::Plus ? "+" : "-";
            break;
    }
    return j;
}

DiscPoint point_from_json(const Context& ctx, const Json& j) {
    PadicScalar c = ctx->parse(j.at("c").get<std::string>());
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "type1") return DiscPoint::type1(c);
    if (kind == "type2") return DiscPoint::type2(c, rat_from_json(j.at("r")));
    if (kind == "type5")
        return DiscPoint::type5(c, rat_from_json(j.at("r")),
                                j.at("side").get<std::string>() == "+" ? Side::Plus : Side::Minus);
    throw ParseError("unknown point kind: " + kind);
}

namespace {

Json spec_json(const CechSpaceSpec& s) {
    Json j{{"kind", s.kind_name()}};
    if (s.kind == CechSpaceSpec::Kind::Annulus) {
        j["a"] = rat_json(s.a);
        j["s0"] = rat_json(s.s0);
        j["b"] = rat_json(s.b);
    }
    if (s.kind == CechSpaceSpec::Kind::TateCurve) j["vq"] = rat_json(s.vq);
    return j;
}

Json grade_json(const GradeKey& g) {
    if (!g.bigraded) return g.i;
    return Json::array({g.i, g.j});
}

}  // namespace

Json report_json(const CohomologyReport& rep) {
    Json grades = Json::array();
    for (const auto& g : rep.grades) {
        Json divisors = Json::array();
        for (const auto& d : g.divisors) divisors.push_back(rat_json(d));
        grades.push_back(Json{{"g", grade_json(g.grade)},
                              {"divisors", divisors},
                              {"h0", g.h0},
                              {"h1", g.h1}});
    }
    return Json{{"spec", spec_json(rep.spec)},
                {"D", rep.window},
                {"N", rep.precision},
                {"threshold", rep.zero_threshold},
                {"dims", Json::array({rep.h0, rep.h1})},
                {"grades", grades},
                {"truncation_flags", rep.truncation_flags}};
}

Json matrix_json(const LaurentMatrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            Json coeffs = Json::object();
            for (const auto& [e, c] : m.at(i, j).coeffs()) coeffs[std::to_string(e)] = c.compact_str();
            entries.push_back(Json{{"i", i}, {"j", j}, {"coeffs", coeffs}});
        }
    }
    return Json{{"n", m.size()},
                {"chart", chart_json(m.chart())},
                {"window", m.window()},
                {"entries", entries}};
}

Json factorization_json(const FactorizationResult& f) {
    Json trace = Json::array();
    for (const auto& t : f.decay_trace) trace.push_back(rat_json(t));
    return Json{{"n", f.b1.size()},
                {"iterations", f.iterations},
                {"residual_val", rat_json(f.residual_val)},
                {"decay_trace", trace},
                {"effective_window", f.effective_window},
                {"truncated", f.truncated},
                {"working_modulus", rat_json(f.working_modulus)},
                {"b1", matrix_json(f.b1)},
                {"b2", matrix_json(f.b2)}};
}

Json target_json(const SpecializationTarget& t) {
    switch (t.kind) {
        case SpecializationTarget::Kind::Generic:
            return Json{{"kind", "generic"}, {"vertex", point_json(t.vertex)}};
        case SpecializationTarget::Kind::Closed:
            return Json{{"kind", "closed"},
                        {"vertex", point_json(t.vertex)},
                        {"residue", t.residue_label}};
        case SpecializationTarget::Kind::Node:
            return Json{{"kind", "node"},
                        {"parent", point_json(t.vertex)},
                        {"child", point_json(*t.child)}};
    }
    throw Error("unreachable");
}

Json dualgraph_json(const DualGraph& g) {
    Json vertices = Json::array(), edges = Json::array();
    for (const auto& v : g.vertices)
        vertices.push_back(Json{{"label", v.label}, {"kind", kind_name(v.kind)}});
    for (const auto& e : g.edges)
        edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"label", e.label}});
    return Json{{"vertices", vertices}, {"edges", edges}, {"b1", g.b1()}};
}

std::string dualgraph_dot(const DualGraph& g) {
    auto shape = [](ComponentKind k) {
        switch (k) {
            case ComponentKind::Line: return "box";
            case ComponentKind::ProjLine: return "ellipse";
            case ComponentKind::Torus: return "doublecircle";
        }
        return "ellipse";
    };
    std::ostringstream os;
    os << "graph dual {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << g.vertices[i].label << "\", shape="
           << shape(g.vertices[i].kind) << "];\n";
    for (const auto& e : g.edges)
        os << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

Json reduction_json(const AnnulusReduction& r) {
    auto poly = [](const std::map<long long, long long>& m) {
        Json j = Json::object();
        for (const auto& [e, c] : m) j[std::to_string(e)] = c;
        return j;
    };
    return Json{{"s", poly(r.s_poly)}, {"t", poly(r.t_poly)}, {"constant", r.constant}};
}

Json orbit_json(const OrbitRep& o) {
    return Json{{"rep", point_json(o.rep)}, {"sheet", o.sheet}};
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw ParseError("expected an integer at position " + std::to_string(start) + " in '" +
                             s + "'");
        return s.substr(start, pos - start);
    }
};

}  // namespace

LaurentSeries::CoeffMap parse_series_terms(const Context& ctx, const std::string& text) {
    LaurentSeries::CoeffMap out;
    Cursor cur{text};
    bool first = true;
    while (!cur.done()) {
        long long sign = 1;
        if (cur.eat('-'))
            sign = -1;
        else if (cur.eat('+'))
            sign = 1;
        else if (!first)
            throw ParseError("expected '+' or '-' in series: " + text);
        first = false;

        PadicScalar coeff = ctx->one();
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            std::string num = cur.integer();
            if (cur.eat('/')) {
                std::string den = cur.integer();
                coeff = ctx->from_rational(BigInt(num), BigInt(den));
            } else {
                coeff = ctx->from_integer(BigInt(num));
            }
            have_coeff = true;
            cur.eat('*');
        }
        long long exp = 0;
        if (cur.peek() == 'T' || cur.peek() == 't') {
            ++cur.pos;
            exp = 1;
            if (cur.eat('^')) exp = std::stoll(cur.integer());
        } else if (!have_coeff) {
            throw ParseError("expected a coefficient or T in series: " + text);
        }
        if (sign < 0) coeff = -coeff;
        auto it = out.find(exp);
        if (it == out.end())
            out.emplace(exp, coeff);
        else
            it->second = it->second + coeff;
    }
    if (first) throw ParseError("empty series expression");
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

LaurentSeries parse_series_expr(const Context& ctx, const std::string& text, const Chart& chart,
                                long long window) {
    return LaurentSeries(ctx, chart, window, parse_series_terms(ctx, text));
}

DiscPoint parse_point(const Context& ctx, const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(c); }), s.end());
    auto open = s.find('(');
    auto close = s.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("bad point literal: " + text);
    std::string head = s.substr(0, open);
    std::string body = s.substr(open + 1, close - open - 1);
    std::string tail = s.substr(close + 1);

    if (head == "x") {
        if (!tail.empty()) throw ParseError("bad point literal: " + text);
        return DiscPoint::type1(ctx->parse(body));
    }
    if (head != "eta") throw ParseError("unknown point form: " + text);
    auto comma = body.rfind(',');
    if (comma == std::string::npos) throw ParseError("eta(c, r) needs two arguments: " + text);
    PadicScalar c = ctx->parse(body.substr(0, comma));
    Rat r = parse_rat(body.substr(comma + 1));
    if (tail.empty()) return DiscPoint::type2(c, r);
    if (tail == "+") return DiscPoint::type5(c, r, Side::Plus);
    if (tail == "-") return DiscPoint::type5(c, r, Side::Minus);
    throw ParseError("bad point suffix: " + text);
}

DiscModelSpec parse_disc_model(const Context& ctx, const std::string& text) {
    std::vector<DiscPoint> vertices;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        std::string s = item;
        s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(c); }),
                s.end());
        if (s.empty()) continue;
        if (s.front() != '(' || s.back() != ')')
            throw ParseError("model vertex must look like (c,r): " + item);
        s = s.substr(1, s.size() - 2);
        auto comma = s.rfind(',');
        if (comma == std::string::npos) throw ParseError("model vertex must look like (c,r): " + item);
        vertices.push_back(
            DiscPoint::type2(ctx->parse(s.substr(0, comma)), parse_rat(s.substr(comma + 1))));
    }
    return DiscModelSpec(std::move(vertices));
}

std::vector<Rat> parse_breaks(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    if (out.empty()) throw ParseError("empty break list");
    return out;
}

LaurentMatrix parse_matrix_file(const Context& ctx, const std::string& content,
                                long long window) {
    std::istringstream in(content);
    std::string line;
    long long n = 0;
    Rat s(0);
    std::vector<std::tuple<long long, long long, LaurentSeries::CoeffMap>> raw;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "n") {
            if (!(ls >> n) || n < 1) throw ParseError("bad size line: " + line);
            continue;
        }
        if (head == "chart") {
            std::string tok;
            if (!(ls >> tok)) throw ParseError("bad chart line: " + line);
            s = parse_rat(tok);
            continue;
        }
        long long i = 0, j = 0;
        try {
            i = std::stoll(head);
        } catch (const std::exception&) {
            throw ParseError("bad matrix line: " + line);
        }
        if (!(ls >> j)) throw ParseError("bad matrix line: " + line);
        LaurentSeries::CoeffMap coeffs;
        std::string pair;
        while (ls >> pair) {
            auto colon = pair.find(':');
            if (colon == std::string::npos) throw ParseError("bad exp:coeff pair: " + pair);
            long long e = std::stoll(pair.substr(0, colon));
            PadicScalar c = ctx->parse(pair.substr(colon + 1));
            auto it = coeffs.find(e);
            if (it == coeffs.end())
                coeffs.emplace(e, c);
            else
                it->second = it->second + c;
        }
        raw.emplace_back(i, j, std::move(coeffs));
    }
    if (n < 1) throw ParseError("matrix file needs a leading 'n <size>' line");
    Chart circle = Chart::circle(s);
    std::vector<LaurentSeries> entries(
        static_cast<std::size_t>(n * n), LaurentSeries::zero(ctx, circle, window));
    for (auto& [i, j, coeffs] : raw) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw ParseError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") outside a " + std::to_string(n) + "x" + std::to_string(n) +
                             " matrix");
        entries[static_cast<std::size_t>(i * n + j)] =
            LaurentSeries(ctx, circle, window, std::move(coeffs));
    }
    return LaurentMatrix(static_cast<std::size_t>(n), std::move(entries));
}

}  // namespace adic
