#include "adic/models.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace adic {

std::string kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::Line: return "line";
        case ComponentKind::ProjLine: return "projline";
        case ComponentKind::Torus: return "torus";
    }
    return "?";
}

std::string kind_name(FiberKind k) {
    switch (k) {
        case FiberKind::Line: return "line";
        case FiberKind::Torus: return "torus";
        case FiberKind::Nodal: return "nodal";
    }
    return "?";
}

std::size_t DualGraph::components() const {
    std::vector<std::size_t> rep(vertices.size());
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](std::size_t x) {
        while (rep[x] != x) x = rep[x] = rep[rep[x]];
        return x;
    };
    for (const auto& e : edges) rep[find(e.u)] = find(e.v);
    std::size_t count = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (find(i) == i) ++count;
    return count;
}

namespace {

bool integral_nonneg_radius(const DiscPoint& v) {
    return v.radius_exp().is_integer() && v.radius_exp() >= Rat(0);
}

// the rank-1-with-infinitesimal radius of the avatar disc of a point
Rank2Val avatar_radius(const DiscPoint& x) {
    switch (x.type()) {
        case DiscPoint::Type::One: return Rank2Val{Rat::infinity(), 0};
        case DiscPoint::Type::Two: return Rank2Val{x.radius_exp(), 0};
        case DiscPoint::Type::Five:
            return Rank2Val{x.radius_exp(), x.side() == Side::Plus ? 1 : -1};
    }
    return Rank2Val{Rat(0), 0};
}

// exact rational v against a radius with infinitesimal part: v >= (r, +1)
// means v > r, v >= (r, -1) means v >= r
bool val_geq(const Rat& v, const Rank2Val& rho) {
    if (v > rho.main) return true;
    if (v < rho.main) return false;
    return rho.eps <= 0;
}

// D(c1, rho1) inside D(c2, rho2)
bool disc_inside(const PadicScalar& c1, const Rank2Val& rho1, const PadicScalar& c2,
                 const Rank2Val& rho2) {
    if (rho1 < rho2) return false;
    return val_geq((c1 - c2).val(), rho2);
}

}  // namespace

DiscModelSpec::DiscModelSpec(std::vector<DiscPoint> vertices) {
    if (vertices.empty()) throw InvalidSpec("disc model needs at least the Gauss point");
    for (const auto& v : vertices) {
        if (v.type() != DiscPoint::Type::Two)
            throw InvalidSpec("disc model vertices must be type-2 points");
        if (!integral_nonneg_radius(v))
            throw InvalidSpec("vertex radius exponent must be a nonnegative integer, got " +
                              v.radius_exp().str());
        if (!(v.center().val() >= Rat(0)))
            throw InvalidSpec("vertex centre lies outside the unit disc");
    }
    // dedup semantically, keep first representative
    for (const auto& v : vertices) {
        bool seen = false;
        for (const auto& w : vertices_) seen = seen || semantic_eq(v, w);
        if (!seen) vertices_.push_back(v);
    }
    // deterministic order: radius, then skeleton level, then rendered form
    std::sort(vertices_.begin(), vertices_.end(), [](const DiscPoint& x, const DiscPoint& y) {
        if (x.radius_exp() != y.radius_exp()) return x.radius_exp() < y.radius_exp();
        return x.str() < y.str();
    });

    const Context& ctx = vertices_[0].context();
    DiscPoint gauss = DiscPoint::type2(ctx->zero(), Rat(0));
    bool has_root = false;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (semantic_eq(vertices_[i], gauss)) {
            root_ = i;
            has_root = true;
        }
    }
    if (!has_root) throw InvalidSpec("disc model must contain the Gauss point eta(0, 0)");

    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
            DiscPoint meet = join(vertices_[i], vertices_[j]);
            bool found = false;
            for (const auto& w : vertices_) found = found || semantic_eq(meet, w);
            if (!found)
                throw InvalidSpec("model is not join-closed: join of " + vertices_[i].str() +
                                  " and " + vertices_[j].str() + " is missing");
        }
    }
}

std::optional<std::size_t> DiscModelSpec::parent(std::size_t v) const {
    std::optional<std::size_t> best;
    for (std::size_t u = 0; u < vertices_.size(); ++u) {
        if (u == v) continue;
        if (!disc_inside(vertices_[v].center(), avatar_radius(vertices_[v]),
                         vertices_[u].center(), avatar_radius(vertices_[u])))
            continue;
        if (!best || vertices_[u].radius_exp() > vertices_[*best].radius_exp()) best = u;
    }
    return best;
}

DualGraph disc_model_dual_tree(const DiscModelSpec& spec) {
    DualGraph g;
    for (std::size_t i = 0; i < spec.vertices().size(); ++i) {
        g.vertices.push_back(DualGraph::Vertex{
            spec.vertices()[i].str(),
            i == spec.root() ? ComponentKind::Line : ComponentKind::ProjLine,
        });
    }
    for (std::size_t i = 0; i < spec.vertices().size(); ++i) {
        if (auto p = spec.parent(i))
            g.edges.push_back(DualGraph::Edge{*p, i, "node:" + spec.vertices()[i].str()});
    }
    return g;
}

std::string SpecializationTarget::str() const {
    switch (kind) {
        case Kind::Generic: return "generic(" + vertex.str() + ")";
        case Kind::Closed: return "closed(" + vertex.str() + ", " + residue_label + ")";
        case Kind::Node: return "node(" + vertex.str() + ", " + child->str() + ")";
    }
    return "?";
}

bool SpecializationTarget::same_as(const SpecializationTarget& o) const {
    if (kind != o.kind) return false;
    if (!semantic_eq(vertex, o.vertex)) return false;
    if (kind == Kind::Closed) return residue_label == o.residue_label;
    if (kind == Kind::Node) return semantic_eq(*child, *o.child);
    return true;
}

SpecializationTarget specialize(const DiscModelSpec& spec, const DiscPoint& x) {
    const Rank2Val rho = avatar_radius(x);
    const PadicScalar& cx = x.center();
    if (!disc_inside(cx, rho, cx.context()->zero(), Rank2Val{Rat(0), 0}))
        throw Precondition("point " + x.str() + " lies outside the closed unit disc");

    const auto& vs = spec.vertices();
    // smallest model disc containing the avatar
    std::optional<std::size_t> smallest;
    for (std::size_t v = 0; v < vs.size(); ++v) {
        if (!disc_inside(cx, rho, vs[v].center(), avatar_radius(vs[v]))) continue;
        if (!smallest || vs[v].radius_exp() > vs[*smallest].radius_exp()) smallest = v;
    }
    if (!smallest) throw Precondition("point " + x.str() + " lies outside the closed unit disc");
    const std::size_t vstar = *smallest;
    const DiscPoint& vert = vs[vstar];

    // the generic point of the component
    if (x.type() == DiscPoint::Type::Two && semantic_eq(x, vert))
        return SpecializationTarget{SpecializationTarget::Kind::Generic, vert, std::nullopt, ""};

    // on the open edge toward a child whose disc the avatar still contains
    for (std::size_t w = 0; w < vs.size(); ++w) {
        if (w == vstar) continue;
        auto p = spec.parent(w);
        if (!p || *p != vstar) continue;
        if (disc_inside(vs[w].center(), avatar_radius(vs[w]), cx, rho))
            return SpecializationTarget{SpecializationTarget::Kind::Node, vert, vs[w], ""};
    }

    // a closed point of the component, labeled by the residue direction
    long long rstar = vert.radius_exp().to_long();
    PadicScalar dir = (cx - vert.center()) * cx.context()->from_unit(-rstar, 1);
    std::string label = std::to_string(dir.residue());
    return SpecializationTarget{SpecializationTarget::Kind::Closed, vert, std::nullopt, label};
}

FiberKind reduce_annulus(const Chart& chart) {
    if (chart.a().is_finite() && !chart.a().is_integer())
        throw Precondition("chart bound " + chart.a().str() + " is not in the value group of K");
    if (chart.b().is_finite() && !chart.b().is_integer())
        throw Precondition("chart bound " + chart.b().str() + " is not in the value group of K");
    if (chart.is_disc() || chart.is_codisc()) return FiberKind::Line;
    if (chart.is_circle()) return FiberKind::Torus;
    return FiberKind::Nodal;
}

std::string AnnulusReduction::str() const {
    auto poly = [](const std::map<long long, long long>& c, const char* var) {
        if (c.empty()) return std::string("0");
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, r] : c) {
            if (!first) os << " + ";
            first = false;
            if (e == 0 || r != 1) os << r;
            if (e != 0) {
                if (r != 1) os << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    };
    return "(" + poly(s_poly, "s") + ", " + poly(t_poly, "t") + ")";
}

AnnulusReduction reduce_function(const LaurentSeries& f) {
    const Chart& ch = f.chart();
    if (!ch.is_strict_annulus() || !ch.a().is_integer() || !ch.b().is_integer())
        throw Precondition("reduction needs a strict annulus with integral bounds, got " +
                           ch.str());
    if (!is_power_bounded(f))
        throw Precondition("function is not power-bounded on the annulus (sup_val < 0)");

    AnnulusReduction red;
    for (const auto& [i, c] : f.coeffs()) {
        if (i >= 0 && c.val() + ch.a().scaled(i) == Rat(0)) red.s_poly[i] = c.residue();
        if (i <= 0 && c.val() + ch.b().scaled(i) == Rat(0)) red.t_poly[-i] = c.residue();
    }
    auto it = red.s_poly.find(0);
    red.constant = it == red.s_poly.end() ? 0 : it->second;
    return red;
}

TateParams::TateParams(const Rat& vq_, std::optional<PadicScalar> q_) : vq(vq_), q(std::move(q_)) {
    if (!vq.is_finite() || !(vq > Rat(0))) throw InvalidSpec("Tate parameter needs v(q) > 0");
    if (q && q->val() != vq)
        throw InvalidSpec("supplied q has valuation " + q->val().str() + ", expected " + vq.str());
}

TateParams TateParams::with_default_q(const Context& ctx, const Rat& vq) {
    if (vq.is_integer()) return TateParams(vq, ctx->from_unit(vq.to_long(), 1));
    return TateParams(vq);
}

const PadicScalar& TateParams::require_q() const {
    if (!q) throw MissingQ();
    return *q;
}

DiscPoint tate_action(const DiscPoint& x, long long m, const TateParams& params) {
    if (m == 0) return x;
    const PadicScalar qm = params.require_q().pow(m);
    switch (x.type()) {
        case DiscPoint::Type::One: return DiscPoint::type1(qm * x.center());
        case DiscPoint::Type::Two:
            return DiscPoint::type2(qm * x.center(), x.radius_exp() + params.vq.scaled(m));
        case DiscPoint::Type::Five:
            return DiscPoint::type5(qm * x.center(), x.radius_exp() + params.vq.scaled(m),
                                    x.side());
    }
    throw Precondition("unreachable point type");
}

OrbitRep tate_orbit_normalize(const DiscPoint& x, const TateParams& params) {
    Rat r = gm_retract(x);
    BigInt sheet_big = (r / params.vq).floor();
    long long sheet = static_cast<long long>(sheet_big);
    return OrbitRep{tate_action(x, -sheet, params), sheet};
}

bool tate_cover_disjoint(long long n, long long m, const TateParams& params) {
    const Rat half = params.vq / Rat(2);
    Rat lo1 = half.scaled(n), hi1 = half.scaled(n + 1);
    Rat lo2 = half.scaled(n + 2 * m), hi2 = half.scaled(n + 2 * m + 1);
    return max(lo1, lo2) > min(hi1, hi2);
}

Rat tate_retract(const DiscPoint& x, const TateParams& params) {
    Rat r = gm_retract(x);
    return r - params.vq * Rat((r / params.vq).floor());
}

DualGraph tate_dual_graph(const std::vector<Rat>& break_points, const TateParams& params) {
    if (break_points.empty()) throw InvalidSpec("break set must be nonempty");
    std::vector<Rat> breaks = break_points;
    std::sort(breaks.begin(), breaks.end(), [](const Rat& a, const Rat& b) { return a < b; });
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        if (!breaks[i].is_finite() || breaks[i] < Rat(0) || !(breaks[i] < params.vq))
            throw InvalidSpec("break point " + breaks[i].str() + " outside [0, v(q))");
        if (i && breaks[i] == breaks[i - 1])
            throw InvalidSpec("break points must be distinct");
    }

    DualGraph g;
    const std::size_t k = breaks.size();
    for (std::size_t j = 0; j < k; ++j) {
        Rat end = j + 1 < k ? breaks[j + 1] : breaks[0] + params.vq;
        g.vertices.push_back(DualGraph::Vertex{
            "arc[" + breaks[j].str() + "," + end.str() + ")", ComponentKind::ProjLine});
    }
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t prev = (j + k - 1) % k;
        g.edges.push_back(DualGraph::Edge{prev, j, "s=" + breaks[j].str()});
    }
    return g;
}

Rat universal_cover_lift(const Rat& s, long long sheet, const TateParams& params) {
    if (s < Rat(0) || !(s < params.vq))
        throw Precondition("skeleton coordinate " + s.str() + " outside [0, v(q))");
    return s + params.vq.scaled(sheet);
}

namespace {

using ZSeries = std::vector<BigInt>;  // coefficients of q^0 .. q^L

ZSeries mul_trunc(const ZSeries& a, const ZSeries& b, std::size_t L) {
    ZSeries out(L + 1, 0);
    for (std::size_t i = 0; i <= L && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j + i <= L && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

ZSeries invert_unit_series(const ZSeries& u, std::size_t L) {
    // u[0] must be 1
    ZSeries w(L + 1, 0);
    w[0] = 1;
    for (std::size_t n = 1; n <= L; ++n) {
        BigInt acc = 0;
        for (std::size_t k = 1; k <= n && k < u.size(); ++k) acc += u[k] * w[n - k];
        w[n] = -acc;
    }
    return w;
}

BigInt sigma(long long n, int power) {
    BigInt acc = 0;
    for (long long d = 1; d <= n; ++d) {
        if (n % d) continue;
        BigInt t = 1;
        for (int i = 0; i < power; ++i) t *= d;
        acc += t;
    }
    return acc;
}

}  // namespace

std::vector<BigInt> j_expansion(int terms) {
    if (terms < 1) throw InvalidSpec("need at least one coefficient");
    const std::size_t L = static_cast<std::size_t>(terms);

    ZSeries e4(L + 1, 0);
    e4[0] = 1;
    for (std::size_t n = 1; n <= L; ++n) e4[n] = 240 * sigma(static_cast<long long>(n), 3);

    // Delta / q = prod (1 - q^n)^24, truncated
    ZSeries eta(L + 1, 0);
    eta[0] = 1;
    for (std::size_t n = 1; n <= L; ++n) {
        ZSeries factor(L + 1, 0);
        factor[0] = 1;
        if (n <= L) factor[n] = -1;
        eta = mul_trunc(eta, factor, L);
    }
    ZSeries eta2 = mul_trunc(eta, eta, L);
    ZSeries eta4 = mul_trunc(eta2, eta2, L);
    ZSeries eta8 = mul_trunc(eta4, eta4, L);
    ZSeries eta16 = mul_trunc(eta8, eta8, L);
    ZSeries delta_over_q = mul_trunc(eta16, eta8, L);

    ZSeries num = mul_trunc(mul_trunc(e4, e4, L), e4, L);
    ZSeries j_shift = mul_trunc(num, invert_unit_series(delta_over_q, L), L);  // q * j(q)

    std::vector<BigInt> out(j_shift.begin(), j_shift.begin() + terms);
    return out;
}

Rat j_valuation(const TateParams& params) { return -params.vq; }

}  // namespace adic
