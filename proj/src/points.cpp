#include "adic/points.hpp"

namespace adic {

DiscPoint DiscPoint::type2(const PadicScalar& c, const Rat& r) {
    if (!r.is_finite()) throw InvalidSpec("type-2 radius exponent must be finite");
    return DiscPoint(Type::Two, c, r, Side::Plus);
}

DiscPoint DiscPoint::type5(const PadicScalar& c, const Rat& r, Side side) {
    if (!r.is_finite()) throw InvalidSpec("type-5 radius exponent must be finite");
    return DiscPoint(Type::Five, c, r, side);
}

const Rat& DiscPoint::radius_exp() const {
    if (type_ == Type::One) throw Precondition("type-1 points carry no radius");
    return r_;
}

Side DiscPoint::side() const {
    if (type_ != Type::Five) throw Precondition("only type-5 points carry a side");
    return side_;
}

std::string DiscPoint::str() const {
    switch (type_) {
        case Type::One: return "x(" + c_.compact_str() + ")";
        case Type::Two: return "eta(" + c_.compact_str() + ", " + r_.str() + ")";
        case Type::Five:
            return "eta(" + c_.compact_str() + ", " + r_.str() + ")" +
                   (side_ == Side::Plus ? "+" : "-");
    }
    return "?";
}

namespace {

// v(cx - cy) >= bound, with Indistinguishable when the difference cancelled
// into untrusted digits
PointEq center_close(const PadicScalar& cx, const PadicScalar& cy, const Rat& bound, bool strict) {
    PadicScalar d = cx - cy;
    if (d.is_zero()) return PointEq::Equal;  // equal at working precision
    if (d.precision() < 1) return PointEq::Indistinguishable;
    bool ok = strict ? (d.val() > bound) : (d.val() >= bound);
    return ok ? PointEq::Equal : PointEq::Distinct;
}

}  // namespace

PointEq classify_eq(const DiscPoint& x, const DiscPoint& y) {
    if (!x.context()->same(*y.context())) throw ContextMismatch();
    if (x.type() != y.type()) return PointEq::Distinct;
    switch (x.type()) {
        case DiscPoint::Type::One:
            // equal iff the centres agree at working precision
            return center_close(x.center(), y.center(), Rat::infinity(), false);
        case DiscPoint::Type::Two:
            if (x.radius_exp() != y.radius_exp()) return PointEq::Distinct;
            return center_close(x.center(), y.center(), x.radius_exp(), false);
        case DiscPoint::Type::Five: {
            if (x.radius_exp() != y.radius_exp() || x.side() != y.side()) return PointEq::Distinct;
            bool strict = x.side() == Side::Plus;  // plus compares the residue direction
            return center_close(x.center(), y.center(), x.radius_exp(), strict);
        }
    }
    return PointEq::Distinct;
}

bool semantic_eq(const DiscPoint& x, const DiscPoint& y) {
    return classify_eq(x, y) == PointEq::Equal;
}

LaurentSeries recentre(const LaurentSeries& f, const PadicScalar& c) {
    if (c.is_zero()) return f;
    if (!f.chart().is_disc())
        throw OutOfChart("recentring at c != 0 needs a disc chart, got " + f.chart().str());
    if (!(c.val() >= f.chart().a()))
        throw OutOfChart("centre with v(c) = " + c.val().str() + " lies outside chart " +
                         f.chart().str());
    const Context& ctx = f.context();

    // f(S + c) = sum_j S^j sum_{i >= j} binom(i, j) c^{i-j} a_i
    long long dmax = 0;
    for (const auto& [i, a] : f.coeffs()) dmax = std::max(dmax, i);
    std::vector<std::vector<BigInt>> binom(dmax + 1, std::vector<BigInt>(dmax + 1, 0));
    for (long long n = 0; n <= dmax; ++n) {
        binom[n][0] = 1;
        for (long long k = 1; k <= n; ++k)
            binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : 0);
    }

    LaurentSeries::CoeffMap out;
    for (long long j = 0; j <= dmax; ++j) {
        PadicScalar acc = ctx->zero();
        for (const auto& [i, a] : f.coeffs()) {
            if (i < j) continue;
            acc = acc + a * ctx->from_integer(binom[i][j]) * c.pow(i - j);
        }
        if (!acc.is_zero()) out.emplace(j, acc);
    }
    return LaurentSeries(ctx, f.chart(), f.window(), std::move(out), f.truncated());
}

namespace {

// the point's skeleton level min(v(c), r): where v(T) sits at this point
Rat point_level(const DiscPoint& x) {
    if (x.type() == DiscPoint::Type::One) return x.center().val();
    return min(x.center().val(), x.radius_exp());
}

void check_point_in_chart(const LaurentSeries& f, const DiscPoint& x) {
    Rat level = point_level(x);
    if (!f.chart().contains_radius(level))
        throw OutOfChart("point " + x.str() + " at level " + level.str() + " outside chart " +
                         f.chart().str());
}

PadicScalar eval_at(const LaurentSeries& f, const PadicScalar& c) {
    PadicScalar acc = f.context()->zero();
    for (const auto& [i, a] : f.coeffs()) acc = acc + a * c.pow(i);
    return acc;
}

}  // namespace

Rank2Val seminorm_val(const LaurentSeries& f, const DiscPoint& x) {
    if (!f.context()->same(*x.context())) throw ContextMismatch();
    check_point_in_chart(f, x);

    if (x.type() == DiscPoint::Type::One) {
        if (x.center().is_zero() && !f.chart().is_disc() && f.coeffs().size() &&
            f.coeffs().begin()->first < 0)
            throw OutOfChart("cannot evaluate negative exponents at T = 0");
        return Rank2Val{eval_at(f, x.center()).val(), 0};
    }

    const Rat& r = x.radius_exp();
    // recentre unless the point is equivalent to a 0-centred one
    LaurentSeries g = f;
    if (!(x.center().val() >= r)) g = recentre(f, x.center());

    Rank2Val best{Rat::infinity(), 0};
    for (const auto& [i, a] : g.coeffs()) {
        Rank2Val term{a.val() + r.scaled(i), 0};
        if (x.type() == DiscPoint::Type::Five) term.eps = x.side() == Side::Plus ? i : -i;
        best = min(best, term);
    }
    if (best.main.is_pos_inf()) best.eps = 0;
    return best;
}

bool specializes(const DiscPoint& x, const DiscPoint& y) {
    if (semantic_eq(x, y)) return true;
    if (x.type() == DiscPoint::Type::Two && y.type() == DiscPoint::Type::Five)
        return semantic_eq(x, max_generalization(y));
    return false;
}

DiscPoint max_generalization(const DiscPoint& x) {
    if (x.type() != DiscPoint::Type::Five) return x;
    return DiscPoint::type2(x.center(), x.radius_exp());
}

DiscPoint join(const DiscPoint& x, const DiscPoint& y) {
    if (x.type() == DiscPoint::Type::Five || y.type() == DiscPoint::Type::Five)
        throw Precondition("join is defined on the rank-1 tree (types 1 and 2)");
    if (semantic_eq(x, y)) return x;
    Rat rx = x.type() == DiscPoint::Type::Two ? x.radius_exp() : Rat::infinity();
    Rat ry = y.type() == DiscPoint::Type::Two ? y.radius_exp() : Rat::infinity();
    Rat rj = min(min(rx, ry), (x.center() - y.center()).val());
    if (!rj.is_finite())
        throw PrecisionExhausted("join of points indistinguishable at working precision");
    return DiscPoint::type2(x.center(), rj);
}

std::vector<DiscPoint> path_breakpoints(const DiscPoint& x, const DiscPoint& y) {
    std::vector<DiscPoint> path{x};
    DiscPoint j = join(x, y);
    if (!semantic_eq(j, path.back())) path.push_back(j);
    if (!semantic_eq(y, path.back())) path.push_back(y);
    return path;
}

Rat gm_retract(const DiscPoint& x) {
    if (x.type() == DiscPoint::Type::One) {
        if (x.center().is_zero()) throw Precondition("the origin is not a point of G_m");
        return x.center().val();
    }
    return min(x.radius_exp(), x.center().val());
}

}  // namespace adic
