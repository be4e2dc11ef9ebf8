#include "adic/series.hpp"

#include <sstream>

namespace adic {

LaurentSeries::LaurentSeries(Context ctx, Chart chart, long long window, CoeffMap coeffs,
                             bool truncated)
    : ctx_(std::move(ctx)), chart_(chart), window_(window), coeffs_(std::move(coeffs)),
      truncated_(truncated) {
    if (window_ < 1) throw InvalidSpec("series window must be >= 1");
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        const auto& [exp, c] = *it;
        if (!c.context() || !c.context()->same(*ctx_)) throw ContextMismatch();
        if (c.is_zero()) {
            it = coeffs_.erase(it);
            continue;
        }
        if (exp < -window_ || exp > window_)
            throw InvalidSpec("exponent " + std::to_string(exp) + " outside window " +
                              std::to_string(window_));
        if (chart_.is_disc() && exp < 0)
            throw InvalidSpec("negative exponent on a disc chart");
        if (chart_.is_codisc() && exp > 0)
            throw InvalidSpec("positive exponent on a codisc chart");
        ++it;
    }
}

LaurentSeries LaurentSeries::constant(const Context& ctx, const Chart& chart, long long window,
                                      const PadicScalar& c) {
    CoeffMap m;
    if (!c.is_zero()) m.emplace(0, c);
    return LaurentSeries(ctx, chart, window, std::move(m));
}

LaurentSeries LaurentSeries::monomial(const Context& ctx, const Chart& chart, long long window,
                                      long long exp, const PadicScalar& c) {
    CoeffMap m;
    if (!c.is_zero()) m.emplace(exp, c);
    return LaurentSeries(ctx, chart, window, std::move(m));
}

PadicScalar LaurentSeries::coeff(long long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? ctx_->zero() : it->second;
}

LaurentSeries LaurentSeries::widened(long long window) const {
    if (window < window_) throw InvalidSpec("widened() cannot shrink the window");
    return LaurentSeries(ctx_, chart_, window, coeffs_, truncated_);
}

namespace {

// v(c) + i*s, handling the infinite chart endpoints: on a disc (s = +inf) only
// i = 0 contributes a finite value, symmetrically on a codisc.
Rat term_val(const PadicScalar& c, long long i, const Rat& s) {
    if (s.is_finite()) return c.val() + s.scaled(i);
    if (i == 0) return c.val();
    return Rat::infinity();  // support invariants make i*s = +inf here
}

}  // namespace

Rat gauss_val(const LaurentSeries& f, const Rat& s) {
    if (!f.chart().contains_radius(s))
        throw OutOfChart("radius parameter " + s.str() + " outside chart " + f.chart().str());
    Rat best = Rat::infinity();
    for (const auto& [i, c] : f.coeffs()) best = min(best, term_val(c, i, s));
    return best;
}

Rat sup_val(const LaurentSeries& f) {
    if (f.is_zero()) return Rat::infinity();
    // concavity: the minimum over the chart sits at a finite endpoint (discs
    // and codiscs have exactly one, and every slope points away from it)
    Rat best = Rat::infinity();
    if (f.chart().a().is_finite()) best = min(best, gauss_val(f, f.chart().a()));
    if (f.chart().b().is_finite()) best = min(best, gauss_val(f, f.chart().b()));
    return best;
}

namespace {

void check_binary(const LaurentSeries& f, const LaurentSeries& g) {
    if (!f.context()->same(*g.context())) throw ContextMismatch();
    if (f.chart() != g.chart())
        throw ChartMismatch("charts differ: " + f.chart().str() + " vs " + g.chart().str());
}

}  // namespace

LaurentSeries series_add(const LaurentSeries& f, const LaurentSeries& g) {
    check_binary(f, g);
    long long window = std::max(f.window(), g.window());
    LaurentSeries::CoeffMap out = f.coeffs();
    for (const auto& [i, c] : g.coeffs()) {
        auto it = out.find(i);
        if (it == out.end())
            out.emplace(i, c);
        else
            it->second = it->second + c;
    }
    return LaurentSeries(f.context(), f.chart(), window, std::move(out),
                         f.truncated() || g.truncated());
}

LaurentSeries series_neg(const LaurentSeries& f) {
    LaurentSeries::CoeffMap out;
    for (const auto& [i, c] : f.coeffs()) out.emplace(i, -c);
    return LaurentSeries(f.context(), f.chart(), f.window(), std::move(out), f.truncated());
}

LaurentSeries series_sub(const LaurentSeries& f, const LaurentSeries& g) {
    return series_add(f, series_neg(g));
}

LaurentSeries series_scalar_mul(const PadicScalar& c, const LaurentSeries& f) {
    LaurentSeries::CoeffMap out;
    for (const auto& [i, fc] : f.coeffs()) out.emplace(i, c * fc);
    return LaurentSeries(f.context(), f.chart(), f.window(), std::move(out), f.truncated());
}

LaurentSeries series_mul(const LaurentSeries& f, const LaurentSeries& g) {
    check_binary(f, g);
    long long window = std::max(f.window(), g.window());
    LaurentSeries::CoeffMap out;
    bool truncated = f.truncated() || g.truncated();
    for (const auto& [i, a] : f.coeffs()) {
        for (const auto& [j, b] : g.coeffs()) {
            long long e = i + j;
            if (e < -window || e > window) {
                truncated = true;
                continue;
            }
            PadicScalar prod = a * b;
            auto it = out.find(e);
            if (it == out.end())
                out.emplace(e, prod);
            else
                it->second = it->second + prod;
        }
    }
    return LaurentSeries(f.context(), f.chart(), window, std::move(out), truncated);
}

LaurentSeries restrict(const LaurentSeries& f, const Chart& sub) {
    if (!f.chart().contains(sub))
        throw ChartMismatch("chart " + sub.str() + " is not nested in " + f.chart().str());
    return LaurentSeries(f.context(), sub, f.window(), f.coeffs(), f.truncated());
}

LaurentSeries scale_variable(const LaurentSeries& f, const PadicScalar& lambda) {
    if (lambda.is_zero()) throw Precondition("scale_variable needs lambda != 0");
    Rat shift = lambda.val();
    Chart shifted(f.chart().a() - shift, f.chart().b() - shift);
    LaurentSeries::CoeffMap out;
    for (const auto& [i, c] : f.coeffs()) out.emplace(i, c * lambda.pow(i));
    return LaurentSeries(f.context(), shifted, f.window(), std::move(out), f.truncated());
}

bool is_power_bounded(const LaurentSeries& f) { return sup_val(f) >= Rat(0); }

SplitParts split_laurent(const LaurentSeries& f) {
    if (!f.chart().is_circle())
        throw ChartMismatch("split_laurent needs a circle chart, got " + f.chart().str());
    const Rat& s = f.chart().a();
    LaurentSeries::CoeffMap plus, minus;
    for (const auto& [i, c] : f.coeffs()) {
        if (i >= 0)
            plus.emplace(i, c);
        else
            minus.emplace(i, -c);
    }
    return SplitParts{
        LaurentSeries(f.context(), Chart::disc(s), f.window(), std::move(plus), f.truncated()),
        LaurentSeries(f.context(), Chart::codisc(s), f.window(), std::move(minus), f.truncated()),
    };
}

std::string to_string(const LaurentSeries& f) {
    if (f.is_zero()) return "0 on chart " + f.chart().str();
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : f.coeffs()) {
        if (!first) os << " + ";
        first = false;
        os << c.compact_str();
        if (i != 0) os << "*T^" << i;
    }
    os << " on chart " << f.chart().str();
    return os.str();
}

}  // namespace adic
