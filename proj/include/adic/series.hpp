#pragma once

#include <map>
#include <string>

#include "adic/padic.hpp"

namespace adic {

/// A disc/annulus/circle of definition, parameterized by valuation bounds so
/// that all radius arithmetic stays exact:
///   [a, +inf]  closed disc  { v(T) >= a }        (series in T)
///   [-inf, b]  closed disc in T^-1 { v(T) <= b } (series in T^-1)
///   [a, b]     closed annulus, a < b finite
///   [s, s]     circle { v(T) = s }
class Chart {
  public:
    static Chart disc(const Rat& a) { return Chart(a, Rat::infinity()); }
    static Chart codisc(const Rat& b) { return Chart(Rat::neg_infinity(), b); }
    static Chart circle(const Rat& s) { return Chart(s, s); }
    static Chart annulus(const Rat& a, const Rat& b) { return Chart(a, b); }

    Chart(const Rat& a, const Rat& b) : a_(a), b_(b) {
        if (b_ < a_) throw InvalidSpec("chart bounds out of order: [" + a_.str() + ", " + b_.str() + "]");
        if (!a_.is_finite() && !b_.is_finite())
            throw InvalidSpec("chart must have at least one finite bound");
    }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_disc() const { return b_.is_pos_inf(); }
    bool is_codisc() const { return a_.is_neg_inf(); }
    bool is_circle() const { return a_ == b_; }
    bool is_strict_annulus() const { return a_.is_finite() && b_.is_finite() && a_ < b_; }

    bool contains_radius(const Rat& s) const { return a_ <= s && s <= b_; }
    bool contains(const Chart& sub) const { return a_ <= sub.a_ && sub.b_ <= b_; }

    bool operator==(const Chart& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Chart& o) const { return !(*this == o); }

    std::string str() const { return "[" + a_.str() + ", " + b_.str() + "]"; }

  private:
    Rat a_, b_;
};

/// A Laurent series truncated to the exponent window [-D, D], with p-adic
/// coefficients, attached to a chart. Absent exponents are zero. Disc charts
/// force nonnegative support, codisc charts nonpositive support. Operations
/// that discard cross terms set the sticky `truncated` flag instead of
/// failing.
class LaurentSeries {
  public:
    using CoeffMap = std::map<long long, PadicScalar>;

    LaurentSeries(Context ctx, Chart chart, long long window, CoeffMap coeffs = {},
                  bool truncated = false);

    static LaurentSeries zero(const Context& ctx, const Chart& chart, long long window) {
        return LaurentSeries(ctx, chart, window);
    }
    static LaurentSeries constant(const Context& ctx, const Chart& chart, long long window,
                                  const PadicScalar& c);
    static LaurentSeries monomial(const Context& ctx, const Chart& chart, long long window,
                                  long long exp, const PadicScalar& c);

    const Context& context() const { return ctx_; }
    const Chart& chart() const { return chart_; }
    long long window() const { return window_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool truncated() const { return truncated_; }
    bool is_zero() const { return coeffs_.empty(); }

    PadicScalar coeff(long long exp) const;

    /// Same series viewed at a wider window (never truncates).
    LaurentSeries widened(long long window) const;

    std::string str() const;

  private:
    Context ctx_;
    Chart chart_;
    long long window_;
    CoeffMap coeffs_;
    bool truncated_;
};

/// Gauss valuation at radius parameter s in the chart: min_i (v(c_i) + i*s).
/// +inf iff f = 0.
Rat gauss_val(const LaurentSeries& f, const Rat& s);

/// Infimum of the Gauss valuation over the chart; attained at an endpoint
/// because s -> gauss_val(f, s) is concave (a min of affine functions).
Rat sup_val(const LaurentSeries& f);

LaurentSeries series_add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries series_sub(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries series_mul(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries series_neg(const LaurentSeries& f);
LaurentSeries series_scalar_mul(const PadicScalar& c, const LaurentSeries& f);

inline LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) { return series_add(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return series_sub(f, g); }
inline LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) { return series_mul(f, g); }

/// Restriction to a nested chart: same coefficients, new chart.
LaurentSeries restrict(const LaurentSeries& f, const Chart& sub);

/// Substitution T -> lambda * T. Coefficient at i picks up lambda^i and the
/// chart shifts to [a - v(lambda), b - v(lambda)]: the new variable S satisfies
/// T = lambda*S, so v(S) = v(T) - v(lambda) and the underlying point set is
/// preserved.
LaurentSeries scale_variable(const LaurentSeries& f, const PadicScalar& lambda);

/// Membership in the power-bounded subring: sup_val(f) >= 0.
bool is_power_bounded(const LaurentSeries& f);

struct SplitParts {
    LaurentSeries plus;   // exponents >= 0, on the disc [s, +inf]
    LaurentSeries minus;  // exponents < 0 negated, on the codisc [-inf, s]
};

/// Canonical isometric splitting on a circle chart: f = plus - minus, with
/// sup_val(plus), sup_val(minus) >= sup_val(f).
SplitParts split_laurent(const LaurentSeries& f);

std::string to_string(const LaurentSeries& f);

}  // namespace adic
