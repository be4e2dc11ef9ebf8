#include "adic/cartan.hpp"

#include <cassert>

namespace adic {

LaurentMatrix::LaurentMatrix(std::size_t n, std::vector<LaurentSeries> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ == 0 || entries_.size() != n_ * n_)
        throw InvalidSpec("matrix needs n^2 entries, n >= 1");
    for (const auto& e : entries_) {
        if (e.chart() != entries_[0].chart() || e.window() != entries_[0].window())
            throw ChartMismatch("matrix entries must share chart and window");
        if (!e.context()->same(*entries_[0].context())) throw ContextMismatch();
    }
}

LaurentMatrix LaurentMatrix::identity(const Context& ctx, const Chart& chart, long long window,
                                      std::size_t n) {
    std::vector<LaurentSeries> es;
    es.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            es.push_back(i == j ? LaurentSeries::constant(ctx, chart, window, ctx->one())
                                : LaurentSeries::zero(ctx, chart, window));
    return LaurentMatrix(n, std::move(es));
}

LaurentMatrix LaurentMatrix::zero(const Context& ctx, const Chart& chart, long long window,
                                  std::size_t n) {
    std::vector<LaurentSeries> es(n * n, LaurentSeries::zero(ctx, chart, window));
    return LaurentMatrix(n, std::move(es));
}

bool LaurentMatrix::truncated() const {
    for (const auto& e : entries_)
        if (e.truncated()) return true;
    return false;
}

LaurentMatrix LaurentMatrix::widened(long long window) const {
    std::vector<LaurentSeries> es;
    es.reserve(entries_.size());
    for (const auto& e : entries_) es.push_back(e.widened(window));
    return LaurentMatrix(n_, std::move(es));
}

LaurentMatrix LaurentMatrix::restricted(const Chart& sub) const {
    std::vector<LaurentSeries> es;
    es.reserve(entries_.size());
    for (const auto& e : entries_) es.push_back(restrict(e, sub));
    return LaurentMatrix(n_, std::move(es));
}

namespace {

void check_pair(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.size() != b.size()) throw InvalidSpec("matrix size mismatch");
}

}  // namespace

LaurentMatrix matrix_add(const LaurentMatrix& a, const LaurentMatrix& b) {
    check_pair(a, b);
    std::vector<LaurentSeries> es;
    es.reserve(a.size() * a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) es.push_back(a.at(i, j) + b.at(i, j));
    return LaurentMatrix(a.size(), std::move(es));
}

LaurentMatrix matrix_sub(const LaurentMatrix& a, const LaurentMatrix& b) {
    check_pair(a, b);
    std::vector<LaurentSeries> es;
    es.reserve(a.size() * a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) es.push_back(a.at(i, j) - b.at(i, j));
    return LaurentMatrix(a.size(), std::move(es));
}

LaurentMatrix matrix_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    check_pair(a, b);
    const std::size_t n = a.size();
    std::vector<LaurentSeries> es;
    es.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            LaurentSeries acc = LaurentSeries::zero(a.context(), a.chart(), a.window());
            for (std::size_t k = 0; k < n; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            es.push_back(std::move(acc));
        }
    }
    return LaurentMatrix(n, std::move(es));
}

Rat matrix_sup_val(const LaurentMatrix& m) {
    Rat best = Rat::infinity();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) best = min(best, sup_val(m.at(i, j)));
    return best;
}

LaurentSeries matrix_det(const LaurentMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m.at(0, 0);
    LaurentSeries acc = LaurentSeries::zero(m.context(), m.chart(), m.window());
    for (std::size_t j = 0; j < n; ++j) {
        // minor deleting row 0, column j
        std::vector<LaurentSeries> es;
        es.reserve((n - 1) * (n - 1));
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) es.push_back(m.at(r, c));
        LaurentSeries term = m.at(0, j) * matrix_det(LaurentMatrix(n - 1, std::move(es)));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

namespace {

LaurentSeries drop_high_valuation(const LaurentSeries& f, const Rat& modulus) {
    LaurentSeries::CoeffMap out;
    for (const auto& [i, c] : f.coeffs())
        if (c.val() < modulus) out.emplace(i, c);
    return LaurentSeries(f.context(), f.chart(), f.window(), std::move(out), f.truncated());
}

LaurentMatrix drop_high_valuation(const LaurentMatrix& m, const Rat& modulus) {
    std::vector<LaurentSeries> es;
    es.reserve(m.size() * m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            es.push_back(drop_high_valuation(m.at(i, j), modulus));
    return LaurentMatrix(m.size(), std::move(es));
}

// reassembles circle-chart entries onto the disc/codisc chart they support
LaurentMatrix rechart(const LaurentMatrix& m, const Chart& chart) {
    std::vector<LaurentSeries> es;
    es.reserve(m.size() * m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            const auto& e = m.at(i, j);
            es.push_back(LaurentSeries(e.context(), chart, e.window(), e.coeffs(), e.truncated()));
        }
    return LaurentMatrix(m.size(), std::move(es));
}

std::vector<std::string> trace_strings(const std::vector<Rat>& trace) {
    std::vector<std::string> out;
    out.reserve(trace.size());
    for (const auto& t : trace) out.push_back(t.str());
    return out;
}

}  // namespace

LaurentMatrix neumann_inverse(const LaurentMatrix& m) {
    const LaurentMatrix id =
        LaurentMatrix::identity(m.context(), m.chart(), m.window(), m.size());
    LaurentMatrix err = matrix_sub(id, m);  // m = I - err
    Rat v = matrix_sup_val(err);
    if (!(v > Rat(0))) throw NotNearIdentity();
    LaurentMatrix acc = id;
    LaurentMatrix term = id;
    const Rat bound(m.context()->precision());
    for (;;) {
        term = drop_high_valuation(matrix_mul(term, err), bound);
        if (!(matrix_sup_val(term) < bound)) break;
        acc = matrix_add(acc, term);
    }
    return acc;
}

FactorizationResult cartan_factor(const LaurentMatrix& b, const Rat& target, int max_iter) {
    if (!b.chart().is_circle())
        throw ChartMismatch("factorization needs a circle chart, got " + b.chart().str());
    if (!target.is_finite() || !(target > Rat(0)))
        throw InvalidSpec("target valuation must be finite and positive");
    if (!(target <= Rat(b.context()->precision() - 2)))
        throw InvalidSpec("target " + target.str() + " exceeds working precision N - 2");

    const Context& ctx = b.context();
    const Chart circle = b.chart();
    const long long window = 2 * b.window();  // internal widening bounds support growth
    const Rat modulus = target + Rat(2);      // two guard digits past the target

    const LaurentMatrix id = LaurentMatrix::identity(ctx, circle, window, b.size());
    LaurentMatrix cur = b.widened(window);

    LaurentMatrix v = matrix_sub(cur, id);
    Rat v1 = matrix_sup_val(v);
    if (!(v1 > Rat(0))) throw NotNearIdentity();

    std::vector<Rat> trace{v1};
    if (max_iter <= 0) {
        max_iter = 4;
        if (v1.is_finite()) max_iter += static_cast<int>((target / v1).floor());
    }

    LaurentMatrix b1_acc = id;  // (1 - C_n) ... (1 - C_1)
    LaurentMatrix b2_acc = id;  // (1 + D_1) ... (1 + D_n)
    int iterations = 0;
    bool flag = cur.truncated();

    while (matrix_sup_val(v) < target && !flag) {
        if (iterations >= max_iter)
            throw NonConvergence("factorization did not reach target " + target.str() + " in " +
                                     std::to_string(max_iter) + " iterations",
                                 trace_strings(trace), iterations);
        // split V_n = C_n - D_n with C_n supported on exponents >= 0 and D_n on <= 0
        std::vector<LaurentSeries> c_entries, d_entries;
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = 0; j < v.size(); ++j) {
                SplitParts parts = split_laurent(v.at(i, j));
                assert(parts.plus.coeffs().empty() || parts.plus.coeffs().begin()->first >= 0);
                assert(parts.minus.coeffs().empty() || parts.minus.coeffs().rbegin()->first <= 0);
                c_entries.push_back(restrict(parts.plus, circle));
                d_entries.push_back(restrict(parts.minus, circle));
            }
        }
        LaurentMatrix c(v.size(), std::move(c_entries));
        LaurentMatrix d(v.size(), std::move(d_entries));

        // 1 + V_{n+1} = (1 - C_n)(1 + V_n)(1 + D_n)
        LaurentMatrix left = matrix_sub(id, c);
        LaurentMatrix right = matrix_add(id, d);
        cur = drop_high_valuation(matrix_mul(matrix_mul(left, cur), right), modulus);
        b1_acc = drop_high_valuation(matrix_mul(left, b1_acc), modulus);
        b2_acc = drop_high_valuation(matrix_mul(b2_acc, right), modulus);

        v = matrix_sub(cur, id);
        trace.push_back(matrix_sup_val(v));
        ++iterations;
        flag = cur.truncated() || b1_acc.truncated() || b2_acc.truncated();
    }

    // B ~ B1_acc^-1 * B2_acc^-1; hand the caller that pair directly
    LaurentMatrix b1_star = neumann_inverse(b1_acc);
    LaurentMatrix b2_star = neumann_inverse(b2_acc);

    LaurentMatrix residual = matrix_sub(matrix_mul(b1_star, b2_star), b.widened(window));
    Rat residual_val = matrix_sup_val(residual);
    flag = flag || b1_star.truncated() || b2_star.truncated() || residual.truncated();

    FactorizationResult res{
        rechart(b1_star, Chart::disc(circle.a())),
        rechart(b2_star, Chart::codisc(circle.a())),
        iterations,
        residual_val,
        std::move(trace),
        window,
        flag,
        modulus,
    };
    return res;
}

Trivialization trivialize_glued_free_module(const LaurentMatrix& b, const Rat& target,
                                            int max_iter) {
    FactorizationResult f = cartan_factor(b, target, max_iter);
    LaurentMatrix z = neumann_inverse(f.b2);
    Trivialization t{f.b1, std::move(z), std::move(f)};
    return t;
}

}  // namespace adic
