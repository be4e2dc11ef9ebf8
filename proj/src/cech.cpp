#include "adic/cech.hpp"

#include <algorithm>

namespace adic {

CechSpaceSpec CechSpaceSpec::annulus(const Rat& a, const Rat& s0, const Rat& b) {
    if (!(a < s0 && s0 < b))
        throw InvalidSpec("annulus needs a < s0 < b, got a=" + a.str() + " s0=" + s0.str() +
                          " b=" + b.str());
    return CechSpaceSpec{Kind::Annulus, a, s0, b, 0};
}

CechSpaceSpec CechSpaceSpec::tate_curve(const Rat& vq) {
    if (!(Rat(0) < vq)) throw InvalidSpec("Tate curve needs v(q) > 0");
    if (!vq.is_integer())
        throw InvalidSpec("v(q) must be integral so that q = p^v(q) exists in the coefficient field");
    return CechSpaceSpec{Kind::TateCurve, 0, 0, 0, vq};
}

std::string CechSpaceSpec::kind_name() const {
    switch (kind) {
        case Kind::ProjLine: return "p1";
        case Kind::Annulus: return "annulus";
        case Kind::TateCurve: return "tate";
        case Kind::BidiscBoundary: return "bidisc";
    }
    return "?";
}

std::string GradeKey::str() const {
    if (!bigraded) return std::to_string(i);
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

namespace {

std::string mono(long long i, const char* piece) {
    return "T^" + std::to_string(i) + "@" + piece;
}
std::string mono2(long long i, long long j, const char* piece) {
    return "x^" + std::to_string(i) + "y^" + std::to_string(j) + "@" + piece;
}

}  // namespace

CechComplex build_cech(const CechSpaceSpec& spec, long long window, const Context& ctx) {
    if (window < 1) throw InvalidSpec("window must be >= 1");
    CechComplex cx{spec, window, ctx, {}};
    const PadicScalar one = ctx->one();
    const PadicScalar neg_one = -one;

    switch (spec.kind) {
        case CechSpaceSpec::Kind::ProjLine: {
            // pieces: series in T (exponents >= 0) and in T^-1 (exponents <= 0),
            // overlap the circle v(T) = 0; map (f, g) -> f - g
            for (long long i = -window; i <= window; ++i) {
                GradeBlock blk;
                blk.grade = GradeKey{i, 0, false};
                blk.overlap_labels = {mono(i, "U12")};
                std::vector<PadicScalar> row;
                if (i >= 0) {
                    blk.domain_labels.push_back(mono(i, "U1"));
                    row.push_back(one);
                }
                if (i <= 0) {
                    blk.domain_labels.push_back(mono(i, "U2"));
                    row.push_back(neg_one);
                }
                blk.matrix.push_back(std::move(row));
                cx.blocks.push_back(std::move(blk));
            }
            break;
        }
        case CechSpaceSpec::Kind::Annulus: {
            // pieces [a, s0] and [s0, b], overlap circle [s0, s0]; both pieces
            // carry every exponent
            for (long long i = -window; i <= window; ++i) {
                GradeBlock blk;
                blk.grade = GradeKey{i, 0, false};
                blk.domain_labels = {mono(i, "A1"), mono(i, "A2")};
                blk.overlap_labels = {mono(i, "A12")};
                blk.matrix.push_back({one, neg_one});
                cx.blocks.push_back(std::move(blk));
            }
            break;
        }
        case CechSpaceSpec::Kind::TateCurve: {
            // two overlap circles; the second one is glued through T -> qT, so
            // the grade-i block is [[1, -1], [q^i, -1]]
            const PadicScalar q = ctx->from_unit(spec.vq.to_long(), 1);
            for (long long i = -window; i <= window; ++i) {
                GradeBlock blk;
                blk.grade = GradeKey{i, 0, false};
                blk.domain_labels = {mono(i, "W1"), mono(i, "W2")};
                blk.overlap_labels = {mono(i, "C1"), mono(i, "C2")};
                blk.matrix.push_back({one, neg_one});
                blk.matrix.push_back({q.pow(i), neg_one});
                cx.blocks.push_back(std::move(blk));
            }
            break;
        }
        case CechSpaceSpec::Kind::BidiscBoundary: {
            // V1 = {|x| = 1}: i in [-D, D], j in [0, D]; V2 = {|y| = 1}:
            // i in [0, D], j in [-D, D]; overlap carries all bi-exponents
            for (long long i = -window; i <= window; ++i) {
                for (long long j = -window; j <= window; ++j) {
                    GradeBlock blk;
                    blk.grade = GradeKey{i, j, true};
                    blk.overlap_labels = {mono2(i, j, "V12")};
                    std::vector<PadicScalar> row;
                    if (j >= 0) {
                        blk.domain_labels.push_back(mono2(i, j, "V1"));
                        row.push_back(one);
                    }
                    if (i >= 0) {
                        blk.domain_labels.push_back(mono2(i, j, "V2"));
                        row.push_back(neg_one);
                    }
                    blk.matrix.push_back(std::move(row));
                    cx.blocks.push_back(std::move(blk));
                }
            }
            break;
        }
    }
    return cx;
}

std::vector<Rat> elementary_divisors(const PadicMatrix& m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    for (const auto& r : m)
        if (r.size() != cols) throw InvalidSpec("ragged matrix");

    PadicMatrix w = m;
    std::vector<bool> row_done(rows, false), col_done(cols, false);
    std::vector<Rat> divisors;

    for (;;) {
        // full pivoting on the minimal-valuation entry of the live submatrix
        size_t pi = rows, pj = cols;
        Rat best = Rat::infinity();
        for (size_t i = 0; i < rows; ++i) {
            if (row_done[i]) continue;
            for (size_t j = 0; j < cols; ++j) {
                if (col_done[j]) continue;
                if (w[i][j].is_zero()) continue;
                if (w[i][j].val() < best) {
                    best = w[i][j].val();
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi == rows) break;  // all remaining entries exactly zero
        if (w[pi][pj].precision() < 1)
            throw PrecisionExhausted("pivot " + w[pi][pj].str() +
                                     " is indistinguishable from zero at working precision");
        divisors.push_back(best);
        const PadicScalar pivot_inv = w[pi][pj].inv();
        for (size_t i = 0; i < rows; ++i) {
            if (row_done[i] || i == pi || w[i][pj].is_zero()) continue;
            PadicScalar factor = w[i][pj] * pivot_inv;
            for (size_t j = 0; j < cols; ++j) {
                if (col_done[j]) continue;
                w[i][j] = w[i][j] - factor * w[pi][j];
            }
        }
        row_done[pi] = true;
        col_done[pj] = true;
    }
    std::sort(divisors.begin(), divisors.end(), [](const Rat& x, const Rat& y) { return x < y; });
    return divisors;
}

CohomologyReport cohomology(const CechComplex& complex, std::optional<int> zero_threshold) {
    const int N = complex.ctx->precision();
    int threshold = zero_threshold.value_or(N - 2);
    if (threshold > N)
        throw InvalidSpec("zero threshold exceeds working precision");

    CohomologyReport rep;
    rep.spec = complex.spec;
    rep.window = complex.window;
    rep.precision = N;
    rep.zero_threshold = threshold;

    for (const auto& blk : complex.blocks) {
        GradeReport g;
        g.grade = blk.grade;
        g.divisors = elementary_divisors(blk.matrix);
        long long rank = 0;
        for (const auto& d : g.divisors)
            if (d < Rat(threshold)) ++rank;
        g.h0 = static_cast<long long>(blk.domain_labels.size()) - rank;
        g.h1 = static_cast<long long>(blk.overlap_labels.size()) - rank;
        rep.h0 += g.h0;
        rep.h1 += g.h1;
        rep.grades.push_back(std::move(g));
    }
    std::sort(rep.grades.begin(), rep.grades.end(),
              [](const GradeReport& x, const GradeReport& y) { return x.grade < y.grade; });
    return rep;
}

std::vector<CohomologyReport> acyclicity_sweep(const std::vector<CechSpaceSpec>& specs,
                                               long long window, const Context& ctx,
                                               std::optional<int> zero_threshold) {
    std::vector<CohomologyReport> out;
    out.reserve(specs.size());
    for (const auto& s : specs) out.push_back(cohomology(build_cech(s, window, ctx), zero_threshold));
    return out;
}

}  // namespace adic
