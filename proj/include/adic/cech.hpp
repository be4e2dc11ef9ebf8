#pragma once

#include <optional>
#include <vector>

#include "adic/series.hpp"

namespace adic {

/// The named two-element covers whose structure-sheaf complex this module
/// computes.
struct CechSpaceSpec {
    enum class Kind { ProjLine, Annulus, TateCurve, BidiscBoundary };

    Kind kind = Kind::ProjLine;
    Rat a, s0, b;  // Annulus bounds, a < s0 < b
    Rat vq;        // TateCurve: v(q) > 0, integral so q = p^vq exists

    static CechSpaceSpec proj_line() { return CechSpaceSpec{Kind::ProjLine, 0, 0, 0, 0}; }
    static CechSpaceSpec annulus(const Rat& a, const Rat& s0, const Rat& b);
    static CechSpaceSpec tate_curve(const Rat& vq);
    static CechSpaceSpec bidisc_boundary() { return CechSpaceSpec{Kind::BidiscBoundary, 0, 0, 0, 0}; }

    std::string kind_name() const;
};

/// Monomial exponent class: a single exponent, or a bi-exponent for the
/// bidisc boundary.
struct GradeKey {
    long long i = 0;
    long long j = 0;
    bool bigraded = false;

    bool operator<(const GradeKey& o) const {
        if (bigraded != o.bigraded) return !bigraded;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
    bool operator==(const GradeKey& o) const {
        return bigraded == o.bigraded && i == o.i && j == o.j;
    }
    std::string str() const;
};

using PadicMatrix = std::vector<std::vector<PadicScalar>>;

/// One exponent class of the boundary map d0: rows are overlap basis
/// monomials, columns are cover-piece basis monomials.
struct GradeBlock {
    GradeKey grade;
    std::vector<std::string> domain_labels;
    std::vector<std::string> overlap_labels;
    PadicMatrix matrix;  // overlap_labels.size() x domain_labels.size()
};

/// The two-term complex of a two-element cover, decomposed along the monomial
/// grading. The covers here all have monomial restriction maps, so d0 is a
/// direct sum over the exponent lattice and the window truncation is exact
/// grade by grade.
struct CechComplex {
    CechSpaceSpec spec;
    long long window = 0;
    Context ctx;
    std::vector<GradeBlock> blocks;
};

struct GradeReport {
    GradeKey grade;
    std::vector<Rat> divisors;  // sorted pivot valuations of the block
    long long h0 = 0;
    long long h1 = 0;
};

struct CohomologyReport {
    CechSpaceSpec spec;
    long long window = 0;
    int precision = 0;
    int zero_threshold = 0;
    long long h0 = 0;
    long long h1 = 0;
    std::vector<GradeReport> grades;
    bool truncation_flags = false;
};

CechComplex build_cech(const CechSpaceSpec& spec, long long window, const Context& ctx);

/// Sorted valuations of the pivots of a valuation-pivoted full elimination
/// (the p-adic analogue of Smith normal form). Entries that are exactly zero
/// never pivot; a candidate pivot whose remaining precision is gone raises
/// PrecisionExhausted instead of guessing.
std::vector<Rat> elementary_divisors(const PadicMatrix& m);

/// Per-grade kernel/cokernel dimensions of d0; a divisor counts as zero iff
/// its valuation >= zero_threshold. Pass no threshold for the default N - 2.
CohomologyReport cohomology(const CechComplex& complex,
                            std::optional<int> zero_threshold = std::nullopt);

/// Batch harness: cohomology over a family of specs at one window/threshold.
std::vector<CohomologyReport> acyclicity_sweep(const std::vector<CechSpaceSpec>& specs,
                                               long long window, const Context& ctx,
                                               std::optional<int> zero_threshold = std::nullopt);

}  // namespace adic
