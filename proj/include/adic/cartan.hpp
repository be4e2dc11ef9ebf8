#pragma once

#include <vector>

#include "adic/series.hpp"

namespace adic {

/// A square matrix of Laurent series sharing one chart and window.
class LaurentMatrix {
  public:
    LaurentMatrix(std::size_t n, std::vector<LaurentSeries> entries);

    static LaurentMatrix identity(const Context& ctx, const Chart& chart, long long window,
                                  std::size_t n);
    static LaurentMatrix zero(const Context& ctx, const Chart& chart, long long window,
                              std::size_t n);

    std::size_t size() const { return n_; }
    const LaurentSeries& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const Chart& chart() const { return entries_[0].chart(); }
    long long window() const { return entries_[0].window(); }
    const Context& context() const { return entries_[0].context(); }
    bool truncated() const;

    LaurentMatrix widened(long long window) const;
    LaurentMatrix restricted(const Chart& sub) const;

  private:
    std::size_t n_;
    std::vector<LaurentSeries> entries_;
};

LaurentMatrix matrix_add(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix matrix_sub(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix matrix_mul(const LaurentMatrix& a, const LaurentMatrix& b);

/// Maximum norm in valuation form: min over entries of sup_val. +inf iff 0.
Rat matrix_sup_val(const LaurentMatrix& m);

/// Determinant by Laplace expansion (intended for the small sizes used here).
LaurentSeries matrix_det(const LaurentMatrix& m);

/// Inverse of a matrix within val(M - I) > 0 of the identity, by the finite
/// Neumann series; the closeness requirement is the convergence check.
LaurentMatrix neumann_inverse(const LaurentMatrix& m);

struct FactorizationResult {
    LaurentMatrix b1;  // supported on exponents >= 0, chart disc [s, +inf]
    LaurentMatrix b2;  // supported on exponents <= 0, chart codisc [-inf, s]
    int iterations = 0;
    Rat residual_val;            // recomputed valuation of B1*B2 - B on the circle
    std::vector<Rat> decay_trace;  // valuations of the iterates V_n
    long long effective_window = 0;
    bool truncated = false;      // an exponent-window truncation fired somewhere
    Rat working_modulus;         // coefficients with valuation >= this were dropped
};

/// Iterative factorization of B in GL_n over a circle chart into B = B1 * B2
/// with B1 over the disc in T and B2 over the disc in T^-1. Requires
/// val(B - I) > 0; the isometric splitting makes that the whole closeness
/// condition. Residual and trace are recomputed from the outputs, never
/// trusted from the iteration.
FactorizationResult cartan_factor(const LaurentMatrix& b, const Rat& target, int max_iter = 0);

struct Trivialization {
    LaurentMatrix y;  // invertible over the disc in T
    LaurentMatrix z;  // invertible over the disc in T^-1
    FactorizationResult factorization;
};

/// Global trivialization of the free module glued by B: Y = B1, Z = B2^-1,
/// so Y = B * Z on the circle up to the factorization residual.
Trivialization trivialize_glued_free_module(const LaurentMatrix& b, const Rat& target,
                                            int max_iter = 0);

}  // namespace adic
