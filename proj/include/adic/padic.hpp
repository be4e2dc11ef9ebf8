#pragma once

#include <memory>
#include <string>

#include "adic/rational.hpp"

namespace adic {

class PadicScalar;

/// Arithmetic context: the prime p and the relative precision N (in digits)
/// shared by every scalar of one computation. Scalars from different contexts
/// never mix; there is no implicit coercion.
class PadicContext : public std::enable_shared_from_this<PadicContext> {
  public:
    static std::shared_ptr<const PadicContext> make(long long p, int precision);

    long long prime() const { return p_; }
    int precision() const { return N_; }
    const BigInt& modulus() const { return pN_; }

    PadicScalar zero() const;
    PadicScalar one() const;
    PadicScalar from_integer(const BigInt& n) const;
    PadicScalar from_rational(const BigInt& num, const BigInt& den) const;
    /// Builds u * p^v directly; u is reduced mod p^N and must stay coprime to p.
    PadicScalar from_unit(long long v, const BigInt& unit) const;
    /// Accepts "123", "-4", "3/25" and the rendered form "u*p^v".
    PadicScalar parse(const std::string& text) const;

    bool same(const PadicContext& other) const { return p_ == other.p_ && N_ == other.N_; }

  private:
    PadicContext(long long p, int N, BigInt pN) : p_(p), N_(N), pN_(std::move(pN)) {}

    long long p_;
    int N_;
    BigInt pN_;
};

using Context = std::shared_ptr<const PadicContext>;

/// A p-adic number in floating form u * p^v with u a unit mod p^N, known to
/// `prec` relative digits (prec == N unless cancellation consumed digits).
/// Zero is canonical: v = +inf, unit = 0. Values are immutable.
class PadicScalar {
  public:
    PadicScalar() = default;

    const Context& context() const { return ctx_; }
    bool is_zero() const { return zero_; }
    long long valuation_int() const;
    Rat val() const { return zero_ ? Rat::infinity() : Rat(v_); }
    const BigInt& unit() const { return unit_; }
    /// Trusted relative digits remaining; 0 means even the valuation claim is
    /// unreliable. Exact zero reports full context precision.
    int precision() const;

    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-() const;
    PadicScalar operator-(const PadicScalar& o) const { return *this + (-o); }
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar inv() const;
    PadicScalar pow(long long e) const;

    /// Representation equality (same context, valuation and unit digits).
    bool operator==(const PadicScalar& o) const;
    bool operator!=(const PadicScalar& o) const { return !(*this == o); }

    /// Leading residue digit in [0, p); 0 for zero.
    long long residue() const;

    /// Renders as "u*p^v + O(p^(v+k))" with k the trusted digits.
    std::string str() const;
    /// Compact form "u*p^v" (plus "~k" when k < N digits remain).
    std::string compact_str() const;

  private:
    friend class PadicContext;
    PadicScalar(Context ctx, bool zero, long long v, BigInt unit, int prec)
        : ctx_(std::move(ctx)), zero_(zero), v_(v), unit_(std::move(unit)), prec_(prec) {}

    void check_context(const PadicScalar& o) const;

    Context ctx_;
    bool zero_ = true;
    long long v_ = 0;
    BigInt unit_ = 0;
    int prec_ = 0;
};

/// padic valuation as an element of the value group; +inf iff zero.
inline Rat padic_val(const PadicScalar& a) { return a.val(); }

}  // namespace adic
