#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

#include "adic/errors.hpp"

namespace adic {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// An exact rational extended with +inf / -inf, the value group for all
/// valuations and radius exponents. Finite values stay in reduced form with
/// positive denominator (maintained by the backing rational type).
class Rat {
  public:
    enum class Kind { Finite, PosInf, NegInf };

    Rat() : kind_(Kind::Finite), q_(0) {}
    Rat(long long n) : kind_(Kind::Finite), q_(n) {}  // NOLINT: implicit by design
    Rat(const BigInt& n) : kind_(Kind::Finite), q_(n) {}
    Rat(const BigRat& q) : kind_(Kind::Finite), q_(q) {}
    Rat(const BigInt& num, const BigInt& den) : kind_(Kind::Finite), q_(num, den) {
        if (den == 0) throw DivisionByZero();
    }

    static Rat infinity() {
        Rat r;
        r.kind_ = Kind::PosInf;
        return r;
    }
    static Rat neg_infinity() {
        Rat r;
        r.kind_ = Kind::NegInf;
        return r;
    }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    const BigRat& value() const {
        require_finite();
        return q_;
    }

    bool is_integer() const { return kind_ == Kind::Finite && denominator(q_) == 1; }

    BigInt numerator_int() const {
        require_finite();
        return numerator(q_);
    }
    BigInt denominator_int() const {
        require_finite();
        return denominator(q_);
    }

    /// Largest integer <= this (finite values only).
    BigInt floor() const {
        require_finite();
        BigInt n = numerator(q_), d = denominator(q_);
        BigInt quot = n / d;
        if (n % d != 0 && n < 0) quot -= 1;
        return quot;
    }

    long long to_long() const {
        if (!is_integer()) throw Precondition("rational is not an integer: " + str());
        return static_cast<long long>(numerator(q_));
    }

    Rat operator-() const {
        switch (kind_) {
            case Kind::PosInf: return neg_infinity();
            case Kind::NegInf: return infinity();
            default: return Rat(BigRat(-q_));
        }
    }

    Rat operator+(const Rat& o) const {
        if (kind_ == Kind::Finite && o.kind_ == Kind::Finite) return Rat(BigRat(q_ + o.q_));
        if (is_pos_inf() && o.is_neg_inf()) throw Precondition("inf + (-inf) is undefined");
        if (is_neg_inf() && o.is_pos_inf()) throw Precondition("inf + (-inf) is undefined");
        return is_finite() ? o : *this;
    }
    Rat operator-(const Rat& o) const { return *this + (-o); }

    /// Multiplication by an integer slope; infinite values require a nonzero
    /// slope (callers handle the 0 * inf cases explicitly).
    Rat scaled(long long k) const {
        if (kind_ == Kind::Finite) return Rat(BigRat(q_ * k));
        if (k == 0) throw Precondition("0 * inf is undefined");
        bool pos = (is_pos_inf() == (k > 0));
        return pos ? infinity() : neg_infinity();
    }

    Rat operator*(const Rat& o) const {
        require_finite();
        o.require_finite();
        return Rat(BigRat(q_ * o.q_));
    }
    Rat operator/(const Rat& o) const {
        require_finite();
        o.require_finite();
        if (o.q_ == 0) throw DivisionByZero();
        return Rat(BigRat(q_ / o.q_));
    }

    bool operator==(const Rat& o) const {
        if (kind_ != o.kind_) return false;
        return kind_ != Kind::Finite || q_ == o.q_;
    }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const {
        if (kind_ == o.kind_) return kind_ == Kind::Finite && q_ < o.q_;
        if (is_neg_inf() || o.is_pos_inf()) return true;
        return false;
    }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>=(const Rat& o) const { return !(*this < o); }

    std::string str() const {
        switch (kind_) {
            case Kind::PosInf: return "inf";
            case Kind::NegInf: return "-inf";
            default: break;
        }
        std::string s = numerator(q_).str();
        if (denominator(q_) != 1) s += "/" + denominator(q_).str();
        return s;
    }

  private:
    void require_finite() const {
        if (kind_ != Kind::Finite) throw Precondition("operation requires a finite rational");
    }

    Kind kind_;
    BigRat q_;
};

inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// Parses "7", "-3/2", "1.5", "inf", "+inf", "-inf".
Rat parse_rat(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace adic
