#include "adic/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace adic {

namespace {

bool is_small_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    // extended Euclid; a must be invertible mod m
    BigInt r0 = m, r1 = a % m, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw DivisionByZero();
    if (t0 < 0) t0 += m;
    return t0;
}

}  // namespace

std::shared_ptr<const PadicContext> PadicContext::make(long long p, int precision) {
    if (!is_small_prime(p)) throw InvalidSpec("p must be a (small) prime, got " + std::to_string(p));
    if (precision < 1) throw InvalidSpec("precision N must be >= 1");
    BigInt pN = 1;
    for (int i = 0; i < precision; ++i) pN *= p;
    return std::shared_ptr<const PadicContext>(new PadicContext(p, precision, std::move(pN)));
}

PadicScalar PadicContext::zero() const {
    return PadicScalar(shared_from_this(), true, 0, 0, N_);
}

PadicScalar PadicContext::one() const { return from_unit(0, 1); }

PadicScalar PadicContext::from_integer(const BigInt& n) const {
    if (n == 0) return zero();
    BigInt u = n;
    long long v = 0;
    while (u % p_ == 0) {
        u /= p_;
        ++v;
    }
    u %= pN_;
    if (u < 0) u += pN_;
    return PadicScalar(shared_from_this(), false, v, std::move(u), N_);
}

PadicScalar PadicContext::from_rational(const BigInt& num, const BigInt& den) const {
    if (den == 0) throw DivisionByZero();
    if (num == 0) return zero();
    BigInt n = num, d = den;
    long long v = 0;
    while (n % p_ == 0) {
        n /= p_;
        ++v;
    }
    while (d % p_ == 0) {
        d /= p_;
        --v;
    }
    BigInt dmod = d % pN_;
    if (dmod < 0) dmod += pN_;
    BigInt u = (n % pN_) * mod_inverse(dmod, pN_) % pN_;
    if (u < 0) u += pN_;
    return PadicScalar(shared_from_this(), false, v, std::move(u), N_);
}

PadicScalar PadicContext::from_unit(long long v, const BigInt& unit) const {
    BigInt u = unit % pN_;
    if (u < 0) u += pN_;
    if (u == 0) return zero();
    if (u % p_ == 0) throw InvalidSpec("unit part is divisible by p; use from_integer for non-units");
    return PadicScalar(shared_from_this(), false, v, std::move(u), N_);
}

PadicScalar PadicContext::parse(const std::string& text) const {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty()) throw ParseError("empty scalar literal");

    int prec = N_;
    if (auto tilde = s.find('~'); tilde != std::string::npos) {
        prec = std::stoi(s.substr(tilde + 1));
        s = s.substr(0, tilde);
    }

    auto star = s.find('*');
    if (star != std::string::npos) {
        BigInt u(s.substr(0, star));
        std::string tail = s.substr(star + 1);
        auto caret = tail.find('^');
        if (caret == std::string::npos) throw ParseError("expected u*p^v, got " + text);
        BigInt base(tail.substr(0, caret));
        if (base != p_) throw ParseError("scalar literal uses base " + base.str() + " in a p=" + std::to_string(p_) + " context");
        long long v = std::stoll(tail.substr(caret + 1));
        PadicScalar x = from_integer(u);
        if (x.is_zero()) return x;
        PadicScalar shifted = from_unit(x.valuation_int() + v, x.unit());
        return PadicScalar(shared_from_this(), false, shifted.valuation_int(), shifted.unit(),
                           std::min(prec, N_));
    }
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return from_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    return from_integer(BigInt(s));
}

long long PadicScalar::valuation_int() const {
    if (zero_) throw Precondition("zero has no finite valuation");
    return v_;
}

int PadicScalar::precision() const { return zero_ ? ctx_->precision() : prec_; }

void PadicScalar::check_context(const PadicScalar& o) const {
    if (!ctx_ || !o.ctx_ || !ctx_->same(*o.ctx_)) throw ContextMismatch();
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    check_context(o);
    if (zero_) return o;
    if (o.zero_) return *this;
    const long long p = ctx_->prime();
    const BigInt& pN = ctx_->modulus();
    long long vmin = std::min(v_, o.v_);

    // absolute precision of the sum: digits trusted below min(v_i + prec_i)
    long long abs_known = std::min(v_ + prec_, o.v_ + o.prec_);

    BigInt r = 0;
    {
        BigInt term = unit_;
        for (long long i = vmin; i < v_ && term != 0; ++i) term = term * p % pN;
        r += term;
        term = o.unit_;
        for (long long i = vmin; i < o.v_ && term != 0; ++i) term = term * p % pN;
        r = (r + term) % pN;
    }
    if (r == 0) return ctx_->zero();

    long long k = 0;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    long long v = vmin + k;
    long long prec = std::min<long long>(ctx_->precision(), abs_known - v);
    if (prec < 0) prec = 0;
    return PadicScalar(ctx_, false, v, std::move(r), static_cast<int>(prec));
}

PadicScalar PadicScalar::operator-() const {
    if (zero_) return *this;
    BigInt u = ctx_->modulus() - unit_;
    return PadicScalar(ctx_, false, v_, std::move(u), prec_);
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    check_context(o);
    if (zero_ || o.zero_) return ctx_->zero();
    BigInt u = unit_ * o.unit_ % ctx_->modulus();
    return PadicScalar(ctx_, false, v_ + o.v_, std::move(u), std::min(prec_, o.prec_));
}

PadicScalar PadicScalar::inv() const {
    if (zero_) throw DivisionByZero();
    BigInt r0 = ctx_->modulus(), r1 = unit_, t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t0 < 0) t0 += ctx_->modulus();
    return PadicScalar(ctx_, false, -v_, std::move(t0), prec_);
}

PadicScalar PadicScalar::pow(long long e) const {
    if (e == 0) return ctx_->one();
    PadicScalar base = e > 0 ? *this : inv();
    unsigned long long n = e > 0 ? static_cast<unsigned long long>(e)
                                 : static_cast<unsigned long long>(-e);
    PadicScalar acc = ctx_->one();
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool PadicScalar::operator==(const PadicScalar& o) const {
    if (!ctx_ || !o.ctx_) return zero_ && o.zero_ && !ctx_ && !o.ctx_;
    if (!ctx_->same(*o.ctx_)) return false;
    if (zero_ != o.zero_) return false;
    return zero_ || (v_ == o.v_ && unit_ == o.unit_);
}

long long PadicScalar::residue() const {
    if (zero_) return 0;
    return static_cast<long long>(unit_ % ctx_->prime());
}

std::string PadicScalar::str() const {
    if (zero_) return "0";
    std::ostringstream os;
    os << unit_.str() << "*" << ctx_->prime() << "^" << v_ << " + O(" << ctx_->prime() << "^"
       << (v_ + prec_) << ")";
    return os.str();
}

std::string PadicScalar::compact_str() const {
    if (zero_) return "0";
    std::string s = unit_.str() + "*" + std::to_string(ctx_->prime()) + "^" + std::to_string(v_);
    if (prec_ < ctx_->precision()) s += "~" + std::to_string(prec_);
    return s;
}

}  // namespace adic
