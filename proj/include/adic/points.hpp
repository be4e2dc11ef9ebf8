#pragma once

#include <vector>

#include "adic/series.hpp"

namespace adic {

/// A value in the rank-2 group Q + Z*eps, ordered lexicographically; rank-1
/// values embed with eps = 0.
struct Rank2Val {
    Rat main;
    long long eps = 0;

    bool operator==(const Rank2Val& o) const { return main == o.main && eps == o.eps; }
    bool operator!=(const Rank2Val& o) const { return !(*this == o); }
    bool operator<(const Rank2Val& o) const {
        if (main != o.main) return main < o.main;
        return eps < o.eps;
    }
    bool operator<=(const Rank2Val& o) const { return *this < o || *this == o; }
    bool operator>=(const Rank2Val& o) const { return o <= *this; }
    bool operator>(const Rank2Val& o) const { return o < *this; }

    std::string str() const { return "(" + main.str() + ", " + std::to_string(eps) + ")"; }
};

inline const Rank2Val& min(const Rank2Val& a, const Rank2Val& b) { return b < a ? b : a; }

enum class Side { Plus, Minus };

/// A point of the adic disc or G_m:
///   Type1(c)          the classical point T = c
///   Type2(c, r)       the Gauss point of the disc { v(T - c) >= r }
///   Type5(c, r, +/-)  its rank-2 companion at radius r + eps (plus, the
///                     infinitesimally smaller disc toward c) or r - eps
///                     (minus, the infinitesimally larger disc)
///
/// Equality is semantic: Type2(c, r) == Type2(c', r) iff v(c - c') >= r.
/// Plus-side Type5 points also compare the residue direction (v(c - c') > r),
/// since distinct branches at radius r are distinct points; the minus side has
/// a single outward branch per Type2 point. Radii are exact rationals, so
/// type-3 points are unrepresentable, and type-4 points need infinite data;
/// both stay out of the model by construction.
class DiscPoint {
  public:
    enum class Type { One, Two, Five };

    static DiscPoint type1(const PadicScalar& c) { return DiscPoint(Type::One, c, 0, Side::Plus); }
    static DiscPoint type2(const PadicScalar& c, const Rat& r);
    static DiscPoint type5(const PadicScalar& c, const Rat& r, Side side);

    Type type() const { return type_; }
    const PadicScalar& center() const { return c_; }
    const Rat& radius_exp() const;
    Side side() const;
    const Context& context() const { return c_.context(); }

    std::string str() const;

  private:
    DiscPoint(Type t, PadicScalar c, Rat r, Side s)
        : type_(t), c_(std::move(c)), r_(std::move(r)), side_(s) {}

    Type type_;
    PadicScalar c_;
    Rat r_;
    Side side_;
};

enum class PointEq { Distinct, Equal, Indistinguishable };

/// Three-way semantic comparison; Indistinguishable means the distinguishing
/// digits fell below working precision, which is reported rather than
/// collapsed to equality.
PointEq classify_eq(const DiscPoint& x, const DiscPoint& y);
bool semantic_eq(const DiscPoint& x, const DiscPoint& y);

/// Re-expands f around T = c (disc charts only; annulus recentring at c != 0
/// would need an infinite expansion and is rejected).
LaurentSeries recentre(const LaurentSeries& f, const PadicScalar& c);

/// v(f(x)) as a (possibly rank-2) value. Type1 evaluates the series, Type2
/// takes the Gauss minimum after recentring, Type5 refines the minimum
/// lexicographically by the exponent: side plus contributes +i, minus -i.
Rank2Val seminorm_val(const LaurentSeries& f, const DiscPoint& x);

/// Whether y is a specialization of x: x itself, or the Type5 companions of a
/// Type2 point.
bool specializes(const DiscPoint& x, const DiscPoint& y);

/// The unique rank-1 generalization: Type5(c, r, s) -> Type2(c, r).
DiscPoint max_generalization(const DiscPoint& x);

/// Smallest closed disc containing both inputs (Type1/Type2 only): the meet
/// in the tree of discs.
DiscPoint join(const DiscPoint& x, const DiscPoint& y);

/// The geodesic x -> join -> y with duplicates collapsed.
std::vector<DiscPoint> path_breakpoints(const DiscPoint& x, const DiscPoint& y);

/// Retraction of G_m onto its skeleton { Type2(0, s) }: min(r, v(c)).
/// The origin Type1(0) is not a point of G_m.
Rat gm_retract(const DiscPoint& x);

}  // namespace adic
