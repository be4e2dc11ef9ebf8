#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "adic/points.hpp"

namespace adic {

enum class ComponentKind { Line, ProjLine, Torus };
enum class FiberKind { Line, Torus, Nodal };

std::string kind_name(ComponentKind k);
std::string kind_name(FiberKind k);

/// Dual graph of a special fibre: vertices are irreducible components, edges
/// are intersection points (multi-edges allowed).
struct DualGraph {
    struct Vertex {
        std::string label;
        ComponentKind kind;
    };
    struct Edge {
        std::size_t u, v;
        std::string label;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    std::size_t components() const;
    long long b1() const {
        return static_cast<long long>(edges.size()) - static_cast<long long>(vertices.size()) +
               static_cast<long long>(components());
    }
};

/// A formal model of the closed unit disc, encoded as a join-closed set of
/// type-2 vertices with radius exponents in the value group of K (integers),
/// always containing the Gauss point. The dictionary to iterated blowups:
/// blowing up at (pi, T - a) adds the vertex Type2(a, 1), and each further
/// blowup adds one more vertex.
class DiscModelSpec {
  public:
    explicit DiscModelSpec(std::vector<DiscPoint> vertices);

    const std::vector<DiscPoint>& vertices() const { return vertices_; }
    std::size_t root() const { return root_; }
    /// Tightest strictly enclosing vertex; empty for the root.
    std::optional<std::size_t> parent(std::size_t v) const;
    const Context& context() const { return vertices_[0].context(); }

  private:
    std::vector<DiscPoint> vertices_;
    std::size_t root_ = 0;
};

/// Image of a point under the specialization map to a disc model.
struct SpecializationTarget {
    enum class Kind { Generic, Closed, Node };

    Kind kind = Kind::Generic;
    DiscPoint vertex;               // Generic/Closed: the component; Node: the parent side
    std::optional<DiscPoint> child; // Node: the child side
    std::string residue_label;      // Closed: residue digit, or "inf-direction"

    std::string str() const;
    bool same_as(const SpecializationTarget& o) const;
};

/// Tate parameters: v(q) > 0, with q itself realized when the valuation is
/// integral (the value group of Q_p).
struct TateParams {
    Rat vq;
    std::optional<PadicScalar> q;

    TateParams(const Rat& vq_, std::optional<PadicScalar> q_ = std::nullopt);
    static TateParams with_default_q(const Context& ctx, const Rat& vq);
    const PadicScalar& require_q() const;
};

/// Vertices become components (root A^1-like, the rest projective lines);
/// each non-root vertex meets its tightest enclosing vertex.
DualGraph disc_model_dual_tree(const DiscModelSpec& spec);

/// The specialization map at this finite level: locate the smallest model
/// disc containing the rank-1 avatar of x (type-5 points live at radius
/// r +/- an infinitesimal), then classify as the generic point of that
/// component, a node between adjacent components, or a closed point in the
/// residue direction of x.
SpecializationTarget specialize(const DiscModelSpec& spec, const DiscPoint& x);

/// Special fibre of the canonical model of a chart with integral bounds:
/// strict annulus -> nodal pair of lines, circle -> torus, disc -> line.
FiberKind reduce_annulus(const Chart& chart);

/// Reduction of a power-bounded function on a strict integral annulus to the
/// coordinate ring k[s, t]/(st): the s-polynomial collects exponents i >= 0
/// with v(c_i) + i*a = 0, the t-polynomial exponents i <= 0 with
/// v(c_i) + i*b = 0; both share the constant term.
struct AnnulusReduction {
    std::map<long long, long long> s_poly;  // exponent -> residue digit
    std::map<long long, long long> t_poly;
    long long constant = 0;
    std::string str() const;
};
AnnulusReduction reduce_function(const LaurentSeries& f);

/// The automorphism T -> q^m T on points of G_m.
DiscPoint tate_action(const DiscPoint& x, long long m, const TateParams& params);

struct OrbitRep {
    DiscPoint rep;
    long long sheet = 0;
};
/// Canonical orbit representative with gm_retract in [0, v(q)).
OrbitRep tate_orbit_normalize(const DiscPoint& x, const TateParams& params);

/// Whether m . U_n misses U_n for the covering annuli
/// U_n = { v(T) in [n*vq/2, (n+1)*vq/2] }; the translate is U_{2m+n}.
bool tate_cover_disjoint(long long n, long long m, const TateParams& params);

/// Retraction of a lift onto the skeleton circle: gm_retract mod v(q).
Rat tate_retract(const DiscPoint& x, const TateParams& params);

/// Model of the Tate curve from skeleton break points: the circle cut at the
/// break set, vertices = arcs (components), edges = break points.
DualGraph tate_dual_graph(const std::vector<Rat>& break_points, const TateParams& params);

/// Lift of a skeleton coordinate to the universal cover of the circle:
/// s + sheet * v(q); deck transformations shift the sheet.
Rat universal_cover_lift(const Rat& s, long long sheet, const TateParams& params);

/// Integer coefficients of q^-1, q^0, q^1, ... of the j-expansion, computed
/// from E4^3 / Delta with exact integer arithmetic.
std::vector<BigInt> j_expansion(int terms);

/// v(j(E_q)) = -v(q); in particular |j| > 1.
Rat j_valuation(const TateParams& params);

}  // namespace adic
