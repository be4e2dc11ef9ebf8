#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "adic/cartan.hpp"
#include "adic/cech.hpp"
#include "adic/models.hpp"

namespace adic {

using Json = nlohmann::json;  // objects keep sorted keys, so rendering is deterministic

// rationals render as JSON integers when integral and small, else as "a/b";
// infinities as "inf" / "-inf"
Json rat_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json rank2_json(const Rank2Val& v);

Json chart_json(const Chart& c);
Chart chart_from_json(const Json& j);

Json series_json(const LaurentSeries& f);
LaurentSeries series_from_json(const Context& ctx, const Json& j);

Json point_json(const DiscPoint& x);
DiscPoint point_from_json(const Context& ctx, const Json& j);

Json report_json(const CohomologyReport& rep);

Json matrix_json(const LaurentMatrix& m);
Json factorization_json(const FactorizationResult& f);

Json target_json(const SpecializationTarget& t);
Json dualgraph_json(const DualGraph& g);
std::string dualgraph_dot(const DualGraph& g);
Json reduction_json(const AnnulusReduction& r);
Json orbit_json(const OrbitRep& o);

/// Sum-of-monomials grammar: "T^2-5", "3 + T + 5*T^-1", "1/3*T^2".
LaurentSeries::CoeffMap parse_series_terms(const Context& ctx, const std::string& text);
LaurentSeries parse_series_expr(const Context& ctx, const std::string& text, const Chart& chart,
                                long long window);

/// Point notation: "x(c)", "eta(c, r)", "eta(c, r)+", "eta(c, r)-".
DiscPoint parse_point(const Context& ctx, const std::string& text);

/// Disc model notation: "(c,r);(c,r);...".
DiscModelSpec parse_disc_model(const Context& ctx, const std::string& text);

/// Comma-separated rationals ("0,1.5,7/2").
std::vector<Rat> parse_breaks(const std::string& text);

/// Sparse matrix file: optional '#' comments, a leading "n <size>" line, an
/// optional "chart <s>" line (circle, default s = 0), then entry lines
/// "<row> <col> <exp>:<coeff> ...". Unlisted entries are zero.
LaurentMatrix parse_matrix_file(const Context& ctx, const std::string& content,
                                long long window);

}  // namespace adic
