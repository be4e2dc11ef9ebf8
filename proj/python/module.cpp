#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adic/io.hpp"

namespace py = pybind11;
using namespace adic;

namespace {

Rat rat_in(py::handle obj) {
    if (py::isinstance<py::float_>(obj)) {
        double d = obj.cast<double>();
        if (d == std::numeric_limits<double>::infinity()) return Rat::infinity();
        if (d == -std::numeric_limits<double>::infinity()) return Rat::neg_infinity();
    }
    return parse_rat(py::str(obj).cast<std::string>());
}

py::object rat_out(const Rat& r) {
    if (r.is_pos_inf()) return py::float_(std::numeric_limits<double>::infinity());
    if (r.is_neg_inf()) return py::float_(-std::numeric_limits<double>::infinity());
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(r.numerator_int().str())),
                    py::int_(py::str(r.denominator_int().str())));
}

py::object json_out(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::tuple rank2_out(const Rank2Val& v) { return py::make_tuple(rat_out(v.main), v.eps); }

struct CtxObj {
    Context ctx;
};

struct ScalarObj {
    PadicScalar v;
};

struct SeriesObj {
    LaurentSeries f;
};

struct PointObj {
    DiscPoint x;
};

Chart chart_in(py::handle obj) {
    auto pair = obj.cast<std::pair<py::object, py::object>>();
    return Chart(rat_in(pair.first), rat_in(pair.second));
}

PadicScalar scalar_in(const Context& ctx, py::handle obj) {
    if (py::isinstance<ScalarObj>(obj)) return obj.cast<ScalarObj&>().v;
    return ctx->parse(py::str(obj).cast<std::string>());
}

LaurentSeries series_in(py::handle obj) { return obj.cast<SeriesObj&>().f; }

LaurentMatrix matrix_in(const py::list& rows) {
    std::vector<LaurentSeries> entries;
    std::size_t n = rows.size();
    for (const auto& row : rows)
        for (const auto& e : row.cast<py::list>()) entries.push_back(series_in(e));
    if (entries.size() != n * n) throw InvalidSpec("matrix needs n x n series entries");
    return LaurentMatrix(n, std::move(entries));
}

std::vector<DiscPoint> model_in(const Context& ctx, py::handle obj) {
    std::vector<DiscPoint> vs;
    for (const auto& item : obj.cast<py::list>()) {
        if (py::isinstance<PointObj>(item))
            vs.push_back(item.cast<PointObj&>().x);
        else
            vs.push_back(parse_point(ctx, py::str(item).cast<std::string>()));
    }
    return vs;
}

TateParams params_in(const Context& ctx, py::handle vq) {
    Rat v = rat_in(vq);
    if (v.is_integer()) return TateParams::with_default_q(ctx, v);
    return TateParams(v);
}

}  // namespace

PYBIND11_MODULE(adictk, m) {
    m.doc() = "exact p-adic Laurent arithmetic, cohomology of explicit covers, matrix "
              "factorization and Tate-curve models";

    py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted");
    py::register_exception<Precondition>(m, "PreconditionError");
    py::register_exception<NonConvergence>(m, "NonConvergenceError");
    py::register_exception<InvalidSpec>(m, "InvalidSpecError");

    py::class_<CtxObj>(m, "Context")
        .def(py::init([](long long p, int N) { return CtxObj{PadicContext::make(p, N)}; }),
             py::arg("p") = 5, py::arg("N") = 8)
        .def_property_readonly("p", [](const CtxObj& c) { return c.ctx->prime(); })
        .def_property_readonly("N", [](const CtxObj& c) { return c.ctx->precision(); })
        .def("scalar",
             [](const CtxObj& c, py::handle v) { return ScalarObj{scalar_in(c.ctx, v)}; })
        .def("__repr__", [](const CtxObj& c) {
            return "Context(p=" + std::to_string(c.ctx->prime()) +
                   ", N=" + std::to_string(c.ctx->precision()) + ")";
        });

    py::class_<ScalarObj>(m, "Scalar")
        .def_property_readonly("val", [](const ScalarObj& s) { return rat_out(s.v.val()); })
        .def_property_readonly("precision", [](const ScalarObj& s) { return s.v.precision(); })
        .def("__add__", [](const ScalarObj& a, const ScalarObj& b) { return ScalarObj{a.v + b.v}; })
        .def("__sub__", [](const ScalarObj& a, const ScalarObj& b) { return ScalarObj{a.v - b.v}; })
        .def("__mul__", [](const ScalarObj& a, const ScalarObj& b) { return ScalarObj{a.v * b.v}; })
        .def("__neg__", [](const ScalarObj& a) { return ScalarObj{-a.v}; })
        .def("inv", [](const ScalarObj& a) { return ScalarObj{a.v.inv()}; })
        .def("pow", [](const ScalarObj& a, long long e) { return ScalarObj{a.v.pow(e)}; })
        .def("__eq__", [](const ScalarObj& a, const ScalarObj& b) { return a.v == b.v; })
        .def("__str__", [](const ScalarObj& a) { return a.v.str(); })
        .def("__repr__", [](const ScalarObj& a) { return "Scalar(" + a.v.compact_str() + ")"; });

    py::class_<SeriesObj>(m, "Series")
        .def(py::init([](const CtxObj& c, py::dict coeffs, py::object chart,
                         long long window) {
                 LaurentSeries::CoeffMap m2;
                 for (const auto& item : coeffs)
                     m2.emplace(item.first.cast<long long>(), scalar_in(c.ctx, item.second));
                 return SeriesObj{LaurentSeries(c.ctx, chart_in(chart), window, std::move(m2))};
             }),
             py::arg("ctx"), py::arg("coeffs"), py::arg("chart") = py::make_tuple(0, "inf"),
             py::arg("window") = 8)
        .def_static("parse",
                    [](const CtxObj& c, const std::string& text, py::object chart,
                       long long window) {
                        return SeriesObj{
                            parse_series_expr(c.ctx, text, chart_in(chart), window)};
                    },
                    py::arg("ctx"), py::arg("text"), py::arg("chart") = py::make_tuple(0, "inf"),
                    py::arg("window") = 8)
        .def_property_readonly("chart",
                               [](const SeriesObj& s) {
                                   return py::make_tuple(rat_out(s.f.chart().a()),
                                                         rat_out(s.f.chart().b()));
                               })
        .def_property_readonly("window", [](const SeriesObj& s) { return s.f.window(); })
        .def_property_readonly("truncated", [](const SeriesObj& s) { return s.f.truncated(); })
        .def("coeff", [](const SeriesObj& s, long long e) { return ScalarObj{s.f.coeff(e)}; })
        .def("gauss_val", [](const SeriesObj& s, py::handle r) {
            return rat_out(gauss_val(s.f, rat_in(r)));
        })
        .def("sup_val", [](const SeriesObj& s) { return rat_out(sup_val(s.f)); })
        .def("is_power_bounded", [](const SeriesObj& s) { return is_power_bounded(s.f); })
        .def("__add__",
             [](const SeriesObj& a, const SeriesObj& b) { return SeriesObj{a.f + b.f}; })
        .def("__sub__",
             [](const SeriesObj& a, const SeriesObj& b) { return SeriesObj{a.f - b.f}; })
        .def("__mul__",
             [](const SeriesObj& a, const SeriesObj& b) { return SeriesObj{a.f * b.f}; })
        .def("restrict",
             [](const SeriesObj& s, py::object chart) {
                 return SeriesObj{restrict(s.f, chart_in(chart))};
             })
        .def("scale_variable",
             [](const SeriesObj& s, const ScalarObj& lam) {
                 return SeriesObj{scale_variable(s.f, lam.v)};
             })
        .def("split",
             [](const SeriesObj& s) {
                 SplitParts p = split_laurent(s.f);
                 return py::make_tuple(SeriesObj{p.plus}, SeriesObj{p.minus});
             })
        .def("__str__", [](const SeriesObj& s) { return to_string(s.f); })
        .def("__repr__", [](const SeriesObj& s) { return to_string(s.f); });

    py::class_<PointObj>(m, "Point")
        .def_static("type1",
                    [](const CtxObj& c, py::handle centre) {
                        return PointObj{DiscPoint::type1(scalar_in(c.ctx, centre))};
                    })
        .def_static("type2",
                    [](const CtxObj& c, py::handle centre, py::handle r) {
                        return PointObj{DiscPoint::type2(scalar_in(c.ctx, centre), rat_in(r))};
                    })
        .def_static("type5",
                    [](const CtxObj& c, py::handle centre, py::handle r,
                       const std::string& side) {
                        return PointObj{DiscPoint::type5(scalar_in(c.ctx, centre), rat_in(r),
                                                        side == "+" ? Side::Plus : Side::Minus)};
                    })
        .def_static("parse",
                    [](const CtxObj& c, const std::string& text) {
                        return PointObj{parse_point(c.ctx, text)};
                    })
        .def("__eq__",
             [](const PointObj& a, const PointObj& b) { return semantic_eq(a.x, b.x); })
        .def("__str__", [](const PointObj& a) { return a.x.str(); })
        .def("__repr__", [](const PointObj& a) { return a.x.str(); });

    m.def("seminorm_val",
          [](const SeriesObj& f, const PointObj& x) { return rank2_out(seminorm_val(f.f, x.x)); });
    m.def("recentre", [](const SeriesObj& f, const ScalarObj& c) {
        return SeriesObj{recentre(f.f, c.v)};
    });
    m.def("specializes",
          [](const PointObj& a, const PointObj& b) { return specializes(a.x, b.x); });
    m.def("max_generalization",
          [](const PointObj& a) { return PointObj{max_generalization(a.x)}; });
    m.def("join", [](const PointObj& a, const PointObj& b) { return PointObj{join(a.x, b.x)}; });
    m.def("path_breakpoints", [](const PointObj& a, const PointObj& b) {
        py::list out;
        for (const auto& p : path_breakpoints(a.x, b.x)) out.append(PointObj{p});
        return out;
    });
    m.def("gm_retract", [](const PointObj& a) { return rat_out(gm_retract(a.x)); });

    m.def("cech",
          [](const CtxObj& c, const std::string& space, long long window, py::object a,
             py::object s0, py::object b, py::object vq, py::object threshold) {
              CechSpaceSpec spec = [&]() {
                  if (space == "p1") return CechSpaceSpec::proj_line();
                  if (space == "bidisc") return CechSpaceSpec::bidisc_boundary();
                  if (space == "annulus")
                      return CechSpaceSpec::annulus(rat_in(a), rat_in(s0), rat_in(b));
                  if (space == "tate") return CechSpaceSpec::tate_curve(rat_in(vq));
                  throw InvalidSpec("unknown space: " + space);
              }();
              std::optional<int> thr;
              if (!threshold.is_none()) thr = threshold.cast<int>();
              return json_out(report_json(cohomology(build_cech(spec, window, c.ctx), thr)));
          },
          py::arg("ctx"), py::arg("space"), py::arg("window") = 8, py::arg("a") = py::none(),
          py::arg("s0") = py::none(), py::arg("b") = py::none(), py::arg("vq") = 1,
          py::arg("threshold") = py::none());

    m.def("elementary_divisors", [](const CtxObj& c, py::list rows) {
        PadicMatrix m2;
        for (const auto& row : rows) {
            std::vector<PadicScalar> r;
            for (const auto& e : row.cast<py::list>()) r.push_back(scalar_in(c.ctx, e));
            m2.push_back(std::move(r));
        }
        py::list out;
        for (const auto& d : elementary_divisors(m2)) out.append(rat_out(d));
        return out;
    });

    m.def("cartan_factor",
          [](py::list rows, py::handle target, int max_iter) {
              return json_out(
                  factorization_json(cartan_factor(matrix_in(rows), rat_in(target), max_iter)));
          },
          py::arg("matrix"), py::arg("target") = 10, py::arg("max_iter") = 0);

    m.def("trivialize_glued_free_module",
          [](py::list rows, py::handle target, int max_iter) {
              Trivialization t =
                  trivialize_glued_free_module(matrix_in(rows), rat_in(target), max_iter);
              return py::make_tuple(json_out(matrix_json(t.y)), json_out(matrix_json(t.z)),
                                    json_out(factorization_json(t.factorization)));
          },
          py::arg("matrix"), py::arg("target") = 10, py::arg("max_iter") = 0);

    m.def("matrix_sup_val",
          [](py::list rows) { return rat_out(matrix_sup_val(matrix_in(rows))); });

    m.def("disc_model_tree",
          [](const CtxObj& c, py::handle model, bool dot) -> py::object {
              DualGraph g = disc_model_dual_tree(DiscModelSpec(model_in(c.ctx, model)));
              if (dot) return py::str(dualgraph_dot(g));
              return json_out(dualgraph_json(g));
          },
          py::arg("ctx"), py::arg("model"), py::arg("dot") = false);

    m.def("specialize", [](const CtxObj& c, py::handle model, const PointObj& x) {
        return json_out(target_json(specialize(DiscModelSpec(model_in(c.ctx, model)), x.x)));
    });

    m.def("reduce_annulus", [](py::handle a, py::handle b) {
        return kind_name(reduce_annulus(Chart(rat_in(a), rat_in(b))));
    });
    m.def("reduce_function",
          [](const SeriesObj& f) { return json_out(reduction_json(reduce_function(f.f))); });

    m.def("tate_action",
          [](const CtxObj& c, const PointObj& x, long long mm, py::handle vq) {
              return PointObj{tate_action(x.x, mm, params_in(c.ctx, vq))};
          });
    m.def("tate_orbit_normalize", [](const CtxObj& c, const PointObj& x, py::handle vq) {
        OrbitRep rep = tate_orbit_normalize(x.x, params_in(c.ctx, vq));
        return py::make_tuple(PointObj{rep.rep}, rep.sheet);
    });
    m.def("tate_cover_disjoint", [](long long n, long long mm, py::handle vq) {
        return tate_cover_disjoint(n, mm, TateParams(rat_in(vq)));
    });
    m.def("tate_retract", [](const PointObj& x, py::handle vq) {
        return rat_out(tate_retract(x.x, TateParams(rat_in(vq))));
    });
    m.def("tate_dual_graph",
          [](py::list breaks, py::handle vq, bool dot) -> py::object {
              std::vector<Rat> bs;
              for (const auto& b : breaks) bs.push_back(rat_in(b));
              DualGraph g = tate_dual_graph(bs, TateParams(rat_in(vq)));
              if (dot) return py::str(dualgraph_dot(g));
              return json_out(dualgraph_json(g));
          },
          py::arg("breaks"), py::arg("vq"), py::arg("dot") = false);
    m.def("universal_cover_lift", [](py::handle s, long long sheet, py::handle vq) {
        return rat_out(universal_cover_lift(rat_in(s), sheet, TateParams(rat_in(vq))));
    });
    m.def("j_expansion", [](int terms) {
        py::list out;
        for (const auto& c : j_expansion(terms)) out.append(py::int_(py::str(c.str())));
        return out;
    });
    m.def("j_valuation",
          [](py::handle vq) { return rat_out(j_valuation(TateParams(rat_in(vq)))); });
}
