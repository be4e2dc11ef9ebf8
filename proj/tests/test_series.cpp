#include "doctest.h"

#include "adic/series.hpp"
#include "test_util.hpp"

using namespace adic;
using testutil::rand_int;
using testutil::rand_series;

namespace {

Context ctx5() {
    static Context ctx = PadicContext::make(5, 8);
    return ctx;
}

LaurentSeries from_terms(const Context& ctx, const Chart& chart, long long window,
                         std::initializer_list<std::pair<long long, long long>> terms) {
    LaurentSeries::CoeffMap m;
    for (const auto& [e, c] : terms) m.insert_or_assign(e, ctx->from_integer(c));
    return LaurentSeries(ctx, chart, window, std::move(m));
}

}  // namespace

TEST_CASE("gauss valuation at a radius parameter") {
    auto ctx = ctx5();
    LaurentSeries f = from_terms(ctx, Chart::disc(Rat(0)), 4, {{0, 5}, {2, 1}});  // 5 + T^2
    CHECK(gauss_val(f, Rat(0)) == Rat(0));
    CHECK(gauss_val(f, Rat(1)) == Rat(1));
    LaurentSeries z = LaurentSeries::zero(ctx, Chart::disc(Rat(0)), 4);
    CHECK(gauss_val(z, Rat(1, 2)) == Rat::infinity());
    CHECK_THROWS_AS(gauss_val(f, Rat(-1)), OutOfChart);
}

TEST_CASE("sup over a chart evaluates the endpoints") {
    auto ctx = ctx5();
    Chart ann = Chart::annulus(Rat(0), Rat(1));
    CHECK(sup_val(from_terms(ctx, ann, 4, {{0, 5}, {2, 1}})) == Rat(0));
    CHECK(sup_val(from_terms(ctx, ann, 4, {{-1, 5}})) == Rat(0));
    CHECK(sup_val(from_terms(ctx, Chart::disc(Rat(0)), 4, {{1, 1}})) == Rat(0));
}

TEST_CASE("arithmetic respects charts and windows") {
    auto ctx = ctx5();
    Chart disc = Chart::disc(Rat(0));
    LaurentSeries f = from_terms(ctx, disc, 4, {{0, 1}, {1, 1}});   // 1 + T
    LaurentSeries g = from_terms(ctx, disc, 4, {{0, 1}, {1, -1}});  // 1 - T
    LaurentSeries prod = f * g;
    CHECK(prod.coeff(0) == ctx->one());
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == ctx->from_integer(-1));
    CHECK_FALSE(prod.truncated());

    CHECK((f * LaurentSeries::zero(ctx, disc, 4)).is_zero());

    // window rule: (T + T^2)^2 with D = 2 keeps only T^2 and flags the rest
    LaurentSeries h = from_terms(ctx, disc, 2, {{1, 1}, {2, 1}});
    LaurentSeries sq = h * h;
    CHECK(sq.truncated());
    CHECK(sq.coeff(2) == ctx->one());
    CHECK(sq.coeffs().size() == 1);

    LaurentSeries other = from_terms(ctx, Chart::disc(Rat(1)), 4, {{0, 1}});
    CHECK_THROWS_AS(f + other, ChartMismatch);
}

TEST_CASE("restriction to nested charts") {
    auto ctx = ctx5();
    Chart ann = Chart::annulus(Rat(0), Rat(1));
    LaurentSeries f = from_terms(ctx, ann, 4, {{-1, 5}, {1, 1}});
    LaurentSeries circle = restrict(f, Chart::circle(Rat(1)));
    CHECK(circle.chart() == Chart::circle(Rat(1)));
    CHECK(circle.coeffs() == f.coeffs());
    CHECK(restrict(f, ann).coeffs() == f.coeffs());

    LaurentSeries d = from_terms(ctx, Chart::disc(Rat(0)), 4, {{2, 1}});
    LaurentSeries r = restrict(d, Chart::annulus(Rat(0), Rat(2)));
    CHECK(r.coeff(2) == ctx->one());
    CHECK_THROWS_AS(restrict(d, Chart::annulus(Rat(-1), Rat(0))), ChartMismatch);
}

TEST_CASE("variable scaling shifts the chart by v(lambda)") {
    auto ctx = ctx5();
    LaurentSeries f = from_terms(ctx, Chart::circle(Rat(0)), 4, {{1, 1}});  // T
    LaurentSeries g = scale_variable(f, ctx->from_integer(5));
    CHECK(g.chart() == Chart::circle(Rat(-1)));
    CHECK(g.coeff(1) == ctx->from_integer(5));

    CHECK(scale_variable(f, ctx->one()).coeffs() == f.coeffs());
    LaurentSeries c = from_terms(ctx, Chart::circle(Rat(0)), 4, {{0, 1}});
    CHECK(scale_variable(c, ctx->from_integer(5)).coeff(0) == ctx->one());
    CHECK_THROWS_AS(scale_variable(f, ctx->zero()), Precondition);

    for (int t = 0; t < 100; ++t) {
        LaurentSeries h = rand_series(ctx, Chart::circle(Rat(rand_int(-2, 2))), 6, -4, 4, 3);
        PadicScalar lam = testutil::rand_unit_scalar(ctx, -2, 2);
        LaurentSeries back = scale_variable(scale_variable(h, lam), lam.inv());
        CHECK(back.chart() == h.chart());
        for (const auto& [e, coeff] : h.coeffs()) CHECK(back.coeff(e) == coeff);
    }
}

TEST_CASE("power-bounded membership") {
    auto ctx = ctx5();
    Chart ann = Chart::annulus(Rat(0), Rat(1));
    CHECK_FALSE(is_power_bounded(
        LaurentSeries::constant(ctx, ann, 4, ctx->from_rational(1, 5))));
    CHECK(is_power_bounded(from_terms(ctx, ann, 4, {{1, 1}})));
    CHECK(is_power_bounded(from_terms(ctx, ann, 4, {{-1, 5}})));
}

TEST_CASE("laurent splitting on a circle") {
    auto ctx = ctx5();
    Chart circle = Chart::circle(Rat(0));
    LaurentSeries f = from_terms(ctx, circle, 4, {{0, 3}, {1, 1}, {-1, 5}});
    SplitParts parts = split_laurent(f);
    CHECK(parts.plus.chart() == Chart::disc(Rat(0)));
    CHECK(parts.minus.chart() == Chart::codisc(Rat(0)));
    CHECK(parts.plus.coeff(0) == ctx->from_integer(3));
    CHECK(parts.plus.coeff(1) == ctx->one());
    CHECK(parts.minus.coeff(-1) == ctx->from_integer(-5));

    SplitParts zero = split_laurent(LaurentSeries::zero(ctx, circle, 4));
    CHECK(zero.plus.is_zero());
    CHECK(zero.minus.is_zero());

    SplitParts inv = split_laurent(from_terms(ctx, circle, 4, {{-2, 1}}));
    CHECK(inv.plus.is_zero());
    CHECK(inv.minus.coeff(-2) == ctx->from_integer(-1));

    CHECK_THROWS_AS(split_laurent(from_terms(ctx, Chart::annulus(Rat(0), Rat(1)), 4, {{0, 1}})),
                    ChartMismatch);

    for (int t = 0; t < 200; ++t) {
        Rat s(rand_int(-2, 2));
        LaurentSeries g = rand_series(ctx, Chart::circle(s), 6, -6, 6, 4);
        SplitParts p = split_laurent(g);
        LaurentSeries back =
            restrict(p.plus, Chart::circle(s)) - restrict(p.minus, Chart::circle(s));
        CHECK(back.coeffs() == g.coeffs());
        CHECK(sup_val(p.plus) >= sup_val(g));
        CHECK(sup_val(p.minus) >= sup_val(g));
        if (is_power_bounded(g)) {
            CHECK(is_power_bounded(p.plus));
            CHECK(is_power_bounded(p.minus));
        }
    }
}

TEST_CASE("gauss multiplicativity without truncation") {
    auto ctx = ctx5();
    for (int t = 0; t < 200; ++t) {
        Chart circle = Chart::circle(Rat(rand_int(-1, 1)));
        LaurentSeries f = rand_series(ctx, circle, 12, -3, 3, 3);
        LaurentSeries g = rand_series(ctx, circle, 12, -3, 3, 3);
        LaurentSeries prod = f * g;
        REQUIRE_FALSE(prod.truncated());
        Rat s = circle.a();
        CHECK(gauss_val(prod, s) == gauss_val(f, s) + gauss_val(g, s));
    }
}

TEST_CASE("interior radii never beat the endpoint minimum") {
    auto ctx = ctx5();
    for (int t = 0; t < 200; ++t) {
        Chart ann = Chart::annulus(Rat(0), Rat(3));
        LaurentSeries f = rand_series(ctx, ann, 8, -5, 5, 4);
        Rat s(rand_int(1, 5), 2);  // random interior radius in halves
        CHECK(gauss_val(f, s) >= sup_val(f));
    }
}

TEST_CASE("series invariants reject bad construction") {
    auto ctx = ctx5();
    LaurentSeries::CoeffMap m;
    m.insert_or_assign(-1, ctx->one());
    CHECK_THROWS_AS(LaurentSeries(ctx, Chart::disc(Rat(0)), 4, m), InvalidSpec);
    CHECK_THROWS_AS(LaurentSeries(ctx, Chart::circle(Rat(0)), 0), InvalidSpec);
    LaurentSeries::CoeffMap wide;
    wide.insert_or_assign(9, ctx->one());
    CHECK_THROWS_AS(LaurentSeries(ctx, Chart::circle(Rat(0)), 4, wide), InvalidSpec);
    CHECK_THROWS_AS(Chart(Rat(1), Rat(0)), InvalidSpec);
    CHECK_THROWS_AS(Chart(Rat::neg_infinity(), Rat::infinity()), InvalidSpec);
}
