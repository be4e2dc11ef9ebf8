#include "doctest.h"

#include "adic/padic.hpp"
#include "test_util.hpp"

using namespace adic;
using testutil::rand_scalar;

TEST_CASE("integer sums renormalize valuation and unit") {
    auto ctx = PadicContext::make(5, 8);
    PadicScalar s = ctx->from_integer(3) + ctx->from_integer(5);
    CHECK(s.valuation_int() == 0);
    CHECK(s.unit() == 8);

    PadicScalar x = ctx->from_unit(2, 7);
    CHECK((x + ctx->zero()) == x);
    CHECK((ctx->zero() + x) == x);
}

TEST_CASE("cancellation surfaces the lost digits") {
    auto ctx = PadicContext::make(5, 4);
    PadicScalar s = ctx->from_integer(2) + ctx->from_integer(123);
    CHECK(s.valuation_int() == 3);
    CHECK(s.unit() == 1);
    CHECK(s.precision() == 1);  // three of four digits consumed by 125 = 5^3

    // full cancellation at working precision collapses to the canonical zero
    PadicScalar z = ctx->from_integer(7) - ctx->from_integer(7);
    CHECK(z.is_zero());
    CHECK(z.precision() == 4);
}

TEST_CASE("products multiply units and add valuations") {
    auto ctx = PadicContext::make(5, 8);
    PadicScalar p = ctx->from_integer(10) * ctx->from_integer(15);
    CHECK(p.valuation_int() == 2);
    CHECK(p.unit() == 6);
}

TEST_CASE("inversion at fixed precision") {
    auto ctx = PadicContext::make(5, 4);
    PadicScalar i2 = ctx->from_integer(2).inv();
    CHECK(i2.valuation_int() == 0);
    CHECK(i2.unit() == 313);  // 2 * 313 = 1 mod 625
    CHECK(ctx->one().inv() == ctx->one());
    CHECK_THROWS_AS(ctx->zero().inv(), DivisionByZero);
}

TEST_CASE("valuations, including rational inputs") {
    auto ctx = PadicContext::make(5, 8);
    CHECK(ctx->from_integer(50).val() == Rat(2));
    CHECK(ctx->zero().val() == Rat::infinity());
    CHECK(ctx->from_rational(3, 25).val() == Rat(-2));
}

TEST_CASE("context mixing is an error, not a coercion") {
    auto c1 = PadicContext::make(5, 8);
    auto c2 = PadicContext::make(7, 8);
    auto c3 = PadicContext::make(5, 6);
    CHECK_THROWS_AS(c1->one() + c2->one(), ContextMismatch);
    CHECK_THROWS_AS(c1->one() * c3->one(), ContextMismatch);
}

TEST_CASE("ultrametric law over random scalars") {
    auto ctx = PadicContext::make(5, 8);
    for (int t = 0; t < 500; ++t) {
        PadicScalar a = rand_scalar(ctx, -3, 4);
        PadicScalar b = rand_scalar(ctx, -3, 4);
        PadicScalar s = a + b;
        CHECK(s.val() >= min(a.val(), b.val()));
        if (a.val() != b.val()) CHECK(s.val() == min(a.val(), b.val()));
    }
}

TEST_CASE("ring laws on random triples") {
    auto ctx = PadicContext::make(5, 8);
    for (int t = 0; t < 200; ++t) {
        PadicScalar a = rand_scalar(ctx, 0, 3), b = rand_scalar(ctx, 0, 3),
                    c = rand_scalar(ctx, 0, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("inverse times original is one") {
    auto ctx = PadicContext::make(5, 12);
    for (int t = 0; t < 200; ++t) {
        PadicScalar a = testutil::rand_unit_scalar(ctx, -3, 5);
        CHECK(a.inv() * a == ctx->one());
    }
}

TEST_CASE("chained cancellation can exhaust the trusted digits") {
    auto ctx = PadicContext::make(5, 4);
    // x = 175 knows only 2 digits at v = 2 after losing 2 to cancellation
    PadicScalar x = ctx->from_integer(176) - ctx->one();
    CHECK(x.valuation_int() == 2);
    CHECK(x.precision() == 2);
    // 175 - 5800 = -9 * 5^4 sits past the absolute precision of x
    PadicScalar g = x - ctx->from_integer(5800);
    CHECK_FALSE(g.is_zero());
    CHECK(g.precision() == 0);
}

TEST_CASE("rendering and parsing round-trip") {
    auto ctx = PadicContext::make(5, 6);
    PadicScalar x = ctx->from_rational(3, 25);
    CHECK(x.str() == "3*5^-2 + O(5^4)");
    CHECK(ctx->parse(x.compact_str()) == x);
    CHECK(ctx->parse("3/25") == x);
    CHECK(ctx->parse("-4").unit() == ctx->modulus() - 4);
    CHECK(ctx->parse("0").is_zero());
    for (int t = 0; t < 100; ++t) {
        PadicScalar a = rand_scalar(ctx, -4, 6);
        CHECK(ctx->parse(a.compact_str()) == a);
    }
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(PadicContext::make(4, 8), InvalidSpec);
    CHECK_THROWS_AS(PadicContext::make(5, 0), InvalidSpec);
    CHECK_NOTHROW(PadicContext::make(2, 4));
}
