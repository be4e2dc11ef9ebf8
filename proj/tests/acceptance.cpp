// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "adic/cartan.hpp"
#include "adic/cech.hpp"
#include "adic/models.hpp"
#include "adic/points.hpp"
#include "test_util.hpp"

using namespace adic;
using testutil::rand_int;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define ACCEPT(cond)                                                                      \
    do {                                                                                  \
        if (!(cond)) throw CheckFailure("line " + std::to_string(__LINE__) + ": " #cond); \
    } while (0)

int failures = 0;

void criterion(int num, const std::string& name, const std::function<void()>& body) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    try {
        body();
        double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        std::printf("PASS %2d  %s (%.0f ms)\n", num, name.c_str(), ms);
    } catch (const std::exception& e) {
        ++failures;
        std::printf("FAIL %2d  %s: %s\n", num, name.c_str(), e.what());
    }
    std::fflush(stdout);
}

// ---- independent j-expansion route: 1728 + E6^2 / Delta, with Delta/q from
// ---- the pentagonal-number series for prod (1 - q^n)

using ZSeries = std::vector<BigInt>;

ZSeries conv(const ZSeries& a, const ZSeries& b, std::size_t L) {
    ZSeries out(L + 1, 0);
    for (std::size_t i = 0; i <= L; ++i)
        for (std::size_t j = 0; i + j <= L; ++j) out[i + j] += a[i] * b[j];
    return out;
}

ZSeries series_inv(const ZSeries& u, std::size_t L) {
    ZSeries w(L + 1, 0);
    w[0] = 1;  // u[0] == 1
    for (std::size_t n = 1; n <= L; ++n) {
        BigInt acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += u[k] * w[n - k];
        w[n] = -acc;
    }
    return w;
}

ZSeries j_shifted_via_e6(std::size_t L) {
    // euler function by the pentagonal-number theorem
    ZSeries euler(L + 1, 0);
    for (long long k = -static_cast<long long>(L); k <= static_cast<long long>(L); ++k) {
        long long g = k * (3 * k - 1) / 2;
        if (g < 0 || g > static_cast<long long>(L)) continue;
        euler[static_cast<std::size_t>(g)] += (k % 2 == 0) ? 1 : -1;
    }
    ZSeries e2 = conv(euler, euler, L);
    ZSeries e4 = conv(e2, e2, L);
    ZSeries e8 = conv(e4, e4, L);
    ZSeries e16 = conv(e8, e8, L);
    ZSeries delta_over_q = conv(e16, e8, L);

    ZSeries e6(L + 1, 0);
    e6[0] = 1;
    for (std::size_t n = 1; n <= L; ++n) {
        BigInt s5 = 0;
        for (std::size_t d = 1; d <= n; ++d)
            if (n % d == 0) s5 += BigInt(d) * d * d * d * d;
        e6[n] = -504 * s5;
    }

    ZSeries jq = conv(conv(e6, e6, L), series_inv(delta_over_q, L), L);  // q*(j - 1728)
    if (L >= 1) jq[1] += 1728;
    return jq;
}

LaurentMatrix random_factorable(const Context& ctx) {
    return testutil::rand_near_identity(ctx, static_cast<std::size_t>(rand_int(1, 3)), 24, 2, 1);
}

DiscPoint random_point_any_type(const Context& ctx, bool unit_disc) {
    PadicScalar c = testutil::rand_scalar(ctx, unit_disc ? 0 : -3, 3, 20);
    switch (rand_int(0, 2)) {
        case 0: return DiscPoint::type1(c);
        case 1: return DiscPoint::type2(c, Rat(rand_int(unit_disc ? 0 : -8, 8), 2));
        default: {
            Rat r(rand_int(unit_disc ? 0 : -4, 4));
            Side s = rand_int(0, 1) ? Side::Plus : Side::Minus;
            if (unit_disc && s == Side::Minus && r == Rat(0)) s = Side::Plus;
            return DiscPoint::type5(c, r, s);
        }
    }
}

DiscModelSpec close_model(const Context& ctx, std::vector<DiscPoint> vs) {
    vs.push_back(DiscPoint::type2(ctx->zero(), Rat(0)));
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                DiscPoint m = join(vs[i], vs[j]);
                bool found = false;
                for (const auto& w : vs) found = found || semantic_eq(m, w);
                if (!found) {
                    vs.push_back(m);
                    grew = true;
                }
            }
        }
    }
    return DiscModelSpec(std::move(vs));
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    auto suite_start = clock::now();
    Context ctx8 = PadicContext::make(5, 8);
    Context ctx12 = PadicContext::make(5, 12);

    criterion(1, "projective-line acyclicity", [&] {
        for (long long d : {5LL, 10LL, 20LL}) {
            auto t0 = clock::now();
            auto rep = cohomology(build_cech(CechSpaceSpec::proj_line(), d, ctx8));
            ACCEPT(rep.h0 == 1);
            ACCEPT(rep.h1 == 0);
            double sec = std::chrono::duration<double>(clock::now() - t0).count();
            ACCEPT(sec < 1.0);
        }
    });

    criterion(2, "annulus Laurent covers are acyclic", [&] {
        std::vector<CechSpaceSpec> specs;
        for (int t = 0; t < 20; ++t) {
            long long a = rand_int(-5, 3);
            long long s0 = a + rand_int(1, 4);
            long long b = s0 + rand_int(1, 4);
            specs.push_back(CechSpaceSpec::annulus(Rat(a), Rat(s0), Rat(b)));
        }
        const long long d = 8;
        auto table = acyclicity_sweep(specs, d, ctx8);
        ACCEPT(table.size() == 20);
        for (const auto& rep : table) {
            ACCEPT(rep.h1 == 0);
            ACCEPT(rep.h0 == 2 * d + 1);
        }
    });

    criterion(3, "tate curve has genus one with the expected divisors", [&] {
        for (long long vq : {1LL, 2LL, 3LL}) {
            PadicScalar q = ctx8->from_unit(vq, 1);
            for (long long d : {5LL, 10LL}) {
                auto rep = cohomology(build_cech(CechSpaceSpec::tate_curve(Rat(vq)), d, ctx8));
                ACCEPT(rep.h0 == 1);
                ACCEPT(rep.h1 == 1);
                for (const auto& g : rep.grades) {
                    Rat expected = (q.pow(g.grade.i) - ctx8->one()).val();
                    Rat got = Rat::infinity();
                    if (g.divisors.size() == 2) got = g.divisors[0] + g.divisors[1];
                    ACCEPT(got == expected);
                }
            }
        }
    });

    criterion(4, "bidisc boundary obstruction count", [&] {
        for (long long d : {2LL, 3LL, 5LL}) {
            auto rep = cohomology(build_cech(CechSpaceSpec::bidisc_boundary(), d, ctx8));
            ACCEPT(rep.h1 == d * d);
            ACCEPT(rep.h1 > 0);
        }
    });

    std::vector<LaurentMatrix> factored;
    criterion(5, "factorization reaches target with geometric decay", [&] {
        const Rat target(10);
        for (int t = 0; t < 50; ++t) {
            LaurentMatrix b = random_factorable(ctx12);
            FactorizationResult f = cartan_factor(b, target);
            ACCEPT(f.residual_val >= target);
            ACCEPT(f.iterations <= ctx12->precision());
            for (std::size_t i = 0; i + 1 < f.decay_trace.size(); ++i)
                ACCEPT(f.decay_trace[i + 1] >= f.decay_trace[i] + f.decay_trace[0]);
            Chart circle = b.chart();
            LaurentMatrix prod = matrix_mul(f.b1.restricted(circle), f.b2.restricted(circle));
            Rat recomputed = matrix_sup_val(matrix_sub(prod, b.widened(f.effective_window)));
            ACCEPT(recomputed == f.residual_val);
            factored.push_back(b);
        }
    });

    criterion(6, "trivializations glue: Y = B * Z on the circle", [&] {
        const Rat target(10);
        ACCEPT(!factored.empty());
        for (std::size_t t = 0; t < factored.size(); t += 5) {
            const LaurentMatrix& b = factored[t];
            Trivialization tr = trivialize_glued_free_module(b, target);
            Chart circle = b.chart();
            LaurentMatrix lhs = tr.y.restricted(circle);
            LaurentMatrix rhs = matrix_mul(b.widened(tr.factorization.effective_window),
                                           tr.z.restricted(circle));
            ACCEPT(matrix_sup_val(matrix_sub(lhs, rhs)) >= target);
        }
    });

    criterion(7, "covering annuli translate off themselves", [&] {
        TateParams params(Rat(2));
        for (long long n = -10; n <= 10; ++n) {
            for (long long m = -5; m <= 5; ++m) {
                bool disjoint = tate_cover_disjoint(n, m, params);
                ACCEPT(disjoint == (m != 0));
            }
        }
    });

    criterion(8, "dual graphs of the standard models", [&] {
        TateParams p2(Rat(2));
        DualGraph two = tate_dual_graph({Rat(0), Rat(1)}, p2);
        ACCEPT(two.vertices.size() == 2);
        ACCEPT(two.edges.size() == 2);
        ACCEPT(two.b1() == 1);

        TateParams p3(Rat(3));
        DualGraph tri = tate_dual_graph({Rat(0), Rat(1), Rat(2)}, p3);
        ACCEPT(tri.vertices.size() == 3);
        ACCEPT(tri.edges.size() == 3);
        ACCEPT(tri.b1() == 1);
        for (const auto& e : tri.edges) ACCEPT(e.u != e.v);

        DiscModelSpec model({DiscPoint::type2(ctx8->zero(), Rat(0)),
                             DiscPoint::type2(ctx8->zero(), Rat(1))});
        DualGraph tree = disc_model_dual_tree(model);
        ACCEPT(tree.vertices.size() == 2);
        ACCEPT(tree.edges.size() == 1);
        ACCEPT(tree.b1() == 0);
        int lines = 0, projlines = 0;
        for (const auto& v : tree.vertices) {
            lines += v.kind == ComponentKind::Line;
            projlines += v.kind == ComponentKind::ProjLine;
        }
        ACCEPT(lines == 1);
        ACCEPT(projlines == 1);
    });

    criterion(9, "j-invariant expansion agrees across derivations", [&] {
        auto j = j_expansion(8);
        ACCEPT(j[0] == 1);
        ACCEPT(j[1] == 744);
        ACCEPT(j[2] == 196884);
        ZSeries other = j_shifted_via_e6(8);
        for (std::size_t m = 0; m < j.size(); ++m) ACCEPT(j[m] == other[m]);
        for (long long vq : {1LL, 2LL, 3LL}) {
            ACCEPT(j_valuation(TateParams(Rat(vq))) == Rat(-vq));
            ACCEPT(Rat(-vq) < Rat(0));  // |j| = p^vq > 1
        }
    });

    criterion(10, "point-algebra property suite", [&] {
        // ultrametric inequality at all point types
        for (int t = 0; t < 1000; ++t) {
            LaurentSeries f = testutil::rand_series(ctx8, Chart::disc(Rat(0)), 8, 0, 4, 3);
            LaurentSeries g = testutil::rand_series(ctx8, Chart::disc(Rat(0)), 8, 0, 4, 3);
            DiscPoint x = random_point_any_type(ctx8, true);
            Rank2Val vf = seminorm_val(f, x), vg = seminorm_val(g, x);
            ACCEPT(seminorm_val(f + g, x) >= min(vf, vg));
        }
        // gauss multiplicativity at type-2 points
        for (int t = 0; t < 1000; ++t) {
            LaurentSeries f = testutil::rand_series(ctx8, Chart::disc(Rat(0)), 16, 0, 4, 3);
            LaurentSeries g = testutil::rand_series(ctx8, Chart::disc(Rat(0)), 16, 0, 4, 3);
            DiscPoint x = DiscPoint::type2(testutil::rand_scalar(ctx8, 0, 2, 30),
                                           Rat(rand_int(0, 6), 2));
            LaurentSeries prod = f * g;
            ACCEPT(!prod.truncated());
            ACCEPT(seminorm_val(prod, x).main ==
                   seminorm_val(f, x).main + seminorm_val(g, x).main);
        }
        // join is a commutative, associative, idempotent meet
        for (int t = 0; t < 1000; ++t) {
            auto rank1 = [&]() {
                PadicScalar c = testutil::rand_scalar(ctx8, 0, 3, 20);
                return rand_int(0, 1) ? DiscPoint::type1(c)
                                      : DiscPoint::type2(c, Rat(rand_int(0, 8), 2));
            };
            DiscPoint x = rank1(), y = rank1(), z = rank1();
            ACCEPT(semantic_eq(join(x, y), join(y, x)));
            ACCEPT(semantic_eq(join(join(x, y), z), join(x, join(y, z))));
            ACCEPT(semantic_eq(join(x, x), x));
        }
        // maximal generalization is idempotent and sits above its point
        for (int t = 0; t < 1000; ++t) {
            DiscPoint x = random_point_any_type(ctx8, true);
            DiscPoint g = max_generalization(x);
            ACCEPT(semantic_eq(max_generalization(g), g));
            ACCEPT(specializes(g, x));
        }
        // skeleton retraction is invariant under the lattice action
        TateParams p3 = TateParams::with_default_q(ctx8, Rat(3));
        for (int t = 0; t < 1000; ++t) {
            DiscPoint x = random_point_any_type(ctx8, false);
            if (x.type() == DiscPoint::Type::One && x.center().is_zero()) continue;
            long long m = rand_int(-3, 3);
            ACCEPT(tate_retract(tate_action(x, m, p3), p3) == tate_retract(x, p3));
            ACCEPT(gm_retract(tate_action(x, m, p3)) == gm_retract(x) + p3.vq.scaled(m));
        }
        // specialization is stable under single-vertex refinement away from
        // the new branch
        int done = 0;
        while (done < 1000) {
            std::vector<DiscPoint> seed;
            for (int k = 0; k < 2; ++k)
                seed.push_back(DiscPoint::type2(ctx8->from_integer(rand_int(0, 24)),
                                                Rat(rand_int(1, 4))));
            DiscModelSpec base = close_model(ctx8, seed);
            const auto& anchor = base.vertices()[static_cast<std::size_t>(
                rand_int(0, static_cast<long long>(base.vertices().size()) - 1))];
            DiscPoint added = DiscPoint::type2(anchor.center(),
                                               anchor.radius_exp() + Rat(rand_int(1, 3)));
            bool already = false;
            for (const auto& v : base.vertices()) already = already || semantic_eq(v, added);
            if (already) continue;
            std::vector<DiscPoint> refined_vs = base.vertices();
            refined_vs.push_back(added);
            DiscModelSpec refined = close_model(ctx8, refined_vs);
            if (refined.vertices().size() != base.vertices().size() + 1) continue;

            Rat parent_r(0);
            for (const auto& v : base.vertices()) {
                bool encloses = v.radius_exp() <= added.radius_exp() &&
                                (added.center() - v.center()).val() >= v.radius_exp();
                if (encloses && !semantic_eq(v, added) && v.radius_exp() > parent_r)
                    parent_r = v.radius_exp();
            }
            for (int s = 0; s < 10 && done < 1000; ++s) {
                DiscPoint x = random_point_any_type(ctx8, true);
                Rat cdist = (x.center() - added.center()).val();
                bool radius_gt = x.type() == DiscPoint::Type::One ||
                                 x.radius_exp() > parent_r ||
                                 (x.radius_exp() == parent_r &&
                                  x.type() == DiscPoint::Type::Five &&
                                  x.side() == Side::Plus);
                if (radius_gt && cdist > parent_r) continue;
                ACCEPT(specialize(base, x).same_as(specialize(refined, x)));
                ++done;
            }
        }
    });

    criterion(11, "performance envelope", [&] {
        double sec = std::chrono::duration<double>(clock::now() - suite_start).count();
        std::ostringstream os;
        os << "suite took " << sec << " s";
        if (sec >= 60.0) throw CheckFailure(os.str());
    });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
