#include <doctest.h>

#include "voa/expr.hpp"
#include "voa/vertex.hpp"

using namespace voa;

TEST_CASE("exponential modes, rank one") {
    for (long N : {1L, 2L, 3L}) {
        Context ctx = Context::rank_one(N);
        FockVector ea = exponential(ctx, {rat(1)});
        for (long n = -2 * N; n <= 2 * N; ++n)
            CHECK(exp_mode(ctx, {rat(1)}, n, ea).empty());
        CHECK(exp_mode(ctx, {rat(1)}, -2 * N - 1, ea) == exponential(ctx, {rat(2)}));
    }
    Context n1 = Context::rank_one(1);
    CHECK(exp_mode(n1, {rat(1)}, -1, exponential(n1, {rat(-1)})) ==
          parse_element("1/2*a(-2)vac + 1/2*a(-1)a(-1)vac", n1));
}

TEST_CASE("exponential modes, A2") {
    Context ctx = Context::a2();
    FockVector got = exp_mode(ctx, {rat(0), rat(1)}, -1, exponential(ctx, {rat(1), 0}));
    CHECK(got == parse_element("-1*b(-1)E[1,1]", ctx));
    // non-integral shift is rejected
    CHECK_THROWS_AS(exp_mode(ctx, {rat(1), 0}, 0, exponential(ctx, {rat(1, 2), 0})), Error);
}

TEST_CASE("state modes") {
    Context a2 = Context::a2();
    CHECK(state_mode(a2, heisenberg_state(a2, 0), 0, exponential(a2, {0, rat(1)})) ==
          scaled(exponential(a2, {0, rat(1)}), -1));
    CHECK(state_mode(a2, exponential(a2, {rat(1), 0}), -2, vacuum(a2)) ==
          parse_element("a(-1)E[1,0]", a2));
    // vanishing above the weight bound
    Context n1 = Context::rank_one(1);
    FockVector a = parse_element("a(-1)E[1]", n1);  // weight 2
    FockVector b = parse_element("a(-2)vac", n1);   // weight 2
    for (long n = 4; n <= 7; ++n) CHECK(state_mode(n1, a, n, b).empty());
}

TEST_CASE("weighted residues") {
    Context n1 = Context::rank_one(1);
    FockVector ea = exponential(n1, {rat(1)});
    CHECK(weighted_residue(n1, ea, vacuum(n1), 1, 2) ==
          parse_element("E[1] + a(-1)E[1]", n1));
    // ladder: e^a with e^{ma} climbs one step
    for (long m = 1; m <= 2; ++m) {
        FockVector em = exponential(n1, {rat(m)});
        CHECK(weighted_residue(n1, ea, em, 1, 2 * m + 1) ==
              exponential(n1, {rat(m + 1)}));
    }
    FockVector h = heisenberg_state(n1, 0);
    CHECK(weighted_residue(n1, h, ea, 0, 0) == state_mode(n1, h, 0, ea));
}

TEST_CASE("virasoro modes") {
    Context n1 = Context::rank_one(1);
    FockVector h = heisenberg_state(n1, 0);
    CHECK(virasoro_mode(n1, 0, h) == h);
    CHECK(virasoro_mode(n1, -1, exponential(n1, {rat(1)})) ==
          parse_element("a(-1)E[1]", n1));
    CHECK(virasoro_mode(n1, 1, h).empty());

    // weight grading on a composite state, both lattices
    Context a2 = Context::a2();
    FockVector v = parse_element("a(-2)b(-1)E[0,1]", a2);
    CHECK(virasoro_mode(a2, 0, v) == scaled(v, to_long(weight(a2, v))));
}

TEST_CASE("virasoro bracket with central charge = rank") {
    Context a2 = Context::a2();
    FockVector v = parse_element("a(-1)E[1,0] - 2*b(-2)E[1,0]", a2);
    for (long m = -2; m <= 2; ++m)
        for (long n = -2; n <= 2; ++n) {
            FockVector lhs = diff(virasoro_mode(a2, m, virasoro_mode(a2, n, v)),
                                  virasoro_mode(a2, n, virasoro_mode(a2, m, v)));
            FockVector rhs = scaled(virasoro_mode(a2, m + n, v), m - n);
            if (m + n == 0) add_scaled(rhs, v, rat((m * m * m - m) * 2, 12));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("borcherds identity samples") {
    Context n1 = Context::rank_one(1);
    FockVector h = heisenberg_state(n1, 0);
    for (long m = -2; m <= 2; ++m)
        for (long n = -2; n <= 2; ++n)
            for (long k = -2; k <= 2; ++k)
                CHECK(borcherds_check(n1, h, h, vacuum(n1), m, n, k));
    CHECK(borcherds_check(n1, exponential(n1, {rat(1)}), exponential(n1, {rat(-1)}),
                          vacuum(n1), 0, 0, -1));
    // the vacuum on the left is trivial for any indices
    Context a2 = Context::a2();
    FockVector b = parse_element("a(-1)E[0,1]", a2);
    FockVector c = parse_element("b(-1)E[1,0]", a2);
    for (long m = -2; m <= 2; ++m)
        CHECK(borcherds_check(a2, vacuum(a2), b, c, m, 1, -1));
}

TEST_CASE("skew symmetry samples") {
    Context a2 = Context::a2();
    CHECK(skew_symmetry_check(a2, exponential(a2, {rat(1), 0}),
                              exponential(a2, {0, rat(1)}), -1));
    Context n1 = Context::rank_one(1);
    FockVector h = heisenberg_state(n1, 0);
    CHECK(skew_symmetry_check(n1, h, h, 1));
    CHECK(skew_symmetry_check(n1, vacuum(n1), parse_element("a(-2)E[1]", n1), -1));
}

TEST_CASE("weight and charge conservation") {
    Context a2 = Context::a2();
    FockVector a = parse_element("a(-1)E[1,0]", a2);
    FockVector b = parse_element("b(-1)E[0,1]", a2);
    for (long n = -3; n <= 2; ++n) {
        FockVector r = state_mode(a2, a, n, b);
        if (r.empty()) continue;
        CHECK(weight(a2, r) == weight(a2, a) + weight(a2, b) - n - 1);
        CHECK(charge_of(r) == Charge(QVec{rat(1), rat(1)}));
    }
}

TEST_CASE("translation derivative property") {
    Context n1 = Context::rank_one(1);
    FockVector a = parse_element("a(-1)E[1]", n1);
    FockVector b = parse_element("a(-2)vac", n1);
    for (long n = -3; n <= 3; ++n)
        CHECK(state_mode(n1, virasoro_mode(n1, -1, a), n, b) ==
              scaled(state_mode(n1, a, n - 1, b), -n));
}

TEST_CASE("normalizer evidence") {
    Context n1 = Context::rank_one(1);
    SubMonoid b = SubMonoid::split({}, {{1}});
    CHECK(normalizer_check(n1, b, exponential(n1, {rat(1)}), 4, 3) == Ternary::True);
    CHECK(normalizer_check(n1, b, vacuum(n1), 4, 3) == Ternary::True);

    Context a2 = Context::a2();
    SubMonoid p = SubMonoid::split({{1, 0}}, {{0, 1}});
    CHECK(normalizer_check(a2, p, exponential(a2, {0, rat(-1)}), 4, 3) == Ternary::False);
}

TEST_CASE("strong generation at small cutoffs") {
    Context n1 = Context::rank_one(1);
    SubMonoid b = SubMonoid::split({}, {{1}});
    std::vector<FockVector> gens = {heisenberg_state(n1, 0), exponential(n1, {rat(1)})};
    CHECK(strong_generation_check(n1, gens, b, 3) == Ternary::True);

    Context a2 = Context::a2();
    SubMonoid p = SubMonoid::split({{1, 0}}, {{0, 1}});
    std::vector<FockVector> pgens = {
        exponential(a2, {rat(1), 0}),  exponential(a2, {rat(-1), 0}),
        exponential(a2, {0, rat(1)}),  exponential(a2, {rat(1), rat(1)}),
        heisenberg_state(a2, 0),       heisenberg_state(a2, 1)};
    CHECK(strong_generation_check(a2, pgens, p, 2) == Ternary::True);

    CHECK(strong_generation_check(n1, {}, b, 1) == Ternary::False);
}
