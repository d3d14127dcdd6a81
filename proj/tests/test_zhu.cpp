#include <doctest.h>

#include "voa/expr.hpp"
#include "voa/zhu.hpp"

using namespace voa;

TEST_CASE("circle product") {
    Context n1 = Context::rank_one(1);
    FockVector ea = exponential(n1, {rat(1)});
    CHECK(circle(n1, ea, vacuum(n1)) == parse_element("E[1] + a(-1)E[1]", n1));
    CHECK(circle(n1, ea, exponential(n1, {rat(-1)})) ==
          parse_element("1/3*a(-3)vac + 1/2*a(-2)a(-1)vac + 1/6*a(-1)a(-1)a(-1)vac"
                        " + 1/2*a(-2)vac + 1/2*a(-1)a(-1)vac",
                        n1));
    CHECK(circle(n1, vacuum(n1), ea).empty());
}

TEST_CASE("star product") {
    for (long N : {1L, 2L, 3L}) {
        Context ctx = Context::rank_one(N);
        FockVector ea = exponential(ctx, {rat(1)});
        FockVector h = heisenberg_state(ctx, 0);
        CHECK(star(ctx, ea, ea).empty());
        CHECK(star(ctx, vacuum(ctx), ea) == ea);
        // [x, y] reduces to 2N y, and the one-sided residue is exactly 2N e^a
        FockVector comm = diff(star(ctx, h, ea), star(ctx, ea, h));
        CHECK(reduce_B(ctx, comm, N) == reduce_B(ctx, scaled(ea, 2 * N), N));
        CHECK(weighted_residue(ctx, h, ea, 0, 0) == scaled(ea, 2 * N));
    }
}

TEST_CASE("zhu congruences") {
    Context n1 = Context::rank_one(1);
    Reducer vb = Reducer::vb(1);
    CHECK(zhu_identity_checks(n1, vb, heisenberg_state(n1, 0), exponential(n1, {rat(1)})));
    CHECK(zhu_identity_checks(n1, vb, vacuum(n1), vacuum(n1)));
    Context a2 = Context::a2();
    CHECK(zhu_identity_checks(a2, Reducer::vp(), exponential(a2, {rat(1), 0}),
                              exponential(a2, {0, rat(1)})));
}

TEST_CASE("borel reduction map") {
    Context n1 = Context::rank_one(1);
    CHECK(reduce_B(n1, parse_element("a(-2)vac", n1), 1) ==
          nf_scaled(nf_gen(AlgTag::VB, Gen::X), -1));
    CHECK(reduce_B(n1, parse_element("a(-1)E[1]", n1), 1) ==
          nf_scaled(nf_gen(AlgTag::VB, Gen::Y), -1));
    CHECK(reduce_B(n1, exponential(n1, {rat(2)}), 1).is_zero());
    // at level two the linear sector relation contributes the level
    Context n2 = Context::rank_one(2);
    CHECK(reduce_B(n2, parse_element("a(-1)E[1]", n2), 2) ==
          nf_scaled(nf_gen(AlgTag::VB, Gen::Y, 2), -2));
    CHECK_THROWS_AS(reduce_B(n1, exponential(n1, {rat(-1)}), 1), Error);
}

TEST_CASE("rank-one full-lattice reduction map") {
    Context n1 = Context::rank_one(1);
    FockVector ea = exponential(n1, {rat(1)});
    FockVector ena = exponential(n1, {rat(-1)});
    CHECK(reduce_A1(n1, circle(n1, ea, ena)).is_zero());
    CHECK(reduce_A1(n1, parse_element("a(-1)a(-1)a(-1)vac", n1)) ==
          nf_gen(AlgTag::VA1, Gen::X));
    CHECK(reduce_A1(n1, ena) == nf_gen(AlgTag::VA1, Gen::XNA));
}

TEST_CASE("parabolic reduction map") {
    Context a2 = Context::a2();
    // b(-1)e^b collapses through the linear relation on its sector
    CHECK(reduce_P(a2, parse_element("b(-1)E[0,1]", a2)) ==
          nf_scaled(nf_gen(AlgTag::AP, Gen::XB), -1));
    CHECK(reduce_P(a2, exponential(a2, {rat(1), rat(2)})).is_zero());
    NormalFormElement mxy =
        nf_scaled(mul(nf_gen(AlgTag::AP, Gen::X), nf_gen(AlgTag::AP, Gen::Y)), -1);
    CHECK(reduce_P(a2, parse_element("a(-2)b(-1)vac", a2)) == mxy);
    CHECK_THROWS_AS(reduce_P(a2, exponential(a2, {0, rat(-1)})), Error);
}

TEST_CASE("homomorphism spot checks") {
    Context n1 = Context::rank_one(1);
    CHECK(verify_homomorphism(n1, Reducer::vb(1), exponential(n1, {rat(1)}),
                              heisenberg_state(n1, 0)));
    CHECK(verify_homomorphism(n1, Reducer::vb(1), vacuum(n1),
                              parse_element("a(-2)E[1]", n1)));
    Context a2 = Context::a2();
    FockVector ea = exponential(a2, {rat(1), 0});
    FockVector ena = exponential(a2, {rat(-1), 0});
    CHECK(verify_homomorphism(a2, Reducer::vp(), ea, ena));
    // both sides of that pair are (x^2 + x)/2
    NormalFormElement expect = nf_word(AlgTag::AP, Word{0, 2, 0}, rat(1, 2));
    nf_add(expect, nf_word(AlgTag::AP, Word{0, 1, 0}, rat(1, 2)));
    CHECK(reduce_P(a2, star(a2, ea, ena)) == expect);
}

TEST_CASE("homomorphism holds on every basis pair at small cutoffs") {
    // pins the sector sign conventions of all three reduction maps
    Context n2 = Context::rank_one(2);
    SubMonoid b = SubMonoid::split({}, {{1}});
    for (const auto& ta : monoid_basis(n2, b, 3))
        for (const auto& tb : monoid_basis(n2, b, 3))
            CHECK(verify_homomorphism(n2, Reducer::vb(2), fock_term(ta), fock_term(tb)));

    Context n1 = Context::rank_one(1);
    SubMonoid full = SubMonoid::split({{1}}, {});
    for (const auto& ta : monoid_basis(n1, full, 2))
        for (const auto& tb : monoid_basis(n1, full, 2))
            CHECK(verify_homomorphism(n1, Reducer::va1(), fock_term(ta), fock_term(tb)));

    Context a2 = Context::a2();
    SubMonoid p = SubMonoid::split({{1, 0}}, {{0, 1}});
    for (const auto& ta : monoid_basis(a2, p, 2))
        for (const auto& tb : monoid_basis(a2, p, 2))
            CHECK(verify_homomorphism(a2, Reducer::vp(), fock_term(ta), fock_term(tb)));
}

TEST_CASE("ideal property of the vanishing span") {
    // star products against spanning elements of the vanishing space reduce
    // to zero on both sides
    Context n1 = Context::rank_one(1);
    Reducer vb = Reducer::vb(1);
    std::vector<FockVector> spanners = {
        // h(-n-2)u + h(-n-1)u
        sum(parse_element("a(-3)E[1]", n1), parse_element("a(-2)E[1]", n1)),
        sum(parse_element("a(-2)a(-1)vac", n1), parse_element("a(-1)a(-1)vac", n1)),
        // a(-1)v + v on the charged sector
        sum(parse_element("a(-1)E[1]", n1), parse_element("E[1]", n1)),
        exponential(n1, {rat(2)})};
    std::vector<FockVector> probes = {vacuum(n1), heisenberg_state(n1, 0),
                                      exponential(n1, {rat(1)}),
                                      parse_element("a(-2)vac", n1)};
    for (const auto& o : spanners) {
        CHECK(vb.reduce(n1, o).is_zero());
        for (const auto& a : probes) {
            CHECK(vb.reduce(n1, star(n1, a, o)).is_zero());
            CHECK(vb.reduce(n1, star(n1, o, a)).is_zero());
        }
    }
}

TEST_CASE("reducers vanish on the spanning families, element by element") {
    Context a2 = Context::a2();
    SubMonoid p = SubMonoid::split({{1, 0}}, {{0, 1}});
    auto basis = monoid_basis(a2, p, 2);
    const std::vector<QVec> roots = {{rat(1), 0}, {rat(-1), 0}, {0, rat(1)}, {rat(1), rat(1)}};
    for (const auto& t : basis) {
        FockVector v = fock_term(t);
        // h(-n-2)u + h(-n-1)u for both currents and small n
        for (long i = 0; i < 2; ++i) {
            QVec h(2, 0);
            h[i] = 1;
            for (long n = 0; n <= 1; ++n) {
                FockVector fam = sum(heisenberg_act(a2, h, -n - 2, v),
                                     heisenberg_act(a2, h, -n - 1, v));
                CHECK(reduce_P(a2, fam).is_zero());
            }
        }
        const Charge& c = t.charge;
        // gamma(-1)v + v on each root sector
        for (const auto& g : roots)
            if (c.coords == g) {
                FockVector fam = sum(heisenberg_act(a2, g, -1, v), v);
                CHECK(reduce_P(a2, fam).is_zero());
            }
        // gamma(-1)^2 v + gamma(-1) v on the two composite sectors
        const std::vector<std::pair<QVec, QVec>> pairs = {
            {{rat(1), 0}, {0, rat(1)}},          // sum alpha+beta
            {{0, rat(1)}, {rat(1), 0}},
            {{rat(-1), 0}, {rat(1), rat(1)}},    // sum beta
            {{rat(1), rat(1)}, {rat(-1), 0}}};
        for (const auto& [g, gp] : pairs) {
            QVec target{g[0] + gp[0], g[1] + gp[1]};
            if (c.coords == target) {
                FockVector fam =
                    sum(heisenberg_act(a2, g, -1, heisenberg_act(a2, g, -1, v)),
                        heisenberg_act(a2, g, -1, v));
                CHECK(reduce_P(a2, fam).is_zero());
            }
        }
        // the cubic relation on the zero sector
        if (is_zero_vec(c.coords)) {
            QVec alpha{rat(1), 0};
            FockVector a1v = heisenberg_act(a2, alpha, -1, v);
            FockVector fam = diff(
                heisenberg_act(a2, alpha, -1, heisenberg_act(a2, alpha, -1, a1v)), a1v);
            CHECK(reduce_P(a2, fam).is_zero());
        }
    }
    // dead sectors map to zero outright
    CHECK(reduce_P(a2, fock_term(*sector_basis(a2, Charge(QVec{rat(2), rat(1)}), 3).begin()))
              .is_zero());

    // rank-one full lattice: both signed sectors and the cubic family
    Context n1 = Context::rank_one(1);
    for (long k : {1L, -1L}) {
        FockVector v = exponential(n1, QVec{rat(k)});
        // +-alpha(-1)v + v, written with the sector's own sign
        FockVector fam = sum(scaled(heisenberg_act(n1, QVec{rat(1)}, -1, v), k), v);
        CHECK(reduce_A1(n1, fam).is_zero());
    }
    FockVector w = parse_element("a(-2)vac", n1);
    QVec alpha{rat(1)};
    FockVector a1w = heisenberg_act(n1, alpha, -1, w);
    CHECK(reduce_A1(n1, diff(heisenberg_act(n1, alpha, -1, heisenberg_act(n1, alpha, -1, a1w)),
                             a1w))
              .is_zero());
}

TEST_CASE("vanishing sweep, small") {
    Context n1 = Context::rank_one(1);
    auto rep = verify_O_vanishing(n1, Reducer::vb(1), 3, 2);
    CHECK(rep.ok());
    CHECK(rep.pairs_checked >= 100);
}

TEST_CASE("residue family vanishing under reduction") {
    // Res Y(a,z) b (1+z)^(wt a + n) / z^(2+m) reduces to zero for
    // 0 <= n <= m <= 2
    Context n1 = Context::rank_one(1);
    Reducer vb = Reducer::vb(1);
    std::vector<FockVector> states = {exponential(n1, {rat(1)}), heisenberg_state(n1, 0),
                                      parse_element("a(-1)E[1]", n1),
                                      parse_element("a(-2)vac", n1)};
    for (const auto& a : states)
        for (const auto& b : states) {
            long wa = to_long(weight(n1, a));
            for (long m = 0; m <= 2; ++m)
                for (long n = 0; n <= m; ++n)
                    CHECK(vb.reduce(n1, weighted_residue(n1, a, b, wa + n, 2 + m)).is_zero());
        }
}
