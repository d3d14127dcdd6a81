#include <doctest.h>

#include "voa/expr.hpp"
#include "voa/modvoa.hpp"

using namespace voa;

TEST_CASE("borel module action") {
    VBModuleSpec spec{rat(5, 3), rat(1, 2)};
    Context ctx = spec.context(1);
    FockTerm lam;
    lam.charge = Charge(QVec{0}, true);
    FockVector w = fock_term(lam);
    // every positive sector acts as zero
    CHECK(vb_module_mode(ctx, exponential(ctx, {rat(1)}), -3, w).empty());
    // the zero mode of the current reads off the pairing
    CHECK(vb_module_mode(ctx, heisenberg_state(ctx, 0), 0, w) == scaled(w, rat(5, 3)));
    CHECK(vb_module_mode(ctx, vacuum(ctx), -1, w) == w);
    CHECK_THROWS_AS(vb_module_mode(ctx, exponential(ctx, {rat(-1)}), 0, w), Error);
}

TEST_CASE("parabolic module action on the bottom levels") {
    PModuleSpec half{PModuleSpec::Eps::HalfAlpha, rat(1, 3), 0};
    Context ctx = half.context();
    FockTerm ep, em;
    ep.charge = Charge(QVec{rat(1, 2), 0}, true);
    em.charge = Charge(QVec{rat(-1, 2), 0}, true);
    // ideal sectors act as zero
    CHECK(p_module_mode(half, ctx, exponential(ctx, {0, rat(1)}), 0, fock_term(ep)).empty());
    // lowering between the two bottom states
    CHECK(p_module_mode(half, ctx, exponential(ctx, {rat(-1), 0}), 0, fock_term(ep)) ==
          fock_term(em));
    CHECK(p_module_mode(half, ctx, exponential(ctx, {rat(1), 0}), 0, fock_term(em)) ==
          fock_term(ep));

    PModuleSpec zero{PModuleSpec::Eps::Zero, rat(1, 3), 0};
    Context ctx0 = zero.context();
    FockTerm e;
    e.charge = Charge(QVec{0, 0}, true);
    CHECK(p_module_mode(zero, ctx0, heisenberg_state(ctx0, 1), 0, fock_term(e)) ==
          scaled(fock_term(e), rat(1, 3)));
    CHECK_THROWS_AS(
        p_module_mode(zero, ctx0, exponential(ctx0, {0, rat(-1)}), 0, fock_term(e)), Error);
    // targets outside the sector family are rejected: wrong shift, no
    // lambda factor, or a nonzero second coordinate
    CHECK_THROWS_AS(p_module_mode(half, ctx, vacuum(ctx), -1, fock_term(e)), Error);
    CHECK_THROWS_AS(p_module_mode(half, ctx, vacuum(ctx), -1, vacuum(ctx)), Error);
    FockTerm off;
    off.charge = Charge(QVec{rat(1, 2), rat(1)}, true);
    CHECK_THROWS_AS(p_module_mode(half, ctx, vacuum(ctx), -1, fock_term(off)), Error);
}

TEST_CASE("module grading") {
    PModuleSpec half{PModuleSpec::Eps::HalfAlpha, rat(1, 3), 0};
    Context ctx = half.context();
    FockTerm em;
    em.charge = Charge(QVec{rat(-1, 2), 0}, true);
    CHECK(lm0(ctx, em) == rat(1, 4));

    PModuleSpec zero{PModuleSpec::Eps::Zero, 0, rat(3)};
    Context ctx0 = zero.context();
    FockVector v = parse_element("a(-2)E[1,0;L]", ctx0);
    CHECK(lm0(ctx0, v.begin()->first) == Rational(2 + 1) + rat(3, 2));

    // levels of the whole-sector module: 1, 4, 9, 20
    std::vector<long> expect = {1, 4, 9, 20};
    PModuleSpec l0{PModuleSpec::Eps::Zero, rat(1, 3), 0};
    Context c0 = l0.context();
    for (long m = 0; m < 4; ++m)
        CHECK((long)module_level_basis(l0, c0, Rational(m)).size() == expect[m]);
    // half-shifted module: 2, 4, 12
    std::vector<long> expect_h = {2, 4, 12};
    for (long m = 0; m < 3; ++m)
        CHECK((long)module_level_basis(half, ctx, rat(1, 4) + m).size() == expect_h[m]);
}

TEST_CASE("zero mode matrices on the bottom level") {
    PModuleSpec half{PModuleSpec::Eps::HalfAlpha, rat(1, 3), 0};
    auto mats = bottom_matrices(half);
    CHECK(mats[Gen::X] == QMat{{1, 0}, {0, -1}});
    CHECK(mats[Gen::Y] == QMat{{rat(-1, 6), 0}, {0, rat(5, 6)}});
    CHECK(mats[Gen::XA] == QMat{{0, 1}, {0, 0}});
    CHECK(mats[Gen::XNA] == QMat{{0, 0}, {1, 0}});
    CHECK(mat_is_zero(mats[Gen::XB]));
    CHECK(mat_is_zero(mats[Gen::XAB]));

    // the graded piece one level up has dimension 4
    Context ctx = half.context();
    QMat up = zero_mode_matrix(half, ctx, heisenberg_state(ctx, 0), rat(5, 4));
    CHECK(up.size() == 4);
}

TEST_CASE("bottom actions across the classified pairings") {
    for (const auto& q : {Rational(0), rat(1, 3), Rational(-2)}) {
        for (auto eps : {PModuleSpec::Eps::Zero, PModuleSpec::Eps::HalfAlpha}) {
            PModuleSpec spec{eps, q, 0};
            CHECK(bottom_action_check(spec));
            CHECK(ap_module_relation_check(bottom_matrices(spec)));
        }
    }
}

TEST_CASE("module relation matrices reject non-modules") {
    std::map<Gen, QMat> mats{{Gen::X, {{0}}},  {Gen::Y, {{rat(1, 3)}}},
                             {Gen::XA, {{0}}}, {Gen::XNA, {{0}}},
                             {Gen::XB, {{0}}}, {Gen::XAB, {{0}}}};
    CHECK(ap_module_relation_check(mats));
    mats[Gen::X] = {{2}};
    CHECK_FALSE(ap_module_relation_check(mats));
    mats[Gen::X] = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(ap_module_relation_check(mats), Error);
}

TEST_CASE("module spanning saturation") {
    PModuleSpec l0{PModuleSpec::Eps::Zero, rat(1, 3), 0};
    CHECK(spanning_check(l0, 3) == Ternary::True);
    PModuleSpec lh{PModuleSpec::Eps::HalfAlpha, rat(1, 3), 0};
    CHECK(spanning_check(lh, 2) == Ternary::True);
    std::vector<FockVector> empty;
    CHECK(spanning_check(l0, 2, &empty) == Ternary::False);
}

TEST_CASE("module weight conservation") {
    PModuleSpec half{PModuleSpec::Eps::HalfAlpha, rat(1, 3), rat(2)};
    Context ctx = half.context();
    FockVector a = parse_element("a(-1)E[1,0]", ctx);
    FockTerm ep;
    ep.charge = Charge(QVec{rat(1, 2), 0}, true);
    FockVector w = fock_term(ep);
    for (long n = -3; n <= 2; ++n) {
        FockVector r = p_module_mode(half, ctx, a, n, w);
        if (r.empty()) continue;
        CHECK(weight(ctx, r) == weight(ctx, a) + lm0(ctx, ep) - n - 1);
        CHECK(charge_of(r) == Charge(QVec{rat(3, 2), 0}, true));
    }

    // the beta current separates the sectors by its zero-mode eigenvalue
    for (long j = -2; j <= 2; ++j) {
        FockTerm u;
        u.charge = Charge(QVec{rat(2 * j + 1, 2), 0}, true);
        FockVector r = p_module_mode(half, ctx, heisenberg_state(ctx, 1), 0, fock_term(u));
        CHECK(r == scaled(fock_term(u), rat(1, 3) - j - rat(1, 2)));
    }
}
