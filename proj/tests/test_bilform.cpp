#include <doctest.h>

#include <random>

#include "voa/bilform.hpp"
#include "voa/expr.hpp"

using namespace voa;

TEST_CASE("form base cases") {
    Context n1 = Context::rank_one(1);
    FormContext fc = calibrate_base_pairings(n1, {{1}});
    CHECK(form(n1, fc, vacuum(n1), vacuum(n1)) == 1);
    FockVector h = heisenberg_state(n1, 0);
    CHECK(form(n1, fc, h, h) == -2);

    Context a2 = Context::a2();
    FormContext fc2 = calibrate_base_pairings(a2, {{1, 0}, {0, 1}, {1, 1}});
    CHECK(form(a2, fc2, exponential(a2, {rat(1), 0}), exponential(a2, {0, rat(1)})) == 0);
    CHECK_THROWS_AS(
        form(a2, fc2, exponential(a2, {rat(2), 0}), exponential(a2, {rat(-2), 0})), Error);
}

TEST_CASE("calibrated values") {
    Context n1 = Context::rank_one(1);
    FormContext fc = calibrate_base_pairings(n1, {{1}, {2}});
    CHECK(fc.kappa({rat(1)}) == -1);
    CHECK(fc.kappa({rat(-1)}) == -1);
    CHECK(fc.kappa({rat(2)}) == 1);
    CHECK(fc.kappa(QVec{0}) == 1);

    Context a2 = Context::a2();
    FormContext fc2 = calibrate_base_pairings(a2, {{1, 0}, {0, 1}, {1, 1}});
    CHECK(fc2.kappa({rat(1), rat(0)}) == -1);
    CHECK(fc2.kappa({rat(0), rat(1)}) == -1);
    CHECK(fc2.kappa({rat(1), rat(1)}) == 1);
}

TEST_CASE("adjoint of the zero-mode current") {
    Context a2 = Context::a2();
    FormContext fc = calibrate_base_pairings(a2, {{1, 0}, {0, 1}, {1, 1}});
    FockVector b = exponential(a2, {rat(1), rat(1)});
    FockVector c = exponential(a2, {rat(-1), rat(-1)});
    FockVector h = heisenberg_state(a2, 0);
    // (h(0) b | c) = -(b | h(0) c), here via the full component identity
    CHECK(invariance_check(a2, fc, h, b, c, 0));
    CHECK(form(a2, fc, state_mode(a2, h, 0, b), c) ==
          -form(a2, fc, b, state_mode(a2, h, 0, c)));
}

TEST_CASE("invariance on explicit and random triples") {
    Context n1 = Context::rank_one(1);
    FormContext fc = calibrate_base_pairings(n1, {{1}, {2}});
    CHECK(invariance_check(n1, fc, vacuum(n1), heisenberg_state(n1, 0),
                           heisenberg_state(n1, 0), -1));
    CHECK(invariance_check(n1, fc, exponential(n1, {rat(1)}),
                           exponential(n1, {rat(-1)}), vacuum(n1), 1));

    std::mt19937_64 rng(31);
    auto rnd = [&](const Context&) {
        FockTerm t;
        t.charge = Charge(QVec{rat((long)(rng() % 3) - 1)});
        long budget = (long)(rng() % 3);
        long rest = budget;
        while (rest > 0) {
            long m = 1 + (long)(rng() % rest);
            t.factors.push_back({m, 0});
            rest -= m;
        }
        std::sort(t.factors.begin(), t.factors.end());
        return fock_term(t, rat((long)(rng() % 4) + 1, (long)(rng() % 2) + 1));
    };
    for (int i = 0; i < 50; ++i) {
        FockVector a = rnd(n1), b = rnd(n1), c = rnd(n1);
        long n = (long)(rng() % 7) - 3;
        CHECK(invariance_check(n1, fc, a, b, c, n));
    }
}

TEST_CASE("form symmetry and graded orthogonality") {
    Context n1 = Context::rank_one(1);
    FormContext fc = calibrate_base_pairings(n1, {{1}, {2}});
    std::vector<FockVector> states = {
        vacuum(n1), heisenberg_state(n1, 0), exponential(n1, {rat(1)}),
        parse_element("a(-1)E[-1]", n1), parse_element("a(-2)a(-1)vac", n1)};
    for (const auto& u : states)
        for (const auto& v : states) {
            CHECK(form(n1, fc, u, v) == form(n1, fc, v, u));
            if (weight(n1, u) != weight(n1, v)) CHECK(form(n1, fc, u, v) == 0);
        }
}

TEST_CASE("quasi-triangular decompositions") {
    Context n1 = Context::rank_one(1);
    FormContext fc = calibrate_base_pairings(n1, {{1}, {2}, {3}});
    auto rep = quasi_triangular_check(n1, fc, decomposition_last_coord_sign(0), 3, 2);
    for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }

    Context a2 = Context::a2();
    FormContext fc2 = calibrate_base_pairings(
        a2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2}});
    for (const auto& spec : {decomposition_a2_fine(), decomposition_last_coord_sign(1)}) {
        auto rep2 = quasi_triangular_check(a2, fc2, spec, 2, 2);
        for (const auto& c : rep2.checks) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("calibration consistency guards") {
    Context a2 = Context::a2();
    // a charge list closed under negation calibrates fine even with repeats
    auto fc = calibrate_base_pairings(a2, {{1, 0}, {-1, 0}, {1, 0}});
    CHECK(fc.kappa({rat(1), rat(0)}) == fc.kappa({rat(-1), rat(0)}));
}
