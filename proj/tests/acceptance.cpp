// Acceptance suite: runs every verification criterion at its stated size
// and tolerance (all comparisons are exact rational equality) and prints
// one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <string>

#include "voa/suites.hpp"

using namespace voa;

namespace {

int g_failures = 0;

void report(int idx, const std::string& title, const CheckList& checks) {
    bool pass = all_pass(checks);
    if (!pass) ++g_failures;
    std::printf("[%s] %02d %s\n", pass ? "PASS" : "FAIL", idx, title.c_str());
    for (const auto& c : checks)
        if (!c.pass)
            std::printf("       failed: %s%s%s\n", c.name.c_str(),
                        c.witness.empty() ? "" : " -- ", c.witness.c_str());
}

void report_bool(int idx, const std::string& title, bool pass, const std::string& note = "") {
    CheckList cl{{title, pass, note}};
    report(idx, title, cl);
}

}  // namespace

int main() {
    auto started = std::chrono::steady_clock::now();
    const unsigned long seed = 20240817;

    // 1. exponential mode table across the first three levels
    report(1, "exponential mode table (levels 1,2,3)", suite_mode_table({1, 2, 3}));

    // 2. circle with the vacuum, star nilpotence, the current commutator
    report(2, "circle/star identities (levels 1,2,3)", suite_circle_star({1, 2, 3}));

    // 3. the five-term expansion and its reduction to zero
    report(3, "rank-one full-lattice circle expansion", suite_a1_expansion());

    // 4. exhaustive vanishing sweep for the Borel reduction, levels 1 and 2
    {
        CheckList checks = suite_vanishing_vb({1, 2}, 4, 2, 2);
        long pairs = 0;
        for (const auto& c : checks)
            if (c.pass && c.witness.rfind("pairs=", 0) == 0)
                pairs += std::stol(c.witness.substr(6));
        checks.push_back({"at-least-400-pairs", pairs >= 400, "pairs=" + std::to_string(pairs)});
        report(4, "vanishing sweep, Borel reduction (weight <= 4)", checks);
    }

    // 5. exhaustive vanishing sweep for the parabolic reduction
    report(5, "vanishing sweep, parabolic reduction (weight <= 3)",
           suite_vanishing_vp(3, 2, 1));

    // 6. the thirty presentation identities via star products, plus the
    //    homomorphism on all generator pairs and 100 seeded random pairs
    report(6, "parabolic presentation identities and homomorphism",
           suite_presentations(100, seed, 2));

    // 7. axiom sampling on the rank-two lattice: 200 Jacobi triples,
    //    100 skew pairs, 200 derivative/conservation samples
    report(7, "vertex axioms on the rank-two lattice",
           suite_axioms(Context::a2(), 200, 100, 200, 3, seed, 2));

    // 8. module side: bottom actions for three pairings, weight
    //    conservation, spanning saturation, matrix relation families
    report(8, "module actions and spanning",
           suite_modules({0, rat(1, 3), rat(-2)}, 100, seed));

    // 9. presented-algebra internals
    report(9, "normal-form algebra internals", suite_azalg(500, 200, seed));

    // 10. bilinear form calibration, invariance, quasi-triangular splits
    {
        CheckList checks = suite_bilform(200, seed);
        CheckList qt1 = suite_quasi_triangular(Context::rank_one(1), 3, 2);
        CheckList qt2 = suite_quasi_triangular(Context::a2(), 2, 2);
        checks.insert(checks.end(), qt1.begin(), qt1.end());
        checks.insert(checks.end(), qt2.begin(), qt2.end());
        report(10, "invariant form and quasi-triangular decompositions", checks);
    }

    // 11. strong generation with the partition-counting oracle
    report(11, "strong generation at cutoffs", suite_strong_generation());

    // 12. normalizer evidence for the parabolic subalgebra
    report(12, "normalizer of the parabolic subalgebra", suite_normalizer(20, seed));

    auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::printf("%s (%d failing criteria, %llds)\n", g_failures == 0 ? "ALL PASS" : "FAILURES",
                g_failures, (long long)elapsed);
    return g_failures == 0 ? 0 : 1;
}
