#include "voa/suites.hpp"

#include <atomic>
#include <future>
#include <random>
#include <sstream>

#include "voa/expr.hpp"

namespace voa {

bool all_pass(const CheckList& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

CheckList run_tasks(std::vector<Task> tasks, long jobs) {
    CheckList out(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i].run();
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            out[i] = tasks[i].run();
        }
    };
    std::vector<std::future<void>> pool;
    for (long j = 0; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    return out;
}

namespace {

Check make_check(std::string name, bool pass, std::string witness = "") {
    return Check{std::move(name), pass, std::move(witness)};
}

struct Sampler {
    std::mt19937_64 rng;
    explicit Sampler(unsigned long seed) : rng(seed) {}

    long pick(long lo, long hi) { return lo + (long)(rng() % (unsigned long)(hi - lo + 1)); }

    Rational coeff() {
        long num = pick(-3, 3);
        if (num == 0) num = 1;
        return rat(num, pick(1, 3));
    }

    std::vector<Factor> factors(const Context& ctx, long weight_budget) {
        std::vector<Factor> fs;
        long rest = weight_budget;
        while (rest > 0) {
            if (pick(0, 2) == 0) break;
            long mode = pick(1, rest);
            fs.push_back({mode, pick(0, ctx.lat.rank - 1)});
            rest -= mode;
        }
        std::sort(fs.begin(), fs.end());
        return fs;
    }

    // weight- and charge-homogeneous state
    FockVector state(const Context& ctx, const IVec& charge, long max_weight) {
        Charge c(QVec(charge.begin(), charge.end()));
        Rational slack = Rational(max_weight) - sector_min_weight(ctx, c);
        long budget = slack >= 0 ? to_long(slack) : 0;
        FockTerm t;
        t.charge = c;
        t.factors = factors(ctx, budget);
        FockVector out = fock_term(t, coeff());
        if (pick(0, 2) == 0) {  // second term, same charge and weight
            long w = 0;
            for (auto& f : t.factors) w += f.mode;
            FockTerm t2;
            t2.charge = c;
            t2.factors = factors(ctx, w);
            long w2 = 0;
            for (auto& f : t2.factors) w2 += f.mode;
            if (w2 == w) add_term(out, t2, coeff());
        }
        return out;
    }

    IVec charge_in_box(const Context& ctx, long box, long max_norm2) {
        while (true) {
            IVec g(ctx.lat.rank);
            for (long i = 0; i < ctx.lat.rank; ++i) g[i] = pick(-box, box);
            if (ctx.lat.pairing(g, g) <= max_norm2) return g;
        }
    }
};

FockVector gen_state_a2(const Context& ctx, Gen g) {
    switch (g) {
        case Gen::X: return heisenberg_state(ctx, 0);
        case Gen::Y: return heisenberg_state(ctx, 1);
        case Gen::XA: return exponential(ctx, {rat(1), rat(0)});
        case Gen::XNA: return exponential(ctx, {rat(-1), rat(0)});
        case Gen::XB: return exponential(ctx, {rat(0), rat(1)});
        case Gen::XAB: return exponential(ctx, {rat(1), rat(1)});
    }
    throw Error(Errc::TagMismatch, "bad generator");
}

const std::vector<Gen>& six_gens() {
    static const std::vector<Gen> g = {Gen::X, Gen::Y, Gen::XA, Gen::XNA, Gen::XB, Gen::XAB};
    return g;
}

}  // namespace

CheckList suite_mode_table(const std::vector<long>& levels) {
    CheckList out;
    for (long N : levels) {
        Context ctx = Context::rank_one(N);
        FockVector ea = exponential(ctx, {rat(1)});
        bool ok = true;
        std::string witness;
        for (long n = -2 * N; n <= 2 * N; ++n) {
            if (!exp_mode(ctx, {rat(1)}, n, ea).empty()) {
                ok = false;
                witness = "nonzero mode at n=" + std::to_string(n);
            }
        }
        FockVector hit = exp_mode(ctx, {rat(1)}, -2 * N - 1, ea);
        if (!(hit == exponential(ctx, {rat(2)}))) {
            ok = false;
            witness = "mode -2N-1 gave " + print_fock(ctx, hit);
        }
        out.push_back(make_check("mode-table-N" + std::to_string(N), ok, witness));
    }
    return out;
}

CheckList suite_circle_star(const std::vector<long>& levels) {
    CheckList out;
    for (long N : levels) {
        Context ctx = Context::rank_one(N);
        std::string suffix = "-N" + std::to_string(N);
        FockVector ea = exponential(ctx, {rat(1)});
        FockVector h = heisenberg_state(ctx, 0);
        // e^a o vac = a(-1)e^a + N e^a
        RawTerm rt;
        rt.coeff = 1;
        rt.factors = {{{rat(1)}, -1}};
        rt.charge = Charge(QVec{rat(1)});
        FockVector expected = normalize(ctx, {rt});
        add_scaled(expected, ea, N);
        FockVector got = circle(ctx, ea, vacuum(ctx));
        out.push_back(make_check("circle-vacuum" + suffix, got == expected,
                                 got == expected ? "" : print_fock(ctx, got)));
        // e^a * e^a = 0
        out.push_back(make_check("star-nilpotent" + suffix, star(ctx, ea, ea).empty()));
        // x*y - y*x reduces to 2N e^a, and the one-sided residue equals it
        FockVector comm = diff(star(ctx, h, ea), star(ctx, ea, h));
        bool pass_comm =
            reduce_B(ctx, comm, N) == reduce_B(ctx, scaled(ea, 2 * N), N) &&
            weighted_residue(ctx, h, ea, 0, 0) == scaled(ea, 2 * N);
        out.push_back(make_check("star-commutator" + suffix, pass_comm));
    }
    return out;
}

CheckList suite_a1_expansion() {
    CheckList out;
    Context ctx = Context::rank_one(1);
    FockVector got = circle(ctx, exponential(ctx, {rat(1)}), exponential(ctx, {rat(-1)}));
    FockVector expected = parse_element(
        "1/3*a(-3)vac + 1/2*a(-2)a(-1)vac + 1/6*a(-1)a(-1)a(-1)vac"
        " + 1/2*a(-2)vac + 1/2*a(-1)a(-1)vac",
        ctx);
    out.push_back(make_check("a1-circle-expansion", got == expected,
                             got == expected ? "" : print_fock(ctx, got)));
    NormalFormElement red = reduce_A1(ctx, got);
    out.push_back(
        make_check("a1-circle-reduces-to-zero", red.is_zero(), print_nf(red)));
    return out;
}

CheckList suite_vanishing_vb(const std::vector<long>& levels, long weight_cutoff,
                             long charge_box, long jobs) {
    std::vector<Task> tasks;
    for (long N : levels) {
        tasks.push_back({"vb", [N, weight_cutoff, charge_box]() {
                             Context ctx = Context::rank_one(N);
                             auto rep = verify_O_vanishing(ctx, Reducer::vb(N), weight_cutoff,
                                                           charge_box);
                             std::string name = "o-vanishing-vb-N" + std::to_string(N);
                             if (!rep.ok())
                                 return make_check(name, false,
                                                   rep.failures[0].a + " o " +
                                                       rep.failures[0].b + " -> " +
                                                       rep.failures[0].value);
                             return make_check(name, true,
                                               "pairs=" + std::to_string(rep.pairs_checked));
                         }});
    }
    return run_tasks(std::move(tasks), jobs);
}

CheckList suite_vanishing_vp(long weight_cutoff, long charge_box, long jobs) {
    std::vector<Task> tasks;
    tasks.push_back({"vp", [weight_cutoff, charge_box]() {
                         Context ctx = Context::a2();
                         auto rep =
                             verify_O_vanishing(ctx, Reducer::vp(), weight_cutoff, charge_box);
                         if (!rep.ok())
                             return make_check("o-vanishing-vp", false,
                                               rep.failures[0].a + " o " + rep.failures[0].b +
                                                   " -> " + rep.failures[0].value);
                         return make_check("o-vanishing-vp", true,
                                           "pairs=" + std::to_string(rep.pairs_checked));
                     }});
    return run_tasks(std::move(tasks), jobs);
}

CheckList suite_presentations(long random_pairs, unsigned long seed, long jobs) {
    std::vector<Task> tasks;
    // the thirty identities, via star products and the normal-form map
    for (const auto& rel : ap_relations()) {
        tasks.push_back({rel.name, [rel]() {
                             Context ctx = Context::a2();
                             NormalFormElement acc = nf_zero(AlgTag::AP);
                             for (const auto& [c, word] : rel.terms) {
                                 FockVector v = vacuum(ctx);
                                 for (Gen g : word) v = star(ctx, v, gen_state_a2(ctx, g));
                                 nf_add(acc, reduce_P(ctx, v), c);
                             }
                             return make_check("star-relation: " + rel.name, acc.is_zero(),
                                               print_nf(acc));
                         }});
    }
    tasks.push_back({"hom36", []() {
                         Context ctx = Context::a2();
                         for (Gen g1 : six_gens())
                             for (Gen g2 : six_gens()) {
                                 FockVector a = gen_state_a2(ctx, g1), b = gen_state_a2(ctx, g2);
                                 if (!verify_homomorphism(ctx, Reducer::vp(), a, b))
                                     return make_check("homomorphism-generator-pairs", false,
                                                       gen_name(g1) + " * " + gen_name(g2));
                             }
                         return make_check("homomorphism-generator-pairs", true, "pairs=36");
                     }});
    tasks.push_back({"homrand", [random_pairs, seed]() {
                         Context ctx = Context::a2();
                         Sampler s(seed);
                         for (long i = 0; i < random_pairs; ++i) {
                             IVec ga{s.pick(-1, 1), s.pick(0, 1)};
                             IVec gb{s.pick(-1, 1), s.pick(0, 1)};
                             FockVector a = s.state(ctx, ga, 3), b = s.state(ctx, gb, 3);
                             if (!verify_homomorphism(ctx, Reducer::vp(), a, b))
                                 return make_check("homomorphism-random-pairs", false,
                                                   print_fock(ctx, a) + " * " +
                                                       print_fock(ctx, b));
                             if (!zhu_identity_checks(ctx, Reducer::vp(), a, b))
                                 return make_check("homomorphism-random-pairs", false,
                                                   "congruence: " + print_fock(ctx, a) + " , " +
                                                       print_fock(ctx, b));
                         }
                         return make_check("homomorphism-random-pairs", true,
                                           "pairs=" + std::to_string(random_pairs));
                     }});
    // rank-one presentations across levels
    for (long N : {1L, 2L, 3L}) {
        tasks.push_back({"vb", [N]() {
                             Context ctx = Context::rank_one(N);
                             Reducer red = Reducer::vb(N);
                             FockVector ea = exponential(ctx, {rat(1)});
                             FockVector h = heisenberg_state(ctx, 0);
                             bool ok = reduce_B(ctx, star(ctx, ea, ea), N).is_zero();
                             ok = ok && verify_homomorphism(ctx, red, ea, h);
                             ok = ok && verify_homomorphism(ctx, red, h, ea);
                             ok = ok && verify_homomorphism(ctx, red, h, h);
                             ok = ok && zhu_identity_checks(ctx, red, h, ea);
                             return make_check("vb-presentation-N" + std::to_string(N), ok);
                         }});
    }
    tasks.push_back({"va1", []() {
                         Context ctx = Context::rank_one(1);
                         Reducer red = Reducer::va1();
                         std::vector<FockVector> gens = {heisenberg_state(ctx, 0),
                                                         exponential(ctx, {rat(1)}),
                                                         exponential(ctx, {rat(-1)})};
                         for (const auto& a : gens)
                             for (const auto& b : gens) {
                                 if (!verify_homomorphism(ctx, red, a, b))
                                     return make_check("va1-homomorphism-pairs", false,
                                                       print_fock(ctx, a) + " * " +
                                                           print_fock(ctx, b));
                                 if (!zhu_identity_checks(ctx, red, a, b))
                                     return make_check("va1-homomorphism-pairs", false,
                                                       "congruence");
                             }
                         return make_check("va1-homomorphism-pairs", true, "pairs=9");
                     }});
    return run_tasks(std::move(tasks), jobs);
}

CheckList suite_axioms(const Context& ctx, long borcherds_samples, long skew_samples,
                       long misc_samples, long weight_cutoff, unsigned long seed, long jobs) {
    std::vector<Task> tasks;
    const long box = 1;
    tasks.push_back({"borcherds", [&ctx, borcherds_samples, weight_cutoff, seed, box]() {
                         Sampler s(seed);
                         for (long i = 0; i < borcherds_samples; ++i) {
                             FockVector a =
                                 s.state(ctx, s.charge_in_box(ctx, box, 2 * weight_cutoff),
                                         weight_cutoff);
                             FockVector b =
                                 s.state(ctx, s.charge_in_box(ctx, box, 2 * weight_cutoff),
                                         weight_cutoff);
                             FockVector c =
                                 s.state(ctx, s.charge_in_box(ctx, box, 2 * weight_cutoff),
                                         weight_cutoff);
                             long m = s.pick(-3, 3), n = s.pick(-3, 3), k = s.pick(-3, 3);
                             if (!borcherds_check(ctx, a, b, c, m, n, k))
                                 return make_check("borcherds-identity", false,
                                                   print_fock(ctx, a) + " ; " +
                                                       print_fock(ctx, b) + " ; " +
                                                       print_fock(ctx, c) + " @ (" +
                                                       std::to_string(m) + "," +
                                                       std::to_string(n) + "," +
                                                       std::to_string(k) + ")");
                         }
                         return make_check("borcherds-identity", true,
                                           "samples=" + std::to_string(borcherds_samples));
                     }});
    tasks.push_back({"skew", [&ctx, skew_samples, weight_cutoff, seed, box]() {
                         Sampler s(seed + 1);
                         for (long i = 0; i < skew_samples; ++i) {
                             FockVector a =
                                 s.state(ctx, s.charge_in_box(ctx, box, 2 * weight_cutoff),
                                         weight_cutoff);
                             FockVector b =
                                 s.state(ctx, s.charge_in_box(ctx, box, 2 * weight_cutoff),
                                         weight_cutoff);
                             long n = s.pick(-3, 3);
                             if (!skew_symmetry_check(ctx, a, b, n))
                                 return make_check("skew-symmetry", false,
                                                   print_fock(ctx, a) + " ; " +
                                                       print_fock(ctx, b) + " @ " +
                                                       std::to_string(n));
                         }
                         return make_check("skew-symmetry", true,
                                           "samples=" + std::to_string(skew_samples));
                     }});
    tasks.push_back({"deriv", [&ctx, misc_samples, weight_cutoff, seed, box]() {
                         Sampler s(seed + 2);
                         for (long i = 0; i < misc_samples; ++i) {
                             FockVector a =
                                 s.state(ctx, s.charge_in_box(ctx, box, 2 * weight_cutoff),
                                         weight_cutoff);
                             FockVector b =
                                 s.state(ctx, s.charge_in_box(ctx, box, 2 * weight_cutoff),
                                         weight_cutoff);
                             long n = s.pick(-3, 3);
                             FockVector lhs =
                                 state_mode(ctx, virasoro_mode(ctx, -1, a), n, b);
                             FockVector rhs = scaled(state_mode(ctx, a, n - 1, b), -n);
                             if (!(lhs == rhs))
                                 return make_check("translation-derivative", false,
                                                   print_fock(ctx, a) + " @ " +
                                                       std::to_string(n));
                         }
                         return make_check("translation-derivative", true,
                                           "samples=" + std::to_string(misc_samples));
                     }});
    tasks.push_back({"conserv", [&ctx, misc_samples, weight_cutoff, seed, box]() {
                         Sampler s(seed + 3);
                         for (long i = 0; i < misc_samples; ++i) {
                             IVec ga = s.charge_in_box(ctx, box, 2 * weight_cutoff);
                             IVec gb = s.charge_in_box(ctx, box, 2 * weight_cutoff);
                             FockVector a = s.state(ctx, ga, weight_cutoff);
                             FockVector b = s.state(ctx, gb, weight_cutoff);
                             long n = s.pick(-3, 3);
                             FockVector r = state_mode(ctx, a, n, b);
                             if (r.empty()) continue;
                             Rational expect = weight(ctx, a) + weight(ctx, b) - n - 1;
                             if (weight(ctx, r) != expect)
                                 return make_check("weight-charge-conservation", false,
                                                   "weight drift");
                             Charge cc = charge_of(r);
                             for (long t = 0; t < ctx.lat.rank; ++t)
                                 if (cc.coords[t] != Rational(ga[t]) + Rational(gb[t]))
                                     return make_check("weight-charge-conservation", false,
                                                       "charge drift");
                         }
                         return make_check("weight-charge-conservation", true,
                                           "samples=" + std::to_string(misc_samples));
                     }});
    tasks.push_back({"virasoro", [&ctx, seed]() {
                         // [L(m),L(n)] = (m-n)L(m+n) + delta (m^3-m)/12 c, c = rank
                         Sampler s(seed + 4);
                         for (long m = -2; m <= 2; ++m)
                             for (long n = -2; n <= 2; ++n) {
                                 FockVector v = s.state(ctx, IVec(ctx.lat.rank, 0), 3);
                                 FockVector lhs = diff(
                                     virasoro_mode(ctx, m, virasoro_mode(ctx, n, v)),
                                     virasoro_mode(ctx, n, virasoro_mode(ctx, m, v)));
                                 FockVector rhs =
                                     scaled(virasoro_mode(ctx, m + n, v), m - n);
                                 if (m + n == 0)
                                     add_scaled(rhs, v,
                                                rat((m * m * m - m) * ctx.lat.rank, 12));
                                 if (!(lhs == rhs))
                                     return make_check("virasoro-bracket", false,
                                                       "(" + std::to_string(m) + "," +
                                                           std::to_string(n) + ")");
                             }
                         return make_check("virasoro-bracket", true, "grid=[-2,2]^2");
                     }});
    tasks.push_back({"heis-comm", [&ctx, seed]() {
                         // [h(-m), (e^g)_k] = (h|g) (e^g)_{k-m}
                         Sampler s(seed + 5);
                         for (long i = 0; i < 24; ++i) {
                             IVec gamma = s.charge_in_box(ctx, 1, 4);
                             QVec g(gamma.begin(), gamma.end());
                             QVec h(ctx.lat.rank, 0);
                             h[s.pick(0, ctx.lat.rank - 1)] = 1;
                             long m = s.pick(1, 3), k = s.pick(-2, 2);
                             FockVector b = s.state(ctx, s.charge_in_box(ctx, 1, 4), 3);
                             FockVector lhs = diff(
                                 heisenberg_act(ctx, h, -m, exp_mode(ctx, g, k, b)),
                                 exp_mode(ctx, g, k, heisenberg_act(ctx, h, -m, b)));
                             FockVector rhs =
                                 scaled(exp_mode(ctx, g, k - m, b), ctx.lat.pairing(h, g));
                             if (!(lhs == rhs))
                                 return make_check("heisenberg-commutator", false,
                                                   print_fock(ctx, b));
                         }
                         return make_check("heisenberg-commutator", true, "samples=24");
                     }});
    return run_tasks(std::move(tasks), jobs);
}

CheckList suite_modules(const std::vector<Rational>& beta_pairings, long conservation_samples,
                        unsigned long seed) {
    CheckList out;
    for (const auto& q : beta_pairings) {
        for (auto eps : {PModuleSpec::Eps::Zero, PModuleSpec::Eps::HalfAlpha}) {
            PModuleSpec spec{eps, q, 0};
            std::string tag = (eps == PModuleSpec::Eps::Zero ? "eps0" : "epsHalf");
            tag += "-q=" + to_string(q);
            out.push_back(make_check("bottom-action-" + tag, bottom_action_check(spec)));
            out.push_back(make_check("module-relations-" + tag,
                                     ap_module_relation_check(bottom_matrices(spec))));
        }
    }
    {
        PModuleSpec spec{PModuleSpec::Eps::Zero, rat(1, 3), 0};
        out.push_back(
            make_check("spanning-whole-sector-3-levels", spanning_check(spec, 3) == Ternary::True));
    }
    {
        PModuleSpec spec{PModuleSpec::Eps::HalfAlpha, rat(1, 3), 0};
        out.push_back(make_check("spanning-half-sector-2-levels",
                                 spanning_check(spec, 2) == Ternary::True));
    }
    {
        // lm0(a_n w) = wt(a) + lm0(w) - n - 1 and the charge shift
        PModuleSpec spec{PModuleSpec::Eps::HalfAlpha, rat(1, 3), rat(2)};
        Context ctx = spec.context();
        Sampler s(seed);
        bool ok = true;
        std::string witness;
        long done = 0;
        while (done < conservation_samples) {
            IVec ga{s.pick(-1, 1), s.pick(0, 1)};
            FockVector a = s.state(ctx, ga, 2);
            Rational bottom = ctx.lambda_norm() / 2 + rat(1, 4);
            auto basis = module_level_basis(spec, ctx, bottom + s.pick(0, 2));
            if (basis.empty()) continue;
            FockVector w = fock_term(basis[s.pick(0, (long)basis.size() - 1)]);
            long n = s.pick(-3, 3);
            FockVector r = p_module_mode(spec, ctx, a, n, w);
            ++done;
            if (r.empty()) continue;
            Rational expect = weight(ctx, a) + weight(ctx, w) - n - 1;
            if (weight(ctx, r) != expect) {
                ok = false;
                witness = print_fock(ctx, a) + " @ " + std::to_string(n);
            }
            Charge rc = charge_of(r);
            Charge wc = charge_of(w);
            for (long i = 0; i < 2; ++i)
                if (rc.coords[i] != wc.coords[i] + ga[i]) {
                    ok = false;
                    witness = "charge drift";
                }
        }
        out.push_back(make_check("module-weight-conservation", ok, witness));
    }
    {
        // module Jacobi identity on sampled triples
        PModuleSpec spec{PModuleSpec::Eps::HalfAlpha, rat(1, 3), 0};
        Context ctx = spec.context();
        Sampler s(seed + 7);
        bool ok = true;
        std::string witness;
        for (long i = 0; i < 20 && ok; ++i) {
            IVec ga{s.pick(-1, 1), 0};
            IVec gb{s.pick(-1, 1), 0};
            FockVector a = s.state(ctx, ga, 2), b = s.state(ctx, gb, 2);
            Rational bottom = ctx.lambda_norm() / 2 + rat(1, 4);
            auto basis = module_level_basis(spec, ctx, bottom + s.pick(0, 1));
            FockVector w = fock_term(basis[s.pick(0, (long)basis.size() - 1)]);
            long m = s.pick(-2, 2), n = s.pick(-2, 2), k = s.pick(-2, 2);
            // component Jacobi identity with w in the module
            FockVector lhs, rhs;
            auto opts = spec.mode_options();
            auto ab_max = max_nonzero_mode(ctx, a, b);
            if (ab_max)
                for (long j = 0; j <= *ab_max - n; ++j) {
                    Rational bc = binomial(m, j);
                    if (bc == 0) continue;
                    FockVector inner = state_mode(ctx, a, n + j, b);
                    if (inner.empty()) continue;
                    add_scaled(lhs, p_module_mode(spec, ctx, inner, m + k - j, w), bc);
                }
            long jmax = 12;
            for (long j = 0; j <= jmax; ++j) {
                Rational bc = binomial(n, j);
                if (bc == 0) continue;
                Rational sgn = (j % 2 == 0) ? 1 : -1;
                add_scaled(rhs,
                           p_module_mode(spec, ctx, a, m + n - j,
                                         p_module_mode(spec, ctx, b, k + j, w)),
                           sgn * bc);
                Rational sgn2 = (n % 2 == 0) ? 1 : -1;
                add_scaled(rhs,
                           p_module_mode(spec, ctx, b, n + k - j,
                                         p_module_mode(spec, ctx, a, m + j, w)),
                           -sgn * sgn2 * bc);
            }
            if (!(diff(lhs, rhs).empty())) {
                ok = false;
                witness = print_fock(ctx, a) + " ; " + print_fock(ctx, b) + " @ (" +
                          std::to_string(m) + "," + std::to_string(n) + "," +
                          std::to_string(k) + ")";
            }
        }
        out.push_back(make_check("module-jacobi-sampled", ok, witness));
    }
    {
        PModuleSpec spec{PModuleSpec::Eps::HalfAlpha, rat(1, 3), 0};
        Context ctx = spec.context();
        FockTerm ep;
        ep.charge = Charge(QVec{rat(1, 2), 0}, true);
        out.push_back(make_check(
            "note-half-sector-bottom", lm0(ctx, ep) == ctx.lambda_norm() / 2 + rat(1, 4),
            "computed bottom weight of the half-shifted module is (lambda|lambda)/2 + 1/4"));
        auto mats = bottom_matrices(spec);
        out.push_back(make_check(
            "note-half-sector-raising", mats[Gen::XA] == QMat{{0, 1}, {0, 0}},
            "computed action: the raising sector generator maps e^- to e^+ and kills e^+"));
    }
    return out;
}

CheckList suite_azalg(long assoc_triples, long iso_samples, unsigned long seed) {
    CheckList out;
    {
        Sampler s(seed);
        bool ok = true;
        std::string witness;
        auto random_ap = [&]() {
            NormalFormElement u = nf_zero(AlgTag::AP);
            long terms = s.pick(1, 3);
            for (long t = 0; t < terms; ++t) {
                NormalFormElement cur = nf_one(AlgTag::AP);
                long len = s.pick(1, 4);
                for (long i = 0; i < len; ++i) cur = mul_gen(cur, six_gens()[s.pick(0, 5)]);
                nf_add(u, cur, s.coeff());
            }
            return u;
        };
        for (long i = 0; i < assoc_triples && ok; ++i) {
            NormalFormElement a = random_ap(), b = random_ap(), c = random_ap();
            if (!(mul(mul(a, b), c) == mul(a, mul(b, c)))) {
                ok = false;
                witness = print_nf(a) + " ; " + print_nf(b) + " ; " + print_nf(c);
            }
        }
        out.push_back(make_check("associativity", ok, witness));
    }
    {
        // the six ideal words, squared pairwise
        std::vector<std::vector<Gen>> jwords = {
            {Gen::XB},           {Gen::XB, Gen::X},  {Gen::XB, Gen::X, Gen::X},
            {Gen::XAB},          {Gen::XAB, Gen::X}, {Gen::XAB, Gen::X, Gen::X}};
        auto eval = [](const std::vector<Gen>& w) {
            NormalFormElement u = nf_one(AlgTag::AP);
            for (Gen g : w) u = mul_gen(u, g);
            return u;
        };
        bool ok = true;
        long pairs = 0;
        for (const auto& w1 : jwords)
            for (const auto& w2 : jwords) {
                ++pairs;
                if (!mul(eval(w1), eval(w2)).is_zero()) ok = false;
            }
        out.push_back(make_check("ideal-squared-zero", ok, "pairs=" + std::to_string(pairs)));
        bool two_sided = true;
        for (Gen g : six_gens())
            for (const auto& w : jwords) {
                auto [a1, j1] = ap_decompose(mul(nf_gen(AlgTag::AP, g), eval(w)));
                auto [a2, j2] = ap_decompose(mul(eval(w), nf_gen(AlgTag::AP, g)));
                if (!a1.is_zero() || !a2.is_zero()) two_sided = false;
            }
        out.push_back(make_check("ideal-two-sided", two_sided));
    }
    {
        // Leibniz on the 25 base-ring pairs
        std::vector<NormalFormElement> base = {
            nf_one(AlgTag::AP), nf_gen(AlgTag::AP, Gen::X),
            mul(nf_gen(AlgTag::AP, Gen::X), nf_gen(AlgTag::AP, Gen::X)),
            nf_gen(AlgTag::AP, Gen::XA), nf_gen(AlgTag::AP, Gen::XNA)};
        bool ok = true;
        for (const auto& a : base)
            for (const auto& b : base) {
                NormalFormElement lhs = delta(mul(a, b));
                NormalFormElement rhs = mul(delta(a), b);
                nf_add(rhs, mul(a, delta(b)));
                if (!(lhs == rhs)) ok = false;
            }
        out.push_back(make_check("delta-leibniz", ok, "pairs=25"));
    }
    out.push_back(make_check("skew-polynomial-isomorphism", iso_check(iso_samples, seed + 1),
                             "samples=" + std::to_string(iso_samples)));
    {
        bool ok = true;
        for (const auto& rel : ap_derived_relations())
            if (!eval_relation(rel).is_zero()) ok = false;
        out.push_back(make_check("derived-relations", ok));
    }
    {
        NormalFormElement x = nf_gen(AlgTag::VA1, Gen::X);
        bool ok = mul(mul(x, x), x) == x;
        NormalFormElement xp = nf_gen(AlgTag::AP, Gen::X);
        ok = ok && mul(mul(xp, xp), xp) == xp;
        NormalFormElement y2 = nf_gen(AlgTag::VB, Gen::Y, 2);
        ok = ok && mul(y2, y2).is_zero();
        out.push_back(make_check("power-relations", ok));
    }
    return out;
}

CheckList suite_bilform(long invariance_samples, unsigned long seed) {
    CheckList out;
    struct Setup {
        std::string name;
        Context ctx;
        std::vector<IVec> charges;
    };
    std::vector<Setup> setups;
    setups.push_back({"rank1", Context::rank_one(1), {{1}, {2}, {3}}});
    setups.push_back({"a2", Context::a2(), {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2}}});
    for (auto& su : setups) {
        FormContext fc;
        bool calibrated = true;
        try {
            fc = calibrate_base_pairings(su.ctx, su.charges);
        } catch (const Error&) {
            calibrated = false;
        }
        out.push_back(make_check("calibration-" + su.name, calibrated));
        if (!calibrated) continue;
        Sampler s(seed);
        bool ok = true;
        std::string witness;
        for (long i = 0; i < invariance_samples && ok; ++i) {
            IVec ga = s.charge_in_box(su.ctx, 1, 4);
            IVec gb = s.charge_in_box(su.ctx, 1, 4);
            IVec gc = s.charge_in_box(su.ctx, 1, 4);
            FockVector a = s.state(su.ctx, ga, 3);
            FockVector b = s.state(su.ctx, gb, 3);
            FockVector c = s.state(su.ctx, gc, 3);
            long n = s.pick(-3, 3);
            if (!invariance_check(su.ctx, fc, a, b, c, n)) {
                ok = false;
                witness = print_fock(su.ctx, a) + " ; " + print_fock(su.ctx, b) + " ; " +
                          print_fock(su.ctx, c) + " @ " + std::to_string(n);
            }
        }
        out.push_back(make_check("invariance-" + su.name, ok, witness));
        // symmetry + graded orthogonality on samples
        Sampler s2(seed + 1);
        bool sym = true, graded = true, charge0 = true;
        for (long i = 0; i < 50; ++i) {
            FockVector u = s2.state(su.ctx, s2.charge_in_box(su.ctx, 1, 4), 3);
            FockVector v = s2.state(su.ctx, s2.charge_in_box(su.ctx, 1, 4), 3);
            if (form(su.ctx, fc, u, v) != form(su.ctx, fc, v, u)) sym = false;
            if (!u.empty() && !v.empty()) {
                Charge cu = charge_of(u), cv = charge_of(v);
                bool cancel = true;
                for (long t = 0; t < su.ctx.lat.rank; ++t)
                    if (cu.coords[t] + cv.coords[t] != 0) cancel = false;
                if (!cancel && form(su.ctx, fc, u, v) != 0) charge0 = false;
                if (cancel && weight(su.ctx, u) != weight(su.ctx, v) &&
                    form(su.ctx, fc, u, v) != 0)
                    graded = false;
            }
        }
        out.push_back(make_check("symmetry-" + su.name, sym));
        out.push_back(make_check("charge-orthogonality-" + su.name, charge0));
        out.push_back(make_check("graded-orthogonality-" + su.name, graded));
    }
    return out;
}

CheckList suite_quasi_triangular(const Context& ctx, long weight_cutoff, long mode_cutoff) {
    CheckList out;
    std::vector<IVec> charges;
    for (const auto& g : short_vectors(ctx.lat, 2 * weight_cutoff + 2))
        if (!std::all_of(g.begin(), g.end(), [](long x) { return x == 0; })) charges.push_back(g);
    FormContext fc = calibrate_base_pairings(ctx, charges);
    auto append = [&](const std::string& prefix, const QtReport& rep) {
        for (const auto& c : rep.checks)
            out.push_back(make_check(prefix + ":" + c.name, c.pass, c.witness));
    };
    if (ctx.lat.rank == 1) {
        append("split-by-charge-sign",
               quasi_triangular_check(ctx, fc, decomposition_last_coord_sign(0), weight_cutoff,
                                      mode_cutoff));
    } else {
        append("split-fine",
               quasi_triangular_check(ctx, fc, decomposition_a2_fine(), weight_cutoff,
                                      mode_cutoff));
        append("split-by-second-coord",
               quasi_triangular_check(ctx, fc, decomposition_last_coord_sign(1), weight_cutoff,
                                      mode_cutoff));
        // plus/h of the coordinate split together cover exactly the
        // parabolic submonoid
        SubMonoid p = SubMonoid::split({{1, 0}}, {{0, 1}});
        auto spec = decomposition_last_coord_sign(1);
        bool ok = true;
        for (const auto& g : short_vectors(ctx.lat, 2 * weight_cutoff + 4)) {
            bool in_p = submonoid_contains(ctx.lat, p, g) == Ternary::True;
            bool in_plus_h = spec.part(g) >= 0;
            if (in_p != in_plus_h) ok = false;
        }
        out.push_back(make_check("parabolic-equals-plus-h", ok));
    }
    return out;
}

CheckList suite_strong_generation() {
    CheckList out;
    for (long N : {1L, 2L}) {
        Context ctx = Context::rank_one(N);
        std::vector<FockVector> gens = {heisenberg_state(ctx, 0), exponential(ctx, {rat(1)})};
        SubMonoid b = SubMonoid::split({}, {{1}});
        Ternary t = strong_generation_check(ctx, gens, b, 3);
        out.push_back(
            make_check("strong-generation-vb-N" + std::to_string(N) + "-cutoff3",
                       t == Ternary::True, t == Ternary::Undecided ? "undecided" : ""));
    }
    {
        Context ctx = Context::a2();
        std::vector<FockVector> gens = {
            exponential(ctx, {rat(1), rat(0)}),  exponential(ctx, {rat(-1), rat(0)}),
            exponential(ctx, {rat(0), rat(1)}),  exponential(ctx, {rat(1), rat(1)}),
            heisenberg_state(ctx, 0),            heisenberg_state(ctx, 1)};
        SubMonoid p = SubMonoid::split({{1, 0}}, {{0, 1}});
        Ternary t = strong_generation_check(ctx, gens, p, 2);
        out.push_back(make_check("strong-generation-vp-cutoff2", t == Ternary::True,
                                 t == Ternary::Undecided ? "undecided" : ""));
    }
    {
        // empty generator set cannot span the weight-one piece
        Context ctx = Context::rank_one(1);
        SubMonoid b = SubMonoid::split({}, {{1}});
        Ternary t = strong_generation_check(ctx, {}, b, 1);
        out.push_back(make_check("strong-generation-empty-fails", t == Ternary::False));
    }
    {
        // the character oracle: graded dimensions of the free sector count
        // colored partitions
        Context ctx = Context::a2();
        SubMonoid zero = SubMonoid::split({}, {});
        bool ok = true;
        for (long n = 0; n <= 6; ++n)
            if (graded_dim(ctx, zero, n) != colored_partitions(n, 2)) ok = false;
        Context c1 = Context::rank_one(2);
        SubMonoid zero1 = SubMonoid::split({}, {});
        for (long n = 0; n <= 8; ++n)
            if (graded_dim(c1, zero1, n) != colored_partitions(n, 1)) ok = false;
        out.push_back(make_check("graded-dim-partition-oracle", ok));
    }
    return out;
}

CheckList suite_normalizer(long positive_samples, unsigned long seed) {
    CheckList out;
    Context ctx = Context::a2();
    SubMonoid p = SubMonoid::split({{1, 0}}, {{0, 1}});
    Sampler s(seed);
    bool ok = true;
    std::string witness;
    for (long i = 0; i < positive_samples; ++i) {
        IVec g{s.pick(-1, 1), s.pick(0, 1)};
        FockVector a = s.state(ctx, g, 2);
        if (normalizer_check(ctx, p, a, 4, 3) != Ternary::True) {
            ok = false;
            witness = print_fock(ctx, a);
        }
    }
    out.push_back(make_check("normalizer-inside", ok, witness));
    struct Neg {
        const char* name;
        IVec g;
    };
    for (const Neg& neg : {Neg{"e(-b)", {0, -1}}, Neg{"e(-a-b)", {-1, -1}}, Neg{"e(a-b)", {1, -1}}}) {
        QVec gq(neg.g.begin(), neg.g.end());
        FockVector a = exponential(ctx, gq);
        Ternary t = normalizer_check(ctx, p, a, 4, 3);
        out.push_back(make_check(std::string("normalizer-outside-") + neg.name,
                                 t == Ternary::False));
    }
    return out;
}

}  // namespace voa
