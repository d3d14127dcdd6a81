#include "voa/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>

#include "voa/expr.hpp"
#include "voa/suites.hpp"

namespace voa {

namespace {

using njson = nlohmann::ordered_json;

njson checks_json(const CheckList& checks) {
    njson arr = njson::array();
    for (const auto& c : checks)
        arr.push_back(njson{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return arr;
}

njson matrix_json(const QMat& m) {
    njson rows = njson::array();
    for (const auto& row : m) {
        njson r = njson::array();
        for (const auto& x : row) r.push_back(to_string(x));
        rows.push_back(r);
    }
    return rows;
}

long require_integer_arg(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(Errc::ParseError, std::string("expected an integer for ") + what);
    }
}

struct Invocation {
    std::string config_path;
    long cutoff = -1;   // -1 = suite default
    unsigned long seed = 12345;
    long jobs = 1;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
    auto started = std::chrono::steady_clock::now();
    njson report;
    int exit_code = 0;

    CLI::App app{"exact-arithmetic kernel for lattice vertex operator algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Invocation inv;
    app.add_option("--config", inv.config_path, "configuration JSON")->required();
    app.add_option("--cutoff", inv.cutoff, "weight cutoff override");
    app.add_option("--seed", inv.seed, "PRNG seed for sampled suites");
    app.add_option("--jobs", inv.jobs, "worker threads for verification suites");

    std::vector<std::string> pos;
    std::string reduce_target, monoid_name, suite_name, epsilon = "0";
    long upto = 2;

    auto* cmd_mode = app.add_subcommand("mode", "compute a_n b");
    cmd_mode->add_option("expr", pos)->expected(3);
    auto* cmd_residue = app.add_subcommand("residue", "Res_z Y(a,z) b (1+z)^p / z^q");
    cmd_residue->add_option("expr", pos)->expected(4);
    auto* cmd_circle = app.add_subcommand("circle", "Zhu circle product");
    cmd_circle->add_option("expr", pos)->expected(2);
    auto* cmd_star = app.add_subcommand("star", "Zhu star product");
    cmd_star->add_option("expr", pos)->expected(2);
    auto* cmd_reduce = app.add_subcommand("reduce", "normal form in the Zhu algebra");
    cmd_reduce->add_option("--target", reduce_target, "vb | va1 | vp")->required();
    cmd_reduce->add_option("expr", pos)->expected(1);
    auto* cmd_character = app.add_subcommand("character", "graded dimensions of a sector sum");
    cmd_character->add_option("--monoid", monoid_name)->required();
    cmd_character->add_option("--upto", upto)->required();
    auto* cmd_form = app.add_subcommand("form", "invariant bilinear form of two states");
    cmd_form->add_option("expr", pos)->expected(2);
    auto* cmd_module = app.add_subcommand("module-act", "module mode a_n w");
    cmd_module->add_option("--epsilon", epsilon, "0 | half");
    cmd_module->add_option("expr", pos)->expected(3);
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("suite", suite_name)->required();

    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        njson err{{"error", {{"kind", "usage"}, {"message", e.what()}}}};
        out << err.dump(2) << "\n";
        return 2;
    }

    try {
        Config cfg = load_config(inv.config_path);
        const Context& ctx = cfg.ctx;
        report["command"] = app.get_subcommands().front()->get_name();
        report["config_digest"] = cfg.digest;
        njson inputs = njson::object();
        inputs["args"] = pos;
        inputs["seed"] = inv.seed;
        if (inv.cutoff >= 0) inputs["cutoff"] = inv.cutoff;

        if (cmd_mode->parsed()) {
            FockVector a = parse_element(pos[0], ctx);
            long n = require_integer_arg(pos[1], "the mode index");
            FockVector b = parse_element(pos[2], ctx);
            report["inputs"] = inputs;
            report["result"] = print_fock(ctx, state_mode(ctx, a, n, b));
        } else if (cmd_residue->parsed()) {
            FockVector a = parse_element(pos[0], ctx);
            FockVector b = parse_element(pos[1], ctx);
            long p = require_integer_arg(pos[2], "the binomial power");
            long q = require_integer_arg(pos[3], "the pole order");
            report["inputs"] = inputs;
            report["result"] = print_fock(ctx, weighted_residue(ctx, a, b, p, q));
        } else if (cmd_circle->parsed() || cmd_star->parsed()) {
            FockVector a = parse_element(pos[0], ctx);
            FockVector b = parse_element(pos[1], ctx);
            report["inputs"] = inputs;
            report["result"] = print_fock(
                ctx, cmd_circle->parsed() ? circle(ctx, a, b) : star(ctx, a, b));
        } else if (cmd_reduce->parsed()) {
            FockVector a = parse_element(pos[0], ctx);
            inputs["target"] = reduce_target;
            report["inputs"] = inputs;
            NormalFormElement nf;
            if (reduce_target == "vb") {
                if (ctx.lat.rank != 1)
                    throw Error(Errc::ConfigError, "vb reduction needs a rank-one lattice");
                nf = reduce_B(ctx, a, ctx.lat.gram[0][0] / 2);
            } else if (reduce_target == "va1") {
                if (ctx.lat.rank != 1 || ctx.lat.gram[0][0] != 2)
                    throw Error(Errc::ConfigError, "va1 reduction needs the rank-one root lattice");
                nf = reduce_A1(ctx, a);
            } else if (reduce_target == "vp") {
                if (ctx.lat.rank != 2)
                    throw Error(Errc::ConfigError, "vp reduction needs the rank-two root lattice");
                nf = reduce_P(ctx, a);
            } else {
                throw Error(Errc::ParseError, "reduce target must be vb, va1 or vp");
            }
            report["result"] = print_nf(nf);
        } else if (cmd_character->parsed()) {
            auto it = cfg.submonoids.find(monoid_name);
            if (it == cfg.submonoids.end())
                throw Error(Errc::UnknownName, "no submonoid named " + monoid_name);
            inputs["monoid"] = monoid_name;
            inputs["upto"] = upto;
            report["inputs"] = inputs;
            njson dims = njson::array();
            for (long w = 0; w <= upto; ++w) dims.push_back(graded_dim(ctx, it->second, w));
            report["result"] = dims;
        } else if (cmd_form->parsed()) {
            FockVector u = parse_element(pos[0], ctx);
            FockVector v = parse_element(pos[1], ctx);
            report["inputs"] = inputs;
            std::vector<IVec> charges;
            for (const auto& vec : {u, v})
                for (const auto& [t, c] : vec) {
                    IVec g;
                    for (const auto& x : t.charge.coords) {
                        if (!is_integer(x))
                            throw Error(Errc::BadCharge, "form needs lattice charges");
                        g.push_back(to_long(x));
                    }
                    charges.push_back(g);
                }
            FormContext fc = calibrate_base_pairings(ctx, charges);
            report["result"] = to_string(form(ctx, fc, u, v));
        } else if (cmd_module->parsed()) {
            if (ctx.lat.rank != 2)
                throw Error(Errc::ConfigError, "module-act needs the rank-two root lattice");
            if (!ctx.lambda) throw Error(Errc::ConfigError, "module-act needs a lambda block");
            if (ctx.lambda->pairings[0] != 0)
                throw Error(Errc::ConfigError,
                            "module-act needs lambda orthogonal to the first basis vector");
            PModuleSpec spec;
            spec.epsilon = (epsilon == "half") ? PModuleSpec::Eps::HalfAlpha
                                               : PModuleSpec::Eps::Zero;
            spec.pairing_beta_lambda = ctx.lambda->pairings[1];
            spec.lambda_norm = ctx.lambda->norm;
            Context mctx = spec.context();
            FockVector a = parse_element(pos[0], mctx);
            long n = require_integer_arg(pos[1], "the mode index");
            FockVector w = parse_element(pos[2], mctx);
            inputs["epsilon"] = epsilon;
            report["inputs"] = inputs;
            FockVector r = p_module_mode(spec, mctx, a, n, w);
            report["result"] = print_fock(mctx, r);
            if (!a.empty() && is_weight_homogeneous(mctx, a) &&
                is_integer(weight(mctx, a))) {
                Rational wa = weight(mctx, a);
                Rational bottom = mctx.lambda_norm() / 2;
                if (spec.epsilon == PModuleSpec::Eps::HalfAlpha) bottom += rat(1, 4);
                report["zero_mode_matrix_bottom"] =
                    matrix_json(zero_mode_matrix(spec, mctx, a, bottom));
            }
        } else if (cmd_verify->parsed()) {
            inputs["suite"] = suite_name;
            report["inputs"] = inputs;
            CheckList checks;
            long cutoff = inv.cutoff;
            if (suite_name == "axioms") {
                checks = suite_axioms(ctx, 200, 100, 200, cutoff < 0 ? 3 : cutoff, inv.seed,
                                      inv.jobs);
            } else if (suite_name == "o-vanishing-vb") {
                checks = suite_vanishing_vb({1, 2}, cutoff < 0 ? 4 : cutoff, 2, inv.jobs);
            } else if (suite_name == "o-vanishing-vp") {
                checks = suite_vanishing_vp(cutoff < 0 ? 3 : cutoff, 2, inv.jobs);
            } else if (suite_name == "zhu-presentations") {
                CheckList head = suite_mode_table({1, 2, 3});
                CheckList mid = suite_circle_star({1, 2, 3});
                CheckList a1 = suite_a1_expansion();
                checks = suite_presentations(100, inv.seed, inv.jobs);
                checks.insert(checks.begin(), a1.begin(), a1.end());
                checks.insert(checks.begin(), mid.begin(), mid.end());
                checks.insert(checks.begin(), head.begin(), head.end());
            } else if (suite_name == "modules") {
                checks = suite_modules({0, rat(1, 3), rat(-2)}, 100, inv.seed);
            } else if (suite_name == "azalg") {
                checks = suite_azalg(500, 200, inv.seed);
            } else if (suite_name == "bilform") {
                checks = suite_bilform(200, inv.seed);
            } else if (suite_name == "quasi-triangular") {
                checks = suite_quasi_triangular(ctx, cutoff < 0 ? (ctx.lat.rank == 1 ? 3 : 2)
                                                                : cutoff,
                                                2);
            } else if (suite_name == "strong-generation") {
                checks = suite_strong_generation();
            } else if (suite_name == "normalizer") {
                checks = suite_normalizer(20, inv.seed);
            } else {
                throw Error(Errc::ParseError, "unknown suite " + suite_name);
            }
            report["checks"] = checks_json(checks);
            if (!all_pass(checks)) exit_code = 1;
        }
    } catch (const Error& e) {
        njson err{{"error",
                   {{"kind", errc_name(e.code())},
                    {"message", e.what()},
                    {"position", e.position()}}}};
        out << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        njson err{{"error", {{"kind", "internal"}, {"message", e.what()}}}};
        out << err.dump(2) << "\n";
        return 2;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    report["elapsed_ms"] = elapsed;
    out << report.dump(2) << "\n";
    return exit_code;
}

}  // namespace voa
