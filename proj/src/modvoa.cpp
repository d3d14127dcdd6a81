#include "voa/modvoa.hpp"

#include <cmath>
#include <deque>

#include "voa/linalg.hpp"

namespace voa {

QMat mat_zero(long n) { return QMat(n, QVec(n, 0)); }

QMat mat_identity(long n) {
    QMat m = mat_zero(n);
    for (long i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat mat_mul(const QMat& a, const QMat& b) {
    long n = (long)a.size();
    if ((long)b.size() != n) throw Error(Errc::DimensionMismatch, "matrix sizes differ");
    QMat out = mat_zero(n);
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (long j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

void mat_add(QMat& a, const QMat& b, const Rational& c) {
    long n = (long)a.size();
    if ((long)b.size() != n) throw Error(Errc::DimensionMismatch, "matrix sizes differ");
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) a[i][j] += c * b[i][j];
}

bool mat_is_zero(const QMat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

Context VBModuleSpec::context(long N) const {
    Lattice lat(IMat{{2 * N}}, {"a"});
    return Context(std::move(lat), trivial_cocycle(1),
                   Lambda{{pairing_alpha_lambda}, lambda_norm});
}

FockVector vb_module_mode(const Context& ctx, const FockVector& a, long n,
                          const FockVector& w) {
    if (a.empty() || w.empty()) return fock_zero();
    Charge ca = charge_of(a);
    if (ca.has_lambda || !is_integer(ca.coords[0]) || ca.coords[0] < 0)
        throw Error(Errc::BadCharge, "operator must lie in the Borel subalgebra");
    if (ca.coords[0] >= 1) return fock_zero();
    return state_mode(ctx, a, n, w);
}

Context PModuleSpec::context() const {
    Lattice lat(IMat{{2, -1}, {-1, 2}}, {"a", "b"});
    return Context(std::move(lat), a2_cocycle(), Lambda{{0, pairing_beta_lambda}, lambda_norm});
}

QVec PModuleSpec::eps_vector() const {
    return epsilon == Eps::HalfAlpha ? QVec{rat(1, 2), 0} : QVec{0, 0};
}

ModeOptions PModuleSpec::mode_options() const {
    ModeOptions opts;
    if (epsilon == Eps::HalfAlpha) opts.cocycle_offset = eps_vector();
    return opts;
}

FockVector p_module_mode(const PModuleSpec& spec, const Context& ctx, const FockVector& a,
                         long n, const FockVector& w) {
    if (a.empty() || w.empty()) return fock_zero();
    Charge ca = charge_of(a);
    if (ca.has_lambda || !is_integer_vec(ca.coords) || ca.coords[1] < 0)
        throw Error(Errc::BadCharge, "operator must lie in the parabolic subalgebra");
    QVec eps = spec.eps_vector();
    for (const auto& [t, c] : w)
        if (!t.charge.has_lambda || t.charge.coords[1] != 0 ||
            !is_integer(t.charge.coords[0] - eps[0]))
            throw Error(Errc::BadCharge, "target is not in this module's sector family");
    if (ca.coords[1] >= 1) return fock_zero();  // ideal sectors act as zero
    return state_mode(ctx, a, n, w, spec.mode_options());
}

Rational lm0(const Context& ctx, const FockTerm& w) { return term_weight(ctx, w); }

std::vector<FockTerm> module_level_basis(const PModuleSpec& spec, const Context& ctx,
                                         const Rational& level) {
    std::vector<FockTerm> out;
    QVec eps = spec.eps_vector();
    Rational budget = level - ctx.lambda_norm() / 2;
    if (budget < 0) return out;
    double lim = std::sqrt(budget.get_d()) + 2.0;
    for (long n = -(long)lim - 1; n <= (long)lim + 1; ++n) {
        Charge c(QVec{eps[0] + n, eps[1]}, true);
        for (auto& t : sector_basis(ctx, c, level)) out.push_back(t);
    }
    return out;
}

QMat zero_mode_matrix(const PModuleSpec& spec, const Context& ctx, const FockVector& a,
                      const Rational& weight_level) {
    Rational wa = weight(ctx, a);
    if (!is_integer(wa)) throw Error(Errc::BadCharge, "zero mode needs integer weight");
    auto basis = module_level_basis(spec, ctx, weight_level);
    std::map<FockTerm, long> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = (long)i;
    long dim = (long)basis.size();
    QMat m = mat_zero(dim);
    for (long j = 0; j < dim; ++j) {
        FockVector img = p_module_mode(spec, ctx, a, to_long(wa) - 1, fock_term(basis[j]));
        for (const auto& [t, c] : img) {
            auto it = index.find(t);
            if (it == index.end())
                throw Error(Errc::BadCharge, "zero mode left the graded piece");
            m[it->second][j] += c;
        }
    }
    return m;
}

namespace {

FockVector gen_state(const Context& ctx, Gen g) {
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

const std::vector<Gen>& all_gens() {
    static const std::vector<Gen> g = {Gen::X, Gen::Y, Gen::XA, Gen::XNA, Gen::XB, Gen::XAB};
    return g;
}

}  // namespace

std::map<Gen, QMat> bottom_matrices(const PModuleSpec& spec) {
    Context ctx = spec.context();
    Rational bottom = ctx.lambda_norm() / 2;
    std::vector<FockTerm> basis;
    if (spec.epsilon == PModuleSpec::Eps::HalfAlpha) {
        bottom += rat(1, 4);
        FockTerm ep, em;
        ep.charge = Charge(QVec{rat(1, 2), 0}, true);
        em.charge = Charge(QVec{rat(-1, 2), 0}, true);
        basis = {ep, em};  // (e^+, e^-)
    } else {
        FockTerm e;
        e.charge = Charge(QVec{0, 0}, true);
        basis = {e};
    }
    std::map<Gen, QMat> out;
    for (Gen g : all_gens()) {
        FockVector a = gen_state(ctx, g);
        Rational wa = weight(ctx, a);
        long dim = (long)basis.size();
        QMat m = mat_zero(dim);
        std::map<FockTerm, long> index;
        for (long i = 0; i < dim; ++i) index[basis[i]] = i;
        for (long j = 0; j < dim; ++j) {
            FockVector img =
                p_module_mode(spec, ctx, a, to_long(wa) - 1, fock_term(basis[j]));
            for (const auto& [t, c] : img) m[index.at(t)][j] += c;
        }
        out[g] = std::move(m);
    }
    return out;
}

bool bottom_action_check(const PModuleSpec& spec) {
    auto mats = bottom_matrices(spec);
    Rational q = spec.pairing_beta_lambda;
    if (spec.epsilon == PModuleSpec::Eps::Zero) {
        // x, x_a, x_na act as 0; y as (lambda|beta); the ideal generators as 0
        if (!mat_is_zero(mats[Gen::X])) return false;
        if (!mat_is_zero(mats[Gen::XA])) return false;
        if (!mat_is_zero(mats[Gen::XNA])) return false;
        if (!mat_is_zero(mats[Gen::XB]) || !mat_is_zero(mats[Gen::XAB])) return false;
        return mats[Gen::Y] == QMat{{q}};
    }
    // basis (e^+, e^-)
    QMat x = {{1, 0}, {0, -1}};
    QMat y = {{q - rat(1, 2), 0}, {0, q + rat(1, 2)}};
    QMat xa = {{0, 1}, {0, 0}};   // x_a e^- = e^+
    QMat xna = {{0, 0}, {1, 0}};  // x_na e^+ = e^-
    return mats[Gen::X] == x && mats[Gen::Y] == y && mats[Gen::XA] == xa &&
           mats[Gen::XNA] == xna && mat_is_zero(mats[Gen::XB]) &&
           mat_is_zero(mats[Gen::XAB]);
}

Ternary spanning_check(const PModuleSpec& spec, long levels,
                       const std::vector<FockVector>* generators) {
    if (levels <= 0) return Ternary::True;
    Context ctx = spec.context();
    Rational bottom = ctx.lambda_norm() / 2;
    if (spec.epsilon == PModuleSpec::Eps::HalfAlpha) bottom += rat(1, 4);

    std::vector<long> target(levels);
    for (long l = 0; l < levels; ++l)
        target[l] = (long)module_level_basis(spec, ctx, bottom + l).size();

    std::vector<FockVector> gens;
    if (generators) {
        gens = *generators;
    } else {
        for (Gen g : all_gens()) gens.push_back(gen_state(ctx, g));
    }

    std::map<long, RowSpace<FockTerm>> spaces;
    std::deque<FockVector> work;
    auto level_of = [&](const FockVector& v) -> std::optional<long> {
        Rational w = weight(ctx, v) - bottom;
        if (!is_integer(w) || w < 0 || w >= levels) return std::nullopt;
        return to_long(w);
    };
    auto offer = [&](const FockVector& v) {
        if (v.empty()) return;
        auto l = level_of(v);
        if (!l) return;
        if (spaces[*l].insert(v)) work.push_back(v);
    };
    for (auto& t : module_level_basis(spec, ctx, bottom)) offer(fock_term(t));

    long iterations = 0;
    const long iteration_cap = 200000;
    while (!work.empty()) {
        FockVector v = work.front();
        work.pop_front();
        auto lv = level_of(v);
        if (!lv) continue;
        for (const auto& u : gens) {
            Rational wu = weight(ctx, u);
            // a_n shifts the level by wt(a) - n - 1; keep every landing level
            for (long shift = -*lv; shift < levels - *lv; ++shift) {
                long n = to_long(wu) - 1 - shift;
                if (++iterations > iteration_cap) return Ternary::Undecided;
                offer(p_module_mode(spec, ctx, u, n, v));
            }
        }
    }
    for (long l = 0; l < levels; ++l)
        if ((long)spaces[l].rank() != target[l]) return Ternary::False;
    return Ternary::True;
}

bool ap_module_relation_check(const std::map<Gen, QMat>& mats) {
    if (mats.size() != 6) throw Error(Errc::DimensionMismatch, "need all six generators");
    long dim = (long)mats.begin()->second.size();
    for (const auto& [g, m] : mats) {
        if ((long)m.size() != dim) throw Error(Errc::DimensionMismatch, "matrix sizes differ");
        for (const auto& row : m)
            if ((long)row.size() != dim)
                throw Error(Errc::DimensionMismatch, "matrix is not square");
    }
    for (const auto& rel : ap_relations()) {
        QMat acc = mat_zero(dim);
        for (const auto& [coeff, word] : rel.terms) {
            QMat cur = mat_identity(dim);
            for (Gen g : word) cur = mat_mul(cur, mats.at(g));
            mat_add(acc, cur, coeff);
        }
        if (!mat_is_zero(acc)) return false;
    }
    return true;
}

}  // namespace voa
