#include "voa/vertex.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "voa/linalg.hpp"

namespace voa {

namespace {

// z-power -> coefficient vector, finite support
using Series = std::map<long, FockVector>;

long max_factor_mode(const FockVector& v) {
    long m = 0;
    for (const auto& [t, c] : v)
        for (const auto& f : t.factors) m = std::max(m, f.mode);
    return m;
}

// One application of the annihilation exponent A(z) = sum_{n>0} -gamma(n)/n z^-n.
Series apply_annihilation_sum(const Context& ctx, const QVec& gamma, const Series& s) {
    Series out;
    for (const auto& [p, vec] : s) {
        long top = max_factor_mode(vec);
        for (long n = 1; n <= top; ++n) {
            FockVector hit = heisenberg_act(ctx, gamma, n, vec);
            if (hit.empty()) continue;
            FockVector& slot = out[p - n];
            add_scaled(slot, hit, rat(-1, n));
            if (slot.empty()) out.erase(p - n);
        }
    }
    return out;
}

// P_q applied to vec: sum over partitions mu of q of
// prod_m gamma(-m)^{k_m} / (k_m! m^{k_m}).
FockVector creation_cloud(const Context& ctx, const QVec& gamma, long q, const FockVector& vec) {
    if (q == 0) return vec;
    if (is_zero_vec(gamma)) return fock_zero();
    FockVector out;
    for (const auto& mu : partitions_of(q)) {
        Rational coeff = 1;
        long run = 1;
        for (size_t i = 0; i < mu.size(); ++i) {
            coeff *= rat(1, mu[i]);
            if (i > 0 && mu[i] == mu[i - 1])
                ++run;
            else
                run = 1;
            coeff *= rat(1, run);  // accumulates 1/k_m! across equal parts
        }
        for (const auto& [t, c] : vec) {
            RawTerm rt;
            rt.coeff = c * coeff;
            for (long part : mu) rt.factors.push_back({gamma, -part});
            for (const auto& f : t.factors) {
                QVec e(ctx.lat.rank, 0);
                e[f.basis_index] = 1;
                rt.factors.push_back({e, -f.mode});
            }
            rt.charge = t.charge;
            add_scaled(out, normalize(ctx, {rt}), 1);
        }
    }
    return out;
}

IVec to_ivec(const QVec& v, Errc errc, const char* what) {
    IVec out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!is_integer(x)) throw Error(errc, what);
        out.push_back(to_long(x));
    }
    return out;
}

int charge_shift_sign(const Context& ctx, const QVec& gamma, const Charge& theta,
                      const ModeOptions& opts) {
    if (is_zero_vec(gamma)) return 1;
    IVec g = to_ivec(gamma, Errc::CocycleUndefined, "cocycle needs an integral charge");
    QVec reduced = theta.coords;
    if (!opts.cocycle_offset.empty()) {
        if (opts.cocycle_offset.size() != reduced.size())
            throw Error(Errc::DimensionMismatch, "cocycle offset length != rank");
        for (size_t i = 0; i < reduced.size(); ++i) reduced[i] -= opts.cocycle_offset[i];
    }
    IVec t = to_ivec(reduced, Errc::CocycleUndefined,
                     "cocycle undefined on the target charge sector");
    return ctx.coc.eval(g, t);
}

}  // namespace

FockVector exp_mode(const Context& ctx, const QVec& gamma, long n, const FockVector& b,
                    const ModeOptions& opts) {
    if ((long)gamma.size() != ctx.lat.rank)
        throw Error(Errc::DimensionMismatch, "charge length != rank");
    FockVector out;
    for (const auto& [t, c] : b) {
        Rational shift_q = ctx.lat.pairing(gamma, t.charge.coords);
        if (t.charge.has_lambda) shift_q += ctx.lambda_pairing(gamma);
        if (!is_integer(shift_q))
            throw Error(Errc::NonintegralShift, "z-power shift (gamma|theta) is not an integer");
        long shift = to_long(shift_q);
        int sign = charge_shift_sign(ctx, gamma, t.charge, opts);

        // E^+ expansion of exp(A): finite since every application removes a factor.
        Series total;
        total[0] = fock_term(t, c);
        Series cur = total;
        Rational fact = 1;
        for (long k = 1; !cur.empty(); ++k) {
            cur = apply_annihilation_sum(ctx, gamma, cur);
            fact *= k;
            for (const auto& [p, vec] : cur) {
                FockVector& slot = total[p];
                add_scaled(slot, vec, 1 / fact);
                if (slot.empty()) total.erase(p);
            }
        }
        // charge shift + z^shift, then pick the E^- order the mode index needs
        for (const auto& [p, vec] : total) {
            long q = -n - 1 - p - shift;
            if (q < 0) continue;
            FockVector shifted;
            for (const auto& [tt, cc] : vec) {
                FockTerm t2 = tt;
                t2.charge = charge_add(t2.charge, gamma);
                add_term(shifted, t2, cc * sign);
            }
            add_scaled(out, creation_cloud(ctx, gamma, q, shifted), 1);
        }
    }
    return out;
}

namespace {

Rational max_term_weight(const Context& ctx, const FockVector& v) {
    Rational w = term_weight(ctx, v.begin()->first);
    for (const auto& [t, c] : v) w = std::max(w, term_weight(ctx, t));
    return w;
}

// Largest mode t with (term a)_t b possibly nonzero.
std::optional<long> term_max_mode(const Context& ctx, const FockTerm& ta, const FockVector& b) {
    if (b.empty()) return std::nullopt;
    Rational wa = term_weight(ctx, ta);
    std::optional<Rational> best;
    for (const auto& [tb, c] : b) {
        Charge sum = tb.charge;
        for (long i = 0; i < ctx.lat.rank; ++i) sum.coords[i] += ta.charge.coords[i];
        Rational bound = wa + term_weight(ctx, tb) - 1 - sector_min_weight(ctx, sum);
        if (!best || bound > *best) best = bound;
    }
    if (!best) return std::nullopt;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), best->get_num().get_mpz_t(), best->get_den().get_mpz_t());
    return fl.get_si();
}

// The factor-peeling recursion revisits the same (state, mode, target)
// triples massively on many-factor inputs; a per-invocation memo keeps the
// computation polynomial. Context and options are fixed for the cache's
// lifetime, so the key is just the triple.
using ModeCache = std::map<std::tuple<FockTerm, long, FockTerm>, FockVector>;

FockVector term_pair_mode(const Context& ctx, ModeCache& cache, const FockTerm& ta, long k,
                          const FockTerm& tb, const ModeOptions& opts) {
    if (ta.charge.has_lambda)
        throw Error(Errc::BadCharge, "operator state cannot carry lambda");
    {
        // weight bound: everything above it vanishes
        Charge sum = tb.charge;
        for (long i = 0; i < ctx.lat.rank; ++i) sum.coords[i] += ta.charge.coords[i];
        Rational bound =
            term_weight(ctx, ta) + term_weight(ctx, tb) - 1 - sector_min_weight(ctx, sum);
        if (Rational(k) > bound) return fock_zero();
    }
    auto key = std::make_tuple(ta, k, tb);
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    FockVector out;
    if (ta.factors.empty()) {
        out = exp_mode(ctx, ta.charge.coords, k, fock_term(tb), opts);
    } else {
        // peel h(-m-1) with the largest mode
        Factor f = ta.factors.front();
        long m = f.mode - 1;
        QVec h(ctx.lat.rank, 0);
        h[f.basis_index] = 1;
        FockTerm v = ta;
        v.factors.erase(v.factors.begin());

        // creation side: j <= -m-1, inner mode t = k-j-m-1 grows as j drops
        Charge sum = tb.charge;
        for (long i = 0; i < ctx.lat.rank; ++i) sum.coords[i] += v.charge.coords[i];
        Rational tmax_q =
            term_weight(ctx, v) + term_weight(ctx, tb) - 1 - sector_min_weight(ctx, sum);
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), tmax_q.get_num().get_mpz_t(), tmax_q.get_den().get_mpz_t());
        long tmax = fl.get_si();
        for (long j = -m - 1; k - j - m - 1 <= tmax; --j) {
            long t = k - j - m - 1;
            FockVector inner = term_pair_mode(ctx, cache, v, t, tb, opts);
            if (inner.empty()) continue;
            add_scaled(out, heisenberg_act(ctx, h, j, inner), binomial(-j - 1, m));
        }
        // annihilation side: j >= 0, h(j) tb nonzero only for finitely many j
        long top = 0;
        for (const auto& ff : tb.factors) top = std::max(top, ff.mode);
        for (long j = 0; j <= top; ++j) {
            FockVector hb = heisenberg_act(ctx, h, j, fock_term(tb));
            if (hb.empty()) continue;
            Rational bc = binomial(-j - 1, m);
            for (const auto& [tb2, c2] : hb) {
                FockVector inner = term_pair_mode(ctx, cache, v, k - j - m - 1, tb2, opts);
                add_scaled(out, inner, bc * c2);
            }
        }
    }
    cache.emplace(std::move(key), out);
    return out;
}

}  // namespace

FockVector state_mode(const Context& ctx, const FockVector& a, long n, const FockVector& b,
                      const ModeOptions& opts) {
    FockVector out;
    ModeCache cache;
    for (const auto& [ta, ca] : a)
        for (const auto& [tb, cb] : b)
            add_scaled(out, term_pair_mode(ctx, cache, ta, n, tb, opts), ca * cb);
    return out;
}

std::optional<long> max_nonzero_mode(const Context& ctx, const FockVector& a,
                                     const FockVector& b, const ModeOptions& opts) {
    (void)opts;
    if (a.empty() || b.empty()) return std::nullopt;
    std::optional<long> best;
    for (const auto& [ta, c] : a) {
        auto m = term_max_mode(ctx, ta, b);
        if (m && (!best || *m > *best)) best = m;
    }
    return best;
}

FockVector weighted_residue(const Context& ctx, const FockVector& a, const FockVector& b,
                            long p, long q) {
    FockVector out;
    if (p >= 0) {
        for (long j = 0; j <= p; ++j)
            add_scaled(out, state_mode(ctx, a, j - q, b), binomial(p, j));
        return out;
    }
    // negative powers expand into the full binomial series, truncated at the
    // mode where a_{j-q} b is forced to vanish
    auto top = max_nonzero_mode(ctx, a, b);
    if (!top) return out;
    for (long j = 0; j - q <= *top; ++j)
        add_scaled(out, state_mode(ctx, a, j - q, b), binomial(p, j));
    return out;
}

FockVector virasoro_element(const Context& ctx) {
    long r = ctx.lat.rank;
    // invert the Gram matrix over Q
    std::vector<QVec> aug(r, QVec(2 * r, 0));
    for (long i = 0; i < r; ++i) {
        for (long j = 0; j < r; ++j) aug[i][j] = ctx.lat.gram[i][j];
        aug[i][r + i] = 1;
    }
    for (long c = 0; c < r; ++c) {
        long piv = c;
        while (aug[piv][c] == 0) ++piv;
        std::swap(aug[piv], aug[c]);
        Rational inv = 1 / aug[c][c];
        for (long j = 0; j < 2 * r; ++j) aug[c][j] *= inv;
        for (long i = 0; i < r; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rational f = aug[i][c];
            for (long j = 0; j < 2 * r; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    std::vector<RawTerm> raw;
    for (long i = 0; i < r; ++i) {
        QVec dual(r);
        for (long j = 0; j < r; ++j) dual[j] = aug[i][r + j];
        QVec e(r, 0);
        e[i] = 1;
        RawTerm rt;
        rt.coeff = rat(1, 2);
        rt.factors.push_back({dual, -1});
        rt.factors.push_back({e, -1});
        rt.charge = Charge(QVec(r, 0));
        raw.push_back(std::move(rt));
    }
    return normalize(ctx, raw);
}

FockVector virasoro_mode(const Context& ctx, long n, const FockVector& v,
                         const ModeOptions& opts) {
    return state_mode(ctx, virasoro_element(ctx), n + 1, v, opts);
}

bool borcherds_check(const Context& ctx, const FockVector& a, const FockVector& b,
                     const FockVector& c, long m, long n, long k) {
    if (a.empty() || b.empty() || c.empty()) return true;
    FockVector lhs, rhs;
    auto ab_max = max_nonzero_mode(ctx, a, b);
    if (ab_max) {
        for (long j = 0; j <= *ab_max - n; ++j) {
            if (m >= 0 && j > m) break;
            Rational bc = binomial(m, j);
            if (bc == 0) continue;
            FockVector inner = state_mode(ctx, a, n + j, b);
            if (inner.empty()) continue;
            add_scaled(lhs, state_mode(ctx, inner, m + k - j, c), bc);
        }
    }
    auto bc_max = max_nonzero_mode(ctx, b, c);
    auto ac_max = max_nonzero_mode(ctx, a, c);
    long jmax = -1;
    if (bc_max) jmax = std::max(jmax, *bc_max - k);
    if (ac_max) jmax = std::max(jmax, *ac_max - m);
    if (n >= 0) jmax = std::min(jmax, n);
    for (long j = 0; j <= jmax; ++j) {
        Rational bc = binomial(n, j);
        if (bc == 0) continue;
        Rational sgn = (j % 2 == 0) ? 1 : -1;
        FockVector first = state_mode(ctx, a, m + n - j, state_mode(ctx, b, k + j, c));
        add_scaled(rhs, first, sgn * bc);
        FockVector second = state_mode(ctx, b, n + k - j, state_mode(ctx, a, m + j, c));
        Rational sgn2 = (n % 2 == 0) ? 1 : -1;
        add_scaled(rhs, second, -sgn * sgn2 * bc);
    }
    return diff(lhs, rhs).empty();
}

bool skew_symmetry_check(const Context& ctx, const FockVector& a, const FockVector& b, long n) {
    FockVector lhs = state_mode(ctx, a, n, b);
    FockVector rhs;
    auto ba_max = max_nonzero_mode(ctx, b, a);
    if (ba_max) {
        for (long i = 0; n + i <= *ba_max; ++i) {
            FockVector term = state_mode(ctx, b, n + i, a);
            if (term.empty()) continue;
            for (long s = 0; s < i; ++s) term = virasoro_mode(ctx, -1, term);
            Rational coeff = 1 / factorial(i);
            if ((n + i + 1) % 2 != 0) coeff = -coeff;
            add_scaled(rhs, term, coeff);
        }
    }
    return diff(lhs, rhs).empty();
}

Ternary normalizer_check(const Context& ctx, const SubMonoid& m, const FockVector& a,
                         long mode_cutoff, long weight_cutoff) {
    bool undecided = false;
    for (const auto& w : monoid_basis(ctx, m, weight_cutoff)) {
        FockVector wv = fock_term(w);
        for (long j = 0; j <= mode_cutoff; ++j) {
            FockVector r = state_mode(ctx, a, j, wv);
            if (r.empty()) continue;
            for (const auto& [t, c] : r) {
                IVec g = to_ivec(t.charge.coords, Errc::BadCharge,
                                 "normalizer check expects integral charges");
                Ternary in = submonoid_contains(ctx.lat, m, g);
                if (in == Ternary::False) return Ternary::False;
                if (in == Ternary::Undecided) undecided = true;
            }
        }
    }
    return undecided ? Ternary::Undecided : Ternary::True;
}

Ternary strong_generation_check(const Context& ctx, const std::vector<FockVector>& gens,
                                const SubMonoid& m, long weight_cutoff) {
    std::vector<long> target(weight_cutoff + 1);
    try {
        for (long w = 0; w <= weight_cutoff; ++w) target[w] = graded_dim(ctx, m, w);
    } catch (const Error& e) {
        if (e.code() == Errc::Undecided) return Ternary::Undecided;
        throw;
    }
    std::map<long, RowSpace<FockTerm>> spaces;
    std::deque<FockVector> work;
    auto offer = [&](const FockVector& v) {
        if (v.empty()) return;
        Rational w = weight(ctx, v);
        if (!is_integer(w) || w < 0 || w > weight_cutoff) return;
        if (spaces[to_long(w)].insert(v)) work.push_back(v);
    };
    offer(vacuum(ctx));
    for (const auto& u : gens) offer(u);
    while (!work.empty()) {
        FockVector v = work.front();
        work.pop_front();
        Rational wv = weight(ctx, v);
        for (const auto& u : gens) {
            Rational wu = weight(ctx, u);
            for (long nn = 1; wu + wv + nn - 1 <= weight_cutoff; ++nn)
                offer(state_mode(ctx, u, -nn, v));
        }
    }
    for (long w = 0; w <= weight_cutoff; ++w)
        if ((long)spaces[w].rank() != target[w]) return Ternary::False;
    return Ternary::True;
}

}  // namespace voa
