#include "voa/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace voa {

Context::Context(Lattice l, Cocycle c, std::optional<Lambda> lam)
    : lat(std::move(l)), coc(std::move(c)), lambda(std::move(lam)) {
    if (!cocycle_validate(coc, lat))
        throw Error(Errc::ConfigError, "cocycle fails the sign condition");
    if (lambda && (long)lambda->pairings.size() != lat.rank)
        throw Error(Errc::ConfigError, "lambda pairings size != rank");
}

Rational Context::lambda_pairing(const QVec& v) const {
    if (!lambda) return 0;
    Rational s = 0;
    for (long i = 0; i < lat.rank; ++i) s += v[i] * lambda->pairings[i];
    return s;
}

Rational Context::lambda_norm() const { return lambda ? lambda->norm : Rational(0); }

Context Context::rank_one(long N, std::string name) {
    Lattice lat(IMat{{2 * N}}, {std::move(name)});
    return Context(std::move(lat), trivial_cocycle(1));
}

Context Context::a2() {
    Lattice lat(IMat{{2, -1}, {-1, 2}}, {"a", "b"});
    return Context(std::move(lat), a2_cocycle());
}

bool Charge::operator<(const Charge& o) const {
    if (coords != o.coords) return std::lexicographical_compare(
        coords.begin(), coords.end(), o.coords.begin(), o.coords.end());
    return has_lambda < o.has_lambda;
}

Charge charge_add(const Charge& a, const QVec& shift) {
    Charge out = a;
    for (size_t i = 0; i < shift.size(); ++i) out.coords[i] += shift[i];
    return out;
}

bool FockTerm::operator<(const FockTerm& o) const {
    if (factors != o.factors)
        return std::lexicographical_compare(factors.begin(), factors.end(),
                                            o.factors.begin(), o.factors.end());
    return charge < o.charge;
}

FockVector fock_zero() { return {}; }

FockVector fock_term(FockTerm t, Rational coeff) {
    FockVector v;
    if (coeff != 0) v.emplace(std::move(t), std::move(coeff));
    return v;
}

FockVector vacuum(const Context& ctx) {
    FockTerm t;
    t.charge = Charge(QVec(ctx.lat.rank, 0));
    return fock_term(std::move(t));
}

FockVector exponential(const Context& ctx, QVec gamma, bool with_lambda) {
    if ((long)gamma.size() != ctx.lat.rank)
        throw Error(Errc::DimensionMismatch, "charge length != rank");
    FockTerm t;
    t.charge = Charge(std::move(gamma), with_lambda);
    return fock_term(std::move(t));
}

FockVector heisenberg_state(const Context& ctx, long basis_index, long mode_n) {
    FockTerm t;
    t.factors.push_back({mode_n, basis_index});
    t.charge = Charge(QVec(ctx.lat.rank, 0));
    return fock_term(std::move(t));
}

void add_term(FockVector& v, const FockTerm& t, const Rational& c) {
    if (c == 0) return;
    auto it = v.find(t);
    if (it == v.end()) {
        v.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0) v.erase(it);
    }
}

void add_scaled(FockVector& v, const FockVector& w, const Rational& c) {
    if (c == 0) return;
    for (const auto& [t, a] : w) add_term(v, t, a * c);
}

FockVector scaled(const FockVector& v, const Rational& c) {
    FockVector out;
    add_scaled(out, v, c);
    return out;
}

FockVector sum(const FockVector& a, const FockVector& b) {
    FockVector out = a;
    add_scaled(out, b, 1);
    return out;
}

FockVector diff(const FockVector& a, const FockVector& b) {
    FockVector out = a;
    add_scaled(out, b, -1);
    return out;
}

bool is_zero(const FockVector& v) { return v.empty(); }

FockVector normalize(const Context& ctx, const std::vector<RawTerm>& raw) {
    FockVector out;
    for (const auto& rt : raw) {
        if (rt.coeff == 0) continue;
        if ((long)rt.charge.coords.size() != ctx.lat.rank)
            throw Error(Errc::DimensionMismatch, "charge length != rank");
        // distribute each general h over the lattice basis
        std::vector<std::pair<std::vector<Factor>, Rational>> expanded;
        expanded.push_back({{}, rt.coeff});
        for (const auto& f : rt.factors) {
            if (f.mode >= 0)
                throw Error(Errc::NonnegativeMode, "creation factors need negative modes");
            if ((long)f.h.size() != ctx.lat.rank)
                throw Error(Errc::DimensionMismatch, "factor vector length != rank");
            std::vector<std::pair<std::vector<Factor>, Rational>> next;
            for (const auto& [fs, c] : expanded)
                for (long i = 0; i < ctx.lat.rank; ++i) {
                    if (f.h[i] == 0) continue;
                    auto fs2 = fs;
                    fs2.push_back({-f.mode, i});
                    next.push_back({std::move(fs2), c * f.h[i]});
                }
            expanded = std::move(next);
        }
        for (auto& [fs, c] : expanded) {
            std::sort(fs.begin(), fs.end());
            FockTerm t;
            t.factors = std::move(fs);
            t.charge = rt.charge;
            add_term(out, t, c);
        }
    }
    return out;
}

FockVector heisenberg_act(const Context& ctx, const QVec& h, long m, const FockVector& v) {
    if ((long)h.size() != ctx.lat.rank)
        throw Error(Errc::DimensionMismatch, "vector length != rank");
    FockVector out;
    if (m < 0) {
        for (const auto& [t, c] : v) {
            RawTerm rt;
            rt.coeff = c;
            rt.charge = t.charge;
            rt.factors.push_back({h, m});
            for (const auto& f : t.factors) {
                QVec e(ctx.lat.rank, 0);
                e[f.basis_index] = 1;
                rt.factors.push_back({e, -f.mode});
            }
            add_scaled(out, normalize(ctx, {rt}), 1);
        }
        return out;
    }
    if (m == 0) {
        for (const auto& [t, c] : v) {
            Rational eig = ctx.lat.pairing(h, t.charge.coords);
            if (t.charge.has_lambda) eig += ctx.lambda_pairing(h);
            add_term(out, t, c * eig);
        }
        return out;
    }
    // m > 0: contract with matching creation factors; h(m) e^gamma = 0.
    for (const auto& [t, c] : v) {
        for (size_t j = 0; j < t.factors.size(); ++j) {
            if (t.factors[j].mode != m) continue;
            QVec e(ctx.lat.rank, 0);
            e[t.factors[j].basis_index] = 1;
            Rational bracket = Rational(m) * ctx.lat.pairing(h, e);
            if (bracket == 0) continue;
            FockTerm t2 = t;
            t2.factors.erase(t2.factors.begin() + j);
            add_term(out, t2, c * bracket);
        }
    }
    return out;
}

Rational term_weight(const Context& ctx, const FockTerm& t) {
    Rational w = 0;
    for (const auto& f : t.factors) w += f.mode;
    w += ctx.lat.norm(t.charge.coords) / 2;
    if (t.charge.has_lambda) {
        w += ctx.lambda_pairing(t.charge.coords);
        w += ctx.lambda_norm() / 2;
    }
    return w;
}

Rational weight(const Context& ctx, const FockVector& v) {
    if (v.empty()) throw Error(Errc::ZeroVector, "weight of zero vector");
    Rational w = term_weight(ctx, v.begin()->first);
    for (const auto& [t, c] : v)
        if (term_weight(ctx, t) != w)
            throw Error(Errc::MixedCharge, "vector is not weight homogeneous");
    return w;
}

bool is_weight_homogeneous(const Context& ctx, const FockVector& v) {
    if (v.empty()) return true;
    Rational w = term_weight(ctx, v.begin()->first);
    for (const auto& [t, c] : v)
        if (term_weight(ctx, t) != w) return false;
    return true;
}

Rational sector_min_weight(const Context& ctx, const Charge& c) {
    Rational w = ctx.lat.norm(c.coords) / 2;
    if (c.has_lambda) {
        w += ctx.lambda_pairing(c.coords);
        w += ctx.lambda_norm() / 2;
    }
    return w;
}

Charge charge_of(const FockVector& v) {
    if (v.empty()) throw Error(Errc::ZeroVector, "charge of zero vector");
    Charge c = v.begin()->first.charge;
    for (const auto& [t, a] : v)
        if (!(t.charge == c)) throw Error(Errc::MixedCharge, "terms carry different charges");
    return c;
}

bool is_charge_homogeneous(const FockVector& v) {
    if (v.empty()) return true;
    const Charge& c = v.begin()->first.charge;
    for (const auto& [t, a] : v)
        if (!(t.charge == c)) return false;
    return true;
}

long colored_partitions(long n, long colors) {
    if (n < 0) return 0;
    std::vector<long> dp(n + 1, 0);
    dp[0] = 1;
    for (long part = 1; part <= n; ++part)
        for (long copy = 0; copy < colors; ++copy)
            for (long k = part; k <= n; ++k) dp[k] += dp[k - part];
    return dp[n];
}

std::vector<std::vector<long>> partitions_of(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rest, long maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

namespace {

// factor multisets for a given factor weight: colored partitions as explicit
// canonical factor lists
std::vector<std::vector<Factor>> factor_lists(long weight, long rank) {
    std::vector<std::vector<Factor>> out;
    std::vector<Factor> cur;
    // parts ordered (mode desc, basis asc) to stay canonical
    std::function<void(long, long, long)> rec = [&](long rest, long maxmode, long minbasis) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long mode = std::min(rest, maxmode); mode >= 1; --mode) {
            long bstart = (mode == maxmode) ? minbasis : 0;
            for (long b = bstart; b < rank; ++b) {
                cur.push_back({mode, b});
                rec(rest - mode, mode, b);
                cur.pop_back();
            }
        }
    };
    rec(weight, weight, 0);
    return out;
}

}  // namespace

std::vector<FockTerm> sector_basis(const Context& ctx, const Charge& c, const Rational& wt) {
    std::vector<FockTerm> out;
    Rational rest = wt - sector_min_weight(ctx, c);
    if (rest < 0 || !is_integer(rest)) return out;
    for (auto& fl : factor_lists(to_long(rest), ctx.lat.rank)) {
        FockTerm t;
        t.factors = std::move(fl);
        t.charge = c;
        out.push_back(std::move(t));
    }
    return out;
}

long graded_dim(const Context& ctx, const SubMonoid& m, const Rational& n) {
    if (n < 0) throw Error(Errc::BadCharge, "graded_dim expects n >= 0");
    long count = 0;
    for (const auto& g : short_vectors(ctx.lat, 2 * n)) {
        Ternary in = submonoid_contains(ctx.lat, m, g);
        if (in == Ternary::Undecided)
            throw Error(Errc::Undecided, "submonoid membership undecided");
        if (in == Ternary::False) continue;
        Rational rest = n - ctx.lat.pairing(g, g) / 2;
        if (rest < 0 || !is_integer(rest)) continue;
        count += colored_partitions(to_long(rest), ctx.lat.rank);
    }
    return count;
}

std::vector<FockTerm> monoid_basis(const Context& ctx, const SubMonoid& m, long wt_cutoff) {
    std::vector<FockTerm> out;
    for (const auto& g : short_vectors(ctx.lat, 2 * wt_cutoff)) {
        Ternary in = submonoid_contains(ctx.lat, m, g);
        if (in == Ternary::Undecided)
            throw Error(Errc::Undecided, "submonoid membership undecided");
        if (in == Ternary::False) continue;
        Charge c(QVec(g.begin(), g.end()));
        Rational base = sector_min_weight(ctx, c);
        for (Rational w = base; w <= wt_cutoff; w += 1) {
            auto terms = sector_basis(ctx, c, w);
            out.insert(out.end(), terms.begin(), terms.end());
        }
    }
    return out;
}

FockVector apply_isometry(const Context& ctx, const Isometry& s, const FockVector& v) {
    if (!isometry_validate(s, ctx.lat))
        throw Error(Errc::InvalidIsometry, "matrix does not preserve the Gram form");
    FockVector out;
    for (const auto& [t, c] : v) {
        RawTerm rt;
        rt.coeff = c;
        for (const auto& f : t.factors) {
            QVec e(ctx.lat.rank, 0);
            e[f.basis_index] = 1;
            rt.factors.push_back({apply_matrix_q(s.matrix, e), -f.mode});
        }
        rt.charge = Charge(apply_matrix_q(s.matrix, t.charge.coords), t.charge.has_lambda);
        add_scaled(out, normalize(ctx, {rt}), 1);
    }
    return out;
}

namespace {

std::string print_rational(const Rational& r) { return r.get_str(); }

std::string print_charge(const Context& ctx, const Charge& c) {
    if (c.is_zero()) return "vac";
    std::string s = "E[";
    for (long i = 0; i < ctx.lat.rank; ++i) {
        if (i) s += ",";
        s += print_rational(c.coords[i]);
    }
    if (c.has_lambda) s += ";L";
    s += "]";
    return s;
}

std::string print_term(const Context& ctx, const FockTerm& t) {
    std::string s;
    for (const auto& f : t.factors)
        s += ctx.lat.basis_names[f.basis_index] + "(-" + std::to_string(f.mode) + ")";
    s += print_charge(ctx, t.charge);
    return s;
}

}  // namespace

std::string print_fock(const Context& ctx, const FockVector& v) {
    if (v.empty()) return "0";
    std::vector<const FockTerm*> order;
    for (const auto& [t, c] : v) order.push_back(&t);
    std::sort(order.begin(), order.end(), [&](const FockTerm* a, const FockTerm* b) {
        Rational wa = term_weight(ctx, *a), wb = term_weight(ctx, *b);
        if (wa != wb) return wa < wb;
        if (!(a->charge == b->charge)) return a->charge < b->charge;
        return a->factors < b->factors;
    });
    std::string s;
    bool first = true;
    for (const FockTerm* t : order) {
        Rational c = v.at(*t);
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (mag != 1) s += print_rational(mag) + "*";
        s += print_term(ctx, *t);
    }
    return s;
}

}  // namespace voa
