#include "voa/zhu.hpp"

#include <algorithm>

namespace voa {

namespace {

// split into weight-homogeneous components
std::map<Rational, FockVector> weight_components(const Context& ctx, const FockVector& v) {
    std::map<Rational, FockVector> out;
    for (const auto& [t, c] : v) out[term_weight(ctx, t)].emplace(t, c);
    return out;
}

FockVector residue_family(const Context& ctx, const FockVector& a, const FockVector& b,
                          long denom_power) {
    FockVector out;
    for (const auto& [w, comp] : weight_components(ctx, a)) {
        if (!is_integer(w))
            throw Error(Errc::BadCharge, "circle/star need integer-weight inputs");
        long wt = to_long(w);
        if (wt < 0) throw Error(Errc::BadCharge, "negative weight component");
        add_scaled(out, weighted_residue(ctx, comp, b, wt, denom_power), 1);
    }
    return out;
}

}  // namespace

FockVector circle(const Context& ctx, const FockVector& a, const FockVector& b) {
    return residue_family(ctx, a, b, 2);
}

FockVector star(const Context& ctx, const FockVector& a, const FockVector& b) {
    return residue_family(ctx, a, b, 1);
}

namespace {

long charge_coord(const FockTerm& t, long idx) {
    const Rational& c = t.charge.coords[idx];
    if (!is_integer(c)) throw Error(Errc::BadCharge, "charge is not integral");
    return to_long(c);
}

// (-1)^(sum of (mode-1)) over the creation factors
int mode_parity_sign(const FockTerm& t) {
    long s = 0;
    for (const auto& f : t.factors) s += f.mode - 1;
    return (s % 2 == 0) ? 1 : -1;
}

}  // namespace

NormalFormElement reduce_B(const Context& ctx, const FockVector& v, long N) {
    if (ctx.lat.rank != 1 || ctx.lat.gram[0][0] != 2 * N)
        throw Error(Errc::BadCharge, "reduce_B needs the rank-one lattice at this level");
    NormalFormElement out = nf_zero(AlgTag::VB, N);
    for (const auto& [t, c] : v) {
        long k = charge_coord(t, 0);
        if (k < 0) throw Error(Errc::BadCharge, "charge outside Z>=0 alpha");
        if (k >= 2) continue;
        long r = (long)t.factors.size();
        Rational coeff = c * mode_parity_sign(t);
        if (k == 0) {
            nf_add(out, nf_word(AlgTag::VB, Word{0, r, 0}, 1, N), coeff);
        } else {
            // y x^r = (-N)^r y
            Rational f = 1;
            for (long s = 0; s < r; ++s) f *= -N;
            nf_add(out, nf_word(AlgTag::VB, Word{1, 0, 0}, 1, N), coeff * f);
        }
    }
    return out;
}

NormalFormElement reduce_A1(const Context& ctx, const FockVector& v) {
    if (ctx.lat.rank != 1 || ctx.lat.gram[0][0] != 2)
        throw Error(Errc::BadCharge, "reduce_A1 needs the rank-one root lattice");
    NormalFormElement out = nf_zero(AlgTag::VA1);
    for (const auto& [t, c] : v) {
        long k = charge_coord(t, 0);
        if (std::labs(k) >= 2) continue;
        long r = (long)t.factors.size();
        Rational coeff = c * mode_parity_sign(t);
        if (k == 0) {
            // x^r mod x^3 = x
            long i = r;
            while (i > 2) i -= 2;
            nf_add(out, nf_word(AlgTag::VA1, Word{0, i, 0}), coeff);
        } else if (k == 1) {
            if (r % 2 != 0) coeff = -coeff;  // y x^r = (-1)^r y
            nf_add(out, nf_word(AlgTag::VA1, Word{1, 0, 0}), coeff);
        } else {
            nf_add(out, nf_word(AlgTag::VA1, Word{2, 0, 0}), coeff);  // z x^r = z
        }
    }
    return out;
}

NormalFormElement reduce_P(const Context& ctx, const FockVector& v) {
    if (ctx.lat.rank != 2)
        throw Error(Errc::BadCharge, "reduce_P needs the rank-two root lattice");
    NormalFormElement out = nf_zero(AlgTag::AP);
    for (const auto& [t, c] : v) {
        long m = charge_coord(t, 0);
        long n = charge_coord(t, 1);
        if (n < 0) throw Error(Errc::BadCharge, "charge outside the parabolic submonoid");
        // survivors: 0, +-alpha, beta, alpha+beta
        bool zero_charge = (m == 0 && n == 0);
        bool keep = zero_charge || (n == 0 && std::labs(m) == 1) ||
                    (n == 1 && (m == 0 || m == 1));
        if (!keep) continue;
        NormalFormElement word = nf_one(AlgTag::AP);
        if (!zero_charge) {
            Gen g = (n == 0) ? (m == 1 ? Gen::XA : Gen::XNA) : (m == 0 ? Gen::XB : Gen::XAB);
            word = nf_gen(AlgTag::AP, g);
        }
        // bar map factor-wise: alpha -> x, beta -> y (order immaterial, xy = yx)
        for (const auto& f : t.factors)
            word = mul_gen(word, f.basis_index == 0 ? Gen::X : Gen::Y);
        nf_add(out, word, c * mode_parity_sign(t));
    }
    return out;
}

NormalFormElement Reducer::reduce(const Context& ctx, const FockVector& v) const {
    switch (kind) {
        case Kind::VB: return reduce_B(ctx, v, N);
        case Kind::VA1: return reduce_A1(ctx, v);
        case Kind::VP: return reduce_P(ctx, v);
    }
    throw Error(Errc::TagMismatch, "bad reducer");
}

bool verify_homomorphism(const Context& ctx, const Reducer& red, const FockVector& a,
                         const FockVector& b) {
    NormalFormElement lhs = red.reduce(ctx, star(ctx, a, b));
    NormalFormElement rhs = mul(red.reduce(ctx, a), red.reduce(ctx, b));
    return lhs == rhs;
}

bool zhu_identity_checks(const Context& ctx, const Reducer& red, const FockVector& a,
                         const FockVector& b) {
    if (a.empty() || b.empty()) return true;
    Rational wa = weight(ctx, a), wb = weight(ctx, b);
    if (!is_integer(wa) || !is_integer(wb))
        throw Error(Errc::BadCharge, "integer-weight inputs required");
    // a*b = Res_z Y(b,z) a (1+z)^(wt b - 1) / z  (mod O)
    FockVector lhs1 = star(ctx, a, b);
    FockVector rhs1 = weighted_residue(ctx, b, a, to_long(wb) - 1, 1);
    if (!(red.reduce(ctx, lhs1) == red.reduce(ctx, rhs1))) return false;
    // a*b - b*a = Res_z Y(a,z) b (1+z)^(wt a - 1)  (mod O)
    FockVector lhs2 = diff(star(ctx, a, b), star(ctx, b, a));
    FockVector rhs2 = weighted_residue(ctx, a, b, to_long(wa) - 1, 0);
    return red.reduce(ctx, lhs2) == red.reduce(ctx, rhs2);
}

VanishingReport verify_O_vanishing(const Context& ctx, const Reducer& red, long weight_cutoff,
                                   long charge_box) {
    VanishingReport report;
    // basis terms with bounded charge coordinates and weight
    std::vector<FockTerm> basis;
    for (const auto& g : short_vectors(ctx.lat, 2 * weight_cutoff)) {
        bool in_range = true;
        for (long x : g)
            if (std::labs(x) > charge_box) in_range = false;
        if (!in_range) continue;
        bool in_domain = true;
        switch (red.kind) {
            case Reducer::Kind::VB: in_domain = g[0] >= 0; break;
            case Reducer::Kind::VA1: break;
            case Reducer::Kind::VP: in_domain = g[1] >= 0; break;
        }
        if (!in_domain) continue;
        Charge c(QVec(g.begin(), g.end()));
        for (Rational w = sector_min_weight(ctx, c); w <= weight_cutoff; w += 1)
            for (auto& t : sector_basis(ctx, c, w)) basis.push_back(t);
    }
    for (const auto& ta : basis)
        for (const auto& tb : basis) {
            FockVector a = fock_term(ta), b = fock_term(tb);
            NormalFormElement r = red.reduce(ctx, circle(ctx, a, b));
            ++report.pairs_checked;
            if (!r.is_zero())
                report.failures.push_back(
                    {print_fock(ctx, a), print_fock(ctx, b), print_nf(r)});
        }
    return report;
}

}  // namespace voa
