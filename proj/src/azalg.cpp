#include "voa/azalg.hpp"

#include <random>

namespace voa {

namespace {

constexpr int ONE = 0, SXA = 1, SXNA = 2, SXB = 3, SXAB = 4;
constexpr int SY = 1, SZ = 2;  // VB/VA1 sectors

void put(NormalFormElement& u, Word w, const Rational& c) {
    if (c == 0) return;
    auto it = u.coeffs.find(w);
    if (it == u.coeffs.end()) {
        u.coeffs.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) u.coeffs.erase(it);
    }
}

long xcap_one(long i) {  // x^3 = x in the polynomial sector
    while (i > 2) i -= 2;
    return i;
}

}  // namespace

NormalFormElement nf_zero(AlgTag tag, long vb_level) {
    NormalFormElement u;
    u.tag = tag;
    u.vb_level = vb_level;
    return u;
}

NormalFormElement nf_one(AlgTag tag, long vb_level) {
    return nf_word(tag, Word{ONE, 0, 0}, 1, vb_level);
}

NormalFormElement nf_word(AlgTag tag, Word w, Rational c, long vb_level) {
    NormalFormElement u = nf_zero(tag, vb_level);
    put(u, w, c);
    return u;
}

NormalFormElement nf_gen(AlgTag tag, Gen g, long vb_level) {
    switch (tag) {
        case AlgTag::VB:
            if (g == Gen::X) return nf_word(tag, Word{ONE, 1, 0}, 1, vb_level);
            if (g == Gen::Y) return nf_word(tag, Word{SY, 0, 0}, 1, vb_level);
            break;
        case AlgTag::VA1:
            if (g == Gen::X) return nf_word(tag, Word{ONE, 1, 0});
            if (g == Gen::Y || g == Gen::XA) return nf_word(tag, Word{SY, 0, 0});
            if (g == Gen::XNA) return nf_word(tag, Word{SZ, 0, 0});
            break;
        case AlgTag::AP:
            switch (g) {
                case Gen::X: return nf_word(tag, Word{ONE, 1, 0});
                case Gen::Y: return nf_word(tag, Word{ONE, 0, 1});
                case Gen::XA: return nf_word(tag, Word{SXA, 0, 0});
                case Gen::XNA: return nf_word(tag, Word{SXNA, 0, 0});
                case Gen::XB: return nf_word(tag, Word{SXB, 0, 0});
                case Gen::XAB: return nf_word(tag, Word{SXAB, 0, 0});
            }
    }
    throw Error(Errc::TagMismatch, "generator not available in this algebra");
}

void nf_add(NormalFormElement& u, const NormalFormElement& v, const Rational& c) {
    if (u.tag != v.tag) throw Error(Errc::TagMismatch, "mixed algebra tags");
    for (const auto& [w, a] : v.coeffs) put(u, w, a * c);
}

NormalFormElement nf_scaled(const NormalFormElement& u, const Rational& c) {
    NormalFormElement out = nf_zero(u.tag, u.vb_level);
    nf_add(out, u, c);
    return out;
}

namespace {

// ---- VB: basis {x^k} u {y} with y^2=0, yx=-Ny, xy=Ny --------------------

void vb_word_gen(NormalFormElement& out, long N, const Word& w, Gen g, const Rational& c) {
    if (g == Gen::X) {
        if (w.sector == ONE)
            put(out, Word{ONE, w.i + 1, 0}, c);
        else
            put(out, Word{SY, 0, 0}, c * (-N));
        return;
    }
    if (g == Gen::Y) {
        if (w.sector == ONE) {
            Rational f = 1;
            for (long t = 0; t < w.i; ++t) f *= N;  // x^i y = N^i y
            put(out, Word{SY, 0, 0}, c * f);
        }
        // y*y = 0
        return;
    }
    throw Error(Errc::TagMismatch, "VB has generators x and y only");
}

// ---- VA1: basis {1, x, x^2, y, z} ----------------------------------------

void va1_word_gen(NormalFormElement& out, const Word& w, Gen g, const Rational& c) {
    if (g == Gen::X) {
        switch (w.sector) {
            case ONE: put(out, Word{ONE, xcap_one(w.i + 1), 0}, c); return;
            case SY: put(out, Word{SY, 0, 0}, -c); return;  // yx = -y
            case SZ: put(out, Word{SZ, 0, 0}, c); return;   // zx = z
        }
    }
    if (g == Gen::Y || g == Gen::XA) {
        switch (w.sector) {
            case ONE: put(out, Word{SY, 0, 0}, c); return;  // x^i y = y
            case SY: return;                                // y^2 = 0
            case SZ:                                        // zy = (x^2 - x)/2
                put(out, Word{ONE, 2, 0}, c / 2);
                put(out, Word{ONE, 1, 0}, -c / 2);
                return;
        }
    }
    if (g == Gen::XNA) {  // z
        switch (w.sector) {
            case ONE: {
                Rational s = (w.i % 2 == 0) ? c : -c;  // x z = -z
                put(out, Word{SZ, 0, 0}, s);
                return;
            }
            case SY:  // yz = (x^2 + x)/2
                put(out, Word{ONE, 2, 0}, c / 2);
                put(out, Word{ONE, 1, 0}, c / 2);
                return;
            case SZ: return;  // z^2 = 0
        }
    }
    throw Error(Errc::TagMismatch, "VA1 has generators x, y, z only");
}

// ---- AP -------------------------------------------------------------------
// Right multiplication of a canonical word by one generator, using the
// defining relations. x and y commute past each other inside the polynomial
// sector; x_g absorbs x and y according to its own sector rules.

void ap_binomial_shift(NormalFormElement& out, int sector, long n, long sign,
                       const Rational& c) {
    // y^n x_{+-a} = x_{+-a} (y -+ 1)^n with sign = -1 for x_a, +1 for x_na
    for (long t = 0; t <= n; ++t) {
        Rational coef = binomial(n, t) * c;
        if (sign < 0 && (n - t) % 2 != 0) coef = -coef;
        put(out, Word{sector, 0, t}, coef);
    }
}

void ap_word_gen(NormalFormElement& out, const Word& w, Gen g, const Rational& c) {
    switch (w.sector) {
        case ONE: {  // x^i y^j
            switch (g) {
                case Gen::X: put(out, Word{ONE, xcap_one(w.i + 1), w.j}, c); return;
                case Gen::Y: put(out, Word{ONE, w.i, w.j + 1}, c); return;
                case Gen::XA:  // x^i y^j x_a = x_a (y-1)^j
                    ap_binomial_shift(out, SXA, w.j, -1, c);
                    return;
                case Gen::XNA: {  // x^i y^j x_na = (-1)^i x_na (y+1)^j
                    Rational cc = (w.i % 2 == 0) ? c : -c;
                    ap_binomial_shift(out, SXNA, w.j, +1, cc);
                    return;
                }
                case Gen::XB: {  // y^j x_b = x_b; x^i x_b = x_b (x-1)^i, x^2 = x there
                    // (x-1)^i mod <x^2-x>: i=0 -> 1; i>=1 -> (x-1)^i = x(0)^? expand exactly
                    // (x-1)^0=1, (x-1)^1=x-1, (x-1)^2=x^2-2x+1=1-x
                    switch (w.i) {
                        case 0: put(out, Word{SXB, 0, 0}, c); return;
                        case 1:
                            put(out, Word{SXB, 1, 0}, c);
                            put(out, Word{SXB, 0, 0}, -c);
                            return;
                        case 2:
                            put(out, Word{SXB, 0, 0}, c);
                            put(out, Word{SXB, 1, 0}, -c);
                            return;
                    }
                    return;
                }
                case Gen::XAB: {
                    // y^j x_ab = x_ab (j=0) or -x_ab x (j>=1);
                    // left x: x_ab f -> x_ab (x+1) f with x^2 = -x there
                    if (w.j == 0) {
                        // x^i x_ab = x_ab (x+1)^i, (x+1)^i = 1 (i=0) else x+1
                        if (w.i == 0) {
                            put(out, Word{SXAB, 0, 0}, c);
                        } else {
                            put(out, Word{SXAB, 1, 0}, c);
                            put(out, Word{SXAB, 0, 0}, c);
                        }
                    } else {
                        // x^i (-x_ab x): (x+1) x = 0, so zero unless i = 0
                        if (w.i == 0) put(out, Word{SXAB, 1, 0}, -c);
                    }
                    return;
                }
            }
            return;
        }
        case SXA: {  // x_a y^n
            switch (g) {
                case Gen::X: put(out, Word{SXA, 0, w.j}, -c); return;
                case Gen::Y: put(out, Word{SXA, 0, w.j + 1}, c); return;
                case Gen::XA: return;
                case Gen::XNA:  // x_a y^n x_na = (x^2+x)/2 (y+1)^n
                    for (long t = 0; t <= w.j; ++t) {
                        Rational coef = binomial(w.j, t) * c / 2;
                        put(out, Word{ONE, 2, t}, coef);
                        put(out, Word{ONE, 1, t}, coef);
                    }
                    return;
                case Gen::XB:  // x_a x_b = -x_ab y = x_ab x + x_ab
                    put(out, Word{SXAB, 1, 0}, c);
                    put(out, Word{SXAB, 0, 0}, c);
                    return;
                case Gen::XAB: return;
            }
            return;
        }
        case SXNA: {  // x_na y^n
            switch (g) {
                case Gen::X: put(out, Word{SXNA, 0, w.j}, c); return;
                case Gen::Y: put(out, Word{SXNA, 0, w.j + 1}, c); return;
                case Gen::XA:  // x_na y^n x_a = (x^2-x)/2 (y-1)^n
                    for (long t = 0; t <= w.j; ++t) {
                        Rational coef = binomial(w.j, t) * c / 2;
                        if ((w.j - t) % 2 != 0) coef = -coef;
                        put(out, Word{ONE, 2, t}, coef);
                        put(out, Word{ONE, 1, t}, -coef);
                    }
                    return;
                case Gen::XNA: return;
                case Gen::XB: return;  // x_na x_b = 0
                case Gen::XAB:
                    if (w.j == 0) {  // x_na x_ab = -x_b x + x_b
                        put(out, Word{SXB, 1, 0}, -c);
                        put(out, Word{SXB, 0, 0}, c);
                    }
                    // n>=1: x_na (-x_ab x) = -(-x_b x + x_b) x = x_b x - x_b x = 0
                    return;
            }
            return;
        }
        case SXB: {  // x_b x^i, i in {0,1}
            switch (g) {
                case Gen::X: put(out, Word{SXB, 1, 0}, c); return;  // x_b x^2 = x_b x
                case Gen::Y: put(out, Word{SXB, w.i, 0}, -c); return;
                case Gen::XA: put(out, Word{SXAB, 1, 0}, c); return;  // x_b x_a = x_ab x
                default: return;  // x_b x_na = x_b x_b = x_b x_ab = 0
            }
        }
        case SXAB: {  // x_ab x^i
            switch (g) {
                case Gen::X:
                    put(out, Word{SXAB, 1, 0}, w.i == 0 ? c : -c);
                    return;
                case Gen::Y:
                    if (w.i == 0) {  // x_ab y = -x_ab x - x_ab
                        put(out, Word{SXAB, 1, 0}, -c);
                        put(out, Word{SXAB, 0, 0}, -c);
                    }
                    // x_ab x y = 0
                    return;
                case Gen::XNA: {  // x_ab x^i x_na = (-1)^i (-x_b x)
                    Rational coef = (w.i % 2 == 0) ? -c : c;
                    put(out, Word{SXB, 1, 0}, coef);
                    return;
                }
                default: return;  // x_ab x_a = x_ab x_b = x_ab x_ab = 0
            }
        }
    }
}

std::vector<Gen> word_generators(AlgTag tag, const Word& w) {
    std::vector<Gen> gs;
    if (tag == AlgTag::VB || tag == AlgTag::VA1) {
        if (w.sector == ONE)
            for (long t = 0; t < w.i; ++t) gs.push_back(Gen::X);
        else if (w.sector == SY)
            gs.push_back(Gen::Y);
        else
            gs.push_back(Gen::XNA);  // z
        return gs;
    }
    switch (w.sector) {
        case ONE:
            for (long t = 0; t < w.i; ++t) gs.push_back(Gen::X);
            for (long t = 0; t < w.j; ++t) gs.push_back(Gen::Y);
            break;
        case SXA:
            gs.push_back(Gen::XA);
            for (long t = 0; t < w.j; ++t) gs.push_back(Gen::Y);
            break;
        case SXNA:
            gs.push_back(Gen::XNA);
            for (long t = 0; t < w.j; ++t) gs.push_back(Gen::Y);
            break;
        case SXB:
            gs.push_back(Gen::XB);
            for (long t = 0; t < w.i; ++t) gs.push_back(Gen::X);
            break;
        case SXAB:
            gs.push_back(Gen::XAB);
            for (long t = 0; t < w.i; ++t) gs.push_back(Gen::X);
            break;
    }
    return gs;
}

}  // namespace

NormalFormElement mul_gen(const NormalFormElement& u, Gen g) {
    NormalFormElement out = nf_zero(u.tag, u.vb_level);
    for (const auto& [w, c] : u.coeffs) {
        switch (u.tag) {
            case AlgTag::VB: vb_word_gen(out, u.vb_level, w, g, c); break;
            case AlgTag::VA1: va1_word_gen(out, w, g, c); break;
            case AlgTag::AP: ap_word_gen(out, w, g, c); break;
        }
    }
    return out;
}

NormalFormElement mul(const NormalFormElement& u, const NormalFormElement& v) {
    if (u.tag != v.tag) throw Error(Errc::TagMismatch, "mixed algebra tags");
    if (u.tag == AlgTag::VB && u.vb_level != v.vb_level)
        throw Error(Errc::TagMismatch, "mixed VB parameters");
    NormalFormElement out = nf_zero(u.tag, u.vb_level);
    for (const auto& [w, c] : v.coeffs) {
        NormalFormElement cur = nf_scaled(u, c);
        for (Gen g : word_generators(v.tag, w)) cur = mul_gen(cur, g);
        nf_add(out, cur);
    }
    return out;
}

std::pair<NormalFormElement, NormalFormElement> ap_decompose(const NormalFormElement& u) {
    if (u.tag != AlgTag::AP) throw Error(Errc::TagMismatch, "ap_decompose needs an AP element");
    NormalFormElement a = nf_zero(AlgTag::AP), j = nf_zero(AlgTag::AP);
    for (const auto& [w, c] : u.coeffs)
        put(w.sector == SXB || w.sector == SXAB ? j : a, w, c);
    return {a, j};
}

NormalFormElement delta(const NormalFormElement& u) {
    if (u.tag != AlgTag::AP) throw Error(Errc::TagMismatch, "delta needs an AP element");
    NormalFormElement out = nf_zero(AlgTag::AP);
    for (const auto& [w, c] : u.coeffs) {
        if (w.sector == ONE && w.j == 0) continue;  // delta(x^i) = 0
        if (w.sector == SXA && w.j == 0) {
            put(out, w, -c);
            continue;
        }
        if (w.sector == SXNA && w.j == 0) {
            put(out, w, c);
            continue;
        }
        throw Error(Errc::OutOfBaseRing, "delta is defined on span{1, x, x^2, x_a, x_na}");
    }
    return out;
}

SkewPolyElement skew_from_base(NormalFormElement base, long ydeg) {
    if (base.tag != AlgTag::VA1)
        throw Error(Errc::TagMismatch, "skew coefficients are VA1 elements");
    SkewPolyElement u;
    if (!base.is_zero()) u.coeffs.emplace(ydeg, std::move(base));
    return u;
}

void skew_add(SkewPolyElement& u, const SkewPolyElement& v, const Rational& c) {
    for (const auto& [d, b] : v.coeffs) {
        auto it = u.coeffs.find(d);
        if (it == u.coeffs.end()) {
            NormalFormElement nb = nf_scaled(b, c);
            if (!nb.is_zero()) u.coeffs.emplace(d, std::move(nb));
        } else {
            nf_add(it->second, b, c);
            if (it->second.is_zero()) u.coeffs.erase(it);
        }
    }
}

namespace {

// delta on the base ring: y -> -y, z -> z, polynomials -> 0.
NormalFormElement base_delta_pow(const NormalFormElement& b, long t) {
    if (t == 0) return b;
    NormalFormElement out = nf_zero(AlgTag::VA1);
    for (const auto& [w, c] : b.coeffs) {
        if (w.sector == SY) put(out, w, (t % 2 == 0) ? c : -c);
        if (w.sector == SZ) put(out, w, c);
    }
    return out;
}

}  // namespace

SkewPolyElement skew_mul(const SkewPolyElement& u, const SkewPolyElement& v) {
    SkewPolyElement out;
    for (const auto& [i, a] : u.coeffs)
        for (const auto& [j, b] : v.coeffs)
            // y^i b = sum_t C(i,t) delta^t(b) y^(i-t)
            for (long t = 0; t <= i; ++t) {
                NormalFormElement db = base_delta_pow(b, t);
                if (db.is_zero()) continue;
                NormalFormElement prod = mul(a, db);
                if (prod.is_zero()) continue;
                skew_add(out, skew_from_base(std::move(prod), i - t + j), binomial(i, t));
            }
    return out;
}

SkewPolyElement ap_to_skew(const NormalFormElement& u) {
    if (u.tag != AlgTag::AP) throw Error(Errc::TagMismatch, "ap_to_skew needs an AP element");
    SkewPolyElement out;
    for (const auto& [w, c] : u.coeffs) {
        NormalFormElement base = nf_zero(AlgTag::VA1);
        long ydeg = w.j;
        switch (w.sector) {
            case ONE: put(base, Word{ONE, w.i, 0}, c); break;
            case SXA: put(base, Word{SY, 0, 0}, c); break;
            case SXNA: put(base, Word{SZ, 0, 0}, c); break;
            default:
                throw Error(Errc::OutOfBaseRing, "element has a nonzero nilpotent-ideal part");
        }
        skew_add(out, skew_from_base(std::move(base), ydeg), 1);
    }
    return out;
}

bool iso_check(long samples, unsigned long seed) {
    std::mt19937_64 rng(seed);
    auto random_ap = [&]() {
        NormalFormElement u = nf_zero(AlgTag::AP);
        long terms = 1 + (long)(rng() % 3);
        for (long t = 0; t < terms; ++t) {
            Word w;
            switch (rng() % 3) {
                case 0: w = Word{ONE, (long)(rng() % 3), (long)(rng() % 3)}; break;
                case 1: w = Word{SXA, 0, (long)(rng() % 3)}; break;
                case 2: w = Word{SXNA, 0, (long)(rng() % 3)}; break;
            }
            long num = (long)(rng() % 7) - 3;
            long den = 1 + (long)(rng() % 3);
            put(u, w, rat(num, den));
        }
        return u;
    };
    for (long s = 0; s < samples; ++s) {
        NormalFormElement u = random_ap(), v = random_ap();
        SkewPolyElement lhs = ap_to_skew(mul(u, v));
        SkewPolyElement rhs = skew_mul(ap_to_skew(u), ap_to_skew(v));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

namespace {

std::vector<Relation> build_ap_relations() {
    using W = std::vector<Gen>;
    const Gen X = Gen::X, Y = Gen::Y, XA = Gen::XA, XNA = Gen::XNA, XB = Gen::XB,
              XAB = Gen::XAB;
    std::vector<Relation> rels;
    auto add = [&](std::string name, std::vector<std::pair<Rational, W>> terms) {
        rels.push_back({std::move(name), std::move(terms)});
    };
    Rational h = rat(1, 2);
    add("x*xa = xa", {{1, {X, XA}}, {-1, {XA}}});
    add("x*xna = -xna", {{1, {X, XNA}}, {1, {XNA}}});
    add("xa*x = -xa", {{1, {XA, X}}, {1, {XA}}});
    add("xna*x = xna", {{1, {XNA, X}}, {-1, {XNA}}});
    add("xa*xna = (x^2+x)/2", {{1, {XA, XNA}}, {-h, {X, X}}, {-h, {X}}});
    add("xna*xa = (x^2-x)/2", {{1, {XNA, XA}}, {-h, {X, X}}, {h, {X}}});
    add("x*y = y*x", {{1, {X, Y}}, {-1, {Y, X}}});
    add("x^3 = x", {{1, {X, X, X}}, {-1, {X}}});
    add("y*xa = xa*y - xa", {{1, {Y, XA}}, {-1, {XA, Y}}, {1, {XA}}});
    add("y*xna = xna*y + xna", {{1, {Y, XNA}}, {-1, {XNA, Y}}, {-1, {XNA}}});
    add("xb*y = -xb", {{1, {XB, Y}}, {1, {XB}}});
    add("y*xb = xb", {{1, {Y, XB}}, {-1, {XB}}});
    add("xab*(x+y) = -xab", {{1, {XAB, X}}, {1, {XAB, Y}}, {1, {XAB}}});
    add("(x+y)*xab = xab", {{1, {X, XAB}}, {1, {Y, XAB}}, {-1, {XAB}}});
    add("x*xb - xb*x + xb = 0", {{1, {X, XB}}, {-1, {XB, X}}, {1, {XB}}});
    add("x*xab - xab*x - xab = 0", {{1, {X, XAB}}, {-1, {XAB, X}}, {-1, {XAB}}});
    add("xa*xb = -xab*y", {{1, {XA, XB}}, {1, {XAB, Y}}});
    add("xb*xa = -xab*y - xab", {{1, {XB, XA}}, {1, {XAB, Y}}, {1, {XAB}}});
    add("xna*xab = -xb*x + xb", {{1, {XNA, XAB}}, {1, {XB, X}}, {-1, {XB}}});
    add("xab*xna = -xb*x", {{1, {XAB, XNA}}, {1, {XB, X}}});
    add("xa^2 = 0", {{1, {XA, XA}}});
    add("xna^2 = 0", {{1, {XNA, XNA}}});
    add("xb^2 = 0", {{1, {XB, XB}}});
    add("xab^2 = 0", {{1, {XAB, XAB}}});
    add("xa*xab = 0", {{1, {XA, XAB}}});
    add("xab*xa = 0", {{1, {XAB, XA}}});
    add("xb*xab = 0", {{1, {XB, XAB}}});
    add("xab*xb = 0", {{1, {XAB, XB}}});
    add("xb*xna = 0", {{1, {XB, XNA}}});
    add("xna*xb = 0", {{1, {XNA, XB}}});
    return rels;
}

std::vector<Relation> build_ap_derived() {
    std::vector<Relation> rels;
    rels.push_back({"xab*x^2 + xab*x = 0",
                    {{1, {Gen::XAB, Gen::X, Gen::X}}, {1, {Gen::XAB, Gen::X}}}});
    rels.push_back({"xb*x^2 - xb*x = 0",
                    {{1, {Gen::XB, Gen::X, Gen::X}}, {-1, {Gen::XB, Gen::X}}}});
    return rels;
}

}  // namespace

const std::vector<Relation>& ap_relations() {
    static const std::vector<Relation> rels = build_ap_relations();
    return rels;
}

const std::vector<Relation>& ap_derived_relations() {
    static const std::vector<Relation> rels = build_ap_derived();
    return rels;
}

NormalFormElement eval_relation(const Relation& r) {
    NormalFormElement acc = nf_zero(AlgTag::AP);
    for (const auto& [coeff, word] : r.terms) {
        NormalFormElement cur = nf_one(AlgTag::AP);
        for (Gen g : word) cur = mul_gen(cur, g);
        nf_add(acc, cur, coeff);
    }
    return acc;
}

std::string gen_name(Gen g) {
    switch (g) {
        case Gen::X: return "x";
        case Gen::Y: return "y";
        case Gen::XA: return "xa";
        case Gen::XNA: return "xna";
        case Gen::XB: return "xb";
        case Gen::XAB: return "xab";
    }
    return "?";
}

namespace {

std::string print_word(AlgTag tag, const Word& w) {
    auto pow = [](const std::string& s, long k) -> std::string {
        if (k == 0) return "";
        if (k == 1) return s;
        return s + "^" + std::to_string(k);
    };
    std::vector<std::string> parts;
    if (tag == AlgTag::VB || tag == AlgTag::VA1) {
        if (w.sector == ONE) {
            if (w.i > 0) parts.push_back(pow("x", w.i));
        } else if (w.sector == SY) {
            parts.push_back("y");
        } else {
            parts.push_back("z");
        }
    } else {
        switch (w.sector) {
            case ONE:
                if (w.i > 0) parts.push_back(pow("x", w.i));
                if (w.j > 0) parts.push_back(pow("y", w.j));
                break;
            case SXA:
                parts.push_back("xa");
                if (w.j > 0) parts.push_back(pow("y", w.j));
                break;
            case SXNA:
                parts.push_back("xna");
                if (w.j > 0) parts.push_back(pow("y", w.j));
                break;
            case SXB:
                parts.push_back("xb");
                if (w.i > 0) parts.push_back(pow("x", w.i));
                break;
            case SXAB:
                parts.push_back("xab");
                if (w.i > 0) parts.push_back(pow("x", w.i));
                break;
        }
    }
    if (parts.empty()) return "1";
    std::string s = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
    return s;
}

}  // namespace

std::string print_nf(const NormalFormElement& u) {
    if (u.coeffs.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : u.coeffs) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        std::string ws = print_word(u.tag, w);
        if (mag != 1) {
            s += mag.get_str();
            if (ws != "1") s += "*" + ws;
        } else {
            s += ws;
        }
    }
    return s;
}

std::string print_skew(const SkewPolyElement& u) {
    if (u.coeffs.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [d, b] : u.coeffs) {
        if (!first) s += " + ";
        first = false;
        s += "(" + print_nf(b) + ")";
        if (d == 1) s += "*Y";
        if (d > 1) s += "*Y^" + std::to_string(d);
    }
    return s;
}

}  // namespace voa
