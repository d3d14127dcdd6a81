#pragma once

#include "voa/azalg.hpp"
#include "voa/vertex.hpp"

namespace voa {

// a o b = Res_z Y(a,z) b (1+z)^(wt a) / z^2, extended over homogeneous
// components of a.
FockVector circle(const Context& ctx, const FockVector& a, const FockVector& b);
// a * b = Res_z Y(a,z) b (1+z)^(wt a) / z.
FockVector star(const Context& ctx, const FockVector& a, const FockVector& b);

// Normal form maps onto the presented Zhu algebras.
// Borel V_B at level N: charge 0 -> (-1)^(sum n_i) x^r, charge alpha ->
// (-1)^(sum n_i) y x^r = (-1)^(sum n_i) (-N)^r y, charge >= 2 alpha -> 0.
NormalFormElement reduce_B(const Context& ctx, const FockVector& v, long N);
// Full rank-one A1 lattice: charge 0 -> x^r mod x^3 = x, +-alpha -> y/z.
NormalFormElement reduce_A1(const Context& ctx, const FockVector& v);
// Parabolic A2 case onto the six-generator presentation.
NormalFormElement reduce_P(const Context& ctx, const FockVector& v);

struct Reducer {
    enum class Kind { VB, VA1, VP };
    Kind kind = Kind::VB;
    long N = 1;  // VB level

    AlgTag tag() const {
        switch (kind) {
            case Kind::VB: return AlgTag::VB;
            case Kind::VA1: return AlgTag::VA1;
            case Kind::VP: return AlgTag::AP;
        }
        return AlgTag::VB;
    }
    NormalFormElement reduce(const Context& ctx, const FockVector& v) const;
    static Reducer vb(long N) { return {Kind::VB, N}; }
    static Reducer va1() { return {Kind::VA1, 1}; }
    static Reducer vp() { return {Kind::VP, 1}; }
};

// reduce(a*b) == reduce(a) . reduce(b).
bool verify_homomorphism(const Context& ctx, const Reducer& red, const FockVector& a,
                         const FockVector& b);

// The two congruences a*b = Res Y(b,z)a (1+z)^(wt b - 1)/z and
// a*b - b*a = Res Y(a,z)b (1+z)^(wt a - 1), compared after reduction.
bool zhu_identity_checks(const Context& ctx, const Reducer& red, const FockVector& a,
                         const FockVector& b);

struct VanishingFailure {
    std::string a, b, value;
};
struct VanishingReport {
    long pairs_checked = 0;
    std::vector<VanishingFailure> failures;
    bool ok() const { return failures.empty(); }
};

// reduce(a o b) over every canonical basis pair within the cutoffs.
// charge_box bounds the absolute charge coordinates of a and b.
VanishingReport verify_O_vanishing(const Context& ctx, const Reducer& red, long weight_cutoff,
                                   long charge_box);

}  // namespace voa
