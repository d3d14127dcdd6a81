#pragma once

#include "voa/fock.hpp"

namespace voa {

// Sector bookkeeping for shifted (module) charges: the cocycle that fixes
// the sign of the charge-shift operator is evaluated on target charge minus
// this offset. Zero for the adjoint algebra itself.
struct ModeOptions {
    QVec cocycle_offset;  // empty = zero offset
};

// (e^gamma)_n b. E^+ is the finite annihilation expansion on b, then the
// charge shift carries the cocycle sign and the z^(gamma|theta) power shift,
// and E^- contributes exactly the creation order the mode index selects.
FockVector exp_mode(const Context& ctx, const QVec& gamma, long n, const FockVector& b,
                    const ModeOptions& opts = {});

// a_n b for general a, by peeling one creation factor at a time:
// (h(-m-1)v)_k b = sum_{j<0} C(-j-1,m) h(j) v_{k-j-m-1} b
//                + sum_{j>=0} C(-j-1,m) v_{k-j-m-1} (h(j) b).
FockVector state_mode(const Context& ctx, const FockVector& a, long n, const FockVector& b,
                      const ModeOptions& opts = {});

// Largest t for which a_t b can be nonzero (weight bound); nullopt when
// either side is zero.
std::optional<long> max_nonzero_mode(const Context& ctx, const FockVector& a,
                                     const FockVector& b, const ModeOptions& opts = {});

// Res_z Y(a,z) b (1+z)^p / z^q = sum_{j=0..p} C(p,j) a_{j-q} b.
FockVector weighted_residue(const Context& ctx, const FockVector& a, const FockVector& b,
                            long p, long q);

// omega = 1/2 sum_i u^i(-1) u_i(-1) vac with {u^i} the Gram-dual basis.
FockVector virasoro_element(const Context& ctx);
// L(n) v = omega_{n+1} v.
FockVector virasoro_mode(const Context& ctx, long n, const FockVector& v,
                         const ModeOptions& opts = {});

// Component Borcherds identity at (m,n,k), all sums truncated at their
// weight-forced vanishing points.
bool borcherds_check(const Context& ctx, const FockVector& a, const FockVector& b,
                     const FockVector& c, long m, long n, long k);

// a_n b == sum_i 1/i! (-1)^(n+i+1) L(-1)^i (b_{n+i} a).
bool skew_symmetry_check(const Context& ctx, const FockVector& a, const FockVector& b, long n);

// Finite normalizer evidence: a_j w keeps its charge inside M for all
// j in [0, mode_cutoff] and monoid basis states w up to weight_cutoff.
Ternary normalizer_check(const Context& ctx, const SubMonoid& m, const FockVector& a,
                         long mode_cutoff, long weight_cutoff);

// Saturate iterated negative modes of U and compare every graded dimension
// up to the cutoff with the character of V_M.
Ternary strong_generation_check(const Context& ctx, const std::vector<FockVector>& gens,
                                const SubMonoid& m, long weight_cutoff);

}  // namespace voa
