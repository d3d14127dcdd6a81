#pragma once

#include <functional>

#include "voa/vertex.hpp"

namespace voa {

// Base pairings kappa_gamma = (e^gamma | e^-gamma), with (vac|vac) = 1.
struct FormContext {
    std::map<QVec, Rational> base_pairings;

    Rational kappa(const QVec& gamma) const;
};

// (u|v): zero unless charges cancel; otherwise strip creation factors via
// the adjoint rule h(-m)^dagger = -h(m) down to the base pairing.
Rational form(const Context& ctx, const FormContext& fc, const FockVector& u,
              const FockVector& v);

// Component form of the invariance identity:
// (a_n b | c) = (-1)^(wt a) sum_j 1/j! (b | (L(1)^j a)_{2 wt a - j - n - 2} c).
bool invariance_check(const Context& ctx, const FormContext& fc, const FockVector& a,
                      const FockVector& b, const FockVector& c, long n);

// Solve for kappa_gamma by imposing invariance on (e^g, e^-g, vac, n) at the
// unique n where both sides are kappa-multiples; charges must be closed
// under negation and the two signs must agree (INCONSISTENT otherwise).
FormContext calibrate_base_pairings(const Context& ctx, const std::vector<IVec>& charges);

// Charge-wise predicate partition V = V_+ (+) V_H (+) V_-.
struct DecompositionSpec {
    std::function<int(const IVec&)> part;  // +1 / 0 / -1
};

// m > 0 | m = 0 | m < 0 on the distinguished coordinate.
DecompositionSpec decomposition_last_coord_sign(long coord);
// The A2 split with N_+ = {n>0} u {n=0, m>0}.
DecompositionSpec decomposition_a2_fine();

struct QtCheck {
    std::string name;
    bool pass;
    std::string witness;
};
struct QtReport {
    std::vector<QtCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// sl2-stability of each part, closure of each part under modes, closure of
// the middle part acting on the ends, the four orthogonality families, the
// graded splitting, and nondegeneracy of each graded piece.
QtReport quasi_triangular_check(const Context& ctx, const FormContext& fc,
                                const DecompositionSpec& spec, long weight_cutoff,
                                long mode_cutoff);

}  // namespace voa
