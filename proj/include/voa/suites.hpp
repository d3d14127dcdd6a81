#pragma once

#include <functional>

#include "voa/bilform.hpp"
#include "voa/config.hpp"
#include "voa/modvoa.hpp"
#include "voa/zhu.hpp"

namespace voa {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
};

using CheckList = std::vector<Check>;

bool all_pass(const CheckList& checks);

// Deferred check evaluation; `jobs` > 1 fans out to a thread pool while the
// report keeps the declaration order.
struct Task {
    std::string name;
    std::function<Check()> run;
};
CheckList run_tasks(std::vector<Task> tasks, long jobs = 1);

// Exponential mode table: (e^a)_n e^a vanishes for n in [-2N, 2N] and the
// -2N-1 mode lands on e^{2a}, for the given levels.
CheckList suite_mode_table(const std::vector<long>& levels);

// Circle/star identities of the rank-one Borel algebra, per level.
CheckList suite_circle_star(const std::vector<long>& levels);

// The five-term expansion of e^a o e^-a in the A1 lattice and its reduction.
CheckList suite_a1_expansion();

// Exhaustive reduce(circle(a,b)) sweeps.
CheckList suite_vanishing_vb(const std::vector<long>& levels, long weight_cutoff,
                             long charge_box, long jobs = 1);
CheckList suite_vanishing_vp(long weight_cutoff, long charge_box, long jobs = 1);

// The thirty presentation identities via star products, the generator-pair
// homomorphism table, and seeded random homomorphism pairs.
CheckList suite_presentations(long random_pairs, unsigned long seed, long jobs = 1);

// Jacobi/skew-symmetry/L(-1)/conservation sampling on a configured lattice.
CheckList suite_axioms(const Context& ctx, long borcherds_samples, long skew_samples,
                       long misc_samples, long weight_cutoff, unsigned long seed,
                       long jobs = 1);

// Module-side verification: bottom actions, weight conservation of module
// modes, spanning saturation, matrix relation families.
CheckList suite_modules(const std::vector<Rational>& beta_pairings, long conservation_samples,
                        unsigned long seed);

// Presented-algebra internals: associativity, nilpotent ideal, Leibniz,
// skew-polynomial isomorphism, derived relations.
CheckList suite_azalg(long assoc_triples, long iso_samples, unsigned long seed);

// Calibrated form: invariance sampling plus structural orthogonality.
CheckList suite_bilform(long invariance_samples, unsigned long seed);

// Quasi-triangular decompositions available for the configured lattice.
CheckList suite_quasi_triangular(const Context& ctx, long weight_cutoff, long mode_cutoff);

// Strong generation at cutoffs, with the partition-counting oracle.
CheckList suite_strong_generation();

// Normalizer evidence for the parabolic subalgebra.
CheckList suite_normalizer(long positive_samples, unsigned long seed);

}  // namespace voa
