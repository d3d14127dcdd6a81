#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "voa/lattice.hpp"

namespace voa {

// Declared pairings of the external weight symbol lambda: (lambda|alpha_i)
// per basis vector and (lambda|lambda). lambda itself is never a coordinate
// vector; everything routes through these rationals.
struct Lambda {
    QVec pairings;
    Rational norm;
};

// Lattice data plus cocycle plus the optional lambda block. Immutable;
// every operation below is a pure function of it.
struct Context {
    Lattice lat;
    Cocycle coc;
    std::optional<Lambda> lambda;

    Context(Lattice l, Cocycle c, std::optional<Lambda> lam = std::nullopt);

    Rational lambda_pairing(const QVec& v) const;  // (v|lambda)
    Rational lambda_norm() const;                  // (lambda|lambda)

    // Rank-one lattice Z*alpha with (alpha|alpha) = 2N, eps == 1.
    static Context rank_one(long N, std::string name = "a");
    // The A2 root lattice with its standard cocycle table.
    static Context a2();
};

struct Charge {
    QVec coords;              // rational coordinates in the lattice basis
    bool has_lambda = false;  // tensor factor e^lambda attached

    Charge() = default;
    explicit Charge(QVec c, bool lam = false) : coords(std::move(c)), has_lambda(lam) {}

    bool is_zero() const { return !has_lambda && is_zero_vec(coords); }
    bool operator==(const Charge& o) const {
        return has_lambda == o.has_lambda && coords == o.coords;
    }
    bool operator<(const Charge& o) const;
};

Charge charge_add(const Charge& a, const QVec& shift);

// One creation factor h(-mode) with h a lattice basis vector.
struct Factor {
    long mode;         // >= 1, the n in h(-n)
    long basis_index;  // 0..rank-1

    bool operator==(const Factor& o) const {
        return mode == o.mode && basis_index == o.basis_index;
    }
    bool operator<(const Factor& o) const {  // canonical in-term order
        if (mode != o.mode) return mode > o.mode;
        return basis_index < o.basis_index;
    }
};

// Canonical basis term h_1(-n_1)...h_k(-n_k) e^charge, factors sorted by
// (mode descending, basis ascending).
struct FockTerm {
    std::vector<Factor> factors;
    Charge charge;

    bool operator==(const FockTerm& o) const {
        return factors == o.factors && charge == o.charge;
    }
    bool operator<(const FockTerm& o) const;
};

// Finite rational linear combination of canonical terms. No zero
// coefficients are ever stored.
using FockVector = std::map<FockTerm, Rational>;

FockVector fock_zero();
FockVector fock_term(FockTerm t, Rational coeff = 1);
FockVector vacuum(const Context& ctx);
// e^gamma (gamma in rational coordinates), optionally tensored with e^lambda.
FockVector exponential(const Context& ctx, QVec gamma, bool with_lambda = false);
// h_i(-n) e^0 for basis index i
FockVector heisenberg_state(const Context& ctx, long basis_index, long mode_n = 1);

void add_term(FockVector& v, const FockTerm& t, const Rational& c);
void add_scaled(FockVector& v, const FockVector& w, const Rational& c);
FockVector scaled(const FockVector& v, const Rational& c);
FockVector sum(const FockVector& a, const FockVector& b);
FockVector diff(const FockVector& a, const FockVector& b);
bool is_zero(const FockVector& v);

// Raw input for normalize: creation factors with arbitrary h in Q (x) L.
struct RawFactor {
    QVec h;     // coordinates of h in the lattice basis
    long mode;  // must be negative (creation only)
};
struct RawTerm {
    Rational coeff;
    std::vector<RawFactor> factors;
    Charge charge;
};

// Expand general h over the basis, sort the commuting creation factors,
// merge like terms.
FockVector normalize(const Context& ctx, const std::vector<RawTerm>& raw);

// h(m) action: creation (m<0), charge eigenvalue (m=0), annihilation (m>0).
FockVector heisenberg_act(const Context& ctx, const QVec& h, long m, const FockVector& v);

Rational term_weight(const Context& ctx, const FockTerm& t);
// Weight of a homogeneous vector; throws on mixed weights.
Rational weight(const Context& ctx, const FockVector& v);
bool is_weight_homogeneous(const Context& ctx, const FockVector& v);
// Smallest conformal weight in the sector of the given charge.
Rational sector_min_weight(const Context& ctx, const Charge& c);

Charge charge_of(const FockVector& v);
bool is_charge_homogeneous(const FockVector& v);

// Number of n-colored partitions (parts of `colors` kinds).
long colored_partitions(long n, long colors);
// Partitions of n as multisets of parts, largest part first.
std::vector<std::vector<long>> partitions_of(long n);

// Count of canonical terms of weight exactly n with charge in M.
long graded_dim(const Context& ctx, const SubMonoid& m, const Rational& n);

// All canonical terms of the given charge and weight.
std::vector<FockTerm> sector_basis(const Context& ctx, const Charge& c, const Rational& wt);
// All canonical terms with charge in M and weight <= cutoff (integer weights).
std::vector<FockTerm> monoid_basis(const Context& ctx, const SubMonoid& m, long wt_cutoff);

FockVector apply_isometry(const Context& ctx, const Isometry& s, const FockVector& v);

// Canonical text: mirrors the CLI expression grammar; term order is
// (weight asc, charge lex, factors lex).
std::string print_fock(const Context& ctx, const FockVector& v);

}  // namespace voa
