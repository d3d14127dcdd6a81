#pragma once

#include <optional>
#include <string>
#include <vector>

#include "voa/error.hpp"
#include "voa/rational.hpp"

namespace voa {

using IVec = std::vector<long>;
using IMat = std::vector<std::vector<long>>;

// Integral lattice with an even positive-definite Gram matrix.
struct Lattice {
    long rank = 0;
    IMat gram;                             // (alpha_i | alpha_j)
    std::vector<std::string> basis_names;  // identifiers used by the expression grammar

    Lattice() = default;
    Lattice(IMat g, std::vector<std::string> names);

    // u^T * gram * v, exact. Accepts rational coordinates (shifted module
    // charges like alpha/2 go through the same pairing).
    Rational pairing(const QVec& u, const QVec& v) const;
    Rational pairing(const IVec& u, const IVec& v) const;

    Rational norm(const QVec& v) const { return pairing(v, v); }
};

// +-1 two-cocycle given on basis pairs, extended bimultiplicatively.
struct Cocycle {
    IMat signs;  // signs[i][j] = eps(alpha_i, alpha_j), entries +-1

    // Bimultiplicative extension: prod_{ij} signs[i][j]^(g_i * t_j).
    int eval(const IVec& g, const IVec& t) const;
};

bool cocycle_validate(const Cocycle& c, const Lattice& lat);

// eps == 1 everywhere (the rank-one convention).
Cocycle trivial_cocycle(long rank);
// The A2 table: eps(a,a)=eps(b,b)=eps(a,b)=1, eps(b,a)=-1.
Cocycle a2_cocycle();

struct SubMonoid {
    enum class Kind { Split, Generated };
    Kind kind = Kind::Split;
    // Split: Z-span of free_basis plus Z>=0-span of nonneg_basis,
    // the two jointly linearly independent.
    std::vector<IVec> free_basis;
    std::vector<IVec> nonneg_basis;
    // Generated: Z>=0-combinations of generators, searched with
    // coefficients in [0, search_bound].
    std::vector<IVec> generators;
    long search_bound = 20;

    static SubMonoid split(std::vector<IVec> free, std::vector<IVec> nonneg);
    static SubMonoid generated(std::vector<IVec> gens, long bound = 20);
};

// Membership. Split: exact coordinate solve with sign constraints.
// Generated: bounded nonnegative-combination search; UNDECIDED on
// exhaustion (never a definitive false).
Ternary submonoid_contains(const Lattice& lat, const SubMonoid& m, const IVec& v);

// True iff the nonnegative generators form a Z-basis of the lattice.
Ternary classify_borel(const Lattice& lat, const SubMonoid& m);

// True iff candidate is a lattice basis and every candidate vector lies in m.
Ternary classify_parabolic(const Lattice& lat, const SubMonoid& m,
                           const std::vector<IVec>& candidate);

struct Isometry {
    IMat matrix;  // column i = image of alpha_i
};

bool isometry_validate(const Isometry& s, const Lattice& lat);

IVec apply_matrix(const IMat& m, const IVec& v);
QVec apply_matrix_q(const IMat& m, const QVec& v);

// All integer vectors v with (v|v) <= bound, Gram positive definite.
std::vector<IVec> short_vectors(const Lattice& lat, const Rational& bound);

// Determinant of a square integer matrix, exact.
Rational int_det(const IMat& m);

}  // namespace voa
