#pragma once

#include "voa/azalg.hpp"
#include "voa/vertex.hpp"

namespace voa {

using QMat = std::vector<QVec>;

QMat mat_zero(long n);
QMat mat_identity(long n);
QMat mat_mul(const QMat& a, const QMat& b);
void mat_add(QMat& a, const QMat& b, const Rational& c);
bool mat_is_zero(const QMat& a);

// Irreducible modules over the rank-one Borel subalgebra: the Heisenberg
// module attached to lambda, with every positive-charge sector acting as 0.
struct VBModuleSpec {
    Rational pairing_alpha_lambda;  // (alpha|lambda)
    Rational lambda_norm;           // (lambda|lambda)

    // rank-one context (level N) carrying the lambda block
    Context context(long N = 1) const;
};

FockVector vb_module_mode(const Context& ctx, const FockVector& a, long n,
                          const FockVector& w);

// Modules over the parabolic subalgebra of the A2 lattice: sectors
// n*alpha + eps tensored with e^lambda, lambda orthogonal to alpha.
struct PModuleSpec {
    enum class Eps { Zero, HalfAlpha };
    Eps epsilon = Eps::Zero;
    Rational pairing_beta_lambda;  // (lambda|beta)
    Rational lambda_norm;          // (lambda|lambda)

    Context context() const;  // A2 context with the lambda block
    QVec eps_vector() const;  // the charge offset of the sector family
    ModeOptions mode_options() const;
};

// Y_M(a,z) modes: zero on the ideal sectors (beta-component > 0), the
// lattice-module formulas otherwise.
FockVector p_module_mode(const PModuleSpec& spec, const Context& ctx, const FockVector& a,
                         long n, const FockVector& w);

// L_M(0) eigenvalue of a single canonical module term.
Rational lm0(const Context& ctx, const FockTerm& w);

// Canonical module terms with lm0 == level.
std::vector<FockTerm> module_level_basis(const PModuleSpec& spec, const Context& ctx,
                                         const Rational& level);

// Matrix of the zero mode o(a) = a_{wt a - 1} on the canonical basis of the
// graded piece at weight_level (columns ordered as module_level_basis).
QMat zero_mode_matrix(const PModuleSpec& spec, const Context& ctx, const FockVector& a,
                      const Rational& weight_level);

// Zero-mode matrices of the six presentation generators on the bottom level.
// For the half-alpha sector the basis order is (e^+, e^-).
std::map<Gen, QMat> bottom_matrices(const PModuleSpec& spec);

// Compares bottom_matrices against the classified bottom-level action
// (x_a e^- = e^+ as the module computation itself produces).
bool bottom_action_check(const PModuleSpec& spec);

// Saturate the bottom level under modes of the six generators and compare
// each of the first `levels` graded dimensions with the character.
Ternary spanning_check(const PModuleSpec& spec, long levels,
                       const std::vector<FockVector>* generators = nullptr);

// All thirty defining identities as matrix identities.
bool ap_module_relation_check(const std::map<Gen, QMat>& mats);

}  // namespace voa
