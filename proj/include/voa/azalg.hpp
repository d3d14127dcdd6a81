#pragma once

#include <map>
#include <string>
#include <vector>

#include "voa/error.hpp"
#include "voa/rational.hpp"

namespace voa {

enum class AlgTag { VB, VA1, AP };

// Generators of the parabolic Zhu algebra presentation.
enum class Gen { X, Y, XA, XNA, XB, XAB };

// Canonical basis word. Meaning depends on the algebra tag:
//   VB : sector 0 = x^i, sector 1 = y
//   VA1: sector 0 = x^i (i<=2), sector 1 = y, sector 2 = z
//   AP : sector 0 = x^i y^j (i<=2), sector 1 = x_a y^j, sector 2 = x_na y^j,
//        sector 3 = x_b x^i (i<=1), sector 4 = x_ab x^i (i<=1)
// The words x_b x^2 and x_ab x^2 of the presentation are not stored: the
// relation set forces x_b x^2 = x_b x and x_ab x^2 = -x_ab x, and the
// homomorphism tests only close with the collapsed basis.
struct Word {
    int sector = 0;
    long i = 0;
    long j = 0;

    bool operator==(const Word& o) const {
        return sector == o.sector && i == o.i && j == o.j;
    }
    bool operator<(const Word& o) const {
        if (sector != o.sector) return sector < o.sector;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

struct NormalFormElement {
    AlgTag tag = AlgTag::AP;
    long vb_level = 1;  // the N of y^2=0, yx=-Ny, xy=Ny (VB only)
    std::map<Word, Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const NormalFormElement& o) const {
        return tag == o.tag && coeffs == o.coeffs;
    }
};

NormalFormElement nf_zero(AlgTag tag, long vb_level = 1);
NormalFormElement nf_one(AlgTag tag, long vb_level = 1);
NormalFormElement nf_word(AlgTag tag, Word w, Rational c = 1, long vb_level = 1);
// Single generator as an element. VB knows X, Y; VA1 knows X, Y and Z
// (Gen::XNA doubles as z); AP knows all six.
NormalFormElement nf_gen(AlgTag tag, Gen g, long vb_level = 1);

void nf_add(NormalFormElement& u, const NormalFormElement& v, const Rational& c = 1);
NormalFormElement nf_scaled(const NormalFormElement& u, const Rational& c);

// Product in the presented algebra, rewritten to the canonical basis.
NormalFormElement mul(const NormalFormElement& u, const NormalFormElement& v);
NormalFormElement mul_gen(const NormalFormElement& u, Gen g);

// Split an AP element into its skew-polynomial part and the nilpotent
// ideal part spanned by the x_b / x_ab words.
std::pair<NormalFormElement, NormalFormElement> ap_decompose(const NormalFormElement& u);

// The derivation [y,.] on the subalgebra spanned by {1, x, x^2, x_a, x_na}.
NormalFormElement delta(const NormalFormElement& u);

// Free left module over the rank-one Zhu algebra on powers of the skew
// indeterminate; coefficients are VA1 elements with y,z read as x_a,x_na.
struct SkewPolyElement {
    std::map<long, NormalFormElement> coeffs;  // y-degree -> base element

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const SkewPolyElement& o) const { return coeffs == o.coeffs; }
};

SkewPolyElement skew_from_base(NormalFormElement base, long ydeg = 0);
void skew_add(SkewPolyElement& u, const SkewPolyElement& v, const Rational& c = 1);
// Multiplication with y a = a y + delta(a).
SkewPolyElement skew_mul(const SkewPolyElement& u, const SkewPolyElement& v);

// Image of an AP element with zero J-part under the basis-preserving map
// onto the skew-polynomial algebra.
SkewPolyElement ap_to_skew(const NormalFormElement& u);

// Random-pair verification that ap_to_skew intertwines the two products.
bool iso_check(long samples, unsigned long seed);

// One defining identity, as sum of coefficient-weighted generator words == 0.
struct Relation {
    std::string name;
    std::vector<std::pair<Rational, std::vector<Gen>>> terms;
};

// The thirty defining identities of the parabolic presentation.
const std::vector<Relation>& ap_relations();
// x_ab x^2 + x_ab x = 0 and x_b x^2 - x_b x = 0.
const std::vector<Relation>& ap_derived_relations();

// Evaluate a relation inside the algebra (zero iff it holds; always zero
// for AP by construction of the rewriting, used as a sanity gate).
NormalFormElement eval_relation(const Relation& r);

std::string gen_name(Gen g);
std::string print_nf(const NormalFormElement& u);
std::string print_skew(const SkewPolyElement& u);

}  // namespace voa
