#ifndef CCALC_BUNDLE_HPP
#define CCALC_BUNDLE_HPP

#include "ccalc/abelian.hpp"
#include "ccalc/char_calc.hpp"
#include "ccalc/graded_ring.hpp"

#include <map>
#include <optional>
#include <string>

namespace ccalc {

enum class FieldKind { real, complex };

// Vector bundle datum over a presented base space. Integral classes are
// stored by key ("p1", "c2", "Q1", "Q2", "sixth_p2"); a missing key means
// the class is zero. Q1 doubles as the designated half first Pontrjagin
// class of a spin structure, sixth_p2 as the designated sixth of p2 of a
// string structure. Chern characters ch_k live in `characters` because they
// are rational in general. Ranks may go negative for virtual differences.
struct Bundle {
    SpacePtr base;
    FieldKind kind = FieldKind::real;
    long long rank = 0;
    std::optional<bool> w1_vanishes;
    std::optional<bool> w2_vanishes;
    std::map<std::string, CohClass> classes;
    std::map<int, RationalCohClass> characters; // k -> ch_k
    Validity validity = Validity::exact;

    bool has_class(const std::string& key) const { return classes.count(key) > 0; }
    bool trivial_classes() const { return classes.empty() && characters.empty(); }
};

// Degree of a class slot, independent of any space: p<j> -> 4j, c<i> -> 2i,
// Q1 -> 4, Q2 -> 8, sixth_p2 -> 8. Throws on keys the field kind does not
// carry.
int class_key_degree(FieldKind kind, const std::string& key);

// Validated insertion; the class must live in the key's degree.
void set_class(Bundle& b, const std::string& key, CohClass value);
// Missing keys read as zero.
CohClass get_class(const Bundle& b, const std::string& key);

void set_character(Bundle& b, int k, RationalCohClass value);

// p_j as a rational class: a stored p<j>, else derived from stored spin
// classes via p1 = 2 Q1, p2 = Q1^2 + 2 Q2 (the square needs cup data only
// when Q1 is nonzero). Real bundles only.
RationalCohClass pontrjagin_class(const Bundle& v, int j);

// ch_k as a rational class: a stored entry wins, otherwise the Newton
// expansion in the stored Chern classes is evaluated in the cohomology of
// the base. Complex bundles only. May throw std::runtime_error (missing cup
// data) or std::domain_error (rational action undefined on torsion).
RationalCohClass chern_character_class(const Bundle& e, int k);

// Evaluates a homogeneous polynomial in named classes into H^* of the
// space, using the declared cup products for decomposable monomials.
RationalCohClass evaluate_class_polynomial(const GradedPoly& poly,
                                           const std::map<std::string, RationalCohClass>& bindings,
                                           const BaseSpace& space);

// Whitney sum: ranks add, Chern/spin classes multiply exactly, Pontrjagin
// classes multiply mod 2-torsion (the result carries the weaker flag),
// characters add. A class family is combined only when both sides carry it
// (a bundle with no class data at all counts as carrying zeros); designated
// fractional classes combine additively when both summands have them over
// vanishing lower obstructions, otherwise they are dropped.
Bundle direct_sum(const Bundle& e, const Bundle& f);

// K-theoretic difference: ranks subtract and total classes of the second
// argument act through their multiplicative inverse.
Bundle virtual_difference(const Bundle& e, const Bundle& f);

// c_{2j} = (-1)^j p_j; odd Chern classes of a complexification are
// 2-torsion and are dropped at this level, so the result is flagged.
Bundle complexify(const Bundle& v);

// Conjugate complex bundle: c_i -> (-1)^i c_i, ch_k -> (-1)^k ch_k.
Bundle conjugate(const Bundle& e);

} // namespace ccalc

#endif
