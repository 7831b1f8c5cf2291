#ifndef CCALC_CHAR_CALC_HPP
#define CCALC_CHAR_CALC_HPP

#include "ccalc/graded_ring.hpp"

#include <utility>
#include <vector>

namespace ccalc {

enum class ClassKind { chern, pontrjagin, chern_character, spin_q };

// Whether an identity on integral classes holds on the nose or only after
// discarding elements of order 2. Once a computation picks up the weaker
// flag it never recovers the stronger one.
enum class Validity { exact, mod_2_torsion };

inline Validity combine(Validity a, Validity b) {
    return (a == Validity::mod_2_torsion || b == Validity::mod_2_torsion)
               ? Validity::mod_2_torsion
               : Validity::exact;
}

// A total class 1 + x_1 + x_2 + ... (or rank + ch_1 + ... for characters).
struct TotalClass {
    ClassKind kind;
    GradedPoly value;
};

// k-th power sum of the Chern roots, from c_1..c_n by the Newton recurrence
//   s_k = c_1 s_{k-1} - c_2 s_{k-2} + ... + (-1)^{k-1} k c_k.
// `chern` is indexed from c_1; entries beyond its length are zero. Each c_i
// must be homogeneous of degree 2i. s_0 = rank.
GradedPoly power_sum_from_chern(const std::vector<GradedPoly>& chern, int k,
                                const Rational& rank = 0);

// ch_k = s_k / k!; ch_0 = rank.
GradedPoly chern_character(const std::vector<GradedPoly>& chern, int k,
                           const Rational& rank = 0);

struct SplitBundle {
    std::vector<GradedPoly> chern; // c_i = elementary symmetric in the roots
    GradedPoly ch_k;               // (sum of k-th powers of the roots) / k!
};

// Brute-force model of a bundle split into line bundles with the given
// degree-2 roots. Serves as the independent check for the Newton route.
SplitBundle splitting_oracle(const std::vector<GradedPoly>& roots, int k);

// p_j = (-1)^j c_{2j} for the Chern classes of a complexified real bundle.
// Odd Chern classes of a complexification are 2-torsion and are taken as
// zero at the rational level.
std::vector<GradedPoly> pontrjagin_from_complexification(const std::vector<GradedPoly>& chern);

// Total class of a direct sum. Multiplicative for chern / pontrjagin /
// spin_q, additive for chern_character. Pontrjagin results only hold mod
// 2-torsion.
std::pair<TotalClass, Validity> whitney_sum(const TotalClass& a, const TotalClass& b);

// Integral spin generators at the rational level: Q1 = p1/2 and
// Q2 = p2/2 - p1^2/8, inverting p1 = 2 Q1, p2 = Q1^2 + 2 Q2.
std::pair<GradedPoly, GradedPoly> spin_classes(const GradedPoly& p1, const GradedPoly& p2);

// Value of c_k on the generator of pi_2k(BU): (k-1)!.
Int generator_pairing_constant(int k);

} // namespace ccalc

#endif
