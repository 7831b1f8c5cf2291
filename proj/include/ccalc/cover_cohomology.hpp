#ifndef CCALC_COVER_COHOMOLOGY_HPP
#define CCALC_COVER_COHOMOLOGY_HPP

#include "ccalc/graded_ring.hpp"
#include "ccalc/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ccalc {

enum class CoverSeries { bu, bso };

// Rational cohomology of one connected-cover stage of BU or BSO, as a free
// graded polynomial ring on the surviving generators.
struct CoverRing {
    CoverSeries series;
    int kill_level = 0; // the <n> of the cover
    std::vector<Generator> generators;
    int max_degree = 0;
};

// Stage names on the BSO side: so -> 2, spin -> 4, string -> 8,
// fivebrane -> 9.
std::optional<int> bso_stage_from_name(const std::string& name);

// Iterated transgression quotient: starting from P[c1, c2, ...] (BU) or
// P[p1, p2, ...] (BSO, rationally) each stage kills its lowest generator.
// BU stages are the even <2k> covers, surviving generators c_k and up; BSO
// stages are <2> (SO), <4> (Spin, rationally the same ring), <8> (String,
// generators from p2) and <9> (Fivebrane, generators from p3).
CoverRing rational_cover_cohomology(CoverSeries series, int kill_level, int max_degree);

// Betti numbers of the free graded polynomial ring: the degree-d count of
// monomials in the generators, i.e. the coefficients of
// prod_gens 1/(1 - t^degree).
std::map<int, Int> betti_table(const CoverRing& ring, int up_to);

// Cohomology of the complex Lambda(x_odd...) tensor Q[y] (y of degree 2)
// with the derivation extending d(y) = x_target by the Leibniz rule, so
// d(z y^k) = k x_target z y^(k-1). This is the page of the K(Z,2)-fibration
// computation; with a single degree-3 generator everything above degree 0
// cancels.
struct SerrePageResult {
    std::map<int, int> cohomology_dims; // degree -> dimension over Q
};

SerrePageResult serre_page_check(const std::vector<int>& exterior_degrees,
                                 std::optional<std::size_t> transgression_target,
                                 int max_degree);

} // namespace ccalc

#endif
