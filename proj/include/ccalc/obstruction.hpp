#ifndef CCALC_OBSTRUCTION_HPP
#define CCALC_OBSTRUCTION_HPP

#include "ccalc/bundle.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ccalc {

enum class AnomalyModel { heterotic_gs, type_iia_dual, heterotic_dual, reduced };

// Normalization metadata: factor * i^i_power * (2*pi)^two_pi_power.
// Arithmetic never touches it; reports render it.
struct Prefactor {
    Rational factor = 1;
    int i_power = 0;
    int two_pi_power = 0;

    std::string text() const;
};

// Homogeneous polynomial in p1, ch2 (degree 4) and p2, ch4 (degree 8)
// expressing the failure of an H-field to be closed.
struct AnomalyPolynomial {
    AnomalyModel model;
    GradedPoly value;
    Prefactor normalization;
};

// Shared coefficient ring for anomaly polynomials: p1, ch2, p2, ch4.
RingPtr anomaly_ring();

// heterotic_gs   : ch2 - p1/2                                (degree 4)
// type_iia_dual  : (p2 - (p1/2)^2)/48                        (degree 8)
// heterotic_dual : ch4 - p1 ch2/48 + p1^2/64 - p2/48         (degree 8)
// reduced        : ch4 - p2/48                               (degree 8)
AnomalyPolynomial anomaly_polynomial(AnomalyModel model);

// Deletes every decomposable monomial (two or more positive-degree
// factors); such classes suspend to zero. heterotic_dual strips to reduced.
AnomalyPolynomial strip_decomposables(const AnomalyPolynomial& a);

struct AnomalyEvaluation {
    RationalCohClass value;             // rational evaluation in H^4 or H^8
    std::optional<CohClass> integral;   // present when the free part is integral
    std::string witness;                // non-integrality witness when not
    std::string note;                   // torsion coordinates that resisted evaluation
};

// Evaluates the model polynomial on p1, p2 of the (real) tangent bundle and
// ch2, ch4 of the (complex) gauge bundle; a missing gauge bundle
// contributes zero characters.
AnomalyEvaluation evaluate_anomaly(AnomalyModel model, const Bundle& tangent,
                                   const Bundle* gauge);

enum class Level { oriented, spin, string, fivebrane };
enum class Verdict { obstructed, undetermined, admits };
enum class LadderMode { manifold, pair };
enum class FivebraneNorm { six, fortyeight };

std::string to_string(Level level);
std::string to_string(Verdict v);

struct LevelReport {
    Verdict own = Verdict::undetermined;      // from this level's data alone
    Verdict verdict = Verdict::undetermined;  // combined with the lower levels
    std::optional<CohClass> obstruction;      // difference class when unique
    std::optional<Int> solution_count;        // size of the fractional-class torsor
    std::string note;
};

struct TorsorDescription {
    int degree = 0;
    bool presented = false;
    GroupPresentation acting;
    bool quotient_applied = false;
    std::string caveat;
};

struct ObstructionReport {
    LadderMode mode = LadderMode::manifold;
    FivebraneNorm normalization = FivebraneNorm::six;
    std::array<LevelReport, 4> levels; // indexed by Level
    Verdict fivebrane_six = Verdict::undetermined;       // under either normalization,
    Verdict fivebrane_fortyeight = Verdict::undetermined; // before combining
    TorsorDescription string_torsor;
    TorsorDescription fivebrane_torsor;

    const LevelReport& at(Level level) const {
        return levels[static_cast<std::size_t>(level)];
    }
};

// Runs the oriented -> spin -> string -> fivebrane ladder on the tangent
// bundle of `space`, against the gauge bundle in pair mode. A level's
// combined verdict can only be as strong as every level below it. The
// default fivebrane normalization is six in manifold mode and fortyeight
// in pair mode.
ObstructionReport structure_ladder(const BaseSpace& space, const Bundle& tangent,
                                   const Bundle* gauge, LadderMode mode,
                                   std::optional<FivebraneNorm> normalization = std::nullopt);

// Solutions of 8 y = sixth_p2: nonempty exactly when the mod-8 reduction of
// the sixth of p2 vanishes.
std::vector<CohClass> refine_division_by_8(const BaseSpace& space, const CohClass& sixth_p2);

// The group acting on the set of structures at the given level: H^3 for
// string, H^7 for fivebrane, with the user-declared image subgroup divided
// out when present; otherwise an upper bound.
TorsorDescription count_structures(const BaseSpace& space, Level level,
                                   const std::vector<CohClass>* quotient_image);

} // namespace ccalc

#endif
