#include "ccalc/obstruction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ccalc {

std::string Prefactor::text() const {
    // Fold even powers of i into the sign.
    Rational f = factor;
    int ip = ((i_power % 4) + 4) % 4;
    if (ip == 2) {
        f = -f;
        ip = 0;
    } else if (ip == 3) {
        f = -f;
        ip = 1;
    }
    std::ostringstream out;
    const Int num = numerator(f), den = denominator(f);
    std::string head = num.str();
    if (ip == 1) head += "*i";
    if (two_pi_power == 0) {
        out << head;
        if (den != 1) out << "/" << den.str();
        return out.str();
    }
    if (two_pi_power > 0) {
        out << head << "*(2pi)";
        if (two_pi_power != 1) out << "^" << two_pi_power;
        if (den != 1) out << "/" << den.str();
        return out.str();
    }
    out << head << "/(";
    if (den != 1) out << den.str() << "*";
    out << "(2pi)^" << -two_pi_power << ")";
    return out.str();
}

RingPtr anomaly_ring() {
    static const RingPtr ring =
        Ring::make({{"p1", 4}, {"ch2", 4}, {"p2", 8}, {"ch4", 8}}, 16);
    return ring;
}

AnomalyPolynomial anomaly_polynomial(AnomalyModel model) {
    auto ring = anomaly_ring();
    auto p1 = GradedPoly::generator(ring, "p1");
    auto p2 = GradedPoly::generator(ring, "p2");
    auto ch2 = GradedPoly::generator(ring, "ch2");
    auto ch4 = GradedPoly::generator(ring, "ch4");
    switch (model) {
        case AnomalyModel::heterotic_gs:
            // (1/2pi) dH3 = ch2 - p1/2
            return {model, ch2 - p1.scaled(Rational(1, 2)), {1, 0, -1}};
        case AnomalyModel::type_iia_dual:
            // dH7 = (p2 - (p1/2)^2)/48
            return {model,
                    (p2 - (p1 * p1).scaled(Rational(1, 4))).scaled(Rational(1, 48)),
                    {1, 0, 0}};
        case AnomalyModel::heterotic_dual:
            // dH7 = 2pi (ch4 - p1 ch2/48 + p1^2/64 - p2/48)
            return {model,
                    ch4 - (p1 * ch2).scaled(Rational(1, 48)) + (p1 * p1).scaled(Rational(1, 64)) -
                        p2.scaled(Rational(1, 48)),
                    {1, 0, 1}};
        case AnomalyModel::reduced:
            return {model, ch4 - p2.scaled(Rational(1, 48)), {1, 0, 1}};
    }
    throw std::invalid_argument("unknown anomaly model");
}

AnomalyPolynomial strip_decomposables(const AnomalyPolynomial& a) {
    AnomalyPolynomial out{a.model, GradedPoly::zero(a.value.ring()), a.normalization};
    for (const auto& [exps, coeff] : a.value.terms()) {
        std::uint64_t factors = 0;
        for (auto e : exps) factors += e;
        if (factors <= 1) out.value.add_term(exps, coeff);
    }
    return out;
}

AnomalyEvaluation evaluate_anomaly(AnomalyModel model, const Bundle& tangent,
                                   const Bundle* gauge) {
    if (tangent.kind != FieldKind::real)
        throw std::invalid_argument("evaluate_anomaly: tangent bundle must be real");
    if (gauge && gauge->kind != FieldKind::complex)
        throw std::invalid_argument("evaluate_anomaly: gauge bundle must be complex");
    if (gauge && gauge->base != tangent.base)
        throw std::invalid_argument("evaluate_anomaly: bundles live over different spaces");

    const BaseSpace& space = *tangent.base;
    std::map<std::string, RationalCohClass> bindings;
    bindings["p1"] = pontrjagin_class(tangent, 1);
    bindings["p2"] = pontrjagin_class(tangent, 2);
    bindings["ch2"] = gauge ? chern_character_class(*gauge, 2) : space.rational_zero(4);
    bindings["ch4"] = gauge ? chern_character_class(*gauge, 4) : space.rational_zero(8);

    AnomalyPolynomial poly = anomaly_polynomial(model);
    AnomalyEvaluation out{space.rational_zero(*poly.value.min_degree()), std::nullopt, "", ""};
    try {
        out.value = evaluate_class_polynomial(poly.value, bindings, space);
    } catch (const std::domain_error& err) {
        out.note = err.what();
        return out;
    }
    std::string witness;
    out.integral = space.to_integral(out.value, &witness);
    if (!out.integral) out.witness = witness;
    return out;
}

std::string to_string(Level level) {
    switch (level) {
        case Level::oriented: return "oriented";
        case Level::spin: return "spin";
        case Level::string: return "string";
        case Level::fivebrane: return "fivebrane";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::admits: return "admits";
        case Verdict::obstructed: return "obstructed";
        case Verdict::undetermined: return "undetermined";
    }
    return "?";
}

namespace {

Verdict weaker(Verdict a, Verdict b) { return std::min(a, b); }

Verdict verdict_from_flag(std::optional<bool> vanishes) {
    if (!vanishes) return Verdict::undetermined;
    return *vanishes ? Verdict::admits : Verdict::obstructed;
}

// Divisibility step shared by the string and fivebrane levels: does the
// solution set of divisor * y = cls contain target (or the designated
// fractional class, when one is given)?
struct DivisionCheck {
    Verdict verdict = Verdict::undetermined;
    std::optional<CohClass> obstruction;
    Int solutions = 0;
    std::string note;
};

DivisionCheck check_division(const BaseSpace& space, const CohClass& cls, const Int& divisor,
                             const CohClass& target, const CohClass* designated) {
    DivisionCheck out;
    auto sols = space.divide_class(cls, divisor);
    out.solutions = static_cast<Int>(sols.size());
    if (designated) {
        // Consistency of the designation with the class it divides.
        if (!space.contains(sols, *designated)) {
            out.verdict = Verdict::obstructed;
            out.note = "designated fractional class does not divide the stored class";
            return out;
        }
        out.verdict = *designated == target ? Verdict::admits : Verdict::obstructed;
        if (out.verdict == Verdict::obstructed)
            out.obstruction = space.add(*designated, space.negate(target));
        return out;
    }
    if (sols.empty()) {
        out.verdict = Verdict::obstructed;
        out.note = "class is not divisible by " + divisor.str();
        return out;
    }
    if (space.contains(sols, target)) {
        out.verdict = Verdict::admits;
        return out;
    }
    out.verdict = Verdict::obstructed;
    if (sols.size() == 1) out.obstruction = space.add(sols.front(), space.negate(target));
    else out.note = "no fractional class in the solution torsor matches the target";
    return out;
}

} // namespace

std::vector<CohClass> refine_division_by_8(const BaseSpace& space, const CohClass& sixth_p2) {
    return space.divide_class(sixth_p2, 8);
}

TorsorDescription count_structures(const BaseSpace& space, Level level,
                                   const std::vector<CohClass>* quotient_image) {
    if (level != Level::string && level != Level::fivebrane)
        throw std::invalid_argument("count_structures: level must be string or fivebrane");
    TorsorDescription out;
    out.degree = level == Level::string ? 3 : 7;
    if (!space.has_group(out.degree) && out.degree <= space.dimension()) {
        throw std::invalid_argument("count_structures: H^" + std::to_string(out.degree) +
                                    " of " + space.name() + " is not presented");
    }
    out.presented = true;
    const DegreeGroup& h = space.group(out.degree);
    if (quotient_image && !quotient_image->empty()) {
        out.acting = quotient_presentation(h, *quotient_image);
        out.quotient_applied = true;
        out.caveat = "quotient by the declared image";
    } else {
        out.acting.free_rank = h.free_rank;
        out.acting.torsion = h.torsion_orders;
        out.quotient_applied = false;
        out.caveat = h.trivial() ? "unique structure" : "upper bound - quotient undetermined";
    }
    if (out.acting.free_rank == 0 && out.acting.torsion.empty()) out.caveat = "unique structure";
    return out;
}

ObstructionReport structure_ladder(const BaseSpace& space, const Bundle& tangent,
                                   const Bundle* gauge, LadderMode mode,
                                   std::optional<FivebraneNorm> normalization) {
    if (tangent.kind != FieldKind::real)
        throw std::invalid_argument("structure_ladder: tangent bundle must be real");
    if (gauge && gauge->kind != FieldKind::complex)
        throw std::invalid_argument("structure_ladder: gauge bundle must be complex");
    if (gauge && gauge->base != tangent.base)
        throw std::invalid_argument("structure_ladder: bundles live over different spaces");
    if (mode == LadderMode::pair && !gauge)
        mode = LadderMode::manifold; // a missing gauge bundle degenerates the pair

    ObstructionReport report;
    report.mode = mode;
    report.normalization = normalization.value_or(
        mode == LadderMode::pair ? FivebraneNorm::fortyeight : FivebraneNorm::six);

    auto& oriented = report.levels[static_cast<std::size_t>(Level::oriented)];
    auto& spin = report.levels[static_cast<std::size_t>(Level::spin)];
    auto& string_level = report.levels[static_cast<std::size_t>(Level::string)];
    auto& fivebrane = report.levels[static_cast<std::size_t>(Level::fivebrane)];

    // w1, w2: user-asserted vanishing; in pair mode both bundles must carry
    // the structure.
    oriented.own = verdict_from_flag(tangent.w1_vanishes);
    spin.own = verdict_from_flag(tangent.w2_vanishes);
    if (mode == LadderMode::pair && gauge) {
        oriented.own = weaker(oriented.own, verdict_from_flag(gauge->w1_vanishes));
        spin.own = weaker(spin.own, verdict_from_flag(gauge->w2_vanishes));
    }

    // String level: the designated half p1 (or some solution of 2y = p1)
    // must match ch2 of the gauge bundle (pair) or vanish (manifold).
    {
        std::string witness;
        std::optional<CohClass> target;
        RationalCohClass target_rational = space.rational_zero(4);
        bool target_known = true;
        if (mode == LadderMode::pair && gauge) {
            try {
                target_rational = chern_character_class(*gauge, 2);
                target = space.to_integral(target_rational, &witness);
            } catch (const std::exception& err) {
                target_known = false;
                string_level.note = err.what();
            }
        } else {
            target = space.zero_class(4);
        }
        if (!target_known) {
            string_level.own = Verdict::undetermined;
        } else if (!target) {
            string_level.own = Verdict::obstructed;
            string_level.note = "ch2 of the gauge bundle is not integral: " + witness;
        } else {
            auto p1_rational = pontrjagin_class(tangent, 1);
            auto p1 = space.to_integral(p1_rational);
            if (!p1) throw std::logic_error("p1 evaluated to a fractional class");
            const CohClass* designated =
                tangent.has_class("Q1") ? &tangent.classes.at("Q1") : nullptr;
            auto check = check_division(space, *p1, 2, *target, designated);
            string_level.own = check.verdict;
            string_level.obstruction = check.obstruction;
            string_level.solution_count = check.solutions;
            if (string_level.note.empty()) string_level.note = check.note;
        }
    }

    // Fivebrane level, under both normalizations.
    {
        auto p2_rational = pontrjagin_class(tangent, 2);
        auto p2 = space.to_integral(p2_rational);
        if (!p2) throw std::logic_error("p2 evaluated to a fractional class");
        const CohClass* sixth =
            tangent.has_class("sixth_p2") ? &tangent.classes.at("sixth_p2") : nullptr;

        std::optional<RationalCohClass> ch4_rational;
        std::string ch4_error;
        if (mode == LadderMode::pair && gauge) {
            try {
                ch4_rational = chern_character_class(*gauge, 4);
            } catch (const std::exception& err) {
                ch4_error = err.what();
            }
        } else {
            ch4_rational = space.rational_zero(8);
        }

        auto run_norm = [&](FivebraneNorm norm) -> DivisionCheck {
            DivisionCheck out;
            if (!ch4_rational) {
                out.verdict = Verdict::undetermined;
                out.note = ch4_error;
                return out;
            }
            if (norm == FivebraneNorm::fortyeight) {
                // p2 / 48 = ch4: ch4 must be integral and divide accordingly.
                std::string witness;
                auto target = space.to_integral(*ch4_rational, &witness);
                if (!target) {
                    out.verdict = Verdict::obstructed;
                    out.note = "ch4 of the gauge bundle is not integral: " + witness;
                    return out;
                }
                if (sixth) return check_division(space, *sixth, 8, *target, nullptr);
                return check_division(space, *p2, 48, *target, nullptr);
            }
            // six: the sixth of p2 must equal 8 ch4.
            std::string witness;
            std::optional<CohClass> target;
            try {
                target = space.to_integral(space.rscale(8, *ch4_rational), &witness);
            } catch (const std::domain_error& err) {
                out.verdict = Verdict::undetermined;
                out.note = err.what();
                return out;
            }
            if (!target) {
                out.verdict = Verdict::obstructed;
                out.note = "8 ch4 of the gauge bundle is not integral: " + witness;
                return out;
            }
            return check_division(space, *p2, 6, *target, sixth);
        };

        auto six = run_norm(FivebraneNorm::six);
        auto fortyeight = run_norm(FivebraneNorm::fortyeight);
        report.fivebrane_six = six.verdict;
        report.fivebrane_fortyeight = fortyeight.verdict;
        const auto& chosen = report.normalization == FivebraneNorm::six ? six : fortyeight;
        fivebrane.own = chosen.verdict;
        fivebrane.obstruction = chosen.obstruction;
        fivebrane.solution_count = chosen.solutions;
        fivebrane.note = chosen.note;
    }

    // A lift through a higher cover implies lifts through all the lower
    // ones, so combined verdicts are monotone down the ladder.
    Verdict running = Verdict::admits;
    for (auto& level : report.levels) {
        running = weaker(running, level.own);
        level.verdict = running;
    }

    if (space.has_group(3) || space.dimension() < 3)
        report.string_torsor = count_structures(space, Level::string, space.image(3));
    if (space.has_group(7) || space.dimension() < 7)
        report.fivebrane_torsor = count_structures(space, Level::fivebrane, space.image(7));
    return report;
}

} // namespace ccalc
