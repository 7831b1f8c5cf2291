#include "ccalc/char_calc.hpp"

#include <stdexcept>

namespace ccalc {

namespace {

const GradedPoly& chern_at(const std::vector<GradedPoly>& chern, int i,
                           const GradedPoly& zero) {
    if (i < 1 || i > static_cast<int>(chern.size())) return zero;
    return chern[static_cast<std::size_t>(i - 1)];
}

void check_chern_grading(const std::vector<GradedPoly>& chern) {
    for (std::size_t i = 0; i < chern.size(); ++i) {
        if (!chern[i].is_homogeneous(2 * static_cast<int>(i + 1)))
            throw std::invalid_argument("c_" + std::to_string(i + 1) +
                                        " is not homogeneous of degree " +
                                        std::to_string(2 * (i + 1)));
    }
}

} // namespace

GradedPoly power_sum_from_chern(const std::vector<GradedPoly>& chern, int k,
                                const Rational& rank) {
    if (k < 0) throw std::invalid_argument("power sum index must be nonnegative");
    if (chern.empty()) throw std::invalid_argument("empty Chern class list");
    check_chern_grading(chern);
    const RingPtr ring = chern.front().ring();
    const GradedPoly zero = GradedPoly::zero(ring);
    if (k == 0) return GradedPoly::constant(ring, rank);

    std::vector<GradedPoly> s;
    s.push_back(GradedPoly::constant(ring, rank)); // s_0, unused by the recurrence
    for (int m = 1; m <= k; ++m) {
        GradedPoly sm = GradedPoly::zero(ring);
        int sign = 1;
        for (int i = 1; i < m; ++i) {
            const GradedPoly& ci = chern_at(chern, i, zero);
            if (!ci.is_zero())
                sm += sign > 0 ? ci * s[static_cast<std::size_t>(m - i)]
                               : -(ci * s[static_cast<std::size_t>(m - i)]);
            sign = -sign;
        }
        sm += chern_at(chern, m, zero).scaled(sign * Rational(m));
        s.push_back(std::move(sm));
    }
    return s.back();
}

GradedPoly chern_character(const std::vector<GradedPoly>& chern, int k,
                           const Rational& rank) {
    GradedPoly sk = power_sum_from_chern(chern, k, rank);
    return sk.scaled(Rational(1) / Rational(factorial(k)));
}

SplitBundle splitting_oracle(const std::vector<GradedPoly>& roots, int k) {
    if (roots.empty()) throw std::invalid_argument("splitting oracle needs at least one root");
    if (k < 0) throw std::invalid_argument("character index must be nonnegative");
    const RingPtr ring = roots.front().ring();
    for (const auto& r : roots)
        if (!r.is_homogeneous(2))
            throw std::invalid_argument("roots must be homogeneous of degree 2");

    SplitBundle out{{}, GradedPoly::zero(ring)};

    // Elementary symmetric polynomials via the product recurrence
    // prod_i (1 + x_i), one root at a time; e[j] holds e_{j+1}.
    std::vector<GradedPoly> e;
    e.reserve(roots.size());
    for (const auto& root : roots) {
        std::vector<GradedPoly> next(e.size() + 1, GradedPoly::zero(ring));
        for (std::size_t j = 0; j < e.size(); ++j) next[j] = e[j];
        next[0] += root;
        for (std::size_t j = 1; j <= e.size(); ++j) next[j] += e[j - 1] * root;
        e = std::move(next);
    }
    out.chern = std::move(e);

    GradedPoly sum = GradedPoly::zero(ring);
    if (k == 0) {
        sum = GradedPoly::constant(ring, Rational(roots.size()));
    } else {
        for (const auto& root : roots) sum += root.pow(static_cast<unsigned>(k));
    }
    out.ch_k = sum.scaled(Rational(1) / Rational(factorial(k)));
    return out;
}

std::vector<GradedPoly> pontrjagin_from_complexification(const std::vector<GradedPoly>& chern) {
    check_chern_grading(chern);
    std::vector<GradedPoly> p;
    for (std::size_t j = 1; 2 * j <= chern.size(); ++j) {
        const GradedPoly& c2j = chern[2 * j - 1];
        p.push_back(j % 2 == 1 ? -c2j : c2j);
    }
    return p;
}

std::pair<TotalClass, Validity> whitney_sum(const TotalClass& a, const TotalClass& b) {
    if (a.kind != b.kind) throw std::invalid_argument("whitney_sum: class kind mismatch");
    TotalClass out{a.kind, GradedPoly::zero(a.value.ring())};
    if (a.kind == ClassKind::chern_character) {
        out.value = a.value + b.value;
    } else {
        out.value = a.value * b.value;
    }
    Validity v = a.kind == ClassKind::pontrjagin ? Validity::mod_2_torsion : Validity::exact;
    return {std::move(out), v};
}

std::pair<GradedPoly, GradedPoly> spin_classes(const GradedPoly& p1, const GradedPoly& p2) {
    if (!p1.is_homogeneous(4)) throw std::invalid_argument("p1 must be homogeneous of degree 4");
    if (!p2.is_homogeneous(8)) throw std::invalid_argument("p2 must be homogeneous of degree 8");
    GradedPoly q1 = p1.scaled(Rational(1, 2));
    GradedPoly q2 = p2.scaled(Rational(1, 2)) - (p1 * p1).scaled(Rational(1, 8));
    return {std::move(q1), std::move(q2)};
}

Int generator_pairing_constant(int k) {
    if (k < 1) throw std::invalid_argument("pairing constant defined for k >= 1");
    return factorial(k - 1);
}

} // namespace ccalc
