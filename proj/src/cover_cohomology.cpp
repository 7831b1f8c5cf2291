#include "ccalc/cover_cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccalc {

std::optional<int> bso_stage_from_name(const std::string& name) {
    if (name == "so") return 2;
    if (name == "spin") return 4;
    if (name == "string") return 8;
    if (name == "fivebrane") return 9;
    return std::nullopt;
}

CoverRing rational_cover_cohomology(CoverSeries series, int kill_level, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    CoverRing out{series, kill_level, {}, max_degree};
    if (series == CoverSeries::bu) {
        if (kill_level < 2 || kill_level % 2 != 0)
            throw std::invalid_argument("BU stages are the even covers <2k>, k >= 1");
        const int first = kill_level / 2; // <2k> survives c_k, c_{k+1}, ...
        for (int i = first; 2 * i <= max_degree; ++i)
            out.generators.push_back({"c" + std::to_string(i), 2 * i});
        return out;
    }
    int first = 0;
    switch (kill_level) {
        case 2:
        case 4: first = 1; break; // BSO and BSpin agree rationally
        case 8: first = 2; break; // String: p1 transgresses away
        case 9: first = 3; break; // Fivebrane: p2 transgresses away
        default:
            throw std::invalid_argument(
                "BSO stages are <2> (so), <4> (spin), <8> (string), <9> (fivebrane)");
    }
    for (int j = first; 4 * j <= max_degree; ++j)
        out.generators.push_back({"p" + std::to_string(j), 4 * j});
    return out;
}

std::map<int, Int> betti_table(const CoverRing& ring, int up_to) {
    if (up_to > ring.max_degree)
        throw std::invalid_argument("betti_table: degree beyond the ring's bound");
    // Coefficients of prod 1/(1 - t^deg) by the unbounded-knapsack recurrence.
    std::vector<Int> b(static_cast<std::size_t>(up_to) + 1, 0);
    b[0] = 1;
    for (const auto& gen : ring.generators)
        for (int d = gen.degree; d <= up_to; ++d)
            b[static_cast<std::size_t>(d)] += b[static_cast<std::size_t>(d - gen.degree)];
    std::map<int, Int> out;
    for (int d = 0; d <= up_to; ++d) out[d] = b[static_cast<std::size_t>(d)];
    return out;
}

namespace {

// Basis element x_S y^k of the exterior-times-polynomial complex.
struct BasisElement {
    std::uint32_t subset = 0; // bit i set: exterior generator i present
    int y_power = 0;
};

int element_degree(const BasisElement& e, const std::vector<int>& degrees) {
    int d = 2 * e.y_power;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        if (e.subset & (1u << i)) d += degrees[i];
    return d;
}

// Rank of a rational matrix (rows x cols) by Gaussian elimination.
int rational_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

SerrePageResult serre_page_check(const std::vector<int>& exterior_degrees,
                                 std::optional<std::size_t> transgression_target,
                                 int max_degree) {
    if (exterior_degrees.size() > 20)
        throw std::invalid_argument("too many exterior generators for the finite model");
    for (int d : exterior_degrees)
        if (d < 3 || d % 2 == 0)
            throw std::invalid_argument("exterior generators must have odd degree >= 3");
    if (transgression_target) {
        if (*transgression_target >= exterior_degrees.size())
            throw std::invalid_argument("transgression target out of range");
        // d raises total degree by 1 and d(y) has degree 2 + 1.
        if (exterior_degrees[*transgression_target] != 3)
            throw std::invalid_argument("transgression of the degree-2 class must hit degree 3");
    }

    // Enumerate basis elements through max_degree + 1 (the extra degree
    // carries the image needed for cohomology at max_degree).
    const int top = max_degree + 1;
    std::map<int, std::vector<BasisElement>> basis;
    const std::uint32_t subsets = 1u << exterior_degrees.size();
    for (std::uint32_t s = 0; s < subsets; ++s) {
        BasisElement e{s, 0};
        int base_degree = element_degree(e, exterior_degrees);
        if (base_degree > top) continue;
        for (int k = 0; base_degree + 2 * k <= top; ++k)
            basis[base_degree + 2 * k].push_back({s, k});
    }

    // d(x_S y^k) = k * (x_t x_S) y^(k-1), with the Koszul sign of moving
    // x_t past the generators of S that precede it.
    auto differential = [&](const BasisElement& e) -> std::optional<std::pair<BasisElement, Rational>> {
        if (!transgression_target || e.y_power == 0) return std::nullopt;
        const std::uint32_t bit = 1u << *transgression_target;
        if (e.subset & bit) return std::nullopt; // x_t^2 = 0
        int sign = 1;
        for (std::size_t i = 0; i < *transgression_target; ++i)
            if (e.subset & (1u << i)) sign = -sign;
        BasisElement image{e.subset | bit, e.y_power - 1};
        return std::make_pair(image, Rational(sign * e.y_power));
    };

    auto matrix_rank = [&](int degree) -> int {
        auto from = basis.find(degree);
        auto to = basis.find(degree + 1);
        if (from == basis.end() || to == basis.end() || from->second.empty() ||
            to->second.empty())
            return 0;
        std::vector<std::vector<Rational>> m(
            from->second.size(), std::vector<Rational>(to->second.size(), Rational(0)));
        for (std::size_t i = 0; i < from->second.size(); ++i) {
            auto image = differential(from->second[i]);
            if (!image) continue;
            for (std::size_t j = 0; j < to->second.size(); ++j) {
                if (to->second[j].subset == image->first.subset &&
                    to->second[j].y_power == image->first.y_power) {
                    m[i][j] = image->second;
                    break;
                }
            }
        }
        return rational_rank(std::move(m));
    };

    SerrePageResult out;
    for (int d = 0; d <= max_degree; ++d) {
        const int dim = basis.count(d) ? static_cast<int>(basis[d].size()) : 0;
        const int rank_out = matrix_rank(d);
        const int rank_in = d > 0 ? matrix_rank(d - 1) : 0;
        out.cohomology_dims[d] = dim - rank_out - rank_in;
    }
    return out;
}

} // namespace ccalc
