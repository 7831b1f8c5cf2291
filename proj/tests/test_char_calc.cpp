#include "ccalc/char_calc.hpp"

#include "doctest.h"

#include <random>

using namespace ccalc;

namespace {

// Ring of Chern classes c1..cn with truncation deep enough for ch_k.
RingPtr chern_ring(int n, int trunc) {
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i) gens.push_back({"c" + std::to_string(i), 2 * i});
    return Ring::make(std::move(gens), trunc);
}

std::vector<GradedPoly> chern_generators(const RingPtr& ring, int n) {
    std::vector<GradedPoly> c;
    for (int i = 1; i <= n; ++i) c.push_back(GradedPoly::generator(ring, "c" + std::to_string(i)));
    return c;
}

} // namespace

TEST_CASE("ch_0 is the rank and ch_1 is c1") {
    auto ring = chern_ring(2, 8);
    auto c = chern_generators(ring, 2);
    CHECK(chern_character(c, 0, 5) == GradedPoly::constant(ring, 5));
    CHECK(chern_character(c, 1) == c[0]);
}

TEST_CASE("ch_2 matches the split computation with three roots") {
    auto ring = chern_ring(2, 8);
    auto c = chern_generators(ring, 2);
    auto expected = (c[0] * c[0] - c[1].scaled(2)).scaled(Rational(1, 2));
    CHECK(chern_character(c, 2) == expected);
}

TEST_CASE("degree-4 character expansion") {
    auto ring = chern_ring(4, 8);
    auto c = chern_generators(ring, 4);
    auto ch4 = chern_character(c, 4);
    auto expected = (c[0].pow(4) - (c[0] * c[0] * c[1]).scaled(4) + (c[0] * c[2]).scaled(4) +
                     (c[1] * c[1]).scaled(2) - c[3].scaled(4))
                        .scaled(Rational(1, 24));
    CHECK(ch4 == expected);
}

TEST_CASE("degree-4 character with vanishing lower classes") {
    auto ring = chern_ring(4, 8);
    auto zero = GradedPoly::zero(ring);
    auto c4 = GradedPoly::generator(ring, "c4");
    std::vector<GradedPoly> c{zero, zero, zero, c4};
    CHECK(chern_character(c, 4) == c4.scaled(Rational(-1, 6)));
}

TEST_CASE("character rejects classes in the wrong degree") {
    auto ring = chern_ring(2, 8);
    auto c1 = GradedPoly::generator(ring, "c1");
    CHECK_THROWS_AS(chern_character({c1, c1}, 2), std::invalid_argument);
}

TEST_CASE("splitting oracle on symmetric roots") {
    auto ring = Ring::make({{"x", 2}}, 16);
    auto x = GradedPoly::generator(ring, "x");
    auto split = splitting_oracle({x, -x}, 2);
    CHECK(split.chern[0].is_zero());
    CHECK(split.chern[1] == -(x * x));
    CHECK(split.ch_k == x * x);
}

TEST_CASE("single root behaves like a line bundle") {
    auto ring = Ring::make({{"x", 2}}, 16);
    auto x = GradedPoly::generator(ring, "x");
    for (int k = 0; k <= 6; ++k) {
        auto split = splitting_oracle({x}, k);
        REQUIRE(split.chern.size() == 1);
        CHECK(split.chern[0] == x);
        auto expected = k == 0 ? GradedPoly::constant(ring, 1)
                               : x.pow(static_cast<unsigned>(k)).scaled(
                                     Rational(1) / Rational(factorial(k)));
        CHECK(split.ch_k == expected);
    }
}

TEST_CASE("Newton route agrees with the splitting oracle") {
    auto ring = Ring::make({{"x1", 2}, {"x2", 2}, {"x3", 2}, {"x4", 2}, {"x5", 2}, {"x6", 2}}, 16);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> mult(-3, 3);
    std::uniform_int_distribution<std::size_t> which(0, 5);
    std::uniform_int_distribution<int> count(1, 6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<GradedPoly> roots;
        const int n = count(rng);
        for (int i = 0; i < n; ++i)
            roots.push_back(GradedPoly::generator(ring, which(rng)).scaled(mult(rng)));
        for (int k = 1; k <= 8; ++k) {
            auto split = splitting_oracle(roots, k);
            CHECK(chern_character(split.chern, k, Rational(n)) == split.ch_k);
        }
    }
}

TEST_CASE("character of a tensor of two line bundles") {
    auto ring = Ring::make({{"x", 2}, {"y", 2}}, 16);
    auto x = GradedPoly::generator(ring, "x");
    auto y = GradedPoly::generator(ring, "y");
    for (int k = 1; k <= 6; ++k) {
        auto split = splitting_oracle({x + y}, k);
        auto expected = (x + y).pow(static_cast<unsigned>(k))
                            .scaled(Rational(1) / Rational(factorial(k)));
        CHECK(split.ch_k == expected);
    }
}

TEST_CASE("characters add over concatenated root lists") {
    auto ring = Ring::make({{"x", 2}, {"y", 2}, {"z", 2}}, 12);
    auto x = GradedPoly::generator(ring, "x");
    auto y = GradedPoly::generator(ring, "y");
    auto z = GradedPoly::generator(ring, "z");
    for (int k = 1; k <= 5; ++k) {
        auto whole = splitting_oracle({x, y, z}, k);
        auto left = splitting_oracle({x}, k);
        auto right = splitting_oracle({y, z}, k);
        CHECK(whole.ch_k == left.ch_k + right.ch_k);
    }
}

TEST_CASE("sign rule for Pontrjagin classes of a complexification") {
    auto ring = Ring::make({{"u", 4}, {"v", 8}}, 12);
    auto u = GradedPoly::generator(ring, "u");
    auto v = GradedPoly::generator(ring, "v");
    auto zero = GradedPoly::zero(ring);
    std::vector<GradedPoly> c{zero, -u, zero, v};
    auto p = pontrjagin_from_complexification(c);
    REQUIRE(p.size() == 2);
    CHECK(p[0] == u);
    CHECK(p[1] == v);

    std::vector<GradedPoly> trivial{zero, zero, zero, zero};
    for (const auto& pj : pontrjagin_from_complexification(trivial)) CHECK(pj.is_zero());
}

TEST_CASE("complexified formal bundle has p_j elementary in the squared roots") {
    auto ring = Ring::make({{"a", 2}, {"b", 2}}, 16);
    auto a = GradedPoly::generator(ring, "a");
    auto b = GradedPoly::generator(ring, "b");
    // Complexification of a formal real bundle with roots +-a, +-b.
    auto split = splitting_oracle({a, -a, b, -b}, 1);
    auto p = pontrjagin_from_complexification(split.chern);
    REQUIRE(p.size() == 2);
    CHECK(p[0] == a * a + b * b);       // e_1(a^2, b^2)
    CHECK(p[1] == a * a * (b * b));     // e_2(a^2, b^2)
}

TEST_CASE("whitney sum of total classes") {
    auto ring = Ring::make({{"u", 4}, {"v", 8}}, 8);
    auto one = GradedPoly::constant(ring, 1);
    auto u = GradedPoly::generator(ring, "u");
    auto v = GradedPoly::generator(ring, "v");

    SUBCASE("pontrjagin is multiplicative mod 2-torsion") {
        TotalClass tm{ClassKind::pontrjagin, one + v.scaled(3)};     // p1 = 0
        TotalClass e{ClassKind::pontrjagin, one + v.scaled(5)};
        auto [sum, validity] = whitney_sum(tm, e);
        CHECK(validity == Validity::mod_2_torsion);
        CHECK(sum.value.homogeneous_part(8) == v.scaled(8));
    }
    SUBCASE("chern with a trivial summand is unchanged") {
        TotalClass e{ClassKind::chern, one + u + v};
        TotalClass trivial{ClassKind::chern, GradedPoly::constant(ring, 3)};
        // Total class of a trivial bundle is 1 regardless of rank.
        trivial.value = one;
        auto [sum, validity] = whitney_sum(e, trivial);
        CHECK(validity == Validity::exact);
        CHECK(sum.value == e.value);
    }
    SUBCASE("characters add") {
        TotalClass a{ClassKind::chern_character, GradedPoly::constant(ring, 2) + u};
        TotalClass b{ClassKind::chern_character, GradedPoly::constant(ring, 3) + v};
        auto [sum, validity] = whitney_sum(a, b);
        CHECK(validity == Validity::exact);
        CHECK(sum.value == GradedPoly::constant(ring, 5) + u + v);
    }
    SUBCASE("kind mismatch is rejected") {
        TotalClass a{ClassKind::chern, one};
        TotalClass b{ClassKind::pontrjagin, one};
        CHECK_THROWS_AS(whitney_sum(a, b), std::invalid_argument);
    }
}

TEST_CASE("whitney sum is associative and unital") {
    auto ring = Ring::make({{"u", 4}, {"v", 8}}, 12);
    auto one = GradedPoly::constant(ring, 1);
    auto u = GradedPoly::generator(ring, "u");
    auto v = GradedPoly::generator(ring, "v");
    TotalClass a{ClassKind::pontrjagin, one + u};
    TotalClass b{ClassKind::pontrjagin, one + v.scaled(2)};
    TotalClass c{ClassKind::pontrjagin, one + u.scaled(-1) + v};
    TotalClass unit{ClassKind::pontrjagin, one};
    auto ab_c = whitney_sum(whitney_sum(a, b).first, c).first;
    auto a_bc = whitney_sum(a, whitney_sum(b, c).first).first;
    CHECK(ab_c.value == a_bc.value);
    CHECK(whitney_sum(a, unit).first.value == a.value);
}

TEST_CASE("spin classes invert their defining relations") {
    auto ring = Ring::make({{"a", 4}, {"b", 8}}, 16);
    auto a = GradedPoly::generator(ring, "a");
    auto b = GradedPoly::generator(ring, "b");

    SUBCASE("p1 = 2a, p2 = a^2 + 2b recovers (a, b)") {
        auto [q1, q2] = spin_classes(a.scaled(2), a * a + b.scaled(2));
        CHECK(q1 == a);
        CHECK(q2 == b);
    }
    SUBCASE("vanishing Q1 halves p2") {
        auto [q1, q2] = spin_classes(GradedPoly::zero(ring), b);
        CHECK(q1.is_zero());
        CHECK(q2 == b.scaled(Rational(1, 2)));
    }
    SUBCASE("round trip through the defining relations") {
        auto p1 = a.scaled(6);
        auto p2 = b.scaled(10) + a * a;
        auto [q1, q2] = spin_classes(p1, p2);
        CHECK(q1.scaled(2) == p1);
        CHECK(q1 * q1 + q2.scaled(2) == p2);
    }
}

TEST_CASE("pairing constant is a shifted factorial") {
    CHECK(generator_pairing_constant(1) == 1);
    CHECK(generator_pairing_constant(4) == 6);
    CHECK(generator_pairing_constant(5) == 24);
}

TEST_CASE("pairing constant agrees with the character coefficient") {
    // With c_1..c_{k-1} = 0, ch_k = (-1)^{k-1} c_k / (k-1)!.
    for (int k = 1; k <= 6; ++k) {
        auto ring = chern_ring(k, 2 * k);
        std::vector<GradedPoly> c(static_cast<std::size_t>(k), GradedPoly::zero(ring));
        auto ck = GradedPoly::generator(ring, "c" + std::to_string(k));
        c.back() = ck;
        auto chk = chern_character(c, k);
        Rational coeff = (k % 2 == 1 ? 1 : -1);
        coeff /= Rational(generator_pairing_constant(k));
        CHECK(chk == ck.scaled(coeff));
    }
}
