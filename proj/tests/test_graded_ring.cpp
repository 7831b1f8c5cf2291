#include "ccalc/graded_ring.hpp"

#include "doctest.h"

#include <random>

using namespace ccalc;

namespace {

RingPtr xy_ring(int trunc = 8) {
    return Ring::make({{"x", 2}, {"y", 2}}, trunc);
}

// Random polynomial with small integer coefficients, for property tests.
GradedPoly random_poly(const RingPtr& ring, std::mt19937& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    GradedPoly p = GradedPoly::zero(ring);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e(ring->size(), 0);
        for (auto& v : e) v = static_cast<std::uint32_t>(expo(rng));
        p.add_term(e, coeff(rng));
    }
    return p;
}

} // namespace

TEST_CASE("ring construction rejects bad generators") {
    CHECK_THROWS_AS(Ring::make({{"x", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Ring::make({{"x", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Ring::make({{"x", 2}, {"x", 4}}), std::invalid_argument);
}

TEST_CASE("binomial square with truncation") {
    auto ring = Ring::make({{"x", 2}}, 4);
    auto x = GradedPoly::generator(ring, "x");
    auto one = GradedPoly::constant(ring, 1);
    auto p = (one + x) * (one + x);
    auto expected = one + x.scaled(2) + x * x;
    CHECK(p == expected);
    CHECK(p.to_string() == "1 + 2*x + x^2");
}

TEST_CASE("multiplying by one is the identity") {
    auto ring = xy_ring();
    std::mt19937 rng(7);
    auto one = GradedPoly::constant(ring, 1);
    for (int i = 0; i < 20; ++i) {
        auto p = random_poly(ring, rng);
        CHECK(p * one == p);
    }
}

TEST_CASE("truncation forces products of high-degree generators to zero") {
    auto ring = Ring::make({{"x", 4}, {"y", 4}}, 6);
    auto p = GradedPoly::generator(ring, "x") * GradedPoly::generator(ring, "y");
    CHECK(p.is_zero());
}

TEST_CASE("ring mismatch is rejected") {
    auto a = GradedPoly::generator(xy_ring(8), "x");
    auto b = GradedPoly::generator(xy_ring(10), "x");
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    // Structurally equal rings interoperate even when distinct objects.
    auto c = GradedPoly::generator(xy_ring(8), "x");
    CHECK(a == c);
}

TEST_CASE("ring axioms hold on random inputs") {
    auto ring = Ring::make({{"x", 2}, {"y", 2}, {"z", 4}}, 10);
    std::mt19937 rng(42);
    for (int i = 0; i < 60; ++i) {
        auto p = random_poly(ring, rng);
        auto q = random_poly(ring, rng);
        auto r = random_poly(ring, rng);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == q + p);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("geometric series inversion") {
    auto ring = Ring::make({{"x", 4}}, 8);
    auto x = GradedPoly::generator(ring, "x");
    auto one = GradedPoly::constant(ring, 1);
    auto inv = (one + x).invert_unit();
    CHECK(inv == one - x + x * x);
    CHECK(one.invert_unit() == one);
}

TEST_CASE("inverse of 1 + c1 + c2 multiplies back to one") {
    auto ring = Ring::make({{"c1", 2}, {"c2", 4}}, 4);
    auto c1 = GradedPoly::generator(ring, "c1");
    auto c2 = GradedPoly::generator(ring, "c2");
    auto one = GradedPoly::constant(ring, 1);
    auto u = one + c1 + c2;
    auto inv = u.invert_unit();
    CHECK(inv == one - c1 + (c1 * c1 - c2));
    CHECK(u * inv == one);
}

TEST_CASE("invert_unit of random units multiplies back to one") {
    auto ring = Ring::make({{"x", 2}, {"y", 4}}, 12);
    std::mt19937 rng(5);
    auto one = GradedPoly::constant(ring, 1);
    for (int i = 0; i < 30; ++i) {
        auto p = random_poly(ring, rng);
        auto unit = one + (p - GradedPoly::constant(ring, p.constant_term()));
        CHECK(unit * unit.invert_unit() == one);
    }
    CHECK_THROWS_AS(GradedPoly::constant(ring, 2).invert_unit(), std::invalid_argument);
    CHECK_THROWS_AS(GradedPoly::zero(ring).invert_unit(), std::invalid_argument);
}

TEST_CASE("homogeneous part extraction") {
    auto ring = Ring::make({{"x", 2}}, 8);
    auto x = GradedPoly::generator(ring, "x");
    auto one = GradedPoly::constant(ring, 1);
    auto p = one + x.scaled(2) + x * x;
    CHECK(p.homogeneous_part(2) == x.scaled(2));
    CHECK(p.homogeneous_part(0) == one);
    CHECK(p.homogeneous_part(6).is_zero());
}

TEST_CASE("homogeneous parts partition the polynomial") {
    auto ring = Ring::make({{"x", 2}, {"y", 4}}, 10);
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto p = random_poly(ring, rng);
        auto sum = GradedPoly::zero(ring);
        for (int d = 0; d <= ring->truncation(); ++d) sum += p.homogeneous_part(d);
        CHECK(sum == p);
    }
}

TEST_CASE("homogeneous decomposition is multiplicative") {
    auto ring = Ring::make({{"x", 2}, {"y", 2}}, 8);
    std::mt19937 rng(13);
    for (int i = 0; i < 20; ++i) {
        auto p = random_poly(ring, rng);
        auto q = random_poly(ring, rng);
        auto pq = p * q;
        for (int d = 0; d <= ring->truncation(); d += 2) {
            auto direct = pq.homogeneous_part(d);
            auto assembled = GradedPoly::zero(ring);
            for (int a = 0; a <= d; a += 2)
                assembled += p.homogeneous_part(a) * q.homogeneous_part(d - a);
            CHECK(direct == assembled);
        }
    }
}

TEST_CASE("substitution with empty bindings is the identity") {
    auto ring = xy_ring();
    std::mt19937 rng(3);
    auto p = random_poly(ring, rng);
    CHECK(p.substitute({}) == p);
}

TEST_CASE("substituting a sum of generators expands the square") {
    auto ring = Ring::make({{"x", 2}, {"y", 2}, {"z", 2}}, 8);
    auto x = GradedPoly::generator(ring, "x");
    auto y = GradedPoly::generator(ring, "y");
    auto z = GradedPoly::generator(ring, "z");
    auto p = x * x;
    auto result = p.substitute({{"x", y + z}});
    CHECK(result == y * y + (y * z).scaled(2) + z * z);
}

TEST_CASE("substitution rejects grading violations") {
    auto ring = Ring::make({{"x", 2}, {"w", 4}}, 8);
    auto x = GradedPoly::generator(ring, "x");
    auto w = GradedPoly::generator(ring, "w");
    CHECK_NOTHROW(w.substitute({{"w", x * x}}));
    CHECK_THROWS_AS(w.substitute({{"w", x}}), std::invalid_argument);
    // Binding to zero is always allowed.
    CHECK(w.substitute({{"w", GradedPoly::zero(ring)}}).is_zero());
}

TEST_CASE("canonical rendering") {
    auto ring = Ring::make({{"c1", 2}, {"c2", 4}}, 8);
    auto c1 = GradedPoly::generator(ring, "c1");
    auto c2 = GradedPoly::generator(ring, "c2");
    auto p = c2.scaled(Rational(-1, 3)) + c1 * c1 + GradedPoly::constant(ring, Rational(1, 2));
    CHECK(p.to_string() == "1/2 + c1^2 - 1/3*c2");
    CHECK(GradedPoly::zero(ring).to_string() == "0");
    CHECK((-c1).to_string() == "-c1");
}
