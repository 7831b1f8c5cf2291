#ifndef CCALC_GRADED_RING_HPP
#define CCALC_GRADED_RING_HPP

#include "ccalc/numeric.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccalc {

// A named even-degree polynomial generator (c1 -> 2, p1 -> 4, ...).
struct Generator {
    std::string name;
    int degree = 0;
};

// Generator set plus truncation degree. Monomials of total degree above the
// truncation are discarded by every operation; this is what keeps all
// computations finite. Immutable and shared between polynomials.
class Ring {
public:
    static constexpr int kDefaultTruncation = 16;

    static std::shared_ptr<const Ring> make(std::vector<Generator> gens,
                                            int truncation = kDefaultTruncation);

    const std::vector<Generator>& generators() const { return gens_; }
    int truncation() const { return truncation_; }
    std::size_t size() const { return gens_.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    // Structural identity: same names, degrees, truncation.
    bool same_as(const Ring& other) const;

private:
    Ring(std::vector<Generator> gens, int truncation);

    std::vector<Generator> gens_;
    int truncation_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Exponent vector, one entry per ring generator.
using Exponents = std::vector<std::uint32_t>;

// Sparse graded-commutative polynomial with exact rational coefficients,
// truncated above the ring's cutoff degree. All generators have even degree,
// so multiplication is strictly commutative. Value type, safe to share
// across threads.
class GradedPoly {
public:
    explicit GradedPoly(RingPtr ring);

    static GradedPoly zero(RingPtr ring) { return GradedPoly(std::move(ring)); }
    static GradedPoly constant(RingPtr ring, const Rational& c);
    static GradedPoly generator(RingPtr ring, std::string_view name);
    static GradedPoly generator(RingPtr ring, std::size_t index);

    const RingPtr& ring() const { return ring_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational constant_term() const;

    // Lowest/highest total degree of a stored monomial; nullopt when zero.
    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;
    // True when every monomial has total degree exactly d (zero qualifies).
    bool is_homogeneous(int d) const;

    int monomial_degree(const Exponents& e) const;

    GradedPoly operator-() const;
    GradedPoly& operator+=(const GradedPoly& rhs);
    GradedPoly& operator-=(const GradedPoly& rhs);
    friend GradedPoly operator+(GradedPoly lhs, const GradedPoly& rhs) { return lhs += rhs; }
    friend GradedPoly operator-(GradedPoly lhs, const GradedPoly& rhs) { return lhs -= rhs; }
    friend GradedPoly operator*(const GradedPoly& lhs, const GradedPoly& rhs);
    GradedPoly& operator*=(const GradedPoly& rhs);

    GradedPoly scaled(const Rational& c) const;
    GradedPoly pow(unsigned k) const;

    bool operator==(const GradedPoly& rhs) const;
    bool operator!=(const GradedPoly& rhs) const { return !(*this == rhs); }

    // Multiplicative inverse of a polynomial with constant term 1, as a
    // geometric series in the positive-degree part (finite after truncation).
    // Throws std::invalid_argument when the constant term differs from 1.
    GradedPoly invert_unit() const;

    // Sum of monomials of total degree exactly d (zero outside [0, truncation]).
    GradedPoly homogeneous_part(int d) const;

    // Simultaneous substitution generator -> polynomial; unbound generators
    // stay. Each binding must be zero or have min degree >= the generator's
    // degree, so the grading can only move up.
    GradedPoly substitute(const std::map<std::string, GradedPoly>& bindings) const;

    // Canonical rendering: monomials sorted by total degree, then reverse
    // lexicographically in declaration order; coefficients as a/b.
    std::string to_string() const;

    void add_term(const Exponents& e, const Rational& coeff);

private:
    void check_same_ring(const GradedPoly& other, const char* op) const;

    RingPtr ring_;
    std::map<Exponents, Rational> terms_;
};

} // namespace ccalc

#endif
