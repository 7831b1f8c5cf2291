#ifndef CCALC_ABELIAN_HPP
#define CCALC_ABELIAN_HPP

#include "ccalc/numeric.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ccalc {

// Presentation of one cohomology group H^d: free part Z^r plus cyclic
// torsion factors, every generator named.
struct DegreeGroup {
    int free_rank = 0;
    std::vector<Int> torsion_orders; // each >= 2
    std::vector<std::string> free_names;
    std::vector<std::string> torsion_names;

    bool trivial() const { return free_rank == 0 && torsion_orders.empty(); }
};

// Element of H^d in coordinates: integer vector on the free part, least
// nonnegative residues on the torsion part. Plain data; the owning
// BaseSpace provides the arithmetic that needs to know the orders.
struct CohClass {
    int degree = 0;
    std::vector<Int> free;
    std::vector<Int> torsion;

    bool is_zero() const;
    bool operator==(const CohClass&) const = default;
};

// Same shape with rational free coordinates. Torsion coordinates remain
// residues; a rational scalar acts on a residue mod n only when its
// denominator is invertible mod n.
struct RationalCohClass {
    int degree = 0;
    std::vector<Rational> free;
    std::vector<Int> torsion;

    bool is_zero() const;
    bool operator==(const RationalCohClass&) const = default;
};

// Reference to one generator of some H^d.
struct GenRef {
    int degree = 0;
    bool is_torsion = false;
    int index = 0;

    auto operator<=>(const GenRef&) const = default;
};

// A finitely generated abelian group, as invariant factors.
struct GroupPresentation {
    int free_rank = 0;
    std::vector<Int> torsion; // invariant factors > 1
};

// Smith normal form invariants (nonzero diagonal entries d1 | d2 | ...) of
// an integer matrix given as a list of rows.
std::vector<Int> smith_invariants(std::vector<std::vector<Int>> rows);

// User-presented cohomology of a base space: per-degree presentations, an
// optional cup-product table, and optional image subgroups used for torsor
// quotients. The ring structure is input data, not something computed here.
class BaseSpace {
public:
    BaseSpace(std::string name, int dimension);

    const std::string& name() const { return name_; }
    int dimension() const { return dimension_; }

    void set_group(int degree, DegreeGroup group);
    bool has_group(int degree) const { return groups_.count(degree) > 0; }
    const DegreeGroup& group(int degree) const;
    const std::map<int, DegreeGroup>& groups() const { return groups_; }

    // --- classes -----------------------------------------------------------

    CohClass zero_class(int degree) const;
    CohClass make_class(int degree, std::vector<Int> free, std::vector<Int> torsion) const;
    CohClass reduce(CohClass x) const;
    CohClass add(const CohClass& a, const CohClass& b) const;
    CohClass negate(const CohClass& a) const;
    CohClass scale(const Int& n, const CohClass& a) const;
    bool contains(const std::vector<CohClass>& set, const CohClass& x) const;

    // All y with m*y = x. Unique on the free part when it exists at all; on
    // each Z/n factor there are gcd(m, n) solutions or none. The result is
    // the full solution set, a torsor over the m-torsion subgroup.
    std::vector<CohClass> divide_class(const CohClass& x, const Int& m) const;

    // Number of elements killed by m in the group of the given degree.
    Int torsion_subgroup_size(int degree, const Int& m) const;

    std::string render_class(const CohClass& x) const;
    std::string render_class(const RationalCohClass& x) const;

    // --- rational layer ----------------------------------------------------

    RationalCohClass rational_zero(int degree) const;
    RationalCohClass to_rational(const CohClass& x) const;
    RationalCohClass radd(const RationalCohClass& a, const RationalCohClass& b) const;
    // Throws std::domain_error when the denominator is not invertible on
    // some torsion factor carrying a nonzero coordinate.
    RationalCohClass rscale(const Rational& r, const RationalCohClass& a) const;
    // Integral coercion; on failure fills `witness` with the offending
    // coordinate when a witness pointer is given.
    std::optional<CohClass> to_integral(const RationalCohClass& x, std::string* witness = nullptr) const;

    // --- cup products ------------------------------------------------------

    // Declares gen_a cup gen_b = value (symmetric; both generators have even
    // degree in every use this engine makes). Torsion factors force the
    // product to be killed by their order; that is validated here.
    void set_product(const GenRef& a, const GenRef& b, CohClass value);
    // Product of two classes via the declared table. Pairs of generators
    // whose product lands above the dimension or in a trivial group
    // contribute zero; otherwise a missing declaration with two nonzero
    // coordinates throws std::runtime_error naming the needed entry.
    RationalCohClass cup(const RationalCohClass& a, const RationalCohClass& b) const;

    GenRef gen_by_name(const std::string& name) const; // throws if unknown
    std::string gen_name(const GenRef& g) const;

    // --- image subgroups (torsor quotients) --------------------------------

    void add_image_generator(int degree, CohClass x);
    const std::vector<CohClass>* image(int degree) const;

    const std::map<std::pair<GenRef, GenRef>, CohClass>& products() const { return products_; }
    const std::map<int, std::vector<CohClass>>& images() const { return images_; }

private:
    void check_degree(int degree, const char* what) const;
    const Int& torsion_order(int degree, std::size_t i) const;

    std::string name_;
    int dimension_ = 0;
    std::map<int, DegreeGroup> groups_;
    std::map<std::pair<GenRef, GenRef>, CohClass> products_;
    std::map<int, std::vector<CohClass>> images_;
};

using SpacePtr = std::shared_ptr<const BaseSpace>;

// Quotient of H (one degree of a space) by the subgroup its `gens` span,
// computed through the Smith normal form.
GroupPresentation quotient_presentation(const DegreeGroup& h, const std::vector<CohClass>& gens);

// Inverting a set of primes: every torsion order loses all factors of each
// prime; orders reduced to 1 disappear. Products and images are carried
// over, restricted to the surviving generators.
BaseSpace localize(const BaseSpace& x, const std::set<Int>& primes);

std::string render_presentation(const DegreeGroup& g);
std::string render_presentation(const GroupPresentation& g);

} // namespace ccalc

#endif
