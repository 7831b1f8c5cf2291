#include "ccalc/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ccalc {

bool CohClass::is_zero() const {
    for (const auto& v : free)
        if (v != 0) return false;
    for (const auto& v : torsion)
        if (v != 0) return false;
    return true;
}

bool RationalCohClass::is_zero() const {
    for (const auto& v : free)
        if (v != 0) return false;
    for (const auto& v : torsion)
        if (v != 0) return false;
    return true;
}

BaseSpace::BaseSpace(std::string name, int dimension)
    : name_(std::move(name)), dimension_(dimension) {
    if (dimension < 0) throw std::invalid_argument("space dimension must be nonnegative");
    DegreeGroup h0;
    h0.free_rank = 1;
    h0.free_names = {"1"};
    groups_[0] = std::move(h0);
}

void BaseSpace::set_group(int degree, DegreeGroup group) {
    if (degree < 0 || degree > dimension_)
        throw std::invalid_argument("degree " + std::to_string(degree) +
                                    " outside 0.." + std::to_string(dimension_));
    if (degree == 0 && group.free_rank != 1)
        throw std::invalid_argument("H^0 must have free rank 1");
    if (group.free_names.size() != static_cast<std::size_t>(group.free_rank) ||
        group.torsion_names.size() != group.torsion_orders.size())
        throw std::invalid_argument("generator names do not match the presentation");
    for (const auto& n : group.torsion_orders)
        if (n < 2) throw std::invalid_argument("torsion orders must be >= 2");
    groups_[degree] = std::move(group);
}

const DegreeGroup& BaseSpace::group(int degree) const {
    static const DegreeGroup empty;
    auto it = groups_.find(degree);
    return it == groups_.end() ? empty : it->second;
}

void BaseSpace::check_degree(int degree, const char* what) const {
    if (degree < 0) throw std::invalid_argument(std::string(what) + ": negative degree");
}

const Int& BaseSpace::torsion_order(int degree, std::size_t i) const {
    return group(degree).torsion_orders.at(i);
}

CohClass BaseSpace::zero_class(int degree) const {
    check_degree(degree, "zero_class");
    const DegreeGroup& g = group(degree);
    CohClass x;
    x.degree = degree;
    x.free.assign(static_cast<std::size_t>(g.free_rank), 0);
    x.torsion.assign(g.torsion_orders.size(), 0);
    return x;
}

CohClass BaseSpace::make_class(int degree, std::vector<Int> free, std::vector<Int> torsion) const {
    const DegreeGroup& g = group(degree);
    if (free.size() != static_cast<std::size_t>(g.free_rank) ||
        torsion.size() != g.torsion_orders.size())
        throw std::invalid_argument("class coordinates do not match the degree-" +
                                    std::to_string(degree) + " presentation of " + name_);
    CohClass x{degree, std::move(free), std::move(torsion)};
    return reduce(std::move(x));
}

CohClass BaseSpace::reduce(CohClass x) const {
    for (std::size_t i = 0; i < x.torsion.size(); ++i)
        x.torsion[i] = mod_reduce(x.torsion[i], torsion_order(x.degree, i));
    return x;
}

CohClass BaseSpace::add(const CohClass& a, const CohClass& b) const {
    if (a.degree != b.degree) throw std::invalid_argument("adding classes of different degree");
    CohClass r = a;
    for (std::size_t i = 0; i < r.free.size(); ++i) r.free[i] += b.free[i];
    for (std::size_t i = 0; i < r.torsion.size(); ++i) r.torsion[i] += b.torsion[i];
    return reduce(std::move(r));
}

CohClass BaseSpace::negate(const CohClass& a) const {
    CohClass r = a;
    for (auto& v : r.free) v = -v;
    for (auto& v : r.torsion) v = -v;
    return reduce(std::move(r));
}

CohClass BaseSpace::scale(const Int& n, const CohClass& a) const {
    CohClass r = a;
    for (auto& v : r.free) v *= n;
    for (auto& v : r.torsion) v *= n;
    return reduce(std::move(r));
}

bool BaseSpace::contains(const std::vector<CohClass>& set, const CohClass& x) const {
    return std::find(set.begin(), set.end(), x) != set.end();
}

Int BaseSpace::torsion_subgroup_size(int degree, const Int& m) const {
    Int count = 1;
    for (const auto& n : group(degree).torsion_orders) count *= gcd(m, n);
    return count;
}

std::vector<CohClass> BaseSpace::divide_class(const CohClass& x, const Int& m) const {
    if (m <= 0) throw std::invalid_argument("divide_class: divisor must be positive");
    const DegreeGroup& g = group(x.degree);

    CohClass base = zero_class(x.degree);
    for (int i = 0; i < g.free_rank; ++i) {
        if (x.free[static_cast<std::size_t>(i)] % m != 0) return {};
        base.free[static_cast<std::size_t>(i)] = x.free[static_cast<std::size_t>(i)] / m;
    }

    // Per torsion factor: m t = x (mod n) has gcd(m, n) solutions when
    // gcd(m, n) divides x, none otherwise.
    std::vector<std::vector<Int>> choices(g.torsion_orders.size());
    for (std::size_t i = 0; i < g.torsion_orders.size(); ++i) {
        const Int& n = g.torsion_orders[i];
        const Int d = gcd(m, n);
        if (x.torsion[i] % d != 0) return {};
        Int u, v;
        extended_gcd(m / d, n / d, u, v);
        const Int step = n / d;
        const Int t0 = mod_reduce((x.torsion[i] / d) * u, step);
        for (Int k = 0; k < d; ++k) choices[i].push_back(t0 + k * step);
    }

    std::vector<CohClass> out;
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        CohClass y = base;
        for (std::size_t i = 0; i < choices.size(); ++i) y.torsion[i] = choices[i][pick[i]];
        out.push_back(reduce(std::move(y)));
        std::size_t i = 0;
        for (; i < choices.size(); ++i) {
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
        }
        if (i == choices.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const CohClass& a, const CohClass& b) {
        return std::tie(a.free, a.torsion) < std::tie(b.free, b.torsion);
    });
    return out;
}

namespace {

template <typename Coef>
void render_term(std::ostringstream& out, bool& first, const Coef& c, const std::string& name) {
    if (c == 0) return;
    Coef a = c;
    const bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
        if (neg) out << "-";
        first = false;
    } else {
        out << (neg ? " - " : " + ");
    }
    if (a == 1) {
        out << name;
    } else {
        if constexpr (std::is_same_v<Coef, Rational>)
            out << rational_to_string(a);
        else
            out << a.str();
        out << "*" << name;
    }
}

} // namespace

std::string BaseSpace::render_class(const CohClass& x) const {
    const DegreeGroup& g = group(x.degree);
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < x.free.size(); ++i) render_term(out, first, x.free[i], g.free_names[i]);
    for (std::size_t i = 0; i < x.torsion.size(); ++i)
        render_term(out, first, x.torsion[i], g.torsion_names[i]);
    return first ? "0" : out.str();
}

std::string BaseSpace::render_class(const RationalCohClass& x) const {
    const DegreeGroup& g = group(x.degree);
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < x.free.size(); ++i) render_term(out, first, x.free[i], g.free_names[i]);
    for (std::size_t i = 0; i < x.torsion.size(); ++i) {
        Rational r(x.torsion[i]);
        render_term(out, first, r, g.torsion_names[i]);
    }
    return first ? "0" : out.str();
}

RationalCohClass BaseSpace::rational_zero(int degree) const {
    const DegreeGroup& g = group(degree);
    RationalCohClass x;
    x.degree = degree;
    x.free.assign(static_cast<std::size_t>(g.free_rank), Rational(0));
    x.torsion.assign(g.torsion_orders.size(), Int(0));
    return x;
}

RationalCohClass BaseSpace::to_rational(const CohClass& x) const {
    RationalCohClass r = rational_zero(x.degree);
    for (std::size_t i = 0; i < x.free.size(); ++i) r.free[i] = Rational(x.free[i]);
    r.torsion = x.torsion;
    return r;
}

RationalCohClass BaseSpace::radd(const RationalCohClass& a, const RationalCohClass& b) const {
    if (a.degree != b.degree) throw std::invalid_argument("adding classes of different degree");
    RationalCohClass r = a;
    for (std::size_t i = 0; i < r.free.size(); ++i) r.free[i] += b.free[i];
    for (std::size_t i = 0; i < r.torsion.size(); ++i)
        r.torsion[i] = mod_reduce(r.torsion[i] + b.torsion[i], torsion_order(a.degree, i));
    return r;
}

RationalCohClass BaseSpace::rscale(const Rational& r, const RationalCohClass& a) const {
    RationalCohClass out = a;
    for (auto& v : out.free) v *= r;
    const Int num = numerator(r), den = denominator(r);
    for (std::size_t i = 0; i < out.torsion.size(); ++i) {
        if (out.torsion[i] == 0) continue;
        const Int& n = torsion_order(a.degree, i);
        if (den == 1) {
            out.torsion[i] = mod_reduce(out.torsion[i] * num, n);
            continue;
        }
        Int u, v;
        if (extended_gcd(den, n, u, v) != 1)
            throw std::domain_error("denominator " + den.str() + " is not invertible mod " +
                                    n.str() + " on " + group(a.degree).torsion_names[i]);
        out.torsion[i] = mod_reduce(out.torsion[i] * num * u, n);
    }
    return out;
}

std::optional<CohClass> BaseSpace::to_integral(const RationalCohClass& x, std::string* witness) const {
    const DegreeGroup& g = group(x.degree);
    CohClass out = zero_class(x.degree);
    for (std::size_t i = 0; i < x.free.size(); ++i) {
        if (denominator(x.free[i]) != 1) {
            if (witness)
                *witness = "free coordinate on " + g.free_names[i] + " is " +
                           rational_to_string(x.free[i]);
            return std::nullopt;
        }
        out.free[i] = numerator(x.free[i]);
    }
    out.torsion = x.torsion;
    return reduce(std::move(out));
}

void BaseSpace::set_product(const GenRef& a, const GenRef& b, CohClass value) {
    auto validate_ref = [this](const GenRef& r) {
        const DegreeGroup& g = group(r.degree);
        const int count = r.is_torsion ? static_cast<int>(g.torsion_orders.size()) : g.free_rank;
        if (r.index < 0 || r.index >= count)
            throw std::invalid_argument("product references an unknown generator");
    };
    validate_ref(a);
    validate_ref(b);
    if (value.degree != a.degree + b.degree)
        throw std::invalid_argument("product value lives in the wrong degree");
    value = reduce(std::move(value));
    // A torsion factor annihilates its products.
    for (const GenRef& r : {a, b}) {
        if (!r.is_torsion) continue;
        const Int& order = group(r.degree).torsion_orders[static_cast<std::size_t>(r.index)];
        if (!scale(order, value).is_zero())
            throw std::invalid_argument("product of a torsion generator is not killed by its order");
        for (const auto& v : value.free)
            if (v != 0)
                throw std::invalid_argument("product of a torsion generator has a free component");
    }
    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    products_[key] = std::move(value);
}

RationalCohClass BaseSpace::cup(const RationalCohClass& a, const RationalCohClass& b) const {
    const int degree = a.degree + b.degree;
    RationalCohClass out = rational_zero(degree);
    if (degree > dimension_ || group(degree).trivial()) return out;

    auto coord = [](const RationalCohClass& x, const GenRef& r) -> Rational {
        return r.is_torsion ? Rational(x.torsion[static_cast<std::size_t>(r.index)])
                            : x.free[static_cast<std::size_t>(r.index)];
    };
    auto gens_of = [this](const RationalCohClass& x) {
        std::vector<GenRef> refs;
        const DegreeGroup& g = group(x.degree);
        for (int i = 0; i < g.free_rank; ++i) refs.push_back({x.degree, false, i});
        for (std::size_t i = 0; i < g.torsion_orders.size(); ++i)
            refs.push_back({x.degree, true, static_cast<int>(i)});
        return refs;
    };

    for (const GenRef& ra : gens_of(a)) {
        const Rational ca = coord(a, ra);
        if (ca == 0) continue;
        for (const GenRef& rb : gens_of(b)) {
            const Rational cb = coord(b, rb);
            if (cb == 0) continue;
            auto key = ra <= rb ? std::make_pair(ra, rb) : std::make_pair(rb, ra);
            auto it = products_.find(key);
            if (it == products_.end())
                throw std::runtime_error("space " + name_ + " has no product entry " +
                                         gen_name(ra) + "*" + gen_name(rb));
            out = radd(out, rscale(ca * cb, to_rational(it->second)));
        }
    }
    return out;
}

GenRef BaseSpace::gen_by_name(const std::string& name) const {
    for (const auto& [degree, g] : groups_) {
        for (int i = 0; i < g.free_rank; ++i)
            if (g.free_names[static_cast<std::size_t>(i)] == name) return {degree, false, i};
        for (std::size_t i = 0; i < g.torsion_names.size(); ++i)
            if (g.torsion_names[i] == name) return {degree, true, static_cast<int>(i)};
    }
    throw std::invalid_argument("unknown generator '" + name + "' in space " + name_);
}

std::string BaseSpace::gen_name(const GenRef& r) const {
    const DegreeGroup& g = group(r.degree);
    return r.is_torsion ? g.torsion_names.at(static_cast<std::size_t>(r.index))
                        : g.free_names.at(static_cast<std::size_t>(r.index));
}

void BaseSpace::add_image_generator(int degree, CohClass x) {
    if (x.degree != degree) throw std::invalid_argument("image generator degree mismatch");
    images_[degree].push_back(reduce(std::move(x)));
}

const std::vector<CohClass>* BaseSpace::image(int degree) const {
    auto it = images_.find(degree);
    return it == images_.end() ? nullptr : &it->second;
}

// --- Smith normal form ------------------------------------------------------

std::vector<Int> smith_invariants(std::vector<std::vector<Int>> rows) {
    if (rows.empty()) return {};
    const std::size_t m = rows.size(), n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("ragged matrix");

    std::vector<Int> invariants;
    std::size_t top = 0;
    while (top < m && top < n) {
        // Find the nonzero entry of least absolute value in the working block.
        std::size_t pr = top, pc = top;
        Int best = 0;
        for (std::size_t i = top; i < m; ++i)
            for (std::size_t j = top; j < n; ++j) {
                Int a = rows[i][j] < 0 ? Int(-rows[i][j]) : rows[i][j];
                if (a != 0 && (best == 0 || a < best)) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (best == 0) break;
        std::swap(rows[top], rows[pr]);
        for (std::size_t i = 0; i < m; ++i) std::swap(rows[i][top], rows[i][pc]);

        bool clean = true;
        for (std::size_t i = top + 1; i < m; ++i) {
            if (rows[i][top] == 0) continue;
            const Int q = rows[i][top] / rows[top][top];
            for (std::size_t j = top; j < n; ++j) rows[i][j] -= q * rows[top][j];
            if (rows[i][top] != 0) clean = false;
        }
        for (std::size_t j = top + 1; j < n; ++j) {
            if (rows[top][j] == 0) continue;
            const Int q = rows[top][j] / rows[top][top];
            for (std::size_t i = 0; i < m; ++i) rows[i][j] -= q * rows[i][top];
            if (rows[top][j] != 0) clean = false;
        }
        if (!clean) continue; // smaller pivot appeared, redo this block

        // Enforce the divisibility chain: fold any entry the pivot misses.
        bool redo = false;
        for (std::size_t i = top + 1; i < m && !redo; ++i)
            for (std::size_t j = top + 1; j < n && !redo; ++j)
                if (rows[i][j] % rows[top][top] != 0) {
                    for (std::size_t jj = top; jj < n; ++jj) rows[top][jj] += rows[i][jj];
                    redo = true;
                }
        if (redo) continue;

        Int d = rows[top][top];
        if (d < 0) d = -d;
        invariants.push_back(d);
        ++top;
    }
    return invariants;
}

GroupPresentation quotient_presentation(const DegreeGroup& h, const std::vector<CohClass>& gens) {
    const std::size_t rank = static_cast<std::size_t>(h.free_rank) + h.torsion_orders.size();
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < h.torsion_orders.size(); ++i) {
        std::vector<Int> row(rank, 0);
        row[static_cast<std::size_t>(h.free_rank) + i] = h.torsion_orders[i];
        rows.push_back(std::move(row));
    }
    for (const auto& g : gens) {
        if (g.free.size() != static_cast<std::size_t>(h.free_rank) ||
            g.torsion.size() != h.torsion_orders.size())
            throw std::invalid_argument("image generator does not match the presentation");
        std::vector<Int> row(rank, 0);
        for (std::size_t i = 0; i < g.free.size(); ++i) row[i] = g.free[i];
        for (std::size_t i = 0; i < g.torsion.size(); ++i)
            row[static_cast<std::size_t>(h.free_rank) + i] = g.torsion[i];
        rows.push_back(std::move(row));
    }

    GroupPresentation out;
    if (rank == 0) return out;
    if (rows.empty()) {
        out.free_rank = static_cast<int>(rank);
        return out;
    }
    auto invariants = smith_invariants(std::move(rows));
    out.free_rank = static_cast<int>(rank - invariants.size());
    for (auto& d : invariants)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

BaseSpace localize(const BaseSpace& x, const std::set<Int>& primes) {
    BaseSpace out(x.name() + "_localized", x.dimension());

    struct Survivor {
        bool alive = false;
        int new_index = 0;
        Int new_order = 0;
    };
    std::map<int, std::vector<Survivor>> survivors;

    for (const auto& [degree, g] : x.groups()) {
        DegreeGroup ng;
        ng.free_rank = g.free_rank;
        ng.free_names = g.free_names;
        auto& surv = survivors[degree];
        surv.resize(g.torsion_orders.size());
        for (std::size_t i = 0; i < g.torsion_orders.size(); ++i) {
            Int n = g.torsion_orders[i];
            for (const Int& p : primes) {
                if (p < 2) throw std::invalid_argument("localize: primes must be >= 2");
                while (n % p == 0) n /= p;
            }
            if (n > 1) {
                surv[i] = {true, static_cast<int>(ng.torsion_orders.size()), n};
                ng.torsion_orders.push_back(n);
                ng.torsion_names.push_back(g.torsion_names[i]);
            }
        }
        if (degree > 0) out.set_group(degree, std::move(ng));
    }

    auto carry = [&](const CohClass& c) {
        CohClass nc = out.zero_class(c.degree);
        nc.free = c.free;
        const auto& surv = survivors.at(c.degree);
        for (std::size_t i = 0; i < c.torsion.size(); ++i)
            if (surv[i].alive) nc.torsion[static_cast<std::size_t>(surv[i].new_index)] = c.torsion[i];
        return out.reduce(std::move(nc));
    };
    auto carry_ref = [&](const GenRef& r, GenRef& nr) {
        nr = r;
        if (!r.is_torsion) return true;
        const auto& s = survivors.at(r.degree).at(static_cast<std::size_t>(r.index));
        if (!s.alive) return false;
        nr.index = s.new_index;
        return true;
    };

    for (const auto& [key, value] : x.products()) {
        GenRef a, b;
        if (!carry_ref(key.first, a) || !carry_ref(key.second, b)) continue;
        if (value.degree > out.dimension()) continue;
        out.set_product(a, b, carry(value));
    }
    for (const auto& [degree, gens] : x.images())
        for (const auto& g : gens) out.add_image_generator(degree, carry(g));

    return out;
}

std::string render_presentation(const DegreeGroup& g) {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < g.free_rank; ++i) {
        if (!first) out << " + ";
        out << "Z<" << g.free_names[static_cast<std::size_t>(i)] << ">";
        first = false;
    }
    for (std::size_t i = 0; i < g.torsion_orders.size(); ++i) {
        if (!first) out << " + ";
        out << "Z/" << g.torsion_orders[i].str() << "<" << g.torsion_names[i] << ">";
        first = false;
    }
    return first ? "0" : out.str();
}

std::string render_presentation(const GroupPresentation& g) {
    std::ostringstream out;
    bool first = true;
    if (g.free_rank > 0) {
        if (g.free_rank == 1) out << "Z";
        else out << "Z^" << g.free_rank;
        first = false;
    }
    for (const auto& n : g.torsion) {
        if (!first) out << " + ";
        out << "Z/" << n.str();
        first = false;
    }
    return first ? "0" : out.str();
}

} // namespace ccalc
