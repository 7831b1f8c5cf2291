#include "ccalc/graded_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ccalc {

Ring::Ring(std::vector<Generator> gens, int truncation)
    : gens_(std::move(gens)), truncation_(truncation) {}

std::shared_ptr<const Ring> Ring::make(std::vector<Generator> gens, int truncation) {
    if (truncation < 0) throw std::invalid_argument("truncation degree must be nonnegative");
    std::set<std::string> seen;
    for (const auto& g : gens) {
        if (g.degree < 2 || g.degree % 2 != 0)
            throw std::invalid_argument("generator '" + g.name + "' must have positive even degree");
        if (!seen.insert(g.name).second)
            throw std::invalid_argument("duplicate generator name '" + g.name + "'");
    }
    return std::shared_ptr<const Ring>(new Ring(std::move(gens), truncation));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

bool Ring::same_as(const Ring& other) const {
    if (this == &other) return true;
    if (truncation_ != other.truncation_ || gens_.size() != other.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != other.gens_[i].name || gens_[i].degree != other.gens_[i].degree)
            return false;
    return true;
}

GradedPoly::GradedPoly(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("polynomial requires a ring");
}

GradedPoly GradedPoly::constant(RingPtr ring, const Rational& c) {
    GradedPoly p(std::move(ring));
    p.add_term(Exponents(p.ring_->size(), 0), c);
    return p;
}

GradedPoly GradedPoly::generator(RingPtr ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!idx) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
    return generator(std::move(ring), *idx);
}

GradedPoly GradedPoly::generator(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw std::invalid_argument("generator index out of range");
    GradedPoly p(std::move(ring));
    Exponents e(p.ring_->size(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

int GradedPoly::monomial_degree(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        d += static_cast<int>(e[i]) * ring_->generators()[i].degree;
    return d;
}

Rational GradedPoly::constant_term() const {
    Exponents zero(ring_->size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GradedPoly::min_degree() const {
    std::optional<int> best;
    for (const auto& [e, c] : terms_) {
        int d = monomial_degree(e);
        if (!best || d < *best) best = d;
    }
    return best;
}

std::optional<int> GradedPoly::max_degree() const {
    std::optional<int> best;
    for (const auto& [e, c] : terms_) {
        int d = monomial_degree(e);
        if (!best || d > *best) best = d;
    }
    return best;
}

bool GradedPoly::is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_)
        if (monomial_degree(e) != d) return false;
    return true;
}

void GradedPoly::add_term(const Exponents& e, const Rational& coeff) {
    if (coeff == 0) return;
    if (e.size() != ring_->size()) throw std::invalid_argument("exponent arity mismatch");
    if (monomial_degree(e) > ring_->truncation()) return;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void GradedPoly::check_same_ring(const GradedPoly& other, const char* op) const {
    if (ring_ == other.ring_) return;
    if (!ring_->same_as(*other.ring_))
        throw std::invalid_argument(std::string("ring mismatch in ") + op);
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& rhs) {
    check_same_ring(rhs, "addition");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& rhs) {
    check_same_ring(rhs, "subtraction");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

GradedPoly operator*(const GradedPoly& lhs, const GradedPoly& rhs) {
    lhs.check_same_ring(rhs, "multiplication");
    GradedPoly r(lhs.ring_);
    const int trunc = lhs.ring_->truncation();
    Exponents e(lhs.ring_->size(), 0);
    for (const auto& [ea, ca] : lhs.terms_) {
        const int da = lhs.monomial_degree(ea);
        for (const auto& [eb, cb] : rhs.terms_) {
            if (da + rhs.monomial_degree(eb) > trunc) continue;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

GradedPoly& GradedPoly::operator*=(const GradedPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

GradedPoly GradedPoly::scaled(const Rational& c) const {
    GradedPoly r(ring_);
    if (c == 0) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

GradedPoly GradedPoly::pow(unsigned k) const {
    GradedPoly r = constant(ring_, 1);
    GradedPoly base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

bool GradedPoly::operator==(const GradedPoly& rhs) const {
    check_same_ring(rhs, "comparison");
    return terms_ == rhs.terms_;
}

GradedPoly GradedPoly::invert_unit() const {
    if (constant_term() != 1)
        throw std::invalid_argument("invert_unit requires constant term 1");
    GradedPoly n = *this - constant(ring_, 1); // positive-degree part
    GradedPoly result = constant(ring_, 1);
    GradedPoly power = constant(ring_, 1);
    if (n.is_zero()) return result;
    const int step = *n.min_degree();
    int sign = -1;
    for (int d = step; d <= ring_->truncation(); d += step) {
        power = power * n;
        if (power.is_zero()) break;
        result += sign > 0 ? power : -power;
        sign = -sign;
    }
    return result;
}

GradedPoly GradedPoly::homogeneous_part(int d) const {
    GradedPoly r(ring_);
    if (d < 0 || d > ring_->truncation()) return r;
    for (const auto& [e, c] : terms_)
        if (monomial_degree(e) == d) r.terms_.emplace(e, c);
    return r;
}

GradedPoly GradedPoly::substitute(const std::map<std::string, GradedPoly>& bindings) const {
    std::vector<const GradedPoly*> bound(ring_->size(), nullptr);
    for (const auto& [name, value] : bindings) {
        auto idx = ring_->index_of(name);
        if (!idx) throw std::invalid_argument("substitute: unknown generator '" + name + "'");
        check_same_ring(value, "substitute");
        if (!value.is_zero() && *value.min_degree() < ring_->generators()[*idx].degree)
            throw std::invalid_argument("substitute: binding for '" + name +
                                        "' lowers the grading");
        bound[*idx] = &value;
    }
    GradedPoly result(ring_);
    for (const auto& [e, c] : terms_) {
        GradedPoly term = constant(ring_, c);
        for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
            if (e[i] == 0) continue;
            if (bound[i]) {
                term = term * bound[i]->pow(e[i]);
            } else {
                Exponents mono(ring_->size(), 0);
                mono[i] = e[i];
                GradedPoly m(ring_);
                m.add_term(mono, 1);
                term = term * m;
            }
        }
        result += term;
    }
    return result;
}

std::string GradedPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Graded order: by total degree, then lexicographic in declaration order
    // with higher leading exponents first.
    std::vector<const std::pair<const Exponents, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [this](const auto* a, const auto* b) {
        int da = monomial_degree(a->first), db = monomial_degree(b->first);
        if (da != db) return da < db;
        return a->first > b->first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : order) {
        Rational c = t->second;
        const bool negative = c < 0;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (negative) c = -c;
        std::string mono;
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            if (t->first[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->generators()[i].name;
            if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
        }
        if (mono.empty()) {
            out << rational_to_string(c);
        } else if (c == 1) {
            out << mono;
        } else {
            out << rational_to_string(c) << "*" << mono;
        }
    }
    return out.str();
}

} // namespace ccalc
