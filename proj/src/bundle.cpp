#include "ccalc/bundle.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace ccalc {

namespace {

// Parses "p3" / "c2" / "Q1" style keys; returns the numeric suffix or -1.
int key_suffix(const std::string& key, const std::string& prefix) {
    if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0) return -1;
    int value = 0;
    for (std::size_t i = prefix.size(); i < key.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(key[i]))) return -1;
        value = value * 10 + (key[i] - '0');
    }
    return value > 0 ? value : -1;
}

int family_index(char family, const std::string& key) {
    switch (family) {
        case 'p': return key_suffix(key, "p");
        case 'c': return key_suffix(key, "c");
        case 'Q': return key_suffix(key, "Q");
        default: return -1;
    }
}

void check_same_base(const Bundle& a, const Bundle& b, const char* op) {
    if (a.base != b.base) throw std::invalid_argument(std::string(op) + ": base space mismatch");
    if (a.kind != b.kind) throw std::invalid_argument(std::string(op) + ": field kind mismatch");
}

std::optional<bool> combine_vanishing(std::optional<bool> a, std::optional<bool> b) {
    if (a && b && *a && *b) return true;    // both vanish: the sum vanishes
    if (a && b && (*a != *b)) return false; // exactly one survives mod 2
    return std::nullopt;                    // both nonzero (or unknown): undecidable here
}

bool has_family(const Bundle& b, char family) {
    for (const auto& [key, value] : b.classes) {
        (void)value;
        if (family_index(family, key) > 0) return true;
    }
    return false;
}

bool family_combinable(const Bundle& a, const Bundle& b, char family) {
    const bool ha = has_family(a, family), hb = has_family(b, family);
    if (ha && hb) return true;
    if (ha && b.trivial_classes()) return true;
    if (hb && a.trivial_classes()) return true;
    return false;
}

// Degree-indexed rational series of one class family; index d holds the
// degree-d component (the degree-0 part of a total class is an implicit 1).
std::vector<RationalCohClass> family_series(const Bundle& b, char family) {
    const int dim = b.base->dimension();
    std::vector<RationalCohClass> series;
    series.reserve(static_cast<std::size_t>(dim) + 1);
    for (int d = 0; d <= dim; ++d) series.push_back(b.base->rational_zero(d));
    for (const auto& [key, value] : b.classes) {
        if (family_index(family, key) < 1) continue;
        series[static_cast<std::size_t>(value.degree)] = b.base->to_rational(value);
    }
    return series;
}

std::vector<RationalCohClass> series_product(const BaseSpace& space,
                                             const std::vector<RationalCohClass>& a,
                                             const std::vector<RationalCohClass>& b) {
    std::vector<RationalCohClass> out;
    for (int d = 0; d < static_cast<int>(a.size()); ++d) {
        RationalCohClass acc = space.radd(a[static_cast<std::size_t>(d)],
                                          b[static_cast<std::size_t>(d)]);
        for (int i = 1; i < d; ++i) {
            const auto& ai = a[static_cast<std::size_t>(i)];
            const auto& bj = b[static_cast<std::size_t>(d - i)];
            if (ai.is_zero() || bj.is_zero()) continue;
            acc = space.radd(acc, space.cup(ai, bj));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

// Inverse of the total series 1 + a_1 + a_2 + ..., degree by degree:
// inv_d = -(a_d + sum_{i=1..d-1} a_i inv_{d-i}).
std::vector<RationalCohClass> series_inverse(const BaseSpace& space,
                                             const std::vector<RationalCohClass>& a) {
    std::vector<RationalCohClass> inv;
    for (int d = 0; d < static_cast<int>(a.size()); ++d) {
        RationalCohClass acc = a[static_cast<std::size_t>(d)];
        for (int i = 1; i < d; ++i) {
            const auto& ai = a[static_cast<std::size_t>(i)];
            const auto& prev = inv[static_cast<std::size_t>(d - i)];
            if (ai.is_zero() || prev.is_zero()) continue;
            acc = space.radd(acc, space.cup(ai, prev));
        }
        inv.push_back(space.rscale(-1, acc));
    }
    return inv;
}

// Writes the nonzero components of a combined family back as class keys.
// Spin-class data is tracked through degree 8 only (Q1, Q2).
void store_series(Bundle& out, char family, const std::vector<RationalCohClass>& series) {
    const int step = family == 'c' ? 2 : 4;
    const int max_degree = family == 'Q' ? 8 : out.base->dimension();
    const char* prefix = family == 'c' ? "c" : (family == 'p' ? "p" : "Q");
    for (int idx = 1; idx * step < static_cast<int>(series.size()); ++idx) {
        if (idx * step > max_degree) break;
        const auto& value = series[static_cast<std::size_t>(idx * step)];
        if (value.is_zero()) continue;
        auto integral = out.base->to_integral(value);
        if (!integral)
            throw std::logic_error("integral class family produced a fractional coordinate");
        set_class(out, prefix + std::to_string(idx), *integral);
    }
}

void combine_families(Bundle& out, const Bundle& e, const Bundle& f, bool invert_f) {
    const BaseSpace& space = *e.base;
    for (char family : {'p', 'c', 'Q'}) {
        if ((family == 'c') != (e.kind == FieldKind::complex)) continue;
        if (!family_combinable(e, f, family)) continue;
        auto sf = family_series(f, family);
        if (invert_f) sf = series_inverse(space, sf);
        store_series(out, family, series_product(space, family_series(e, family), sf));
        if (family == 'p' && (has_family(e, 'p') || has_family(f, 'p')))
            out.validity = Validity::mod_2_torsion;
    }

    // Characters are additive; combine every index either side provides,
    // deriving from Chern data where possible. Indices that resist
    // derivation here stay available through chern_character_class on the
    // combined Chern classes.
    if (e.kind == FieldKind::complex) {
        std::set<int> ks;
        for (const auto& [k, v] : e.characters) {
            (void)v;
            ks.insert(k);
        }
        for (const auto& [k, v] : f.characters) {
            (void)v;
            ks.insert(k);
        }
        for (int k : ks) {
            try {
                RationalCohClass sum = chern_character_class(e, k);
                RationalCohClass other = chern_character_class(f, k);
                if (invert_f) other = space.rscale(-1, other);
                set_character(out, k, space.radd(sum, other));
            } catch (const std::exception&) {
                // underivable with the declared data; leave unset
            }
        }
    }

    // Fivebrane-level designations combine once the string condition holds
    // on both pieces.
    if (e.kind == FieldKind::real && e.has_class("sixth_p2") && f.has_class("sixth_p2") &&
        pontrjagin_class(e, 1).is_zero() && pontrjagin_class(f, 1).is_zero()) {
        CohClass other = get_class(f, "sixth_p2");
        if (invert_f) other = space.negate(other);
        set_class(out, "sixth_p2", space.add(get_class(e, "sixth_p2"), other));
    }
}

} // namespace

int class_key_degree(FieldKind kind, const std::string& key) {
    if (kind == FieldKind::real) {
        if (key == "Q1") return 4;
        if (key == "Q2") return 8;
        if (key == "sixth_p2") return 8;
        if (int j = key_suffix(key, "p"); j > 0) return 4 * j;
    } else {
        if (int i = key_suffix(key, "c"); i > 0) return 2 * i;
    }
    throw std::invalid_argument("class key '" + key + "' is not valid for this bundle kind");
}

void set_class(Bundle& b, const std::string& key, CohClass value) {
    const int degree = class_key_degree(b.kind, key);
    if (value.degree != degree)
        throw std::invalid_argument("class '" + key + "' must live in degree " +
                                    std::to_string(degree));
    if (degree > b.base->dimension())
        throw std::invalid_argument("class '" + key + "' lies above the space dimension");
    b.classes[key] = b.base->reduce(std::move(value));
}

CohClass get_class(const Bundle& b, const std::string& key) {
    const int degree = class_key_degree(b.kind, key);
    auto it = b.classes.find(key);
    if (it != b.classes.end()) return it->second;
    return b.base->zero_class(degree);
}

void set_character(Bundle& b, int k, RationalCohClass value) {
    if (b.kind != FieldKind::complex)
        throw std::invalid_argument("characters are stored on complex bundles");
    if (k < 1 || value.degree != 2 * k)
        throw std::invalid_argument("ch_" + std::to_string(k) + " must live in degree " +
                                    std::to_string(2 * k));
    b.characters[k] = std::move(value);
}

RationalCohClass pontrjagin_class(const Bundle& v, int j) {
    if (v.kind != FieldKind::real)
        throw std::invalid_argument("pontrjagin_class: bundle is not real");
    if (j < 1) throw std::invalid_argument("pontrjagin_class: j must be >= 1");
    const std::string key = "p" + std::to_string(j);
    if (4 * j > v.base->dimension()) return v.base->rational_zero(4 * j);
    if (v.has_class(key)) return v.base->to_rational(get_class(v, key));
    if (j == 1 && v.has_class("Q1"))
        return v.base->to_rational(v.base->scale(2, get_class(v, "Q1")));
    if (j == 2 && (v.has_class("Q1") || v.has_class("Q2"))) {
        auto q1 = v.base->to_rational(get_class(v, "Q1"));
        auto q2 = v.base->to_rational(get_class(v, "Q2"));
        RationalCohClass p2 = v.base->rscale(2, q2);
        if (!q1.is_zero()) p2 = v.base->radd(p2, v.base->cup(q1, q1));
        return p2;
    }
    return v.base->to_rational(get_class(v, key));
}

RationalCohClass chern_character_class(const Bundle& e, int k) {
    if (e.kind != FieldKind::complex)
        throw std::invalid_argument("chern_character_class: bundle is not complex");
    if (k < 1) throw std::invalid_argument("chern_character_class: k must be >= 1");
    if (2 * k > e.base->dimension()) return e.base->rational_zero(2 * k);
    if (auto it = e.characters.find(k); it != e.characters.end()) return it->second;

    int max_c = k;
    for (const auto& [key, value] : e.classes) {
        (void)value;
        if (int i = key_suffix(key, "c"); i > max_c) max_c = i;
    }
    std::vector<Generator> gens;
    for (int i = 1; i <= max_c; ++i) gens.push_back({"c" + std::to_string(i), 2 * i});
    auto ring = Ring::make(std::move(gens), 2 * k);
    std::vector<GradedPoly> c;
    std::map<std::string, RationalCohClass> bindings;
    for (int i = 1; i <= max_c; ++i) {
        const std::string name = "c" + std::to_string(i);
        c.push_back(GradedPoly::generator(ring, name));
        const CohClass value =
            2 * i <= e.base->dimension() ? get_class(e, name) : e.base->zero_class(2 * i);
        bindings[name] = e.base->to_rational(value);
    }
    GradedPoly formula = chern_character(c, k);
    if (formula.is_zero()) return e.base->rational_zero(2 * k);
    return evaluate_class_polynomial(formula, bindings, *e.base);
}

RationalCohClass evaluate_class_polynomial(const GradedPoly& poly,
                                           const std::map<std::string, RationalCohClass>& bindings,
                                           const BaseSpace& space) {
    const auto& gens = poly.ring()->generators();
    std::optional<int> degree = poly.min_degree();
    if (!degree || !poly.is_homogeneous(*degree))
        throw std::invalid_argument("evaluate_class_polynomial: polynomial must be homogeneous");
    RationalCohClass acc = space.rational_zero(*degree);
    for (const auto& [exps, coeff] : poly.terms()) {
        std::optional<RationalCohClass> term;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            for (std::uint32_t rep = 0; rep < exps[i]; ++rep) {
                auto bound = bindings.find(gens[i].name);
                if (bound == bindings.end())
                    throw std::invalid_argument("no binding for generator '" + gens[i].name + "'");
                if (bound->second.degree != gens[i].degree)
                    throw std::invalid_argument("binding for '" + gens[i].name +
                                                "' lives in the wrong degree");
                if (!term) term = bound->second;
                else term = space.cup(*term, bound->second);
            }
        }
        if (!term) throw std::invalid_argument("evaluate_class_polynomial: constant term");
        acc = space.radd(acc, space.rscale(coeff, *term));
    }
    return acc;
}

Bundle direct_sum(const Bundle& e, const Bundle& f) {
    check_same_base(e, f, "direct_sum");
    Bundle out;
    out.base = e.base;
    out.kind = e.kind;
    out.rank = e.rank + f.rank;
    out.validity = combine(e.validity, f.validity);
    out.w1_vanishes = combine_vanishing(e.w1_vanishes, f.w1_vanishes);
    out.w2_vanishes = out.w1_vanishes == std::optional<bool>(true)
                          ? combine_vanishing(e.w2_vanishes, f.w2_vanishes)
                          : std::nullopt;
    combine_families(out, e, f, /*invert_f=*/false);
    return out;
}

Bundle virtual_difference(const Bundle& e, const Bundle& f) {
    check_same_base(e, f, "virtual_difference");
    Bundle out;
    out.base = e.base;
    out.kind = e.kind;
    out.rank = e.rank - f.rank;
    out.validity = combine(e.validity, f.validity);
    out.w1_vanishes = combine_vanishing(e.w1_vanishes, f.w1_vanishes);
    out.w2_vanishes = out.w1_vanishes == std::optional<bool>(true)
                          ? combine_vanishing(e.w2_vanishes, f.w2_vanishes)
                          : std::nullopt;
    combine_families(out, e, f, /*invert_f=*/true);
    return out;
}

Bundle complexify(const Bundle& v) {
    if (v.kind != FieldKind::real) throw std::invalid_argument("complexify: bundle is not real");
    Bundle out;
    out.base = v.base;
    out.kind = FieldKind::complex;
    out.rank = v.rank;
    out.validity = Validity::mod_2_torsion; // odd Chern classes (2-torsion) dropped
    out.w1_vanishes = true;                 // complex bundles are orientable
    out.w2_vanishes = true;                 // c1 of a complexification vanishes
    for (const auto& [key, value] : v.classes) {
        int j = key_suffix(key, "p");
        if (j < 1) continue;
        // c_{2j} sits in degree 4j, the same degree as p_j.
        CohClass c2j = j % 2 == 1 ? v.base->negate(value) : value;
        set_class(out, "c" + std::to_string(2 * j), std::move(c2j));
    }
    return out;
}

Bundle conjugate(const Bundle& e) {
    if (e.kind != FieldKind::complex)
        throw std::invalid_argument("conjugate: bundle is not complex");
    Bundle out = e;
    for (auto& [key, value] : out.classes) {
        int idx = key_suffix(key, "c");
        if (idx >= 1 && idx % 2 == 1) value = e.base->negate(value);
    }
    for (auto& [k, value] : out.characters) {
        if (k % 2 == 1) value = e.base->rscale(-1, value);
    }
    return out;
}

} // namespace ccalc
