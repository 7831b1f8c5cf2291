#ifndef CCALC_FORMS_HPP
#define CCALC_FORMS_HPP

#include "ccalc/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace ccalc::forms {

// Multivariate polynomial over Q in the patch coordinates; exponent vectors
// are indexed by coordinate. Exact arithmetic throughout.
class Poly {
public:
    using Exps = std::vector<std::uint16_t>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}
    static Poly constant(int nvars, const Rational& c);
    static Poly coordinate(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exps, Rational>& terms() const { return terms_; }

    void add_term(const Exps& e, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    Poly scaled(const Rational& c) const;

    Poly derivative(int var) const;

    bool operator==(const Poly&) const = default;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<Exps, Rational> terms_;
};

// Square matrix of polynomials.
struct PolyMatrix {
    int size = 0;  // m (matrix is m x m)
    int nvars = 0;
    std::vector<Poly> entries; // row-major

    static PolyMatrix zero(int size, int nvars);
    static PolyMatrix identity(int size, int nvars);

    Poly& at(int r, int c) { return entries[static_cast<std::size_t>(r * size + c)]; }
    const Poly& at(int r, int c) const { return entries[static_cast<std::size_t>(r * size + c)]; }

    bool is_zero() const;
    PolyMatrix operator-() const;
    PolyMatrix& operator+=(const PolyMatrix& rhs);
    friend PolyMatrix operator+(PolyMatrix lhs, const PolyMatrix& rhs) { return lhs += rhs; }
    friend PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs);
    PolyMatrix scaled(const Rational& c) const;
    Poly trace() const;
    // Trace of lhs * rhs without forming the product matrix.
    static Poly trace_of_product(const PolyMatrix& lhs, const PolyMatrix& rhs);

    bool operator==(const PolyMatrix&) const = default;
};

// Strictly increasing tuple of coordinate indices.
using IndexTuple = std::vector<std::uint8_t>;

// Merge two increasing tuples; returns the permutation sign (+1/-1) and
// fills `out`, or 0 when they share an index.
int merge_tuples(const IndexTuple& a, const IndexTuple& b, IndexTuple& out);

// Matrix-valued differential form of homogeneous degree on a coordinate
// patch. Components are stored on sorted index tuples only, so antisymmetry
// is canonical; forms of degree above the patch dimension are identically
// zero. Scalar forms are the matrix_size == 1 case.
class Form {
public:
    Form(int patch_dim, int matrix_size, int degree);

    static Form zero(int patch_dim, int matrix_size, int degree) {
        return Form(patch_dim, matrix_size, degree);
    }
    // Degree-0 form wrapping a matrix.
    static Form from_matrix(int patch_dim, PolyMatrix m);

    int patch_dim() const { return patch_dim_; }
    int matrix_size() const { return matrix_size_; }
    int degree() const { return degree_; }
    bool is_zero() const { return components_.empty(); }
    const std::map<IndexTuple, PolyMatrix>& components() const { return components_; }

    void add_component(const IndexTuple& idx, const PolyMatrix& m);

    Form operator-() const;
    Form& operator+=(const Form& rhs);
    Form& operator-=(const Form& rhs);
    friend Form operator+(Form lhs, const Form& rhs) { return lhs += rhs; }
    friend Form operator-(Form lhs, const Form& rhs) { return lhs -= rhs; }
    Form scaled(const Rational& c) const;

    // Wedge with matrix multiplication on the coefficients.
    Form wedge(const Form& rhs) const;
    // Scalar form Tr(this wedge rhs); cheaper than wedge().trace().
    Form wedge_trace(const Form& rhs) const;

    // Exterior derivative.
    Form d() const;

    Form trace() const;
    // Conjugation and one-sided matrix actions (degree-0 matrices).
    Form left_mul(const PolyMatrix& m) const;
    Form right_mul(const PolyMatrix& m) const;

    bool operator==(const Form&) const = default;

    std::string to_string(const std::vector<std::string>& coord_names) const;

private:
    int patch_dim_;
    int matrix_size_;
    int degree_;
    std::map<IndexTuple, PolyMatrix> components_;
};

// F = dA + A ^ A for a matrix 1-form connection.
Form curvature(const Form& a);

// Unnormalized character form Tr(F^j); degree 2j above the patch dimension
// yields the zero form. The (1/j!) (i/2pi)^j normalization is metadata.
Form chern_character_form(const Form& f, int j);

struct FormPrefactor {
    Rational factor = 1;
    int i_power = 0;
    int two_pi_power = 0;
    std::string text() const;
};

// Chern-Simons transgression built from the homotopy formula with the
// interpolated curvature F_t = t dA + t^2 A^2: the unnormalized form is
// j * Integral_0^1 Tr(A F_t^{j-1}) dt, with d(unnormalized) = Tr(F^j)
// exactly; the recorded prefactor 1/(j-1)! (i/2pi)^j belongs to the
// integral formula, i.e. the normalized form is (1/j!) (i/2pi)^j times the
// unnormalized one.
struct Transgression {
    int j = 0;
    Form unnormalized;
    FormPrefactor prefactor;
};

Transgression cs_transgression(const Form& a, int j);

// A^g = g^{-1} A g + g^{-1} dg. Checks g g_inv = g_inv g = 1 exactly.
Form gauge_transform(const Form& a, const PolyMatrix& g, const PolyMatrix& g_inv);

// Verifies d(T_P ^ Tr(F^j_prime)) = Tr(F^j) ^ Tr(F^j_prime), the
// transgression of a decomposable character form.
bool suspension_identity_holds(const Form& a, int j, int j_prime);

} // namespace ccalc::forms

#endif
