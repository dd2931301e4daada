#ifndef BERTINI_POLY_HPP
#define BERTINI_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bertini/matrix.hpp"
#include "bertini/scalar.hpp"

namespace bertini {

/// Exponent vector; entry j is the exponent of x_j.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Graded reverse-lexicographic order.  Used descending everywhere so
/// that map iteration starts at the leading term.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

/*
 * Sparse multivariate polynomial with exact coefficients.  Invariants:
 * no stored coefficient is zero, every exponent vector has length
 * nvars(), and terms sit in descending grevlex order, which makes
 * printing and equality canonical.
 */
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Scalar, GrevlexGreater>;

    MultiPoly(FieldTag tag, unsigned nvars) : tag_(tag), nvars_(nvars) {}

    static MultiPoly constant(FieldTag tag, unsigned nvars, const Scalar& c);
    static MultiPoly variable(FieldTag tag, unsigned nvars, unsigned i);

    FieldTag tag() const { return tag_; }
    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Accumulates c * x^m, erasing the term if the sum cancels.
    void add_term(const Monomial& m, const Scalar& c);
    Scalar coeff(const Monomial& m) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Scalar& c) const;
    MultiPoly times_monomial(const Monomial& m) const;
    bool operator==(const MultiPoly& o) const;

    /// Formal partial derivative with respect to x_i.
    MultiPoly partial(unsigned i) const;

    Scalar eval(const std::vector<Scalar>& pt) const;

    /// The common total degree of all terms, or nullopt when terms of
    /// different degrees are present.  The zero polynomial reports 0.
    std::optional<unsigned> homogeneous_degree() const;

    /// Composition with the substitution x -> t*x; t must be invertible.
    MultiPoly linear_change(const Matrix& t) const;

    /// p / x_chart^deg written in the chart coordinates y_j = x_j/x_chart,
    /// j != chart; the result has nvars()-1 variables, where chart
    /// variable k stands for x_k when k < chart and x_{k+1} otherwise.
    MultiPoly dehomogenize_chart(unsigned chart) const;

    enum class EulerVerdict { holds, fails, inapplicable };
    /// Tests sum_i x_i * dp/dx_i == deg(p) * p.  Over F_p with p | deg
    /// the identity degenerates and the check reports inapplicable.
    EulerVerdict euler_check() const;

    std::string str() const;

private:
    FieldTag tag_;
    unsigned nvars_;
    TermMap terms_;
};

/*
 * Parses the expression grammar
 *   expr   := term (('+'|'-') term)*
 *   term   := coeff ('*' factor)* | factor ('*' factor)*
 *   factor := var ('^' uint)?
 *   var    := 'x' uint
 *   coeff  := int | int '/' uint    (fractions only over Q)
 * with whitespace ignored.  Throws ParseError with the byte position on
 * any input outside the grammar.
 */
MultiPoly parse_poly(const std::string& text, unsigned nvars, FieldTag tag);

/// Coefficient-wise reduction of a rational polynomial mod p.  Rejects
/// primes dividing any coefficient denominator.
MultiPoly reduce_mod_p(const MultiPoly& p, std::uint64_t prime);

/// Flattened prime-field polynomial for tight evaluation loops.
struct FpPoly {
    std::uint64_t p = 0;
    unsigned nvars = 0;
    std::vector<std::uint64_t> coeffs;
    std::vector<unsigned> exps;  // nvars entries per term

    std::uint64_t eval(const std::uint64_t* pt) const;
};

FpPoly compile_fp(const MultiPoly& p);

}  // namespace bertini

#endif  // BERTINI_POLY_HPP
