#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catlab/monomial.hpp"
#include "catlab/rational.hpp"

namespace catlab {

/// Which symmetric algebra an element lives in: Sym V (points, variables
/// x0..x{N-1}) or Sym V* (differential operators, variables a0..a{N-1}).
enum class Ring { Point, Dual };

std::string ring_name(Ring r);

/// Homogeneous polynomial with exact rational coefficients in a fixed
/// monomial basis.  Zero coefficients are never stored; the zero polynomial
/// keeps its degree annotation.  Immutable by convention after construction.
struct HomogeneousPoly {
    int num_vars = 0;
    int degree = 0;
    Ring ring = Ring::Point;
    // Descending lex so iteration follows the canonical monomial order.
    std::map<ExponentVector, Rational, std::greater<ExponentVector>> coeffs;

    static HomogeneousPoly zero(int num_vars, int degree, Ring ring = Ring::Point);

    bool is_zero() const { return coeffs.empty(); }

    Rational coeff(const ExponentVector& e) const;

    /// Adds c to the coefficient of e; erases the entry when it cancels.
    void add_term(const ExponentVector& e, const Rational& c);

    /// Dense coefficient vector over monomial_basis(num_vars, degree).
    std::vector<Rational> coefficient_vector() const;

    static HomogeneousPoly from_coefficient_vector(int num_vars, int degree, Ring ring,
                                                   const std::vector<Rational>& v);

    friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        return a.num_vars == b.num_vars && a.degree == b.degree && a.ring == b.ring &&
               a.coeffs == b.coeffs;
    }
};

HomogeneousPoly add(const HomogeneousPoly& a, const HomogeneousPoly& b);
HomogeneousPoly sub(const HomogeneousPoly& a, const HomogeneousPoly& b);
HomogeneousPoly scale(const HomogeneousPoly& a, const Rational& c);
HomogeneousPoly mul(const HomogeneousPoly& a, const HomogeneousPoly& b);

/// Contraction (apolarity action): alpha in S^i V* applied to p in S^d V as a
/// differential operator with true differentiation coefficients, so on
/// monomials  a^b . x^a = (prod_t a_t!/(a_t-b_t)!) x^(a-b)  when b <= a and 0
/// otherwise.  For i > d the result is the zero constant.
HomogeneousPoly contract(const HomogeneousPoly& alpha, const HomogeneousPoly& p);

/// A vector in V (or V*), used for decomposition points and dehomogenizers.
struct LinearForm {
    std::vector<Rational> coeffs;

    bool is_zero() const;

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.coeffs == b.coeffs;
    }
};

/// (sum_t v_t x_t)^d expanded with exact multinomial coefficients.
HomogeneousPoly power_of_linear_form(const LinearForm& v, int d, Ring ring = Ring::Point);

/// Scale to a primitive integer vector whose first nonzero entry is positive.
/// Canonical representative of a projective point; zero stays zero.
LinearForm normalize_point(const LinearForm& v);

// --- text grammar ---------------------------------------------------------
//
// Terms joined by '+'/'-'; a term is [coef][*]mono with coef an optional
// integer or a/b fraction; mono a product like x0^3*x1.  Variables x0..x{N-1}
// for the point ring, a0..a{N-1} for the dual ring; whitespace is ignored.
// Serialization emits terms in the fixed monomial order.

HomogeneousPoly parse_poly(const std::string& text,
                           std::optional<int> num_vars = std::nullopt,
                           std::optional<int> degree = std::nullopt);

std::string to_string(const HomogeneousPoly& p);

} // namespace catlab
