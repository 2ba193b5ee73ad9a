#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclo/lgraph.hpp"
#include "cyclo/ring.hpp"

namespace cyclo {

/**
 * Dense univariate polynomial with arbitrary-precision integer
 * coefficients, stored lowest degree first with no trailing zeros.
 */
class IntPolynomial {
public:
    IntPolynomial() = default;  // the zero polynomial
    explicit IntPolynomial(std::vector<Int> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial constant(Int value);
    // The monomial c * x^k.
    static IntPolynomial monomial(Int coefficient, int degree);

    bool is_zero() const noexcept { return coefficients_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_monic() const;

    // Coefficient of x^k; zero beyond the degree.
    const Int& coeff(int k) const;
    const std::vector<Int>& coefficients() const noexcept { return coefficients_; }

    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const Int& scalar) const;
    bool operator==(const IntPolynomial& rhs) const { return coefficients_ == rhs.coefficients_; }

    Int evaluate(const Int& x) const;

    // p(x + shift), computed exactly.
    IntPolynomial shift_argument(const Int& shift) const;
    // p(-x).
    IntPolynomial negate_argument() const;

    IntPolynomial derivative() const;

    // Quotient and remainder by a monic divisor; exact over Z.
    std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& divisor) const;

    // Gcd of the primitive parts, computed with a fraction-free
    // subresultant remainder sequence; result is primitive with a
    // positive leading coefficient.
    static IntPolynomial gcd_primitive(IntPolynomial p, IntPolynomial q);

    // Rendering like "x^4 - 8*x^2 + 16".
    std::string to_string() const;

private:
    void trim();

    std::vector<Int> coefficients_;
};

// Characteristic polynomial det(xI - M) of the graph's Hermitian
// matrix, computed exactly (fraction-free determinants at integer
// points plus difference interpolation). Always monic with integer
// coefficients; both facts are asserted internally.
IntPolynomial char_poly(const LGraph& g);

// True when every eigenvalue lies in [-2, 2], decided exactly.
bool is_cyclotomic(const LGraph& g);

// True when the spectrum is {+2, -2} with any multiplicities.
bool eigenvalues_all_pm2(const LGraph& g);

// For monic p of degree n, the degree-2n polynomial z^n p(z + 1/z).
// Rejects non-monic input.
IntPolynomial reciprocal_poly(const IntPolynomial& p);

// Mahler measure |lead| * prod max(1, |root|). The one numerical
// routine in the library: roots are found in double precision, but
// only after an exact square-free decomposition, which keeps the
// result accurate to well beyond 6 significant digits for the
// polynomial sizes that occur here. Rejects the zero polynomial.
double mahler_measure(const IntPolynomial& p);

}  // namespace cyclo
