#include "cyclo/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace cyclo {

namespace {

const Int kZero = 0;

Int int_gcd(const Int& x, const Int& y) {
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    coefficients_.assign(coefficients.begin(), coefficients.end());
    trim();
}

IntPolynomial IntPolynomial::constant(Int value) {
    IntPolynomial p;
    p.coefficients_.push_back(std::move(value));
    p.trim();
    return p;
}

IntPolynomial IntPolynomial::monomial(Int coefficient, int degree) {
    if (degree < 0) {
        throw std::invalid_argument("monomial degree must be nonnegative");
    }
    IntPolynomial p;
    p.coefficients_.assign(degree + 1, 0);
    p.coefficients_[degree] = std::move(coefficient);
    p.trim();
    return p;
}

void IntPolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) {
        coefficients_.pop_back();
    }
}

bool IntPolynomial::is_monic() const {
    return !coefficients_.empty() && coefficients_.back() == 1;
}

const Int& IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coefficients_.size())) {
        return kZero;
    }
    return coefficients_[k];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<Int> out(std::max(coefficients_.size(), rhs.coefficients_.size()), 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = coeff(static_cast<int>(k)) + rhs.coeff(static_cast<int>(k));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<Int> out(std::max(coefficients_.size(), rhs.coefficients_.size()), 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = coeff(static_cast<int>(k)) - rhs.coeff(static_cast<int>(k));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<Int> out(coefficients_.size() + rhs.coefficients_.size() - 1, 0);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
            out[i + j] += coefficients_[i] * rhs.coefficients_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Int& scalar) const {
    std::vector<Int> out(coefficients_);
    for (Int& c : out) {
        c *= scalar;
    }
    return IntPolynomial(std::move(out));
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

IntPolynomial IntPolynomial::shift_argument(const Int& shift) const {
    // Horner in (x + shift).
    std::vector<Int> acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        std::vector<Int> next(acc.size() + 1, 0);
        for (std::size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] += acc[k];
            next[k] += shift * acc[k];
        }
        if (next.empty()) {
            next.push_back(0);
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return IntPolynomial(std::move(acc));
}

IntPolynomial IntPolynomial::negate_argument() const {
    std::vector<Int> out(coefficients_);
    for (std::size_t k = 1; k < out.size(); k += 2) {
        out[k] = -out[k];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coefficients_.size() <= 1) {
        return {};
    }
    std::vector<Int> out(coefficients_.size() - 1);
    for (std::size_t k = 1; k < coefficients_.size(); ++k) {
        out[k - 1] = coefficients_[k] * static_cast<long>(k);
    }
    return IntPolynomial(std::move(out));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(
    const IntPolynomial& divisor) const {
    if (!divisor.is_monic()) {
        throw std::invalid_argument("divmod_monic requires a monic divisor");
    }
    const int m = divisor.degree();
    std::vector<Int> rem(coefficients_);
    if (degree() < m) {
        return {IntPolynomial{}, *this};
    }
    std::vector<Int> quot(degree() - m + 1, 0);
    for (int k = degree(); k >= m; --k) {
        Int factor = rem[k];
        if (factor == 0) {
            continue;
        }
        quot[k - m] = factor;
        for (int j = 0; j <= m; ++j) {
            rem[k - m + j] -= factor * divisor.coefficients_[j];
        }
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

namespace {

Int content(const IntPolynomial& p) {
    Int c = 0;
    for (const Int& x : p.coefficients()) {
        c = int_gcd(c, x);
    }
    return c;
}

IntPolynomial primitive_positive(const IntPolynomial& p) {
    if (p.is_zero()) {
        return p;
    }
    Int c = content(p);
    if (p.coefficients().back() < 0) {
        c = -c;
    }
    std::vector<Int> out(p.coefficients());
    for (Int& x : out) {
        x /= c;
    }
    return IntPolynomial(std::move(out));
}

// Pseudo-remainder up to content, which is all the primitive
// remainder sequence needs.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
    const Int lead = b.coefficients().back();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        IntPolynomial step =
            IntPolynomial::monomial(a.coefficients().back(), a.degree() - b.degree());
        a = a * lead - step * b;
    }
    return a;
}

}  // namespace

IntPolynomial IntPolynomial::gcd_primitive(IntPolynomial p, IntPolynomial q) {
    if (p.is_zero()) {
        return primitive_positive(q);
    }
    if (q.is_zero()) {
        return primitive_positive(p);
    }
    IntPolynomial a = primitive_positive(p);
    IntPolynomial b = primitive_positive(q);
    if (a.degree() < b.degree()) {
        std::swap(a, b);
    }
    while (true) {
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) {
            return primitive_positive(b);
        }
        if (r.degree() == 0) {
            return constant(1);
        }
        a = std::move(b);
        b = primitive_positive(r);
    }
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coefficients_[k];
        if (c == 0) {
            continue;
        }
        if (first) {
            if (c < 0) {
                out << "-";
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const Int mag = abs(c);
        if (mag != 1 || k == 0) {
            out << mag.get_str();
            if (k > 0) {
                out << "*";
            }
        }
        if (k == 1) {
            out << "x";
        } else if (k > 1) {
            out << "x^" << k;
        }
    }
    return out.str();
}

namespace {

// Fraction-free determinant; exact over any commutative ring with
// exact division, which Bareiss' identity guarantees for the
// quotients taken here.
RingElement determinant(std::vector<RingElement> m, int n, const Ring& ring) {
    if (n == 0) {
        return RingElement::one(ring);
    }
    RingElement previous_pivot = RingElement::one(ring);
    bool negate = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k * n + k].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!m[r * n + k].is_zero()) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) {
                return RingElement::zero(ring);
            }
            for (int j = k; j < n; ++j) {
                std::swap(m[k * n + j], m[swap_row * n + j]);
            }
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j])
                                   .divide_exact(previous_pivot);
            }
        }
        previous_pivot = m[k * n + k];
    }
    RingElement det = m[(n - 1) * n + (n - 1)];
    return negate ? -det : det;
}

Int factorial(int n) {
    Int f = 1;
    for (int k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

}  // namespace

IntPolynomial char_poly(const LGraph& g) {
    const int n = g.n();
    const Ring& ring = g.ring();
    const std::vector<RingElement> base = g.matrix();

    // det(kI - M) at the integer points k = 0..n.
    std::vector<Int> values;
    values.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        std::vector<RingElement> m = base;
        for (auto& x : m) {
            x = -x;
        }
        for (int v = 0; v < n; ++v) {
            m[v * n + v] = m[v * n + v] + RingElement::integer(ring, k);
        }
        RingElement det = determinant(std::move(m), n, ring);
        if (!det.is_rational()) {
            throw std::logic_error("internal: Hermitian determinant came out irrational");
        }
        values.push_back(det.a());
    }

    // Forward differences, then the Newton form over the falling
    // factorial basis, cleared of denominators by n!.
    std::vector<Int> diff = values;
    for (int j = 1; j <= n; ++j) {
        for (int i = n; i >= j; --i) {
            diff[i] -= diff[i - 1];
        }
    }
    const Int nfact = factorial(n);
    IntPolynomial scaled;
    IntPolynomial falling = IntPolynomial::constant(1);
    Int weight = nfact;  // n! / j!
    for (int j = 0; j <= n; ++j) {
        scaled = scaled + falling * (diff[j] * weight);
        falling = falling * IntPolynomial({-j, 1});
        weight /= j + 1;
    }
    std::vector<Int> coeffs(scaled.degree() + 1, 0);
    for (int k = 0; k <= scaled.degree(); ++k) {
        if (scaled.coeff(k) % nfact != 0) {
            throw std::logic_error("internal: interpolated coefficient not integral");
        }
        coeffs[k] = scaled.coeff(k) / nfact;
    }
    IntPolynomial p(std::move(coeffs));
    if (p.degree() != n || !p.is_monic()) {
        throw std::logic_error("internal: characteristic polynomial is not monic of degree n");
    }
    return p;
}

namespace {

// For monic p with all roots real: are all roots <= bound?
// Equivalently all coefficients of p(x + bound) are nonnegative.
bool roots_at_most(const IntPolynomial& p, long bound) {
    const IntPolynomial shifted = p.shift_argument(bound);
    for (const Int& c : shifted.coefficients()) {
        if (c < 0) {
            return false;
        }
    }
    return true;
}

// All roots >= bound: the sign pattern (-1)^(n-k) coeff_k >= 0 of
// p(x + bound).
bool roots_at_least(const IntPolynomial& p, long bound) {
    const IntPolynomial shifted = p.shift_argument(bound);
    const int n = shifted.degree();
    for (int k = 0; k <= n; ++k) {
        const Int& c = shifted.coeff(k);
        if ((n - k) % 2 == 0 ? c < 0 : c > 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_cyclotomic(const LGraph& g) {
    // A graph with every eigenvalue in [-2, 2] has (M^2)_vv <= 4, so
    // an oversized weighted degree settles the question for free.
    for (int v = 0; v < g.n(); ++v) {
        if (g.weighted_degree(v) > 4) {
            return false;
        }
    }
    const IntPolynomial p = char_poly(g);
    return roots_at_most(p, 2) && roots_at_least(p, -2);
}

namespace {

// Divides by (x - root) when the division is exact.
bool deflate_at_root(IntPolynomial& p, long root) {
    if (p.evaluate(root) != 0) {
        return false;
    }
    auto [quot, rem] = p.divmod_monic(IntPolynomial({-root, 1}));
    if (!rem.is_zero()) {
        throw std::logic_error("internal: zero remainder expected after root test");
    }
    p = std::move(quot);
    return true;
}

}  // namespace

bool eigenvalues_all_pm2(const LGraph& g) {
    IntPolynomial p = char_poly(g);
    while (p.degree() > 0 && deflate_at_root(p, 2)) {
    }
    while (p.degree() > 0 && deflate_at_root(p, -2)) {
    }
    return p.degree() == 0;
}

IntPolynomial reciprocal_poly(const IntPolynomial& p) {
    if (!p.is_monic()) {
        throw std::invalid_argument("reciprocal transform requires a monic polynomial");
    }
    const int n = p.degree();
    // z^n p(z + 1/z) = sum_k a_k z^(n-k) (z^2 + 1)^k.
    const IntPolynomial unit({1, 0, 1});
    IntPolynomial power = IntPolynomial::constant(1);
    IntPolynomial out;
    for (int k = 0; k <= n; ++k) {
        if (p.coeff(k) != 0) {
            out = out + power * IntPolynomial::monomial(p.coeff(k), n - k);
        }
        power = power * unit;
    }
    return out;
}

namespace {

double mahler_numeric_squarefree(const IntPolynomial& p) {
    const int m = p.degree();
    const double lead = std::abs(p.coefficients().back().get_d());
    if (m == 0) {
        return lead;
    }
    std::vector<std::complex<double>> c(m + 1);
    for (int k = 0; k <= m; ++k) {
        c[k] = p.coeff(k).get_d() / p.coefficients().back().get_d();
    }
    auto horner = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (int k = m; k >= 0; --k) {
            acc = acc * z + c[k];
        }
        return acc;
    };
    double bound = 0;
    for (int k = 0; k < m; ++k) {
        bound = std::max(bound, std::abs(c[k]));
    }
    bound += 1.0;

    // Durand-Kerner on the monic normalization; the caller guarantees
    // simple roots, so plain simultaneous iteration converges fast.
    std::vector<std::complex<double>> z(m);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc = 1.0;
    for (int i = 0; i < m; ++i) {
        acc *= seed;
        z[i] = acc;
    }
    for (int iter = 0; iter < 2000; ++iter) {
        double worst = 0;
        for (int i = 0; i < m; ++i) {
            std::complex<double> denom = 1.0;
            for (int j = 0; j < m; ++j) {
                if (j != i) {
                    denom *= z[i] - z[j];
                }
            }
            if (std::abs(denom) < 1e-300) {
                z[i] += std::complex<double>(1e-6, 1e-6);
                worst = 1;
                continue;
            }
            const std::complex<double> delta = horner(z[i]) / denom;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14 * bound) {
            break;
        }
    }
    double measure = lead;
    for (int i = 0; i < m; ++i) {
        measure *= std::max(1.0, std::abs(z[i]));
    }
    return measure;
}

// Exact quotient of integer polynomials; throws when the division is
// not exact over Z.
IntPolynomial divide_exact_poly(const IntPolynomial& p, const IntPolynomial& d) {
    if (d.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<Int> rem(p.coefficients());
    const int m = d.degree();
    const Int& lead = d.coefficients().back();
    if (p.degree() < m) {
        throw std::domain_error("inexact polynomial division");
    }
    std::vector<Int> quot(p.degree() - m + 1, 0);
    for (int k = p.degree(); k >= m; --k) {
        if (rem[k] == 0) {
            continue;
        }
        if (rem[k] % lead != 0) {
            throw std::domain_error("inexact polynomial division");
        }
        const Int factor = rem[k] / lead;
        quot[k - m] = factor;
        for (int j = 0; j <= m; ++j) {
            rem[k - m + j] -= factor * d.coeff(j);
        }
    }
    for (const Int& r : rem) {
        if (r != 0) {
            throw std::domain_error("inexact polynomial division");
        }
    }
    return IntPolynomial(std::move(quot));
}

double mahler_recursive(const IntPolynomial& p) {
    if (p.degree() == 0) {
        return std::abs(p.coefficients().back().get_d());
    }
    const IntPolynomial repeated = IntPolynomial::gcd_primitive(p, p.derivative());
    if (repeated.degree() == 0) {
        return mahler_numeric_squarefree(p);
    }
    // p splits as (p / rep) * rep with the first factor square-free;
    // the measure is multiplicative over the split.
    return mahler_numeric_squarefree(divide_exact_poly(p, repeated)) *
           mahler_recursive(repeated);
}

}  // namespace

double mahler_measure(const IntPolynomial& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("Mahler measure of the zero polynomial");
    }
    // Roots at the origin contribute max(1, 0) = 1; strip them.
    std::vector<Int> coeffs = p.coefficients();
    std::size_t shift = 0;
    while (coeffs[shift] == 0) {
        ++shift;
    }
    coeffs.erase(coeffs.begin(), coeffs.begin() + shift);
    return mahler_recursive(IntPolynomial(std::move(coeffs)));
}

}  // namespace cyclo
