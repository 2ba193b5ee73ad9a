#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

namespace cyclo {

using Int = mpz_class;

/**
 * Ring of integers of the imaginary quadratic field Q(sqrt(d)) for
 * d in {-2, -7, -11, -15}. Elements are written against the integral
 * basis {1, w}: w = sqrt(d) when d = -2, and w = (1 + sqrt(d)) / 2 for
 * the d = 1 (mod 4) cases. Every supported ring has unit group {1, -1}.
 */
class Ring {
public:
    explicit Ring(int d);

    int d() const noexcept { return d_; }

    // True when the basis element is w = (1 + sqrt(d)) / 2.
    bool half_integral() const noexcept { return d_ != -2; }

    // Human-readable basis description, e.g. "w = (1+sqrt(-7))/2".
    std::string basis_legend() const;

    bool operator==(const Ring& other) const noexcept { return d_ == other.d_; }
    bool operator!=(const Ring& other) const noexcept { return d_ != other.d_; }

    static const std::vector<int>& supported_discriminant_parameters();

private:
    int d_;
};

/**
 * Element a + b*w of a Ring, with arbitrary-precision integer
 * coordinates; characteristic-polynomial intermediates overflow
 * machine words already around a dozen vertices.
 */
class RingElement {
public:
    RingElement(Ring ring, Int a, Int b);

    static RingElement zero(const Ring& ring) { return {ring, 0, 0}; }
    static RingElement one(const Ring& ring) { return {ring, 1, 0}; }
    static RingElement omega(const Ring& ring) { return {ring, 0, 1}; }
    static RingElement integer(const Ring& ring, Int value) { return {ring, std::move(value), 0}; }

    const Ring& ring() const noexcept { return ring_; }
    const Int& a() const noexcept { return a_; }
    const Int& b() const noexcept { return b_; }

    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
    bool is_rational() const noexcept { return b_ == 0; }

    RingElement operator+(const RingElement& rhs) const;
    RingElement operator-(const RingElement& rhs) const;
    RingElement operator*(const RingElement& rhs) const;
    RingElement operator-() const;

    RingElement conj() const;
    Int norm() const;
    Int trace() const;

    // Exact quotient *this / rhs; throws std::domain_error when rhs is
    // zero or does not divide exactly.
    RingElement divide_exact(const RingElement& rhs) const;

    bool operator==(const RingElement& rhs) const;
    bool operator!=(const RingElement& rhs) const { return !(*this == rhs); }
    // Total order by (norm, a, b), used wherever a deterministic
    // element ordering is needed.
    bool operator<(const RingElement& rhs) const;

    // Rendering like "1-2*w"; pair with Ring::basis_legend().
    std::string to_string() const;

private:
    Ring ring_;
    Int a_;
    Int b_;
};

/**
 * The label alphabet of a ring: all elements of norm at most 4,
 * bucketed by norm. Norm-0 holds only the zero element.
 */
class LabelSet {
public:
    explicit LabelSet(const Ring& ring);

    const Ring& ring() const noexcept { return ring_; }

    // Elements of exactly the given norm (0 <= n <= 4), sorted.
    const std::vector<RingElement>& of_norm(int n) const;

    // Nonzero labels, sorted by (norm, a, b).
    const std::vector<RingElement>& all_nonzero() const noexcept { return nonzero_; }

private:
    Ring ring_;
    std::array<std::vector<RingElement>, 5> by_norm_;
    std::vector<RingElement> nonzero_;
};

LabelSet label_set(const Ring& ring);

}  // namespace cyclo
