#include "cyclo/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclo {

namespace {

void require_same_ring(const Ring& lhs, const Ring& rhs) {
    if (lhs != rhs) {
        throw std::domain_error("ring mismatch: d=" + std::to_string(lhs.d()) +
                                " vs d=" + std::to_string(rhs.d()));
    }
}

}  // namespace

Ring::Ring(int d) : d_(d) {
    const auto& ok = supported_discriminant_parameters();
    if (std::find(ok.begin(), ok.end(), d) == ok.end()) {
        throw std::invalid_argument("unsupported ring parameter d=" + std::to_string(d) +
                                    " (expected one of -2, -7, -11, -15)");
    }
}

std::string Ring::basis_legend() const {
    if (!half_integral()) {
        return "w = sqrt(-2)";
    }
    return "w = (1+sqrt(" + std::to_string(d_) + "))/2";
}

const std::vector<int>& Ring::supported_discriminant_parameters() {
    static const std::vector<int> values{-2, -7, -11, -15};
    return values;
}

RingElement::RingElement(Ring ring, Int a, Int b)
    : ring_(ring), a_(std::move(a)), b_(std::move(b)) {}

RingElement RingElement::operator+(const RingElement& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    return {ring_, a_ + rhs.a_, b_ + rhs.b_};
}

RingElement RingElement::operator-(const RingElement& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    return {ring_, a_ - rhs.a_, b_ - rhs.b_};
}

RingElement RingElement::operator*(const RingElement& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    const Int cross = a_ * rhs.b_ + b_ * rhs.a_;
    const Int bb = b_ * rhs.b_;
    if (!ring_.half_integral()) {
        // w^2 = d
        return {ring_, a_ * rhs.a_ + ring_.d() * bb, cross};
    }
    // w^2 = w + (d - 1) / 4
    const Int c = (ring_.d() - 1) / 4;
    return {ring_, a_ * rhs.a_ + c * bb, cross + bb};
}

RingElement RingElement::operator-() const {
    return {ring_, -a_, -b_};
}

RingElement RingElement::conj() const {
    if (!ring_.half_integral()) {
        return {ring_, a_, -b_};  // conj(sqrt(d)) = -sqrt(d)
    }
    return {ring_, a_ + b_, -b_};  // conj(w) = 1 - w
}

Int RingElement::norm() const {
    if (!ring_.half_integral()) {
        return a_ * a_ - ring_.d() * b_ * b_;
    }
    // a^2 + ab + b^2 (1 - d) / 4
    return a_ * a_ + a_ * b_ + b_ * b_ * ((1 - ring_.d()) / 4);
}

Int RingElement::trace() const {
    if (!ring_.half_integral()) {
        return 2 * a_;
    }
    return 2 * a_ + b_;
}

RingElement RingElement::divide_exact(const RingElement& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero ring element");
    }
    const RingElement numerator = *this * rhs.conj();
    const Int denom = rhs.norm();
    if (numerator.a_ % denom != 0 || numerator.b_ % denom != 0) {
        throw std::domain_error("inexact ring division: (" + to_string() + ") / (" +
                                rhs.to_string() + ")");
    }
    return {ring_, numerator.a_ / denom, numerator.b_ / denom};
}

bool RingElement::operator==(const RingElement& rhs) const {
    return ring_ == rhs.ring_ && a_ == rhs.a_ && b_ == rhs.b_;
}

bool RingElement::operator<(const RingElement& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    const Int ln = norm();
    const Int rn = rhs.norm();
    if (ln != rn) {
        return ln < rn;
    }
    if (a_ != rhs.a_) {
        return a_ < rhs.a_;
    }
    return b_ < rhs.b_;
}

std::string RingElement::to_string() const {
    if (b_ == 0) {
        return a_.get_str();
    }
    std::ostringstream out;
    if (a_ != 0) {
        out << a_.get_str();
        out << (b_ > 0 ? "+" : "-");
    } else if (b_ < 0) {
        out << "-";
    }
    const Int mag = abs(b_);
    if (mag != 1) {
        out << mag.get_str() << "*";
    }
    out << "w";
    return out.str();
}

LabelSet::LabelSet(const Ring& ring) : ring_(ring) {
    // Norm 4 forces |a|, |b| <= 4 in both basis shapes, so a bounded
    // coordinate scan is exhaustive.
    for (long a = -4; a <= 4; ++a) {
        for (long b = -4; b <= 4; ++b) {
            RingElement x(ring_, a, b);
            const Int n = x.norm();
            if (n <= 4) {
                by_norm_[n.get_ui()].push_back(x);
            }
        }
    }
    for (auto& bucket : by_norm_) {
        std::sort(bucket.begin(), bucket.end());
    }
    for (int n = 1; n <= 4; ++n) {
        nonzero_.insert(nonzero_.end(), by_norm_[n].begin(), by_norm_[n].end());
    }
}

const std::vector<RingElement>& LabelSet::of_norm(int n) const {
    if (n < 0 || n > 4) {
        throw std::out_of_range("label norm out of range: " + std::to_string(n));
    }
    return by_norm_[static_cast<std::size_t>(n)];
}

LabelSet label_set(const Ring& ring) {
    return LabelSet(ring);
}

}  // namespace cyclo
