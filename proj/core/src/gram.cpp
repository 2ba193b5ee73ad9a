#include "cyclo/gram.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "cyclo/grow.hpp"
#include "cyclo/spectra.hpp"

namespace cyclo {

namespace {

void require_spec_shape(const LGraph& g, const CombinationSpec& spec, bool need_primed) {
    const std::size_t n = static_cast<std::size_t>(g.n());
    if (spec.coefficients.size() != n) {
        throw std::invalid_argument("combination must assign one coefficient per vertex");
    }
    // Only the two-sided check reads the primed coefficients, so a
    // plain inner-product query may leave them empty.
    if (spec.primed_coefficients.size() != n &&
        (need_primed || !spec.primed_coefficients.empty())) {
        throw std::invalid_argument("combination must assign one coefficient per vertex");
    }
    bool any_nonzero = false;
    for (const auto& c : spec.coefficients) {
        if (c.ring() != g.ring()) {
            throw std::domain_error("combination coefficients use a different ring than the graph");
        }
        if (!c.is_zero()) any_nonzero = true;
    }
    for (const auto& c : spec.primed_coefficients) {
        if (c.ring() != g.ring()) {
            throw std::domain_error("combination coefficients use a different ring than the graph");
        }
    }
    if (!any_nonzero) {
        throw std::invalid_argument("combination must have at least one nonzero coefficient");
    }
}

// Inner products against the rows of M + sign*2I. sign = +1 gives the
// M + 2I side, sign = -1 the 2I - M side (up to the global flip that
// the caller's coefficients absorb).
std::vector<RingElement> side_row(const LGraph& g, const std::vector<RingElement>& coeff,
                                  bool plus_side) {
    const int n = g.n();
    const RingElement two = RingElement::integer(g.ring(), 2);
    std::vector<RingElement> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        RingElement acc = RingElement::zero(g.ring());
        for (int j = 0; j < n; ++j) {
            RingElement a = g.entry(j, i);
            if (!plus_side) a = -a;
            if (i == j) a = a + two;
            acc = acc + coeff[static_cast<std::size_t>(j)] * a;
        }
        row.push_back(acc);
    }
    return row;
}

Int side_self(const std::vector<RingElement>& coeff, const std::vector<RingElement>& row) {
    RingElement acc = RingElement::zero(coeff.front().ring());
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        acc = acc + coeff[i] * row[i].conj();
    }
    if (!acc.is_rational()) {
        throw std::logic_error("self inner product of a hermitian form must be rational");
    }
    return acc.a();
}

}  // namespace

InnerProducts combination_inner_products(const LGraph& g, const CombinationSpec& spec) {
    require_spec_shape(g, spec, false);
    InnerProducts out;
    out.row = side_row(g, spec.coefficients, true);
    out.self = side_self(spec.coefficients, out.row);
    return out;
}

GramExtension try_gram_extension(const LGraph& g, const CombinationSpec& spec) {
    require_spec_shape(g, spec, true);
    const int n = g.n();
    GramExtension result;

    const std::vector<RingElement> row = side_row(g, spec.coefficients, true);
    const Int self = side_self(spec.coefficients, row);

    if (self < 1 || self > 3) {
        result.status = GramCondition::self_norm_out_of_range;
        result.detail = "self inner product is " + self.get_str();
        return result;
    }
    for (int i = 0; i < n; ++i) {
        const Int nm = row[static_cast<std::size_t>(i)].norm();
        if (nm > 4) {
            std::ostringstream os;
            os << "inner product against vertex " << i << " is "
               << row[static_cast<std::size_t>(i)].to_string() << " of norm " << nm.get_str();
            result.status = GramCondition::entry_outside_labels;
            result.detail = os.str();
            return result;
        }
    }
    bool any = false;
    for (const auto& r : row) {
        if (!r.is_zero()) any = true;
    }
    if (!any) {
        result.status = GramCondition::all_entries_zero;
        result.detail = "candidate vector is orthogonal to every vertex";
        return result;
    }

    const std::vector<RingElement> prow = side_row(g, spec.primed_coefficients, false);
    const Int pself = side_self(spec.primed_coefficients, prow);
    if (pself != 4 - self) {
        result.status = GramCondition::primed_self_norm_mismatch;
        result.detail = "primed self inner product is " + pself.get_str() + ", expected " +
                        Int(4 - self).get_str();
        return result;
    }
    for (int i = 0; i < n; ++i) {
        if (prow[static_cast<std::size_t>(i)] != -row[static_cast<std::size_t>(i)]) {
            std::ostringstream os;
            os << "primed inner product against vertex " << i << " is "
               << prow[static_cast<std::size_t>(i)].to_string() << ", expected "
               << (-row[static_cast<std::size_t>(i)]).to_string();
            result.status = GramCondition::primed_entry_mismatch;
            result.detail = os.str();
            return result;
        }
    }

    std::vector<int> charges = g.charges();
    charges.push_back(static_cast<int>(self.get_si()) - 2);
    std::vector<Edge> edges = g.edges();
    for (int i = 0; i < n; ++i) {
        const RingElement& r = row[static_cast<std::size_t>(i)];
        if (!r.is_zero()) edges.push_back(Edge{i, n, r.conj()});
    }
    result.status = GramCondition::accepted;
    result.graph = LGraph(g.ring(), std::move(charges), std::move(edges));
    return result;
}

namespace {

// Coefficients 2 at v and -M_{v,u} at each neighbor u, with the sign
// of v's coefficient flipped on the primed side. Covers a weight-3
// vertex over either a weight-2 plus a weight-1 edge or three
// weight-1 edges.
CombinationSpec weight3_spec(const LGraph& g, int v) {
    const std::size_t n = static_cast<std::size_t>(g.n());
    const RingElement zero = RingElement::zero(g.ring());
    CombinationSpec spec{std::vector<RingElement>(n, zero), std::vector<RingElement>(n, zero)};
    spec.coefficients[static_cast<std::size_t>(v)] = RingElement::integer(g.ring(), 2);
    spec.primed_coefficients[static_cast<std::size_t>(v)] = RingElement::integer(g.ring(), -2);
    for (int u = 0; u < g.n(); ++u) {
        if (u == v) continue;
        if (auto lab = g.label(v, u)) {
            spec.coefficients[static_cast<std::size_t>(u)] = -g.entry(v, u);
            spec.primed_coefficients[static_cast<std::size_t>(u)] = -g.entry(v, u);
        }
    }
    return spec;
}

// Coefficient 1 at the inner endpoint w of a hanging weight-2 edge
// and -M_{w,u} at w's weight-1 neighbors, with those neighbor signs
// flipped on the primed side.
CombinationSpec hanging_weight2_spec(const LGraph& g, int w, const std::vector<int>& light) {
    const std::size_t n = static_cast<std::size_t>(g.n());
    const RingElement zero = RingElement::zero(g.ring());
    CombinationSpec spec{std::vector<RingElement>(n, zero), std::vector<RingElement>(n, zero)};
    spec.coefficients[static_cast<std::size_t>(w)] = RingElement::one(g.ring());
    spec.primed_coefficients[static_cast<std::size_t>(w)] = RingElement::one(g.ring());
    for (int u : light) {
        spec.coefficients[static_cast<std::size_t>(u)] = -g.entry(w, u);
        spec.primed_coefficients[static_cast<std::size_t>(u)] = g.entry(w, u);
    }
    return spec;
}

}  // namespace

bool prove_nonmaximal_by_gram(const LGraph& g) {
    const int d = g.ring().d();
    if (d != -2 && d != -7) {
        throw std::invalid_argument("gram-style extension templates require d = -2 or d = -7");
    }
    if (!is_cyclotomic(g)) {
        throw std::invalid_argument("gram-style extension templates require a cyclotomic graph");
    }

    // Weight-3 vertex templates first.
    for (int v = 0; v < g.n(); ++v) {
        if (g.charge(v) != 0 || g.weighted_degree(v) != 3) continue;
        if (try_gram_extension(g, weight3_spec(g, v)).accepted()) return true;
    }

    // Hanging weight-2 edge: v--w of weight 2 with v otherwise bare
    // and w carrying exactly two further weight-1 edges.
    for (int v = 0; v < g.n(); ++v) {
        if (g.charge(v) != 0 || g.weighted_degree(v) != 2) continue;
        int w = -1;
        for (int u = 0; u < g.n(); ++u) {
            if (u == v) continue;
            if (auto lab = g.label(v, u)) {
                w = (lab->norm() == 2) ? u : -1;
                break;
            }
        }
        if (w < 0 || g.charge(w) != 0 || g.weighted_degree(w) != 4) continue;
        std::vector<int> light;
        bool shape_ok = true;
        for (int u = 0; u < g.n(); ++u) {
            if (u == w || u == v) continue;
            if (auto lab = g.label(w, u)) {
                if (lab->norm() != 1) shape_ok = false;
                light.push_back(u);
            }
        }
        if (!shape_ok || light.size() != 2) continue;
        if (try_gram_extension(g, hanging_weight2_spec(g, w, light)).accepted()) return true;
    }

    // Fall back to a direct search for any cyclotomic one-vertex
    // extension.
    return !extensions(g, GrowConfig::full(g.ring())).empty();
}

}  // namespace cyclo
