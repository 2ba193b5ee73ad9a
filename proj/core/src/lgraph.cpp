#include "cyclo/lgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cyclo {

namespace {

std::string pair_text(int i, int j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

LGraph::LGraph(Ring ring, std::vector<int> charges, std::vector<Edge> edges)
    : ring_(ring), charges_(std::move(charges)), edges_(std::move(edges)) {
    const int n = this->n();
    if (n < 1) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    for (int v = 0; v < n; ++v) {
        if (charges_[v] < -1 || charges_[v] > 1) {
            throw std::invalid_argument("charge of vertex " + std::to_string(v) +
                                        " outside {-1, 0, 1}");
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    weighted_degrees_.assign(n, 0);
    neighbors_.assign(n, {});
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const Edge& e = edges_[k];
        if (e.i < 0 || e.j >= n || e.i >= e.j) {
            throw std::invalid_argument("edge endpoints " + pair_text(e.i, e.j) +
                                        " invalid for n=" + std::to_string(n));
        }
        if (k > 0 && edges_[k - 1].i == e.i && edges_[k - 1].j == e.j) {
            throw std::invalid_argument("duplicate edge " + pair_text(e.i, e.j));
        }
        if (e.label.ring() != ring_) {
            throw std::invalid_argument("edge " + pair_text(e.i, e.j) +
                                        " labelled from a different ring");
        }
        const Int norm = e.label.norm();
        if (norm == 0 || norm > 4) {
            throw std::invalid_argument("edge " + pair_text(e.i, e.j) + " label " +
                                        e.label.to_string() + " has norm outside 1..4");
        }
        const int w = static_cast<int>(norm.get_si());
        weighted_degrees_[e.i] += w;
        weighted_degrees_[e.j] += w;
        neighbors_[e.i].push_back(e.j);
        neighbors_[e.j].push_back(e.i);
    }
    for (int v = 0; v < n; ++v) {
        weighted_degrees_[v] += charges_[v] == 0 ? 0 : 1;
        std::sort(neighbors_[v].begin(), neighbors_[v].end());
    }
}

void LGraph::check_vertex(int v) const {
    if (v < 0 || v >= n()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                                std::to_string(n()));
    }
}

int LGraph::charge(int v) const {
    check_vertex(v);
    return charges_[v];
}

std::optional<RingElement> LGraph::label(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) {
        throw std::invalid_argument("label requested for a vertex pair with i == j");
    }
    if (i > j) {
        std::swap(i, j);
    }
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(i, j),
                               [](const Edge& e, const std::pair<int, int>& key) {
                                   return std::pair(e.i, e.j) < key;
                               });
    if (it != edges_.end() && it->i == i && it->j == j) {
        return it->label;
    }
    return std::nullopt;
}

RingElement LGraph::entry(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) {
        return RingElement::integer(ring_, charges_[i]);
    }
    auto found = label(std::min(i, j), std::max(i, j));
    if (!found) {
        return RingElement::zero(ring_);
    }
    return i < j ? *found : found->conj();
}

std::vector<RingElement> LGraph::matrix() const {
    const int n = this->n();
    std::vector<RingElement> m;
    m.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.push_back(entry(i, j));
        }
    }
    return m;
}

int LGraph::weighted_degree(int v) const {
    check_vertex(v);
    return weighted_degrees_[v];
}

bool LGraph::is_connected() const {
    std::vector<char> seen(n(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : neighbors_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
        }
    }
    return visited == n();
}

std::vector<LGraph> LGraph::components() const {
    const int n = this->n();
    std::vector<int> component(n, -1);
    int count = 0;
    for (int start = 0; start < n; ++start) {
        if (component[start] >= 0) {
            continue;
        }
        std::vector<int> stack{start};
        component[start] = count;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : neighbors_[v]) {
                if (component[u] < 0) {
                    component[u] = count;
                    stack.push_back(u);
                }
            }
        }
        ++count;
    }
    std::vector<int> local_index(n, 0);
    std::vector<std::vector<int>> member_charges(count);
    for (int v = 0; v < n; ++v) {
        local_index[v] = static_cast<int>(member_charges[component[v]].size());
        member_charges[component[v]].push_back(charges_[v]);
    }
    std::vector<std::vector<Edge>> member_edges(count);
    for (const Edge& e : edges_) {
        member_edges[component[e.i]].push_back({local_index[e.i], local_index[e.j], e.label});
    }
    std::vector<LGraph> result;
    result.reserve(count);
    for (int c = 0; c < count; ++c) {
        result.emplace_back(ring_, std::move(member_charges[c]), std::move(member_edges[c]));
    }
    return result;
}

LGraph LGraph::delete_vertex(int v) const {
    check_vertex(v);
    if (n() == 1) {
        throw std::invalid_argument("cannot delete the only vertex");
    }
    std::vector<int> charges;
    charges.reserve(n() - 1);
    for (int u = 0; u < n(); ++u) {
        if (u != v) {
            charges.push_back(charges_[u]);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : edges_) {
        if (e.i == v || e.j == v) {
            continue;
        }
        edges.push_back({e.i - (e.i > v ? 1 : 0), e.j - (e.j > v ? 1 : 0), e.label});
    }
    return {ring_, std::move(charges), std::move(edges)};
}

bool LGraph::operator==(const LGraph& rhs) const {
    if (ring_ != rhs.ring_ || charges_ != rhs.charges_ || edges_.size() != rhs.edges_.size()) {
        return false;
    }
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (edges_[k].i != rhs.edges_[k].i || edges_[k].j != rhs.edges_[k].j ||
            edges_[k].label != rhs.edges_[k].label) {
            return false;
        }
    }
    return true;
}

namespace {

constexpr unsigned kChargeNeutralMask = 0b010u;
constexpr unsigned kChargeAllMask = 0b111u;
constexpr unsigned kEdgeAbsentMask = 0b00001u;
constexpr unsigned kEdgeAllMask = 0b11111u;

}  // namespace

FormPattern::FormPattern(int n) {
    if (n < 1) {
        throw std::invalid_argument("pattern needs at least one vertex");
    }
    charge_masks_.assign(n, kChargeNeutralMask);
    edge_masks_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, kEdgeAbsentMask);
}

int FormPattern::pair_index(int i, int j) const {
    if (i > j) {
        std::swap(i, j);
    }
    if (i < 0 || j >= n() || i == j) {
        throw std::out_of_range("pattern pair " + pair_text(i, j) + " invalid for n=" +
                                std::to_string(n()));
    }
    return i * n() - i * (i + 1) / 2 + (j - i - 1);
}

void FormPattern::set_charge_any(int v) {
    charge_masks_.at(v) = kChargeAllMask;
}

void FormPattern::set_charge_nonzero(int v) {
    charge_masks_.at(v) = 0b101u;
}

void FormPattern::set_charge_exact(int v, int charge) {
    if (charge < -1 || charge > 1) {
        throw std::invalid_argument("charge outside {-1, 0, 1}");
    }
    charge_masks_.at(v) = 1u << (charge + 1);
}

void FormPattern::set_edge_weight(int i, int j, int norm) {
    if (norm < 1 || norm > 4) {
        throw std::invalid_argument("edge weight outside 1..4");
    }
    edge_masks_[pair_index(i, j)] = 1u << norm;
}

void FormPattern::set_edge_norms(int i, int j, const std::vector<int>& norms,
                                 bool allow_absent) {
    unsigned mask = allow_absent ? kEdgeAbsentMask : 0u;
    for (int norm : norms) {
        if (norm < 1 || norm > 4) {
            throw std::invalid_argument("edge weight outside 1..4");
        }
        mask |= 1u << norm;
    }
    if (mask == 0) {
        throw std::invalid_argument("empty edge constraint");
    }
    edge_masks_[pair_index(i, j)] = mask;
}

void FormPattern::set_edge_unspecified(int i, int j) {
    edge_masks_[pair_index(i, j)] = kEdgeAllMask;
}

bool FormPattern::charge_allowed(int v, int charge) const {
    if (charge < -1 || charge > 1) {
        return false;
    }
    return charge_masks_.at(v) & (1u << (charge + 1));
}

bool FormPattern::edge_norm_allowed(int i, int j, int norm) const {
    if (norm < 0 || norm > 4) {
        return false;
    }
    return edge_masks_[pair_index(i, j)] & (1u << norm);
}

namespace {

int edge_norm_between(const LGraph& g, int u, int v) {
    auto found = g.label(u, v);
    return found ? static_cast<int>(found->norm().get_si()) : 0;
}

}  // namespace

bool matches_form(const LGraph& g, const FormPattern& pattern,
                  const std::vector<int>& embedding) {
    const int k = pattern.n();
    if (static_cast<int>(embedding.size()) != k) {
        throw std::invalid_argument("embedding size does not match pattern order");
    }
    std::vector<char> used(g.n(), 0);
    for (int v : embedding) {
        if (v < 0 || v >= g.n() || used[v]) {
            throw std::invalid_argument("embedding is not an injective vertex map");
        }
        used[v] = 1;
    }
    for (int v = 0; v < k; ++v) {
        if (!pattern.charge_allowed(v, g.charge(embedding[v]))) {
            return false;
        }
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (!pattern.edge_norm_allowed(i, j, edge_norm_between(g, embedding[i], embedding[j]))) {
                return false;
            }
        }
    }
    return true;
}

namespace {

void extend_embedding(const LGraph& g, const FormPattern& pattern, std::vector<int>& partial,
                      std::vector<char>& used, std::vector<std::vector<int>>& out) {
    const int depth = static_cast<int>(partial.size());
    if (depth == pattern.n()) {
        out.push_back(partial);
        return;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (used[v] || !pattern.charge_allowed(depth, g.charge(v))) {
            continue;
        }
        bool ok = true;
        for (int p = 0; p < depth && ok; ++p) {
            ok = pattern.edge_norm_allowed(p, depth, edge_norm_between(g, partial[p], v));
        }
        if (!ok) {
            continue;
        }
        used[v] = 1;
        partial.push_back(v);
        extend_embedding(g, pattern, partial, used, out);
        partial.pop_back();
        used[v] = 0;
    }
}

}  // namespace

std::vector<std::vector<int>> find_induced_form(const LGraph& g, const FormPattern& pattern) {
    std::vector<std::vector<int>> out;
    if (pattern.n() > g.n()) {
        return out;
    }
    std::vector<int> partial;
    std::vector<char> used(g.n(), 0);
    extend_embedding(g, pattern, partial, used, out);
    return out;
}

}  // namespace cyclo
