#pragma once

#include <optional>
#include <vector>

#include "cyclo/ring.hpp"

namespace cyclo {

/** Undirected edge i < j carrying a nonzero ring label of norm <= 4. */
struct Edge {
    int i;
    int j;
    RingElement label;
};

/**
 * Charged L-graph over a ring: vertices carry charges in {-1, 0, +1},
 * edges carry ring labels of norm 1..4. The graph is the Hermitian
 * matrix M with M_vv = charge(v), M_ij = label(i, j) for i < j and
 * M_ji its conjugate. Instances are immutable after construction.
 */
class LGraph {
public:
    LGraph(Ring ring, std::vector<int> charges, std::vector<Edge> edges);

    const Ring& ring() const noexcept { return ring_; }
    int n() const noexcept { return static_cast<int>(charges_.size()); }

    int charge(int v) const;
    const std::vector<int>& charges() const noexcept { return charges_; }

    // Upper-triangle label for i < j, or nullopt when the pair is not
    // an edge. Arguments may be given in either order.
    std::optional<RingElement> label(int i, int j) const;

    // Matrix entry M_ij including the diagonal and conjugation.
    RingElement entry(int i, int j) const;

    // Dense row-major n x n matrix view.
    std::vector<RingElement> matrix() const;

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    // Sum of incident edge norms plus |charge|; equals (M^2)_vv.
    int weighted_degree(int v) const;

    bool is_connected() const;

    // Connected components as standalone graphs, ordered by smallest
    // original vertex; vertices keep their relative order.
    std::vector<LGraph> components() const;

    // Graph with vertex v removed and indices compacted; rejects n = 1.
    LGraph delete_vertex(int v) const;

    bool operator==(const LGraph& rhs) const;

private:
    void check_vertex(int v) const;

    Ring ring_;
    std::vector<int> charges_;
    std::vector<Edge> edges_;
    std::vector<int> weighted_degrees_;
    std::vector<std::vector<int>> neighbors_;
};

/**
 * Charge and edge constraints describing a family of L-graphs on a
 * fixed vertex list. Unconstrained pairs default to "absent", so a
 * pattern match is an induced-subgraph match.
 */
class FormPattern {
public:
    explicit FormPattern(int n);

    int n() const noexcept { return static_cast<int>(charge_masks_.size()); }

    // Charge constraints; the default is exactly neutral.
    void set_charge_any(int v);
    void set_charge_nonzero(int v);
    void set_charge_exact(int v, int charge);

    // Edge constraints; the default is absent.
    void set_edge_weight(int i, int j, int norm);
    void set_edge_norms(int i, int j, const std::vector<int>& norms, bool allow_absent);
    void set_edge_unspecified(int i, int j);

    bool charge_allowed(int v, int charge) const;
    // norm 0 stands for "no edge".
    bool edge_norm_allowed(int i, int j, int norm) const;

private:
    int pair_index(int i, int j) const;

    std::vector<unsigned> charge_masks_;
    std::vector<unsigned> edge_masks_;
};

// Does the vertex map (pattern vertex v -> embedding[v]) realize the
// pattern inside g as an induced subgraph?
bool matches_form(const LGraph& g, const FormPattern& pattern,
                  const std::vector<int>& embedding);

// All embeddings realizing the pattern, in lexicographic order.
std::vector<std::vector<int>> find_induced_form(const LGraph& g, const FormPattern& pattern);

}  // namespace cyclo
