#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclo/lgraph.hpp"
#include "cyclo/ring.hpp"

namespace cyclo {

/**
 * A candidate new basis vector x = sum c_i w_i expressed against the
 * rows w_i of the Gram decomposition of M + 2I, together with the
 * mirrored coefficients for the complementary 2I - M side. At least
 * one coefficient must be nonzero.
 */
struct CombinationSpec {
    std::vector<RingElement> coefficients;
    std::vector<RingElement> primed_coefficients;
};

/** Inner products of x against the current basis. */
struct InnerProducts {
    std::vector<RingElement> row;  // <x, w_i> per vertex
    Int self;                      // <x, x>, always a rational integer
};

// Inner products on the M + 2I side for the plain coefficients.
InnerProducts combination_inner_products(const LGraph& g, const CombinationSpec& spec);

enum class GramCondition {
    accepted,
    self_norm_out_of_range,    // <x, x> not in {1, 2, 3}
    entry_outside_labels,      // some <x, w_i> has norm above 4
    all_entries_zero,          // x orthogonal to the whole graph
    primed_self_norm_mismatch, // <x', x'> != 4 - <x, x>
    primed_entry_mismatch,     // <x', w'_i> != -<x, w_i>
};

struct GramExtension {
    GramCondition status = GramCondition::accepted;
    std::string detail;           // human-readable rejection note
    std::optional<LGraph> graph;  // present exactly when accepted

    bool accepted() const { return status == GramCondition::accepted; }
};

// Checks the extension conditions on both sides and, on success,
// returns g grown by the vertex that x represents: charge
// <x, x> - 2 and edge labels conj(<x, w_i>). The result is
// guaranteed cyclotomic when g is.
GramExtension try_gram_extension(const LGraph& g, const CombinationSpec& spec);

// Tries the four local combination templates (a weight-3 vertex over
// a weight-2 plus a weight-1 edge; a weight-3 vertex over three
// weight-1 edges, with or without a charged neighbor; a hanging
// weight-2 edge) and falls back to a direct one-vertex extension
// search. Requires a cyclotomic graph over d = -2 or d = -7.
bool prove_nonmaximal_by_gram(const LGraph& g);

}  // namespace cyclo
