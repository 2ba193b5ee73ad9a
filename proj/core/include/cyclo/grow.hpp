#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cyclo/equiv.hpp"
#include "cyclo/lgraph.hpp"
#include "cyclo/ring.hpp"

namespace cyclo {

/** Alphabet and budget controls for the seed-and-grow search. */
struct GrowConfig {
    explicit GrowConfig(Ring ring);
    static GrowConfig full(const Ring& ring) { return GrowConfig(ring); }

    Ring ring;
    std::vector<int> allowed_edge_norms{1, 2, 3, 4};
    std::vector<int> allowed_charges{-1, 0, 1};
    int max_rounds = 16;
    int max_vertices = 16;
    bool reduce_mod_equivalence = true;
    int jobs = 1;
};

// All cyclotomic graphs obtained from g by appending one vertex with
// at least one edge into g, drawing charges and edge weights from the
// config alphabet; reduced modulo equivalence when configured. The
// output order is deterministic.
std::vector<LGraph> extensions(const LGraph& g, const GrowConfig& cfg);

/** Outcome of a breadth-first closure run. */
struct GrowReport {
    int rounds_executed = 0;
    std::vector<std::size_t> new_classes_per_round;
    // True when the closure is complete: the final round added no new
    // class and no graph at the vertex cap could still extend. False
    // means a budget stopped the search early.
    bool terminated = false;
    // Every class discovered (seeds included), in canonical key order.
    std::vector<LGraph> representatives;
    // The representatives that admit no extension at all (over the
    // full alphabet, not just the configured one).
    std::vector<LGraph> maximal_representatives;
};

// Breadth-first closure of the seed list under extensions, reducing
// modulo equivalence between rounds. Seeds must be cyclotomic and
// share the config ring. Deterministic for any jobs count.
GrowReport grow_closure(const std::vector<LGraph>& seeds, const GrowConfig& cfg);

// True when the graph admits no cyclotomic one-vertex extension over
// the full alphabet. Requires a connected cyclotomic input.
bool is_maximal(const LGraph& g);

// Every labelled instance of the pattern over the ring, one graph per
// consistent charge and label assignment (no reduction).
std::vector<LGraph> pattern_instances(const FormPattern& pattern, const Ring& ring);

// True when no instance of the pattern is cyclotomic.
bool verify_no_cyclotomic_of_form(const FormPattern& pattern, const Ring& ring);

// All minimal ways to extend g so that every original vertex reaches
// weighted degree 4, each returned as the full extended graph and
// reduced modulo equivalence. Minimal means no added vertex can be
// dropped. Throws when the vertex budget cuts the search short.
std::vector<LGraph> saturating_extensions(const LGraph& g, const GrowConfig& cfg);

// Named seed families for the command line and the test suites; see
// seed_set_names() for the inventory. Throws on unknown names.
std::vector<LGraph> seed_set(const std::string& name, const Ring& ring);
const std::vector<std::string>& seed_set_names();

/** Result of checking the classification statement at one scale. */
struct ClassificationCheck {
    int max_n = 0;
    // The enumeration saw every class up to max_n (it always does
    // unless bounds are misconfigured).
    bool enumeration_complete = false;
    // Every nonmaximal class was resolved within the search budget.
    bool reach_complete = false;
    bool maximal_all_in_catalogue = false;
    bool nonmaximal_all_reach_catalogue = false;

    std::size_t class_count = 0;
    std::vector<std::string> maximal_names;  // matched catalogue entries
    std::vector<LGraph> unmatched_maximal;
    std::vector<LGraph> stuck_nonmaximal;    // provably never reach the catalogue
    std::vector<LGraph> unresolved;          // ran out of budget
    std::vector<std::size_t> new_classes_per_round;

    bool passed() const {
        return enumeration_complete && reach_complete && maximal_all_in_catalogue &&
               nonmaximal_all_reach_catalogue;
    }
};

// Enumerates every connected cyclotomic class with an edge of weight
// at least 2 and at most max_n vertices, then checks the maximal ones
// against the catalogue and the rest for a growth path into it.
ClassificationCheck verify_classification(const Ring& ring, int max_n, int jobs = 1);

}  // namespace cyclo
