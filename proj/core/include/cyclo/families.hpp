#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclo/lgraph.hpp"
#include "cyclo/ring.hpp"

namespace cyclo {

// Fixed-size maximal representatives. Valid (name, ring) pairs:
//   S_2      every ring          S_4'   d = -2, -11
//   S_2*     d = -7, -15         S_4*   d = -2
//   S_2'     d = -2, -11         S_6t   d = -7
//   S_4      d = -2, -7          S_8*   d = -2, -7
// Anything else is rejected.
LGraph sporadic(const std::string& name, const Ring& ring);

// Cylinder of 2k vertices with weight-2 caps on both ends (k >= 2,
// rings -2 and -7). The primed variant conjugates the cap labels and
// exists only over d = -7, where it is inequivalent to the plain one.
LGraph t2k4(int k, const Ring& ring, bool primed = false);

// Charged cylinder-with-cap on 2k+1 vertices, both charges +1
// (k >= 1, rings -2 and -7).
LGraph c2k2plus(int k, const Ring& ring);

// Cylinder of length k with a weight-2 cap on one end only: 2k+3
// vertices, k >= 0, rings -2 and -7. Never maximal.
LGraph chain(int k, const Ring& ring);

// Uncharged 2 x m grid of weight-1 edges rolled into a cylinder,
// as a pattern (m >= 2).
FormPattern cylinder(int m);

// The shape of chain(k), as a pattern.
FormPattern chain_form(int k);

/** One catalogue row: a named maximal representative. */
struct CatalogueEntry {
    std::string name;
    Ring ring;
    std::optional<int> k;  // set for the parameterized families
    LGraph graph;
};

// Every maximal class over the ring, with the parameterized families
// instantiated for k up to max_k. All entries are cyclotomic and
// maximal with spectrum {+2, -2}, and pairwise inequivalent.
std::vector<CatalogueEntry> catalogue(const Ring& ring, int max_k = 8);

// Names of the corresponding maximal objects over the rational
// integers, kept for cross-referencing output; no generators here.
const std::vector<std::string>& rational_catalogue_names();

}  // namespace cyclo
