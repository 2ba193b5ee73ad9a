#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/lgraph.hpp"

namespace cyclo {

// Sign switch at one vertex: negates every label incident to v and
// leaves charges alone (conjugation of M by diag(1,..,-1,..,1)).
LGraph switch_at(const LGraph& g, int v);

// Global negation: -M (charges and labels all negated).
LGraph negate(const LGraph& g);

// Entrywise conjugation of M (labels conjugated, charges fixed).
LGraph conjugate(const LGraph& g);

// Relabels vertex v as sigma[v]; sigma must be a permutation of 0..n-1.
LGraph permute(const LGraph& g, const std::vector<int>& sigma);

/**
 * Invariant byte string for the equivalence class of a graph under
 * switching, permutation, negation and conjugation. Two graphs over
 * the same ring get equal keys exactly when they are equivalent.
 * Components are canonicalized independently (each choosing its own
 * negation and conjugation) and combined as a sorted multiset.
 * Supports n <= 14; larger graphs are rejected.
 */
using CanonicalKey = std::vector<std::uint8_t>;

CanonicalKey canonical_key(const LGraph& g);

// Key equality over a common ring; graphs over different rings or of
// different orders are never equivalent.
bool are_equivalent(const LGraph& a, const LGraph& b);

// Lowercase hex rendering of a key, for digests and reports.
std::string key_hex(const CanonicalKey& key);

}  // namespace cyclo
