#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/grow.hpp"
#include "cyclo/lgraph.hpp"

namespace cyclo {

// JSON document {"d": int, "n": int, "charges": [int, ...],
// "edges": [[i, j, [a, b]], ...]} with 0-based endpoints i < j and
// the label written against the integral basis {1, w}.
std::string graph_to_json(const LGraph& g);

// Parses the document format of graph_to_json. Malformed JSON or a
// schema violation raises std::invalid_argument.
LGraph graph_from_json(const std::string& text);

// Graphviz rendering: charges as node labels, edge weight shown by
// line multiplicity, exact labels as edge labels.
std::string graph_to_dot(const LGraph& g, const std::string& name = "g");

std::string grow_report_to_json(const GrowReport& report, const Ring& ring);

/** Reproducibility record written next to every artefact a run produces. */
struct RunManifest {
    std::string command;
    int d = 0;
    std::string parameters;
    std::string seed;
    std::vector<std::string> outputs;
    long long wall_ms = 0;
    std::string digest;
};

std::string run_manifest_to_json(const RunManifest& m);

// Order-independent FNV-1a fingerprint of the canonical keys of a set
// of graphs.
std::string classes_digest(const std::vector<LGraph>& graphs);

std::uint64_t fnv1a64(const std::string& data, std::uint64_t seed = 14695981039346656037ULL);

}  // namespace cyclo
