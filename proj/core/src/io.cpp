#include "cyclo/io.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "cyclo/equiv.hpp"

namespace cyclo {

namespace {

using ordered_json = nlohmann::ordered_json;

long label_coordinate(const Int& v) { return static_cast<long>(v.get_si()); }

ordered_json graph_object(const LGraph& g) {
    ordered_json j;
    j["d"] = g.ring().d();
    j["n"] = g.n();
    j["charges"] = g.charges();
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back(ordered_json::array(
            {e.i, e.j,
             ordered_json::array({label_coordinate(e.label.a()), label_coordinate(e.label.b())})}));
    }
    j["edges"] = std::move(edges);
    return j;
}

[[noreturn]] void bad_document(const std::string& why) {
    throw std::invalid_argument("invalid graph document: " + why);
}

int require_int(const ordered_json& j, const char* what) {
    if (!j.is_number_integer()) bad_document(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

std::string graph_to_json(const LGraph& g) { return graph_object(g).dump(2) + "\n"; }

LGraph graph_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad_document(e.what());
    }
    if (!j.is_object()) bad_document("top level must be an object");
    for (const char* key : {"d", "n", "charges", "edges"}) {
        if (!j.contains(key)) bad_document(std::string("missing field '") + key + "'");
    }

    const Ring ring(require_int(j["d"], "'d'"));
    const int n = require_int(j["n"], "'n'");
    if (!j["charges"].is_array()) bad_document("'charges' must be an array");
    std::vector<int> charges;
    for (const auto& c : j["charges"]) charges.push_back(require_int(c, "charge"));
    if (static_cast<int>(charges.size()) != n) bad_document("'charges' must list one value per vertex");

    if (!j["edges"].is_array()) bad_document("'edges' must be an array");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3) bad_document("each edge must be [i, j, [a, b]]");
        const int i = require_int(e[0], "edge endpoint");
        const int jj = require_int(e[1], "edge endpoint");
        const auto& lab = e[2];
        if (!lab.is_array() || lab.size() != 2) bad_document("edge label must be [a, b]");
        const int a = require_int(lab[0], "label coordinate");
        const int b = require_int(lab[1], "label coordinate");
        edges.push_back(Edge{i, jj, RingElement(ring, a, b)});
    }
    try {
        return LGraph(ring, std::move(charges), std::move(edges));
    } catch (const std::domain_error& e) {
        bad_document(e.what());
    }
}

std::string graph_to_dot(const LGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    os << "  graph [label=\"" << g.ring().basis_legend() << "\"];\n";
    os << "  node [shape=circle];\n";
    for (int v = 0; v < g.n(); ++v) {
        const char* label = g.charge(v) > 0 ? "+" : (g.charge(v) < 0 ? "-" : "");
        os << "  n" << v << " [label=\"" << label << "\"];\n";
    }
    for (const Edge& e : g.edges()) {
        const long norm = static_cast<long>(e.label.norm().get_si());
        os << "  n" << e.i << " -- n" << e.j << " [label=\"" << e.label.to_string() << "\"";
        if (norm > 1) {
            os << ", color=\"black";
            for (long k = 1; k < norm; ++k) os << ":black";
            os << "\"";
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string grow_report_to_json(const GrowReport& report, const Ring& ring) {
    std::set<std::string> maximal_keys;
    for (const LGraph& g : report.maximal_representatives) {
        maximal_keys.insert(key_hex(canonical_key(g)));
    }
    ordered_json j;
    j["d"] = ring.d();
    j["rounds_executed"] = report.rounds_executed;
    j["new_classes_per_round"] = report.new_classes_per_round;
    j["terminated"] = report.terminated;
    j["class_count"] = report.representatives.size();
    j["maximal_count"] = report.maximal_representatives.size();
    j["digest"] = classes_digest(report.representatives);
    ordered_json reps = ordered_json::array();
    for (const LGraph& g : report.representatives) {
        ordered_json obj = graph_object(g);
        const std::string key = key_hex(canonical_key(g));
        obj["key"] = key;
        obj["maximal"] = maximal_keys.count(key) > 0;
        reps.push_back(std::move(obj));
    }
    j["representatives"] = std::move(reps);
    return j.dump(2) + "\n";
}

std::string run_manifest_to_json(const RunManifest& m) {
    ordered_json j;
    j["command"] = m.command;
    j["d"] = m.d;
    j["parameters"] = m.parameters;
    j["seed"] = m.seed;
    j["outputs"] = m.outputs;
    j["wall_ms"] = m.wall_ms;
    j["digest"] = m.digest;
    return j.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& data, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string classes_digest(const std::vector<LGraph>& graphs) {
    std::vector<std::string> keys;
    keys.reserve(graphs.size());
    for (const LGraph& g : graphs) keys.push_back(key_hex(canonical_key(g)));
    std::sort(keys.begin(), keys.end());
    std::string joined;
    for (const std::string& k : keys) {
        joined += k;
        joined += '\n';
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(joined);
    return os.str();
}

}  // namespace cyclo
