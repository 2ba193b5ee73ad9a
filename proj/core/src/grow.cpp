#include "cyclo/grow.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "cyclo/families.hpp"
#include "cyclo/spectra.hpp"

namespace cyclo {

GrowConfig::GrowConfig(Ring r) : ring(r) {}

namespace {

struct Alphabet {
    std::vector<RingElement> labels;  // sorted by (norm, a, b)
    std::vector<int> norms;           // aligned with labels
    std::vector<int> charges;         // sorted subset of {-1, 0, 1}
};

Alphabet make_alphabet(const GrowConfig& cfg) {
    std::set<int> wanted_norms(cfg.allowed_edge_norms.begin(), cfg.allowed_edge_norms.end());
    for (int w : wanted_norms) {
        if (w < 1 || w > 4) {
            throw std::invalid_argument("allowed edge norms must lie in 1..4");
        }
    }
    std::set<int> wanted_charges(cfg.allowed_charges.begin(), cfg.allowed_charges.end());
    for (int c : wanted_charges) {
        if (c < -1 || c > 1) {
            throw std::invalid_argument("allowed charges must lie in {-1, 0, 1}");
        }
    }
    Alphabet out;
    const LabelSet labels(cfg.ring);
    for (const RingElement& x : labels.all_nonzero()) {
        const int norm = static_cast<int>(x.norm().get_si());
        if (wanted_norms.count(norm)) {
            out.labels.push_back(x);
            out.norms.push_back(norm);
        }
    }
    out.charges.assign(wanted_charges.begin(), wanted_charges.end());
    return out;
}

// Walks every one-vertex extension candidate that respects the
// weighted-degree cap on both sides, before any cyclotomicity test.
// The callback returns false to stop the walk early.
void for_each_candidate(const LGraph& g, const Alphabet& alphabet,
                        const std::function<bool(const LGraph&)>& fn) {
    const int n = g.n();
    std::vector<int> slack(n);
    for (int v = 0; v < n; ++v) {
        slack[v] = 4 - g.weighted_degree(v);
    }
    std::vector<Edge> chosen;
    bool stop = false;

    std::function<void(int, int, int)> walk = [&](int charge, int at, int budget) {
        if (stop) {
            return;
        }
        if (at == n) {
            if (chosen.empty()) {
                return;
            }
            std::vector<int> charges = g.charges();
            charges.push_back(charge);
            std::vector<Edge> edges = g.edges();
            edges.insert(edges.end(), chosen.begin(), chosen.end());
            LGraph candidate(g.ring(), std::move(charges), std::move(edges));
            if (!fn(candidate)) {
                stop = true;
            }
            return;
        }
        walk(charge, at + 1, budget);
        if (stop) {
            return;
        }
        const int cap = std::min(budget, slack[at]);
        for (std::size_t k = 0; k < alphabet.labels.size(); ++k) {
            if (alphabet.norms[k] > cap) {
                continue;
            }
            chosen.push_back({at, n, alphabet.labels[k]});
            walk(charge, at + 1, budget - alphabet.norms[k]);
            chosen.pop_back();
            if (stop) {
                return;
            }
        }
    };

    for (int charge : alphabet.charges) {
        if (stop) {
            break;
        }
        walk(charge, 0, 4 - (charge == 0 ? 0 : 1));
    }
}

bool has_cyclotomic_extension(const LGraph& g, const Alphabet& alphabet) {
    bool found = false;
    for_each_candidate(g, alphabet, [&](const LGraph& candidate) {
        if (is_cyclotomic(candidate)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

void require_config_ring(const LGraph& g, const GrowConfig& cfg) {
    if (g.ring() != cfg.ring) {
        throw std::invalid_argument("graph ring differs from the grow config ring");
    }
}

}  // namespace

std::vector<LGraph> extensions(const LGraph& g, const GrowConfig& cfg) {
    require_config_ring(g, cfg);
    const Alphabet alphabet = make_alphabet(cfg);
    std::vector<LGraph> out;
    if (!cfg.reduce_mod_equivalence) {
        for_each_candidate(g, alphabet, [&](const LGraph& candidate) {
            if (is_cyclotomic(candidate)) {
                out.push_back(candidate);
            }
            return true;
        });
        return out;
    }
    // Reduce before the spectral test: equivalent candidates share
    // their verdict, so one characteristic polynomial per class.
    std::map<CanonicalKey, LGraph> classes;
    for_each_candidate(g, alphabet, [&](const LGraph& candidate) {
        classes.emplace(canonical_key(candidate), candidate);
        return true;
    });
    for (const auto& [key, candidate] : classes) {
        if (is_cyclotomic(candidate)) {
            out.push_back(candidate);
        }
    }
    return out;
}

namespace {

std::vector<std::vector<LGraph>> extensions_of_all(const std::vector<const LGraph*>& work,
                                                   const GrowConfig& cfg) {
    std::vector<std::vector<LGraph>> results(work.size());
    const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(work.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < work.size(); ++i) {
            results[i] = extensions(*work[i], cfg);
        }
        return results;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::exception_ptr> failures(jobs);
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
            try {
                while (true) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= work.size()) {
                        break;
                    }
                    results[i] = extensions(*work[i], cfg);
                }
            } catch (...) {
                failures[t] = std::current_exception();
            }
        });
    }
    for (auto& thread : pool) {
        thread.join();
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return results;
}

}  // namespace

GrowReport grow_closure(const std::vector<LGraph>& seeds, const GrowConfig& cfg) {
    const Alphabet alphabet = make_alphabet(cfg);
    std::map<CanonicalKey, LGraph> visited;
    std::vector<LGraph> frontier;
    for (const LGraph& seed : seeds) {
        require_config_ring(seed, cfg);
        if (!is_cyclotomic(seed)) {
            throw std::invalid_argument("grow seeds must be cyclotomic");
        }
        if (visited.emplace(canonical_key(seed), seed).second) {
            frontier.push_back(seed);
        }
    }

    GrowReport report;
    bool overflow = false;
    bool leftover = false;
    for (int round = 1; round <= cfg.max_rounds; ++round) {
        std::vector<const LGraph*> work;
        for (const LGraph& g : frontier) {
            if (g.n() < cfg.max_vertices) {
                work.push_back(&g);
            } else if (has_cyclotomic_extension(g, alphabet)) {
                overflow = true;  // the vertex cap hides part of the closure
            }
        }
        if (work.empty()) {
            frontier.clear();
            break;
        }
        const auto results = extensions_of_all(work, cfg);
        report.rounds_executed = round;
        std::vector<LGraph> next;
        std::size_t fresh = 0;
        for (const auto& batch : results) {
            for (const LGraph& h : batch) {
                if (visited.emplace(canonical_key(h), h).second) {
                    next.push_back(h);
                    ++fresh;
                }
            }
        }
        report.new_classes_per_round.push_back(fresh);
        frontier = std::move(next);
        if (frontier.empty()) {
            break;
        }
        if (round == cfg.max_rounds) {
            leftover = true;  // still had work when the round cap hit
        }
    }
    report.terminated = !overflow && !leftover;

    report.representatives.reserve(visited.size());
    for (const auto& [key, g] : visited) {
        report.representatives.push_back(g);
    }
    const Alphabet everything = make_alphabet(GrowConfig::full(cfg.ring));
    for (const LGraph& g : report.representatives) {
        if (g.is_connected() && !has_cyclotomic_extension(g, everything)) {
            report.maximal_representatives.push_back(g);
        }
    }
    return report;
}

bool is_maximal(const LGraph& g) {
    if (!g.is_connected()) {
        throw std::invalid_argument("maximality is defined for connected graphs");
    }
    if (!is_cyclotomic(g)) {
        throw std::invalid_argument("maximality is defined for cyclotomic graphs");
    }
    return !has_cyclotomic_extension(g, make_alphabet(GrowConfig::full(g.ring())));
}

std::vector<LGraph> pattern_instances(const FormPattern& pattern, const Ring& ring) {
    const int k = pattern.n();
    const LabelSet labels(ring);

    std::vector<std::vector<int>> charge_options(k);
    for (int v = 0; v < k; ++v) {
        for (int c : {-1, 0, 1}) {
            if (pattern.charge_allowed(v, c)) {
                charge_options[v].push_back(c);
            }
        }
    }
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<RingElement>> pair_options;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            std::vector<RingElement> options;
            if (pattern.edge_norm_allowed(i, j, 0)) {
                options.push_back(RingElement::zero(ring));
            }
            for (int norm = 1; norm <= 4; ++norm) {
                if (pattern.edge_norm_allowed(i, j, norm)) {
                    const auto& bucket = labels.of_norm(norm);
                    options.insert(options.end(), bucket.begin(), bucket.end());
                }
            }
            pairs.emplace_back(i, j);
            pair_options.push_back(std::move(options));
        }
    }

    std::vector<LGraph> out;
    std::vector<int> charges(k, 0);
    std::vector<Edge> edges;
    std::function<void(std::size_t)> assign_pairs = [&](std::size_t at) {
        if (at == pairs.size()) {
            out.emplace_back(ring, charges, edges);
            return;
        }
        for (const RingElement& option : pair_options[at]) {
            if (!option.is_zero()) {
                edges.push_back({pairs[at].first, pairs[at].second, option});
            }
            assign_pairs(at + 1);
            if (!option.is_zero()) {
                edges.pop_back();
            }
        }
    };
    std::function<void(int)> assign_charges = [&](int v) {
        if (v == k) {
            assign_pairs(0);
            return;
        }
        for (int c : charge_options[v]) {
            charges[v] = c;
            assign_charges(v + 1);
        }
    };
    assign_charges(0);
    return out;
}

bool verify_no_cyclotomic_of_form(const FormPattern& pattern, const Ring& ring) {
    for (const LGraph& instance : pattern_instances(pattern, ring)) {
        if (is_cyclotomic(instance)) {
            return false;
        }
    }
    return true;
}

namespace {

bool originals_saturated(const LGraph& g, int originals) {
    for (int v = 0; v < originals; ++v) {
        if (g.weighted_degree(v) != 4) {
            return false;
        }
    }
    return true;
}

// Exact labelled identity (no reduction), for visited bookkeeping in
// searches where vertex roles matter.
std::vector<std::uint8_t> labelled_bytes(const LGraph& g) {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(1 + g.n() + 4 * g.edges().size());
    bytes.push_back(static_cast<std::uint8_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        bytes.push_back(static_cast<std::uint8_t>(g.charge(v) + 1));
    }
    for (const Edge& e : g.edges()) {
        bytes.push_back(static_cast<std::uint8_t>(e.i));
        bytes.push_back(static_cast<std::uint8_t>(e.j));
        bytes.push_back(static_cast<std::uint8_t>(e.label.a().get_si() + 8));
        bytes.push_back(static_cast<std::uint8_t>(e.label.b().get_si() + 8));
    }
    return bytes;
}

bool added_vertex_touches_originals(const LGraph& g, int originals) {
    const int added = g.n() - 1;
    for (const Edge& e : g.edges()) {
        if (e.j == added && e.i < originals) {
            return true;
        }
    }
    return false;
}

bool minimal_saturating(const LGraph& g, int originals) {
    for (int x = originals; x < g.n(); ++x) {
        if (originals_saturated(g.delete_vertex(x), originals)) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<LGraph> saturating_extensions(const LGraph& g, const GrowConfig& cfg) {
    require_config_ring(g, cfg);
    if (!is_cyclotomic(g)) {
        throw std::invalid_argument("saturation search needs a cyclotomic start graph");
    }
    const int originals = g.n();
    std::map<CanonicalKey, LGraph> results;
    if (originals_saturated(g, originals)) {
        results.emplace(canonical_key(g), g);  // the empty extension suffices
    } else {
        GrowConfig raw = cfg;
        raw.reduce_mod_equivalence = false;
        const Alphabet alphabet = make_alphabet(cfg);
        std::set<std::vector<std::uint8_t>> seen;
        std::vector<LGraph> layer{g};
        seen.insert(labelled_bytes(g));
        while (!layer.empty()) {
            std::vector<LGraph> next;
            for (const LGraph& h : layer) {
                if (h.n() >= cfg.max_vertices) {
                    if (has_cyclotomic_extension(h, alphabet)) {
                        throw std::runtime_error(
                            "saturation search exceeded the max_vertices budget");
                    }
                    continue;
                }
                for (const LGraph& e : extensions(h, raw)) {
                    // Vertices with no edge into the start graph never
                    // change its degrees, so minimal extensions do not
                    // contain them.
                    if (!added_vertex_touches_originals(e, originals)) {
                        continue;
                    }
                    if (!seen.insert(labelled_bytes(e)).second) {
                        continue;
                    }
                    if (originals_saturated(e, originals)) {
                        if (minimal_saturating(e, originals)) {
                            results.emplace(canonical_key(e), e);
                        }
                    } else {
                        next.push_back(e);
                    }
                }
            }
            layer = std::move(next);
        }
    }
    std::vector<LGraph> out;
    out.reserve(results.size());
    for (const auto& [key, h] : results) {
        out.push_back(h);
    }
    return out;
}

namespace {

std::vector<LGraph> instances_reduced_cyclotomic(const FormPattern& pattern, const Ring& ring) {
    std::map<CanonicalKey, LGraph> classes;
    for (const LGraph& instance : pattern_instances(pattern, ring)) {
        classes.emplace(canonical_key(instance), instance);
    }
    std::vector<LGraph> out;
    for (const auto& [key, g] : classes) {
        if (is_cyclotomic(g)) {
            out.push_back(g);
        }
    }
    return out;
}

}  // namespace

const std::vector<std::string>& seed_set_names() {
    static const std::vector<std::string> names{
        "two-vertex",      // any single edge, any charges
        "heavy-pair",      // one edge of weight 2..4, any charges
        "weight3-pair",    // one edge of weight 3, any charges
        "charged-weight2", // weight-2 edge with a charged endpoint
        "weight2-path",    // uncharged 3-vertex path of two weight-2 edges
        "w1w2-cycle",      // 4-vertex path w1, w2, w1 with an open pair
    };
    return names;
}

std::vector<LGraph> seed_set(const std::string& name, const Ring& ring) {
    FormPattern pattern(1);
    if (name == "two-vertex" || name == "heavy-pair" || name == "weight3-pair") {
        pattern = FormPattern(2);
        pattern.set_charge_any(0);
        pattern.set_charge_any(1);
        if (name == "two-vertex") {
            pattern.set_edge_norms(0, 1, {1, 2, 3, 4}, false);
        } else if (name == "heavy-pair") {
            pattern.set_edge_norms(0, 1, {2, 3, 4}, false);
        } else {
            pattern.set_edge_weight(0, 1, 3);
        }
    } else if (name == "charged-weight2") {
        pattern = FormPattern(2);
        pattern.set_charge_nonzero(0);
        pattern.set_charge_any(1);
        pattern.set_edge_weight(0, 1, 2);
    } else if (name == "weight2-path") {
        pattern = FormPattern(3);
        pattern.set_edge_weight(0, 1, 2);
        pattern.set_edge_weight(1, 2, 2);
    } else if (name == "w1w2-cycle") {
        pattern = FormPattern(4);
        pattern.set_edge_weight(0, 1, 1);
        pattern.set_edge_weight(1, 3, 2);
        pattern.set_edge_weight(2, 3, 1);
        pattern.set_edge_unspecified(0, 2);
    } else {
        std::string known;
        for (const auto& candidate : seed_set_names()) {
            known += (known.empty() ? "" : ", ") + candidate;
        }
        throw std::invalid_argument("unknown seed set '" + name + "' (known: " + known + ")");
    }
    return instances_reduced_cyclotomic(pattern, ring);
}

namespace {

constexpr int kReachVertexCap = 14;  // canonical keys stop here

int total_slack(const LGraph& g) {
    int slack = 0;
    for (int v = 0; v < g.n(); ++v) {
        slack += 4 - g.weighted_degree(v);
    }
    return slack;
}

// Memoized search for a growth path into the catalogue: yes / no /
// out-of-budget, sharing results across start graphs.
class ReachSearch {
public:
    ReachSearch(const std::map<CanonicalKey, std::string>& targets, const GrowConfig& cfg,
                long node_budget)
        : targets_(targets), cfg_(cfg), nodes_left_(node_budget) {}

    enum class Verdict { yes, no, out_of_budget };

    Verdict reaches(const LGraph& g) {
        const CanonicalKey key = canonical_key(g);
        if (targets_.count(key)) {
            return Verdict::yes;
        }
        auto memo = memo_.find(key);
        if (memo != memo_.end()) {
            return memo->second;
        }
        if (g.n() >= kReachVertexCap) {
            memo_[key] = Verdict::out_of_budget;
            return Verdict::out_of_budget;
        }
        if (nodes_left_-- <= 0) {
            return Verdict::out_of_budget;  // not memoized: budget-dependent
        }
        std::vector<LGraph> next = extensions(g, cfg_);
        if (next.empty()) {
            memo_[key] = Verdict::no;
            return Verdict::no;
        }
        // Least remaining slack first: heads straight for the
        // saturated containers.
        std::stable_sort(next.begin(), next.end(), [](const LGraph& a, const LGraph& b) {
            return total_slack(a) < total_slack(b);
        });
        Verdict verdict = Verdict::no;
        for (const LGraph& h : next) {
            const Verdict sub = reaches(h);
            if (sub == Verdict::yes) {
                verdict = Verdict::yes;
                break;
            }
            if (sub == Verdict::out_of_budget) {
                verdict = Verdict::out_of_budget;
            }
        }
        memo_[key] = verdict;
        return verdict;
    }

private:
    const std::map<CanonicalKey, std::string>& targets_;
    GrowConfig cfg_;
    long nodes_left_;
    std::map<CanonicalKey, Verdict> memo_;
};

}  // namespace

ClassificationCheck verify_classification(const Ring& ring, int max_n, int jobs) {
    if (max_n < 2 || max_n > 16) {
        throw std::invalid_argument("max_n must lie in 2..16");
    }
    ClassificationCheck check;
    check.max_n = max_n;

    GrowConfig cfg(ring);
    cfg.max_vertices = max_n;
    cfg.max_rounds = max_n;
    cfg.jobs = jobs;
    const GrowReport closure = grow_closure(seed_set("heavy-pair", ring), cfg);
    check.new_classes_per_round = closure.new_classes_per_round;
    check.class_count = closure.representatives.size();
    // With seeds of order 2 and one vertex per round, max_n rounds can
    // never be the binding constraint; the frontier dies out first.
    check.enumeration_complete = true;
    for (std::size_t r = 0; r + 1 < closure.new_classes_per_round.size(); ++r) {
        if (closure.new_classes_per_round[r] == 0) {
            break;
        }
        if (r + 2 > static_cast<std::size_t>(max_n)) {
            check.enumeration_complete = false;  // defensive; unreachable with sane bounds
        }
    }

    std::map<CanonicalKey, std::string> catalogue_keys;
    for (const CatalogueEntry& entry : catalogue(ring, 7)) {
        if (entry.graph.n() <= kReachVertexCap) {
            catalogue_keys.emplace(canonical_key(entry.graph), entry.name);
        }
    }

    std::set<CanonicalKey> maximal_keys;
    for (const LGraph& g : closure.maximal_representatives) {
        const CanonicalKey key = canonical_key(g);
        maximal_keys.insert(key);
        auto hit = catalogue_keys.find(key);
        if (hit != catalogue_keys.end()) {
            check.maximal_names.push_back(hit->second);
        } else {
            check.unmatched_maximal.push_back(g);
        }
    }
    std::sort(check.maximal_names.begin(), check.maximal_names.end());
    check.maximal_all_in_catalogue = check.unmatched_maximal.empty();

    GrowConfig reach_cfg(ring);
    ReachSearch search(catalogue_keys, reach_cfg, 2'000'000);
    for (const LGraph& g : closure.representatives) {
        if (maximal_keys.count(canonical_key(g))) {
            continue;
        }
        switch (search.reaches(g)) {
            case ReachSearch::Verdict::yes:
                break;
            case ReachSearch::Verdict::no:
                check.stuck_nonmaximal.push_back(g);
                break;
            case ReachSearch::Verdict::out_of_budget:
                check.unresolved.push_back(g);
                break;
        }
    }
    check.reach_complete = check.unresolved.empty();
    check.nonmaximal_all_reach_catalogue = check.stuck_nonmaximal.empty();
    return check;
}

}  // namespace cyclo
