#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cyclo/equiv.hpp"
#include "cyclo/families.hpp"
#include "cyclo/grow.hpp"
#include "cyclo/lgraph.hpp"
#include "cyclo/ring.hpp"
#include "cyclo/spectra.hpp"

using cyclo::canonical_key;
using cyclo::CanonicalKey;
using cyclo::FormPattern;
using cyclo::GrowConfig;
using cyclo::grow_closure;
using cyclo::is_cyclotomic;
using cyclo::is_maximal;
using cyclo::LGraph;
using cyclo::Ring;
using cyclo::RingElement;

namespace {

std::set<CanonicalKey> key_set(const std::vector<LGraph>& graphs) {
    std::set<CanonicalKey> keys;
    for (const auto& g : graphs) {
        keys.insert(canonical_key(g));
    }
    return keys;
}

std::set<CanonicalKey> catalogue_keys(const Ring& ring, const std::vector<std::string>& names) {
    std::set<CanonicalKey> keys;
    for (const auto& name : names) {
        keys.insert(canonical_key(cyclo::sporadic(name, ring)));
    }
    return keys;
}

}  // namespace

TEST_SUITE("grow") {

TEST_CASE("extensions of a single neutral vertex") {
    const Ring r2(-2);
    const LGraph seed(r2, {0}, {});

    GrowConfig raw = GrowConfig::full(r2);
    raw.reduce_mod_equivalence = false;
    // The pair [0, c] with label x is cyclotomic iff norm(x) <= 4 - 2|c|:
    // 10 labels for c = 0 plus 4 labels for each of c = +-1.
    const auto all = extensions(seed, raw);
    CHECK(all.size() == 18);
    for (const auto& g : all) {
        CHECK(g.n() == 2);
        CHECK(is_cyclotomic(g));
    }

    const auto classes = extensions(seed, GrowConfig::full(r2));
    CHECK(classes.size() == 6);
    CHECK(key_set(classes).size() == 6);

    // restricting the alphabet restricts the output
    GrowConfig narrow = GrowConfig::full(r2);
    narrow.allowed_edge_norms = {1};
    narrow.allowed_charges = {0};
    const auto few = extensions(seed, narrow);
    CHECK(few.size() == 1);
    // the representative is some member of the class, so pin norm only
    CHECK(few[0].label(0, 1)->norm() == 1);
    CHECK(cyclo::are_equivalent(
        few[0], LGraph(r2, {0, 0}, {{0, 1, RingElement::one(r2)}})));
}

TEST_CASE("extension output is deterministic and within the alphabet") {
    const Ring r7(-7);
    GrowConfig cfg = GrowConfig::full(r7);
    cfg.allowed_edge_norms = {1, 2};
    const LGraph seed = cyclo::sporadic("S_2", r7);
    const auto out1 = extensions(seed, cfg);
    const auto out2 = extensions(seed, cfg);
    REQUIRE(out1.size() == out2.size());
    for (std::size_t i = 0; i < out1.size(); ++i) {
        CHECK(out1[i] == out2[i]);
    }
    for (const auto& g : out1) {
        for (const auto& e : g.edges()) {
            if (e.j == g.n() - 1) {
                CHECK(e.label.norm() <= 2);
            }
        }
    }
}

TEST_CASE("named seed sets") {
    const auto& names = cyclo::seed_set_names();
    const std::vector<std::string> expected{"two-vertex",      "heavy-pair", "weight3-pair",
                                            "charged-weight2", "weight2-path", "w1w2-cycle"};
    CHECK(names == expected);
    CHECK_THROWS_AS((void)cyclo::seed_set("no-such-seed", Ring(-2)), std::invalid_argument);

    const Ring r2(-2);
    CHECK(cyclo::seed_set("two-vertex", r2).size() == 10);
    CHECK(cyclo::seed_set("heavy-pair", r2).size() == 6);
    for (const auto& name : names) {
        for (int d : {-2, -7, -11, -15}) {
            for (const auto& g : cyclo::seed_set(name, Ring(d))) {
                CAPTURE(name);
                CAPTURE(d);
                CHECK(is_cyclotomic(g));
                CHECK(g.is_connected());
            }
        }
    }
}

TEST_CASE("closure of the heavy pair collapses immediately at d = -15") {
    const Ring r15(-15);
    const auto report = grow_closure(cyclo::seed_set("heavy-pair", r15), GrowConfig::full(r15));
    CHECK(report.terminated);
    CHECK(report.representatives.size() == 2);
    CHECK(report.maximal_representatives.size() == 2);
    std::size_t added = 0;
    for (std::size_t c : report.new_classes_per_round) {
        added += c;
    }
    CHECK(added == 0);
    CHECK(key_set(report.representatives) ==
          catalogue_keys(r15, {"S_2", "S_2*"}));
}

TEST_CASE("closure of the heavy pair at d = -11 finds the three heavy classes") {
    const Ring r11(-11);
    const auto report = grow_closure(cyclo::seed_set("heavy-pair", r11), GrowConfig::full(r11));
    CHECK(report.terminated);
    CHECK(key_set(report.maximal_representatives) ==
          catalogue_keys(r11, {"S_2", "S_2'", "S_4'"}));
}

TEST_CASE("closure is deterministic across thread counts") {
    const Ring r2(-2);
    GrowConfig one = GrowConfig::full(r2);
    one.jobs = 1;
    GrowConfig four = GrowConfig::full(r2);
    four.jobs = 4;
    const auto seeds = cyclo::seed_set("weight3-pair", r2);
    const auto a = grow_closure(seeds, one);
    const auto b = grow_closure(seeds, four);
    CHECK(a.terminated == b.terminated);
    CHECK(a.new_classes_per_round == b.new_classes_per_round);
    REQUIRE(a.representatives.size() == b.representatives.size());
    for (std::size_t i = 0; i < a.representatives.size(); ++i) {
        CHECK(a.representatives[i] == b.representatives[i]);
    }
}

TEST_CASE("closure rejects bad seeds") {
    const Ring r2(-2);
    // noncyclotomic seed
    const LGraph heavy(r2, {1, 0}, {{0, 1, RingElement::integer(r2, 2)}});
    CHECK_THROWS_AS((void)grow_closure({heavy}, GrowConfig::full(r2)), std::invalid_argument);
    // seed over the wrong ring
    const LGraph other = cyclo::sporadic("S_2", Ring(-7));
    CHECK_THROWS_AS((void)grow_closure({other}, GrowConfig::full(r2)), std::invalid_argument);
}

TEST_CASE("maximality") {
    const Ring r2(-2);
    CHECK(is_maximal(cyclo::sporadic("S_4", r2)));
    CHECK(is_maximal(cyclo::t2k4(2, r2)));
    CHECK_FALSE(is_maximal(LGraph(r2, {0}, {})));
    CHECK_FALSE(is_maximal(cyclo::chain(0, r2)));
    // requires a connected cyclotomic input
    CHECK_THROWS_AS((void)is_maximal(LGraph(r2, {0, 0}, {})), std::invalid_argument);
    const LGraph heavy(r2, {1, 0}, {{0, 1, RingElement::integer(r2, 2)}});
    CHECK_THROWS_AS((void)is_maximal(heavy), std::invalid_argument);
}

TEST_CASE("pattern instances") {
    const Ring r2(-2);
    // one weight-2 edge between neutral vertices: labels are +-w
    FormPattern pair(2);
    pair.set_edge_weight(0, 1, 2);
    const auto instances = cyclo::pattern_instances(pair, r2);
    CHECK(instances.size() == 2);
    for (const auto& g : instances) {
        CHECK(g.n() == 2);
        CHECK(g.label(0, 1)->norm() == 2);
    }

    // free charge on one side multiplies the count by 3
    FormPattern charged(2);
    charged.set_edge_weight(0, 1, 2);
    charged.set_charge_any(0);
    CHECK(cyclo::pattern_instances(charged, r2).size() == 6);

    // absent-allowed edge contributes the absent assignment too
    FormPattern loose(2);
    loose.set_edge_norms(0, 1, {1}, true);
    CHECK(cyclo::pattern_instances(loose, r2).size() == 3);
}

TEST_CASE("form exclusion check") {
    const Ring r2(-2);
    // a weight-1 edge between neutral vertices is cyclotomic: not excluded
    FormPattern ok(2);
    ok.set_edge_weight(0, 1, 1);
    CHECK_FALSE(verify_no_cyclotomic_of_form(ok, r2));
    // two charges joined by a weight-4 edge blow past the degree bound
    FormPattern bad(2);
    bad.set_edge_weight(0, 1, 4);
    bad.set_charge_nonzero(0);
    bad.set_charge_nonzero(1);
    CHECK(verify_no_cyclotomic_of_form(bad, r2));
}

TEST_CASE("saturating extensions of the short chains") {
    const Ring r2(-2);
    const auto first = cyclo::saturating_extensions(cyclo::chain(0, r2), GrowConfig::full(r2));
    CHECK(key_set(first) == std::set<CanonicalKey>{
                                canonical_key(cyclo::t2k4(2, r2)),
                                canonical_key(cyclo::c2k2plus(2, r2)),
                                canonical_key(cyclo::chain(1, r2)),
                            });
    const auto second = cyclo::saturating_extensions(cyclo::chain(1, r2), GrowConfig::full(r2));
    CHECK(key_set(second) == std::set<CanonicalKey>{
                                 canonical_key(cyclo::t2k4(3, r2)),
                                 canonical_key(cyclo::c2k2plus(3, r2)),
                                 canonical_key(cyclo::chain(2, r2)),
                             });
    // a saturated graph saturates to itself
    const auto fixed = cyclo::saturating_extensions(cyclo::t2k4(2, r2), GrowConfig::full(r2));
    REQUIRE(fixed.size() == 1);
    CHECK(are_equivalent(fixed[0], cyclo::t2k4(2, r2)));
    // an over-tight budget is an error, not a silent truncation
    GrowConfig tight = GrowConfig::full(r2);
    tight.max_vertices = 4;
    CHECK_THROWS_AS((void)cyclo::saturating_extensions(cyclo::chain(1, r2), tight),
                    std::runtime_error);
}

TEST_CASE("classification check at the smallest scale") {
    const auto check = cyclo::verify_classification(Ring(-15), 4);
    CHECK(check.passed());
    CHECK(check.enumeration_complete);
    CHECK(check.reach_complete);
    CHECK(check.unmatched_maximal.empty());
    CHECK(check.stuck_nonmaximal.empty());
    CHECK(check.unresolved.empty());
    auto names = check.maximal_names;
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"S_2", "S_2*"});
    CHECK(check.class_count >= 2);
}

}  // TEST_SUITE
