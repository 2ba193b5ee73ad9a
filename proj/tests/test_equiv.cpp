#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cyclo/equiv.hpp"
#include "cyclo/families.hpp"
#include "cyclo/lgraph.hpp"
#include "cyclo/ring.hpp"
#include "cyclo/spectra.hpp"
#include "test_util.hpp"

using cyclo::are_equivalent;
using cyclo::canonical_key;
using cyclo::char_poly;
using cyclo::conjugate;
using cyclo::key_hex;
using cyclo::LGraph;
using cyclo::negate;
using cyclo::permute;
using cyclo::Ring;
using cyclo::RingElement;
using cyclo::switch_at;

namespace {

const Ring kRing2(-2);

LGraph sample() {
    const RingElement one = RingElement::one(kRing2);
    const RingElement w = RingElement::omega(kRing2);
    return LGraph(kRing2, {1, 0, -1, 0},
                  {{0, 1, one}, {1, 2, w}, {2, 3, -one}, {0, 3, RingElement(kRing2, 1, 1)}});
}

template <typename Rng>
LGraph random_image(const LGraph& g, Rng& rng) {
    LGraph image = g;
    std::uniform_int_distribution<int> which(0, 3);
    std::uniform_int_distribution<int> vertex(0, g.n() - 1);
    for (int step = 0; step < 8; ++step) {
        switch (which(rng)) {
            case 0:
                image = switch_at(image, vertex(rng));
                break;
            case 1:
                image = negate(image);
                break;
            case 2:
                image = conjugate(image);
                break;
            default: {
                std::vector<int> sigma(static_cast<std::size_t>(image.n()));
                std::iota(sigma.begin(), sigma.end(), 0);
                std::shuffle(sigma.begin(), sigma.end(), rng);
                image = permute(image, sigma);
                break;
            }
        }
    }
    return image;
}

}  // namespace

TEST_SUITE("equiv") {

TEST_CASE("operation semantics") {
    const LGraph g = sample();

    const LGraph sw = switch_at(g, 1);
    CHECK(sw.charges() == g.charges());
    CHECK(*sw.label(0, 1) == -*g.label(0, 1));
    CHECK(*sw.label(1, 2) == -*g.label(1, 2));
    CHECK(*sw.label(2, 3) == *g.label(2, 3));
    CHECK(switch_at(sw, 1) == g);
    CHECK_THROWS_AS((void)switch_at(g, 4), std::out_of_range);

    const LGraph ng = negate(g);
    CHECK(ng.charge(0) == -1);
    CHECK(ng.charge(2) == 1);
    CHECK(*ng.label(0, 1) == -*g.label(0, 1));
    CHECK(negate(ng) == g);

    const LGraph cg = conjugate(g);
    CHECK(cg.charges() == g.charges());
    CHECK(*cg.label(1, 2) == g.label(1, 2)->conj());
    CHECK(conjugate(cg) == g);

    const LGraph pg = permute(g, {3, 2, 1, 0});
    CHECK(pg.charge(3) == g.charge(0));
    CHECK(pg.charge(2) == g.charge(1));
    // edge (1,2) with label w maps to pair (2,1); the stored label for
    // the flipped pair is the conjugate.
    CHECK(*pg.label(1, 2) == g.label(1, 2)->conj());
    CHECK(*pg.label(2, 3) == g.label(0, 1)->conj());
    CHECK(permute(pg, {3, 2, 1, 0}) == g);
    CHECK_THROWS_AS((void)permute(g, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS((void)permute(g, {0, 0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS((void)permute(g, {0, 1, 2, 4}), std::invalid_argument);
}

TEST_CASE("all four operations preserve the spectrum up to sign") {
    const LGraph g = sample();
    const auto p = char_poly(g);
    CHECK(char_poly(switch_at(g, 2)) == p);
    CHECK(char_poly(conjugate(g)) == p);
    CHECK(char_poly(permute(g, {1, 0, 3, 2})) == p);
    const auto np = char_poly(negate(g));
    CHECK(np == p.negate_argument() * cyclo::Int(g.n() % 2 == 0 ? 1 : -1));
}

TEST_CASE("canonical key is invariant under random equivalence images") {
    for (int d : {-2, -7, -11, -15}) {
        const Ring ring(d);
        auto rng = cyclotest::make_rng(808 + static_cast<unsigned long>(-d));
        for (int trial = 0; trial < 40; ++trial) {
            const LGraph g = cyclotest::random_lgraph(ring, 5, 0.45, rng);
            const auto key = canonical_key(g);
            const LGraph image = random_image(g, rng);
            CHECK(canonical_key(image) == key);
            CHECK(are_equivalent(g, image));
        }
    }
}

TEST_CASE("inequivalent graphs get distinct keys") {
    const RingElement one = RingElement::one(kRing2);
    const LGraph plus(kRing2, {1}, {});
    const LGraph minus(kRing2, {-1}, {});
    const LGraph neutral(kRing2, {0}, {});
    CHECK(are_equivalent(plus, minus));  // global negation
    CHECK_FALSE(are_equivalent(plus, neutral));

    // Charges cannot be negated one vertex at a time, but the key treats
    // each component independently, so two isolated opposite charges
    // match two equal ones.
    const LGraph mixed(kRing2, {1, -1}, {});
    const LGraph same(kRing2, {1, 1}, {});
    CHECK(are_equivalent(mixed, same));
    // Connected, the distinction is real: (+,-) and (+,+) pairs differ.
    const LGraph pm(kRing2, {1, -1}, {{0, 1, one}});
    const LGraph pp(kRing2, {1, 1}, {{0, 1, one}});
    CHECK_FALSE(are_equivalent(pm, pp));
    CHECK(char_poly(pm) != char_poly(pp));

    // Different edge norms are inequivalent.
    const LGraph w1(kRing2, {0, 0}, {{0, 1, one}});
    const LGraph w2(kRing2, {0, 0}, {{0, 1, RingElement::omega(kRing2)}});
    CHECK_FALSE(are_equivalent(w1, w2));

    // Same ring required for equivalence.
    const LGraph other(Ring(-7), {0, 0}, {{0, 1, RingElement::one(Ring(-7))}});
    CHECK_FALSE(are_equivalent(w1, other));
    // Different orders are never equivalent.
    CHECK_FALSE(are_equivalent(w1, neutral));
}

TEST_CASE("keys separate the catalogue") {
    for (int d : {-2, -7}) {
        const Ring ring(d);
        std::vector<cyclo::CanonicalKey> keys;
        for (const auto& entry : cyclo::catalogue(ring, 5)) {
            keys.push_back(canonical_key(entry.graph));
        }
        std::sort(keys.begin(), keys.end());
        CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
    }
}

TEST_CASE("disconnected graphs canonicalize as multisets of components") {
    const RingElement one = RingElement::one(kRing2);
    const LGraph ab(kRing2, {1, 0, 0, 0}, {{0, 1, one}, {2, 3, one}});
    // same two components listed in the other order
    const LGraph ba(kRing2, {0, 0, 1, 0}, {{0, 1, one}, {2, 3, one}});
    CHECK(are_equivalent(ab, ba));
    const LGraph aa(kRing2, {1, 0, 1, 0}, {{0, 1, one}, {2, 3, one}});
    CHECK_FALSE(are_equivalent(ab, aa));
}

TEST_CASE("size limit and rendering") {
    const LGraph big(kRing2, std::vector<int>(15, 0), {});
    CHECK_THROWS_AS((void)canonical_key(big), std::invalid_argument);
    const LGraph small(kRing2, {0}, {});
    const auto key = canonical_key(small);
    const std::string hex = key_hex(key);
    CHECK(hex.size() == 2 * key.size());
    CHECK(hex.find_first_not_of("0123456789abcdef") == std::string::npos);
}

}  // TEST_SUITE
