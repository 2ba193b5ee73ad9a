#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cyclo/families.hpp"
#include "cyclo/gram.hpp"
#include "cyclo/lgraph.hpp"
#include "cyclo/ring.hpp"
#include "cyclo/spectra.hpp"

using cyclo::CombinationSpec;
using cyclo::GramCondition;
using cyclo::Int;
using cyclo::LGraph;
using cyclo::Ring;
using cyclo::RingElement;

namespace {

std::vector<RingElement> coeffs(const Ring& ring, const std::vector<long>& values) {
    std::vector<RingElement> out;
    out.reserve(values.size());
    for (long v : values) {
        out.push_back(RingElement::integer(ring, v));
    }
    return out;
}

// v joined to a by a weight-2 edge and to b by a weight-1 edge
LGraph weight3_seed(const Ring& ring) {
    return LGraph(ring, {0, 0, 0},
                  {{0, 1, RingElement::omega(ring)}, {0, 2, RingElement::one(ring)}});
}

// star: center v, leaves a (charged when flagged), b, c
LGraph star_seed(const Ring& ring, bool charged) {
    const RingElement one = RingElement::one(ring);
    return LGraph(ring, {charged ? 1 : 0, 0, 0, 0},
                  {{0, 3, one}, {1, 3, one}, {2, 3, one}});
}

// v - w weight 2, with two weight-1 spokes w - a, w - b
LGraph hanging_seed(const Ring& ring) {
    const RingElement one = RingElement::one(ring);
    return LGraph(ring, {0, 0, 0, 0},
                  {{0, 1, RingElement::omega(ring)}, {1, 2, one}, {1, 3, one}});
}

}  // namespace

TEST_SUITE("gram") {

TEST_CASE("inner products of the four template combinations") {
    for (int d : {-2, -7}) {
        const Ring ring(d);
        const RingElement w = RingElement::omega(ring);
        CAPTURE(d);

        {
            // x = 2 w_v - M_va w_a - M_vb w_b over the weight-3 seed
            const LGraph g = weight3_seed(ring);
            CombinationSpec spec;
            spec.coefficients = {RingElement::integer(ring, 2), -g.entry(0, 1), -g.entry(0, 2)};
            const auto ip = combination_inner_products(g, spec);
            CHECK(ip.row == coeffs(ring, {1, 0, 0}));
            CHECK(ip.self == 2);
        }
        {
            // charged star: x = -w_a - w_b - w_c + 2 w_v
            const LGraph g = star_seed(ring, true);
            CombinationSpec spec;
            spec.coefficients = coeffs(ring, {-1, -1, -1, 2});
            const auto ip = combination_inner_products(g, spec);
            CHECK(ip.row == coeffs(ring, {-1, 0, 0, 1}));
            CHECK(ip.self == 3);
        }
        {
            // neutral star, same combination
            const LGraph g = star_seed(ring, false);
            CombinationSpec spec;
            spec.coefficients = coeffs(ring, {-1, -1, -1, 2});
            const auto ip = combination_inner_products(g, spec);
            CHECK(ip.row == coeffs(ring, {0, 0, 0, 1}));
            CHECK(ip.self == 2);
        }
        {
            // hanging weight-2 edge: x = w_w - w_a - w_b
            const LGraph g = hanging_seed(ring);
            CombinationSpec spec;
            spec.coefficients = coeffs(ring, {0, 1, -1, -1});
            const auto ip = combination_inner_products(g, spec);
            CHECK(ip.row == std::vector<RingElement>{w.conj(), RingElement::zero(ring),
                                                     -RingElement::one(ring),
                                                     -RingElement::one(ring)});
            CHECK(ip.self == 2);
        }
    }
}

TEST_CASE("accepted extensions are cyclotomic supergraphs") {
    const Ring r2(-2);
    const LGraph g = weight3_seed(r2);
    CombinationSpec spec;
    spec.coefficients = {RingElement::integer(r2, 2), -g.entry(0, 1), -g.entry(0, 2)};
    spec.primed_coefficients = {RingElement::integer(r2, -2), -g.entry(0, 1), -g.entry(0, 2)};
    const auto ext = cyclo::try_gram_extension(g, spec);
    REQUIRE(ext.accepted());
    REQUIRE(ext.graph.has_value());
    const LGraph& grown = *ext.graph;
    CHECK(grown.n() == 4);
    CHECK(cyclo::is_cyclotomic(grown));
    // the new vertex is neutral (self product 2) and hangs off v alone
    CHECK(grown.charge(3) == 0);
    REQUIRE(grown.label(0, 3).has_value());
    CHECK(grown.label(0, 3)->norm() == 1);
    CHECK_FALSE(grown.label(1, 3).has_value());
    CHECK_FALSE(grown.label(2, 3).has_value());
    // the original graph is untouched
    for (int v = 0; v < 3; ++v) {
        CHECK(grown.charge(v) == g.charge(v));
    }

    // charged star: self product 3 gives a charge +1 vertex
    const LGraph star = star_seed(r2, true);
    CombinationSpec star_spec;
    star_spec.coefficients = coeffs(r2, {-1, -1, -1, 2});
    star_spec.primed_coefficients = coeffs(r2, {-1, -1, -1, -2});
    const auto star_ext = cyclo::try_gram_extension(star, star_spec);
    REQUIRE(star_ext.accepted());
    CHECK(star_ext.graph->charge(4) == 1);
    CHECK(cyclo::is_cyclotomic(*star_ext.graph));
}

TEST_CASE("rejection conditions carry their reason") {
    const Ring r2(-2);
    const LGraph plus(r2, {1}, {});

    {
        // <x, x> = <w_0, (M + 2I) w_0> = 3, fine; row entry 3 has norm 9
        CombinationSpec spec;
        spec.coefficients = coeffs(r2, {1});
        spec.primed_coefficients = coeffs(r2, {1});
        const auto ip = combination_inner_products(plus, spec);
        CHECK(ip.self == 3);
        CHECK(ip.row == coeffs(r2, {3}));
        const auto ext = cyclo::try_gram_extension(plus, spec);
        CHECK_FALSE(ext.accepted());
        CHECK(ext.status == GramCondition::entry_outside_labels);
        CHECK_FALSE(ext.graph.has_value());
        CHECK_FALSE(ext.detail.empty());
    }

    const LGraph s2 = cyclo::sporadic("S_2", r2);
    {
        CombinationSpec spec;
        spec.coefficients = coeffs(r2, {2, 0});
        spec.primed_coefficients = coeffs(r2, {2, 0});
        const auto ext = cyclo::try_gram_extension(s2, spec);
        CHECK(ext.status == GramCondition::self_norm_out_of_range);
    }
    {
        // plain side fits, mirrored self product does not equal 4 - 2
        CombinationSpec spec;
        spec.coefficients = coeffs(r2, {1, 0});
        spec.primed_coefficients = coeffs(r2, {2, 0});
        const auto ext = cyclo::try_gram_extension(s2, spec);
        CHECK(ext.status == GramCondition::primed_self_norm_mismatch);
    }
    {
        // mirrored row must be the negated plain row
        CombinationSpec spec;
        spec.coefficients = coeffs(r2, {1, 0});
        spec.primed_coefficients = coeffs(r2, {1, 0});
        const auto ext = cyclo::try_gram_extension(s2, spec);
        CHECK(ext.status == GramCondition::primed_entry_mismatch);
    }
}

TEST_CASE("specs are validated against the graph") {
    const Ring r2(-2);
    const LGraph g = weight3_seed(r2);
    CombinationSpec wrong_size;
    wrong_size.coefficients = coeffs(r2, {1, 0});
    wrong_size.primed_coefficients = coeffs(r2, {1, 0, 0});
    CHECK_THROWS_AS((void)combination_inner_products(g, wrong_size), std::invalid_argument);
    CombinationSpec zero;
    zero.coefficients = coeffs(r2, {0, 0, 0});
    zero.primed_coefficients = coeffs(r2, {0, 0, 0});
    CHECK_THROWS_AS((void)combination_inner_products(g, zero), std::invalid_argument);
    CombinationSpec foreign;
    foreign.coefficients = coeffs(Ring(-7), {1, 0, 0});
    foreign.primed_coefficients = coeffs(Ring(-7), {1, 0, 0});
    CHECK_THROWS_AS((void)combination_inner_products(g, foreign), std::domain_error);
}

TEST_CASE("nonmaximality certificates") {
    const Ring r2(-2);
    CHECK(cyclo::prove_nonmaximal_by_gram(weight3_seed(r2)));
    CHECK(cyclo::prove_nonmaximal_by_gram(star_seed(r2, true)));
    CHECK(cyclo::prove_nonmaximal_by_gram(star_seed(r2, false)));
    CHECK(cyclo::prove_nonmaximal_by_gram(hanging_seed(r2)));
    // chains are never maximal; this one has no weight-3 vertex, so the
    // decision falls through to the direct extension search
    CHECK(cyclo::prove_nonmaximal_by_gram(cyclo::chain(1, r2)));
    CHECK_FALSE(cyclo::prove_nonmaximal_by_gram(cyclo::t2k4(3, r2)));
    CHECK_FALSE(cyclo::prove_nonmaximal_by_gram(cyclo::sporadic("S_8*", Ring(-7))));

    CHECK_THROWS_AS((void)cyclo::prove_nonmaximal_by_gram(weight3_seed(Ring(-11))),
                    std::invalid_argument);
    const LGraph heavy(r2, {1, 0}, {{0, 1, RingElement::integer(r2, 2)}});
    CHECK_THROWS_AS((void)cyclo::prove_nonmaximal_by_gram(heavy), std::invalid_argument);
}

}  // TEST_SUITE
