#include "cyclo/families.hpp"

#include <stdexcept>

namespace cyclo {

namespace {

RingElement unit(const Ring& ring, long value) {
    return RingElement::integer(ring, value);
}

void require_ring(const std::string& name, const Ring& ring, std::initializer_list<int> ds) {
    for (int d : ds) {
        if (ring.d() == d) {
            return;
        }
    }
    throw std::invalid_argument("'" + name + "' is not defined over d=" +
                                std::to_string(ring.d()));
}

}  // namespace

LGraph sporadic(const std::string& name, const Ring& ring) {
    const RingElement w = RingElement::omega(ring);
    const RingElement one = unit(ring, 1);
    if (name == "S_2") {
        return {ring, {0, 0}, {{0, 1, unit(ring, 2)}}};
    }
    if (name == "S_2*") {
        require_ring(name, ring, {-7, -15});
        const RingElement label = ring.d() == -7 ? one + w : w;  // norm 4 in either ring
        return {ring, {0, 0}, {{0, 1, label}}};
    }
    if (name == "S_2'") {
        require_ring(name, ring, {-2, -11});
        const RingElement label = ring.d() == -2 ? one + w : w;  // norm 3 in either ring
        return {ring, {1, -1}, {{0, 1, label}}};
    }
    if (name == "S_4") {
        require_ring(name, ring, {-2, -7});
        return {ring,
                {1, -1, -1, 1},
                {{0, 1, w}, {2, 3, -w}, {0, 2, one}, {1, 3, one}}};
    }
    if (name == "S_4'") {
        require_ring(name, ring, {-2, -11});
        const RingElement alpha = ring.d() == -2 ? one + w : w;  // norm 3 in either ring
        return {ring,
                {0, 0, 0, 0},
                {{0, 1, alpha}, {2, 3, -alpha}, {0, 2, one}, {1, 3, one}}};
    }
    if (name == "S_4*") {
        require_ring(name, ring, {-2});
        return {ring,
                {0, 0, 0, 0},
                {{0, 1, w}, {2, 3, -w}, {0, 2, one}, {1, 3, one}, {0, 3, one}, {1, 2, -one}}};
    }
    if (name == "S_6t" || name == "S_6†") {
        require_ring("S_6t", ring, {-7});
        return {ring,
                {0, 0, 0, 0, 0, 0},
                {{0, 1, one},
                 {2, 3, one},
                 {4, 5, one},
                 {2, 5, one},
                 {1, 4, -one},
                 {0, 3, -one},
                 {0, 5, w.conj()},
                 {3, 4, -w},
                 {1, 2, w}}};
    }
    if (name == "S_8*") {
        require_ring(name, ring, {-2, -7});
        return {ring,
                {0, 0, 0, 0, 0, 0, 0, 0},
                {{6, 7, -one},
                 {4, 5, -one},
                 {3, 7, one},
                 {2, 6, one},
                 {0, 4, one},
                 {1, 5, one},
                 {2, 3, one},
                 {0, 1, one},
                 {4, 7, -w},
                 {5, 6, w},
                 {1, 2, -w},
                 {0, 3, w}}};
    }
    throw std::invalid_argument("unknown sporadic name '" + name + "'");
}

LGraph t2k4(int k, const Ring& ring, bool primed) {
    require_ring("T_2k^4", ring, {-2, -7});
    if (k < 2) {
        throw std::invalid_argument("T_2k^4 needs k >= 2");
    }
    if (primed && ring.d() != -7) {
        throw std::invalid_argument("the primed T_2k^4 variant exists only over d=-7");
    }
    const int rail = k - 1;  // vertices per rail; caps are 2*rail, 2*rail + 1
    const RingElement one = unit(ring, 1);
    const RingElement w = RingElement::omega(ring);
    const RingElement left = w;
    const RingElement right = primed ? w.conj() : w;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < rail; ++i) {
        edges.push_back({i, i + 1, one});
        edges.push_back({rail + i, rail + i + 1, -one});
        edges.push_back({i, rail + i + 1, one});
        edges.push_back({i + 1, rail + i, -one});
    }
    edges.push_back({0, 2 * rail, left});
    edges.push_back({rail, 2 * rail, left});
    edges.push_back({rail - 1, 2 * rail + 1, right});
    edges.push_back({2 * rail - 1, 2 * rail + 1, -right});
    return {ring, std::vector<int>(2 * rail + 2, 0), std::move(edges)};
}

LGraph c2k2plus(int k, const Ring& ring) {
    require_ring("C_2k^2+", ring, {-2, -7});
    if (k < 1) {
        throw std::invalid_argument("C_2k^2+ needs k >= 1");
    }
    const RingElement one = unit(ring, 1);
    const RingElement w = RingElement::omega(ring);
    std::vector<int> charges(2 * k + 1, 0);
    charges[0] = 1;
    charges[k] = 1;
    std::vector<Edge> edges;
    edges.push_back({0, k, one});
    for (int i = 0; i + 1 < k; ++i) {
        edges.push_back({i, i + 1, one});
        edges.push_back({k + i, k + i + 1, -one});
        edges.push_back({i, k + i + 1, one});
        edges.push_back({i + 1, k + i, -one});
    }
    edges.push_back({k - 1, 2 * k, w});
    edges.push_back({2 * k - 1, 2 * k, -w});
    return {ring, std::move(charges), std::move(edges)};
}

LGraph chain(int k, const Ring& ring) {
    if (k < 0) {
        throw std::invalid_argument("chain length must be nonnegative");
    }
    // A chain is the capped cylinder with its far cap removed.
    return t2k4(k + 2, ring).delete_vertex(2 * (k + 1));
}

FormPattern cylinder(int m) {
    if (m < 2) {
        throw std::invalid_argument("cylinder needs m >= 2");
    }
    FormPattern pattern(2 * m);
    for (int i = 0; i + 1 < m; ++i) {
        pattern.set_edge_weight(i, i + 1, 1);
        pattern.set_edge_weight(m + i, m + i + 1, 1);
        pattern.set_edge_weight(i, m + i + 1, 1);
        pattern.set_edge_weight(i + 1, m + i, 1);
    }
    return pattern;
}

FormPattern chain_form(int k) {
    const LGraph model = chain(k, Ring(-2));
    FormPattern pattern(model.n());
    for (const Edge& e : model.edges()) {
        pattern.set_edge_weight(e.i, e.j, static_cast<int>(e.label.norm().get_si()));
    }
    return pattern;
}

std::vector<CatalogueEntry> catalogue(const Ring& ring, int max_k) {
    if (max_k < 2) {
        throw std::invalid_argument("catalogue needs max_k >= 2");
    }
    std::vector<CatalogueEntry> entries;
    auto add_sporadic = [&](const std::string& name) {
        entries.push_back({name, ring, std::nullopt, sporadic(name, ring)});
    };
    add_sporadic("S_2");
    switch (ring.d()) {
        case -2:
            add_sporadic("S_2'");
            add_sporadic("S_4");
            add_sporadic("S_4'");
            add_sporadic("S_4*");
            add_sporadic("S_8*");
            break;
        case -7:
            add_sporadic("S_2*");
            add_sporadic("S_4");
            add_sporadic("S_6t");
            add_sporadic("S_8*");
            break;
        case -11:
            add_sporadic("S_2'");
            add_sporadic("S_4'");
            break;
        case -15:
            add_sporadic("S_2*");
            break;
    }
    if (ring.d() == -2 || ring.d() == -7) {
        for (int k = 2; k <= max_k; ++k) {
            entries.push_back(
                {"T_" + std::to_string(2 * k) + "^4", ring, k, t2k4(k, ring)});
            if (ring.d() == -7) {
                entries.push_back(
                    {"T_" + std::to_string(2 * k) + "^4'", ring, k, t2k4(k, ring, true)});
            }
        }
        for (int k = 1; k <= max_k; ++k) {
            entries.push_back(
                {"C_" + std::to_string(2 * k) + "^2+", ring, k, c2k2plus(k, ring)});
        }
    }
    return entries;
}

const std::vector<std::string>& rational_catalogue_names() {
    static const std::vector<std::string> names{"S_14", "S_16", "T_2k", "C_2k^++", "C_2k^+-"};
    return names;
}

}  // namespace cyclo
