#include "cyclo/equiv.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "cyclo/ring.hpp"

namespace cyclo {

LGraph switch_at(const LGraph& g, int v) {
    if (v < 0 || v >= g.n()) {
        throw std::out_of_range("switch vertex outside graph");
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        edges.push_back({e.i, e.j, (e.i == v || e.j == v) ? -e.label : e.label});
    }
    return {g.ring(), g.charges(), std::move(edges)};
}

LGraph negate(const LGraph& g) {
    std::vector<int> charges(g.charges());
    for (int& c : charges) {
        c = -c;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        edges.push_back({e.i, e.j, -e.label});
    }
    return {g.ring(), std::move(charges), std::move(edges)};
}

LGraph conjugate(const LGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        edges.push_back({e.i, e.j, e.label.conj()});
    }
    return {g.ring(), g.charges(), std::move(edges)};
}

LGraph permute(const LGraph& g, const std::vector<int>& sigma) {
    const int n = g.n();
    if (static_cast<int>(sigma.size()) != n) {
        throw std::invalid_argument("permutation size does not match graph order");
    }
    std::vector<char> hit(n, 0);
    for (int v : sigma) {
        if (v < 0 || v >= n || hit[v]) {
            throw std::invalid_argument("not a permutation of 0..n-1");
        }
        hit[v] = 1;
    }
    std::vector<int> charges(n);
    for (int v = 0; v < n; ++v) {
        charges[sigma[v]] = g.charge(v);
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        const int i = sigma[e.i];
        const int j = sigma[e.j];
        if (i < j) {
            edges.push_back({i, j, e.label});
        } else {
            edges.push_back({j, i, e.label.conj()});
        }
    }
    return {g.ring(), std::move(charges), std::move(edges)};
}

namespace {

constexpr std::uint8_t kAbsentRank = 255;
constexpr std::uint8_t kComponentSeparator = 254;
constexpr int kMaxCanonicalOrder = 14;

// Ranks nonzero labels 1.. in the fixed (norm, a, b) element order;
// the absent label ranks last so that minimal serializations prefer
// adjacent vertices and canonical prefixes stay connected.
class RankTable {
public:
    explicit RankTable(const Ring& ring) {
        const LabelSet labels(ring);
        std::uint8_t next = 1;
        for (const RingElement& x : labels.all_nonzero()) {
            ranks_[{x.a().get_si(), x.b().get_si()}] = next++;
        }
    }

    std::uint8_t rank(const RingElement& x) const {
        if (x.is_zero()) {
            return kAbsentRank;
        }
        auto it = ranks_.find({x.a().get_si(), x.b().get_si()});
        if (it == ranks_.end()) {
            throw std::logic_error("internal: edge label missing from the rank table");
        }
        return it->second;
    }

private:
    std::map<std::pair<long, long>, std::uint8_t> ranks_;
};

// Branch-and-bound search for the minimal serialization of one
// connected variant. Vertices are placed one at a time; each new
// vertex contributes its edge ranks towards the placed prefix (sign
// gauge chosen greedily, which is exact because prefixes stay
// connected) followed by its charge byte.
class MinimalSerializer {
public:
    MinimalSerializer(const LGraph& g, const RankTable& ranks)
        : n_(g.n()), ranks_(ranks), matrix_(g.matrix()) {
        charges_.reserve(n_);
        for (int v = 0; v < n_; ++v) {
            charges_.push_back(static_cast<std::uint8_t>(g.charge(v) + 1));
        }
    }

    // Refines best towards the minimum over this graph's placements.
    void minimize(std::vector<std::uint8_t>& best, bool& have_best) {
        best_ = &best;
        have_best_ = &have_best;
        placed_.clear();
        signs_.assign(n_, 1);
        used_.assign(n_, 0);
        bytes_.clear();
        descend(false);
    }

private:
    struct Column {
        std::vector<std::uint8_t> bytes;
        int vertex;
        int sign;
    };

    Column column_for(int v) const {
        Column col{{}, v, 1};
        const int depth = static_cast<int>(placed_.size());
        col.bytes.reserve(depth + 1);
        std::vector<RingElement> entries;
        entries.reserve(depth);
        for (int t = 0; t < depth; ++t) {
            RingElement x = matrix_[placed_[t] * n_ + v];
            if (signs_[placed_[t]] < 0) {
                x = -x;
            }
            entries.push_back(std::move(x));
        }
        for (const RingElement& x : entries) {
            if (!x.is_zero()) {
                if (ranks_.rank(-x) < ranks_.rank(x)) {
                    col.sign = -1;
                }
                break;
            }
        }
        for (RingElement& x : entries) {
            col.bytes.push_back(ranks_.rank(col.sign < 0 ? -x : x));
        }
        col.bytes.push_back(charges_[v]);
        return col;
    }

    void descend(bool strictly_less) {
        const int depth = static_cast<int>(placed_.size());
        if (depth == n_) {
            // A subtree entered under strictly_less can reach several
            // leaves; only a genuinely smaller serialization may win.
            if (!*have_best_ || bytes_ < *best_) {
                *best_ = bytes_;
                *have_best_ = true;
            }
            return;
        }
        std::vector<Column> minimal;
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) {
                continue;
            }
            Column col = column_for(v);
            if (minimal.empty() || col.bytes < minimal.front().bytes) {
                minimal.clear();
                minimal.push_back(std::move(col));
            } else if (col.bytes == minimal.front().bytes) {
                minimal.push_back(std::move(col));
            }
        }
        for (const Column& col : minimal) {
            bool next_less = strictly_less;
            if (!strictly_less && *have_best_) {
                // Compare the appended segment against the best key.
                const std::size_t at = bytes_.size();
                int cmp = 0;
                for (std::size_t k = 0; k < col.bytes.size() && cmp == 0; ++k) {
                    if (col.bytes[k] != (*best_)[at + k]) {
                        cmp = col.bytes[k] < (*best_)[at + k] ? -1 : 1;
                    }
                }
                if (cmp > 0) {
                    continue;  // any completion stays above best
                }
                next_less = cmp < 0;
            }
            used_[col.vertex] = 1;
            signs_[col.vertex] = col.sign;
            placed_.push_back(col.vertex);
            bytes_.insert(bytes_.end(), col.bytes.begin(), col.bytes.end());
            descend(next_less);
            bytes_.resize(bytes_.size() - col.bytes.size());
            placed_.pop_back();
            used_[col.vertex] = 0;
        }
    }

    int n_;
    const RankTable& ranks_;
    std::vector<RingElement> matrix_;
    std::vector<std::uint8_t> charges_;

    std::vector<std::uint8_t>* best_ = nullptr;
    bool* have_best_ = nullptr;
    std::vector<int> placed_;
    std::vector<int> signs_;
    std::vector<char> used_;
    std::vector<std::uint8_t> bytes_;
};

std::vector<std::uint8_t> component_key(const LGraph& comp, const RankTable& ranks) {
    std::vector<std::uint8_t> best;
    bool have_best = false;
    const LGraph conj = conjugate(comp);
    for (const LGraph* variant : {&comp, &conj}) {
        MinimalSerializer(*variant, ranks).minimize(best, have_best);
        MinimalSerializer(negate(*variant), ranks).minimize(best, have_best);
    }
    std::vector<std::uint8_t> key;
    key.reserve(best.size() + 1);
    key.push_back(static_cast<std::uint8_t>(comp.n()));
    key.insert(key.end(), best.begin(), best.end());
    return key;
}

}  // namespace

CanonicalKey canonical_key(const LGraph& g) {
    if (g.n() > kMaxCanonicalOrder) {
        throw std::invalid_argument("canonical form search supports at most " +
                                    std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                                    std::to_string(g.n()));
    }
    const RankTable ranks(g.ring());
    std::vector<std::vector<std::uint8_t>> parts;
    for (const LGraph& comp : g.components()) {
        parts.push_back(component_key(comp, ranks));
    }
    std::sort(parts.begin(), parts.end());
    CanonicalKey key;
    key.push_back(static_cast<std::uint8_t>(-g.ring().d()));
    key.push_back(static_cast<std::uint8_t>(parts.size()));
    for (const auto& part : parts) {
        key.push_back(kComponentSeparator);
        key.insert(key.end(), part.begin(), part.end());
    }
    return key;
}

bool are_equivalent(const LGraph& a, const LGraph& b) {
    if (a.ring() != b.ring() || a.n() != b.n()) {
        return false;
    }
    return canonical_key(a) == canonical_key(b);
}

std::string key_hex(const CanonicalKey& key) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (std::uint8_t byte : key) {
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xF]);
    }
    return out;
}

}  // namespace cyclo
