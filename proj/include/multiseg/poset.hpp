#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "multiseg/error.hpp"
#include "multiseg/io.hpp"
#include "multiseg/multisegment.hpp"

namespace mseg {

inline constexpr std::size_t kDefaultPosetCap = 50000;

/// S(a) with the edges produced by single elementary operations.
/// elements[0] is the root; order is BFS discovery order.
struct MultisegmentPoset {
    std::vector<Multisegment> elements;
    std::vector<std::pair<std::size_t, std::size_t>> op_edges;  // (parent, child), deduplicated
    std::unordered_map<Multisegment, std::size_t> index;

    std::size_t size() const { return elements.size(); }
    bool contains(const Multisegment& b) const { return index.count(b) != 0; }
    const Multisegment& root() const { return elements.front(); }
};

inline MultisegmentPoset generate_poset(const Multisegment& a, std::size_t cap = kDefaultPosetCap) {
    MultisegmentPoset p;
    p.elements.push_back(a);
    p.index.emplace(a, 0);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t head = 0; head < p.elements.size(); ++head) {
        const Multisegment cur = p.elements[head];
        for (auto& child : elementary_children(cur)) {
            auto [it, fresh] = p.index.emplace(child, p.elements.size());
            if (fresh) {
                if (p.elements.size() >= cap)
                    throw ResourceLimitError("poset of " + a.to_string() + " exceeds " +
                                             std::to_string(cap) + " elements");
                p.elements.push_back(std::move(child));
            }
            edges.emplace(head, it->second);
        }
    }
    p.op_edges.assign(edges.begin(), edges.end());
    return p;
}

/// r_{ij}(a) = #{Δ ∈ a : Δ ⊇ [i,j]}.
inline int rank_count(const Multisegment& a, int i, int j) {
    int n = 0;
    for (const auto& s : a) n += (s.begin <= i && j <= s.end) ? 1 : 0;
    return n;
}

/// b ≤ a via the rank-function criterion.
inline bool leq_rank(const Multisegment& b, const Multisegment& a) {
    if (b.weight() != a.weight()) return false;
    if (a.empty()) return true;
    int lo = a[0].begin, hi = a[0].end;
    for (const auto& s : a) {
        lo = std::min(lo, s.begin);
        hi = std::max(hi, s.end);
    }
    for (int i = lo; i <= hi; ++i)
        for (int j = i + 1; j <= hi; ++j)
            if (rank_count(b, i, j) < rank_count(a, i, j)) return false;
    return true;
}

/// b ≤ a via reachability by elementary operations. Oracle; exponential.
inline bool leq_reach(const Multisegment& b, const Multisegment& a, std::size_t cap = kDefaultPosetCap) {
    if (b.weight() != a.weight()) return false;
    return generate_poset(a, cap).contains(b);
}

/// The unique element of S(a) with no linked pair.
inline Multisegment minimal_element(const Multisegment& a) {
    Multisegment cur = a;
    for (;;) {
        std::size_t n = cur.size(), bi = n, bj = n;
        for (std::size_t i = 0; i < n && bi == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (linked(cur[i], cur[j])) {
                    bi = i;
                    bj = j;
                    break;
                }
        if (bi == n) return cur;
        cur = cur.elementary_operation(bi, bj);
    }
}

/// Cover relations of the poset: op edges with redundant ones removed.
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const MultisegmentPoset& p) {
    std::vector<std::vector<std::size_t>> kids(p.size());
    for (auto [u, v] : p.op_edges) kids[u].push_back(v);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < p.size(); ++u) {
        for (std::size_t v : kids[u]) {
            bool redundant = false;
            for (std::size_t w : kids[u]) {
                if (w != v && leq_rank(p.elements[v], p.elements[w])) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) out.emplace_back(u, v);
        }
    }
    return out;
}

inline std::string hasse_dot(const MultisegmentPoset& p) {
    auto escape = [](const std::string& s) {
        std::string r;
        for (char c : s) {
            if (c == '"') r += '\\';
            r += c;
        }
        return r;
    };
    std::string out = "digraph poset {\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + escape(to_json(p.elements[i]).dump()) + "\"];\n";
    for (auto [u, v] : hasse_edges(p))
        out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
    return out + "}\n";
}

}  // namespace mseg
