#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "clawnet/rational.hpp"

namespace clawnet {

/// A hyperedge activation: node `source` broadcasts one packet to every node
/// in `receivers` simultaneously. Receivers are kept sorted.
struct Transmission {
    std::string source;
    std::vector<std::string> receivers;

    Transmission() = default;
    Transmission(std::string src, std::vector<std::string> recv)
        : source(std::move(src)), receivers(std::move(recv)) {
        std::sort(receivers.begin(), receivers.end());
    }

    bool operator==(const Transmission&) const = default;
    /// Canonical order: source id, then receiver list lexicographically.
    auto operator<=>(const Transmission& o) const {
        if (auto c = source <=> o.source; c != 0) return c;
        return receivers <=> o.receivers;
    }

    std::string label() const {
        std::string s = "(" + source + ",";
        if (receivers.size() == 1) {
            s += receivers[0];
        } else {
            s += "{";
            for (std::size_t i = 0; i < receivers.size(); ++i) {
                if (i) s += ",";
                s += receivers[i];
            }
            s += "}";
        }
        return s + ")";
    }
};

/// Undirected weighted graph over transmissions; an edge means "cannot be
/// scheduled in the same slot". Vertices stay in canonical transmission
/// order so exports are byte-stable.
struct ConflictGraph {
    std::vector<Transmission> vertices;
    std::vector<boost::dynamic_bitset<>> adj;
    std::vector<Rational> weights;

    ConflictGraph() = default;
    explicit ConflictGraph(std::vector<Transmission> verts) : vertices(std::move(verts)) {
        adj.assign(vertices.size(), boost::dynamic_bitset<>(vertices.size()));
        weights.assign(vertices.size(), Rational(1));
    }

    std::size_t size() const { return vertices.size(); }

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) throw std::invalid_argument("conflict graph forbids self-loops");
        adj[u].set(v);
        adj[v].set(u);
    }

    bool adjacent(std::size_t u, std::size_t v) const { return adj[u].test(v); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& row : adj) twice += row.count();
        return twice / 2;
    }

    /// Edges as sorted (u, v) pairs with u < v.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t u = 0; u < size(); ++u)
            for (std::size_t v = adj[u].find_next(u); v != boost::dynamic_bitset<>::npos;
                 v = adj[u].find_next(v))
                out.push_back({u, v});
        return out;
    }

    std::size_t degree(std::size_t u) const { return adj[u].count(); }

    bool operator==(const ConflictGraph& o) const {
        return vertices == o.vertices && adj == o.adj && weights == o.weights;
    }
};

/// Sorted vertex-index set with no two members adjacent in the host graph.
using IndependentSet = std::vector<std::size_t>;

/// True iff no edge of g has both endpoints in s.
inline bool is_independent(const ConflictGraph& g, const IndependentSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= g.size()) throw std::out_of_range("vertex index out of range");
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    }
    return true;
}

}  // namespace clawnet
