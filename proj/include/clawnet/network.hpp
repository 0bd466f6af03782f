#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clawnet/rational.hpp"

namespace clawnet {

enum class Topology { geometric, tree };
enum class Scenario { I, II, III };

inline const char* to_string(Scenario s) {
    switch (s) {
        case Scenario::I: return "I";
        case Scenario::II: return "II";
        case Scenario::III: return "III";
    }
    return "?";
}

inline Scenario scenario_from_string(const std::string& s) {
    if (s == "I" || s == "1") return Scenario::I;
    if (s == "II" || s == "2") return Scenario::II;
    if (s == "III" || s == "3") return Scenario::III;
    throw std::invalid_argument("unknown scenario '" + s + "'");
}

struct Vec2 {
    Rational x;
    Rational y;
    bool operator==(const Vec2&) const = default;
};

/// Exact squared Euclidean distance.
inline Rational dist2(const Vec2& a, const Vec2& b) {
    Rational dx = a.x - b.x;
    Rational dy = a.y - b.y;
    return dx * dx + dy * dy;
}

struct NodeRecord {
    std::string id;
    std::optional<Vec2> pos;            // geometric topology
    std::optional<std::string> parent;  // tree topology; nullopt = root
    std::optional<int> level;           // tree: root is level 1
    bool operator==(const NodeRecord&) const = default;
};

using LinkKey = std::pair<std::string, std::string>;  // directed (from, to)

struct ValidationIssue {
    std::string assumption;          // e.g. "A2.8", "T1-spacing", "topology", "reach"
    std::vector<std::string> nodes;  // offending node ids
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

class NetworkError : public std::runtime_error {
  public:
    explicit NetworkError(const std::string& what) : std::runtime_error(what) {}
};

/// Immutable wireless network model. Construct once (directly or via
/// parse_network), then share freely across threads.
struct Network {
    std::vector<NodeRecord> nodes;
    Rational r_T = 1;
    Rational delta = Rational(1, 100);
    Topology topology = Topology::geometric;
    std::optional<std::vector<std::string>> orientation;  // source-to-sink total order
    std::map<LinkKey, Rational> capacities;               // absent links default to 1
    int reach_limit = 2;
    std::optional<std::string> source;
    std::vector<std::string> sinks;

    std::size_t index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw NetworkError("unknown node id '" + id + "'");
        return it->second;
    }

    bool has_node(const std::string& id) const { return index_.count(id) != 0; }

    const NodeRecord& node(const std::string& id) const { return nodes[index_of(id)]; }

    /// Orientation rank, or -1 when no orientation is declared.
    long orientation_rank(const std::string& id) const {
        if (!orientation) return -1;
        auto it = rank_.find(id);
        if (it == rank_.end()) throw NetworkError("node '" + id + "' missing from orientation");
        return it->second;
    }

    const std::vector<std::string>& children(const std::string& id) const {
        static const std::vector<std::string> none;
        auto it = children_.find(id);
        return it == children_.end() ? none : it->second;
    }

    /// Tree level; the root is level 1.
    int level(const std::string& id) const {
        auto it = levels_.find(id);
        if (it == levels_.end()) throw NetworkError("no tree level for '" + id + "'");
        return it->second;
    }

    const std::string& root() const {
        if (topology != Topology::tree) throw NetworkError("root() requires tree topology");
        return root_;
    }

    Rational capacity(const std::string& from, const std::string& to) const {
        auto it = capacities.find({from, to});
        return it == capacities.end() ? Rational(1) : it->second;
    }

    /// Validates invariants and builds the derived indexes. Must be called
    /// after the public fields are filled in; parse_network does this.
    void finalize() {
        index_.clear();
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (!index_.emplace(nodes[i].id, i).second)
                throw NetworkError("duplicate node id '" + nodes[i].id + "'");
        }
        if (r_T <= 0) throw NetworkError("r_T must be positive");
        if (delta < 0) throw NetworkError("delta must be nonnegative");
        if (reach_limit < 1) throw NetworkError("reach_limit must be positive");
        if (topology == Topology::geometric) {
            for (const auto& n : nodes)
                if (!n.pos) throw NetworkError("geometric node '" + n.id + "' has no position");
        } else {
            build_tree_index();
        }
        rank_.clear();
        if (orientation) {
            long r = 0;
            for (const auto& id : *orientation) {
                if (!has_node(id)) throw NetworkError("orientation names unknown node '" + id + "'");
                if (!rank_.emplace(id, r++).second)
                    throw NetworkError("orientation repeats node '" + id + "'");
            }
            if (rank_.size() != nodes.size())
                throw NetworkError("orientation must list every node exactly once");
        }
        for (const auto& [link, cap] : capacities) {
            index_of(link.first);
            index_of(link.second);
            if (cap <= 0) throw NetworkError("capacity must be positive");
        }
        if (source) index_of(*source);
        for (const auto& t : sinks) index_of(t);
    }

    bool operator==(const Network& o) const {
        return nodes == o.nodes && r_T == o.r_T && delta == o.delta && topology == o.topology &&
               orientation == o.orientation && capacities == o.capacities &&
               reach_limit == o.reach_limit && source == o.source && sinks == o.sinks;
    }

  private:
    void build_tree_index() {
        children_.clear();
        levels_.clear();
        root_.clear();
        for (const auto& n : nodes) {
            if (!n.parent) {
                if (!root_.empty())
                    throw NetworkError("tree has multiple roots: '" + root_ + "' and '" + n.id + "'");
                root_ = n.id;
            } else {
                if (!has_node(*n.parent))
                    throw NetworkError("node '" + n.id + "' has unknown parent '" + *n.parent + "'");
                children_[*n.parent].push_back(n.id);
            }
        }
        if (root_.empty() && !nodes.empty()) throw NetworkError("tree has no root");
        for (auto& [p, kids] : children_) std::sort(kids.begin(), kids.end());
        // Depth-first from the root; anything unreached sits on a cycle.
        std::vector<std::pair<std::string, int>> stack;
        if (!root_.empty()) stack.push_back({root_, 1});
        while (!stack.empty()) {
            auto [id, lvl] = stack.back();
            stack.pop_back();
            levels_[id] = lvl;
            for (const auto& c : children(id)) stack.push_back({c, lvl + 1});
        }
        for (const auto& n : nodes)
            if (!levels_.count(n.id))
                throw NetworkError("cycle in tree parent structure at node '" + n.id + "'");
    }

    std::map<std::string, std::size_t> index_;
    std::map<std::string, long> rank_;
    std::map<std::string, std::vector<std::string>> children_;
    std::map<std::string, int> levels_;
    std::string root_;
};

/// Nodes a given node can hear: geometric mode takes every other node within
/// Euclidean distance r_T (boundary inclusive), tree mode takes the children.
/// Distances compare exactly in squared rational arithmetic.
inline std::vector<std::string> neighbors(const Network& net, const std::string& id) {
    const NodeRecord& n = net.node(id);
    if (net.topology == Topology::tree) return net.children(id);
    std::vector<std::string> out;
    Rational limit = net.r_T * net.r_T;
    for (const auto& other : net.nodes) {
        if (other.id == id) continue;
        if (dist2(*n.pos, *other.pos) <= limit) out.push_back(other.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Forward neighbors for transmission enumeration: orientation order for
/// geometric networks (everything when no orientation is declared), children
/// for trees.
inline std::vector<std::string> forward_neighbors(const Network& net, const std::string& id) {
    if (net.topology == Topology::tree) return net.children(id);
    std::vector<std::string> all = neighbors(net, id);
    if (!net.orientation) return all;
    long my_rank = net.orientation_rank(id);
    std::vector<std::string> out;
    for (const auto& j : all)
        if (net.orientation_rank(j) > my_rank) out.push_back(j);
    return out;
}

/// Checks the structural premises of a scenario. Violations come back in the
/// report; this never throws on bad premises.
inline ValidationReport validate_scenario(const Network& net, Scenario scenario) {
    ValidationReport report;
    auto flag = [&](std::string assumption, std::vector<std::string> ids, std::string detail) {
        report.issues.push_back({std::move(assumption), std::move(ids), std::move(detail)});
    };

    if (scenario == Scenario::I) {
        if (net.topology != Topology::geometric) {
            flag("A1.3", {}, "the Protocol model needs geometric positions");
            return report;
        }
        // Line networks: nodes must be spread so that no transmitter can cover
        // three consecutive forward nodes (r_T < |mu_i - mu_{i+3}|).
        if (net.orientation) {
            const auto& order = *net.orientation;
            Rational limit = net.r_T * net.r_T;
            for (std::size_t i = 0; i + 3 < order.size(); ++i) {
                const auto& a = net.node(order[i]);
                const auto& b = net.node(order[i + 3]);
                if (dist2(*a.pos, *b.pos) <= limit)
                    flag("T1-spacing", {order[i], order[i + 3]},
                         "r_T must be smaller than the three-hop span");
            }
            for (const auto& n : net.nodes) {
                auto fwd = forward_neighbors(net, n.id);
                if ((int)fwd.size() > net.reach_limit)
                    flag("reach", {n.id},
                         "transmitter covers " + std::to_string(fwd.size()) +
                             " forward nodes, limit " + std::to_string(net.reach_limit));
            }
        }
        return report;
    }

    if (net.topology != Topology::tree) {
        flag(scenario == Scenario::II ? "A2.3" : "A3.3", {}, "scenario requires a tree topology");
        return report;
    }
    if (scenario == Scenario::II) {
        // A2.8: only one node in every level can have children.
        std::map<int, std::vector<std::string>> parents_by_level;
        for (const auto& n : net.nodes)
            if (!net.children(n.id).empty()) parents_by_level[net.level(n.id)].push_back(n.id);
        for (auto& [lvl, ids] : parents_by_level) {
            if (ids.size() > 1) {
                std::sort(ids.begin(), ids.end());
                flag("A2.8", ids, "level " + std::to_string(lvl) + " has several parents");
            }
        }
    }
    return report;
}

inline std::string format_report(const ValidationReport& report) {
    if (report.ok()) return "all scenario premises hold\n";
    std::string out;
    for (const auto& v : report.issues) {
        out += v.assumption + ": " + v.detail;
        if (!v.nodes.empty()) {
            out += " [";
            for (std::size_t i = 0; i < v.nodes.size(); ++i) {
                if (i) out += ", ";
                out += v.nodes[i];
            }
            out += "]";
        }
        out += "\n";
    }
    return out;
}

}  // namespace clawnet
