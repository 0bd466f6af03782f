#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "clawnet/network.hpp"

namespace clawnet {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what) {}
};

namespace detail {
inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}
}  // namespace detail

/// Parses the network file format:
///
///   topology geometric            # or: tree
///   r_T 150
///   delta 0.01
///   reach_limit 2
///   source A
///   sinks F G
///   orientation A B C D E F G
///   node A 0 0                    # geometric: id x y
///   node A root                   # tree: root node
///   node B parent A               # tree: child with parent
///   capacity A B 1                # directed link capacity (default 1)
///
/// Numbers may be integers, fractions ("2/3") or decimals ("0.01"); all are
/// kept exact. '#' starts a comment.
inline Network parse_network(const std::string& text) {
    Network net;
    bool topology_seen = false;
    bool r_T_seen = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        auto tok = detail::split_ws(line);
        if (tok.empty()) continue;
        const std::string& key = tok[0];
        try {
            if (key == "topology") {
                if (tok.size() != 2) throw ParseError("topology takes one value", lineno);
                if (tok[1] == "geometric") net.topology = Topology::geometric;
                else if (tok[1] == "tree") net.topology = Topology::tree;
                else throw ParseError("unknown topology '" + tok[1] + "'", lineno);
                topology_seen = true;
            } else if (key == "r_T") {
                net.r_T = parse_rational(tok.at(1));
                r_T_seen = true;
            } else if (key == "delta") {
                net.delta = parse_rational(tok.at(1));
            } else if (key == "reach_limit") {
                net.reach_limit = std::stoi(tok.at(1));
            } else if (key == "source") {
                net.source = tok.at(1);
            } else if (key == "sinks") {
                net.sinks.assign(tok.begin() + 1, tok.end());
            } else if (key == "orientation") {
                net.orientation = std::vector<std::string>(tok.begin() + 1, tok.end());
            } else if (key == "node") {
                if (!topology_seen) throw ParseError("declare topology before nodes", lineno);
                NodeRecord n;
                n.id = tok.at(1);
                if (net.topology == Topology::geometric) {
                    if (tok.size() != 4) throw ParseError("geometric node needs 'node id x y'", lineno);
                    n.pos = Vec2{parse_rational(tok[2]), parse_rational(tok[3])};
                } else {
                    if (tok.size() >= 3 && tok[2] == "root") {
                        if (tok.size() != 3) throw ParseError("root node takes no extra fields", lineno);
                    } else if (tok.size() == 4 && tok[2] == "parent") {
                        n.parent = tok[3];
                    } else {
                        throw ParseError("tree node needs 'node id root' or 'node id parent p'", lineno);
                    }
                }
                net.nodes.push_back(std::move(n));
            } else if (key == "capacity") {
                if (tok.size() != 4) throw ParseError("capacity needs 'capacity from to value'", lineno);
                net.capacities[{tok[1], tok[2]}] = parse_rational(tok[3]);
            } else {
                throw ParseError("unknown directive '" + key + "'", lineno);
            }
        } catch (const std::out_of_range&) {
            throw ParseError("missing field after '" + key + "'", lineno);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (!topology_seen) throw ParseError("missing topology directive");
    if (!r_T_seen && net.topology == Topology::tree) net.r_T = 1;  // unused by tree scenarios
    try {
        net.finalize();
    } catch (const NetworkError& e) {
        throw ParseError(e.what());
    }
    return net;
}

inline Network parse_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network(buf.str());
}

/// Canonical emitter; parse_network(emit_network(net)) reproduces net.
inline std::string emit_network(const Network& net) {
    std::ostringstream out;
    out << "topology " << (net.topology == Topology::geometric ? "geometric" : "tree") << "\n";
    out << "r_T " << format_rational(net.r_T) << "\n";
    out << "delta " << format_rational(net.delta) << "\n";
    out << "reach_limit " << net.reach_limit << "\n";
    if (net.source) out << "source " << *net.source << "\n";
    if (!net.sinks.empty()) {
        out << "sinks";
        for (const auto& t : net.sinks) out << " " << t;
        out << "\n";
    }
    if (net.orientation) {
        out << "orientation";
        for (const auto& id : *net.orientation) out << " " << id;
        out << "\n";
    }
    for (const auto& n : net.nodes) {
        out << "node " << n.id;
        if (net.topology == Topology::geometric) {
            out << " " << format_rational(n.pos->x) << " " << format_rational(n.pos->y);
        } else if (n.parent) {
            out << " parent " << *n.parent;
        } else {
            out << " root";
        }
        out << "\n";
    }
    for (const auto& [link, cap] : net.capacities)
        out << "capacity " << link.first << " " << link.second << " " << format_rational(cap) << "\n";
    return out.str();
}

}  // namespace clawnet
