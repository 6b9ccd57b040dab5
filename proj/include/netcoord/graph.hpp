#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netcoord/errors.hpp"
#include "netcoord/rational.hpp"

namespace netcoord {

enum class Strategy : unsigned char { A, B };

inline Strategy flipped(Strategy s) { return s == Strategy::A ? Strategy::B : Strategy::A; }

inline char strategy_char(Strategy s) { return s == Strategy::A ? 'A' : 'B'; }

inline Strategy strategy_from_string(const std::string& text) {
    if (text == "A") return Strategy::A;
    if (text == "B") return Strategy::B;
    throw Error(ErrorCode::ParseError, "strategy must be \"A\" or \"B\", got \"" + text + "\"");
}

// Finite simple undirected graph over opaque string node ids. Nodes keep
// their declaration order; edges are canonicalized (lexicographically
// smaller id first) and stored sorted for deterministic serialization.
class Graph {
public:
    Graph() = default;

    static Graph build(std::vector<std::string> nodes,
                       const std::vector<std::pair<std::string, std::string>>& edges) {
        Graph g;
        g.nodes_ = std::move(nodes);
        for (std::size_t i = 0; i < g.nodes_.size(); ++i) {
            auto [it, inserted] = g.index_.emplace(g.nodes_[i], static_cast<int>(i));
            if (!inserted) throw Error(ErrorCode::DuplicateNode, "node '" + g.nodes_[i] + "' declared twice");
        }
        std::vector<std::pair<std::string, std::string>> canonical;
        canonical.reserve(edges.size());
        for (const auto& [u, v] : edges) {
            if (u == v) throw Error(ErrorCode::SelfLoop, "edge (" + u + ", " + v + ")");
            if (!g.index_.count(u)) throw Error(ErrorCode::UnknownEndpoint, "edge endpoint '" + u + "' is not a declared node");
            if (!g.index_.count(v)) throw Error(ErrorCode::UnknownEndpoint, "edge endpoint '" + v + "' is not a declared node");
            canonical.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(canonical.begin(), canonical.end());
        if (auto it = std::adjacent_find(canonical.begin(), canonical.end()); it != canonical.end())
            throw Error(ErrorCode::DuplicateEdge, "edge (" + it->first + ", " + it->second + ") appears twice");
        g.edges_.reserve(canonical.size());
        g.adjacency_.assign(g.nodes_.size(), {});
        for (const auto& [u, v] : canonical) {
            int ui = g.index_.at(u), vi = g.index_.at(v);
            g.edges_.emplace_back(ui, vi);
            g.adjacency_[static_cast<std::size_t>(ui)].push_back(vi);
            g.adjacency_[static_cast<std::size_t>(vi)].push_back(ui);
        }
        for (auto& neighbors : g.adjacency_) std::sort(neighbors.begin(), neighbors.end());
        return g;
    }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<std::string>& nodes() const { return nodes_; }
    // Endpoint index pairs, ordered so the lexicographically smaller id comes first.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

    const std::string& node_id(int index) const { return nodes_.at(static_cast<std::size_t>(index)); }

    bool has_node(const std::string& id) const { return index_.count(id) != 0; }

    int index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw Error(ErrorCode::UnknownNode, "node '" + id + "' is not in the graph");
        return it->second;
    }

    std::pair<std::string, std::string> edge_ids(std::size_t edge_index) const {
        const auto& [u, v] = edges_.at(edge_index);
        return {node_id(u), node_id(v)};
    }

private:
    std::vector<std::string> nodes_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

// Total strategy assignment for a specific graph, stored by node index.
class Profile {
public:
    Profile() = default;

    static Profile uniform(const Graph& g, Strategy s) {
        Profile p;
        p.strategies_.assign(g.node_count(), s);
        return p;
    }

    static Profile from_strategies(const Graph& g, std::vector<Strategy> by_index) {
        if (by_index.size() != g.node_count())
            throw Error(ErrorCode::ProfileMismatch, "profile covers " + std::to_string(by_index.size()) +
                                                        " nodes, graph has " + std::to_string(g.node_count()));
        Profile p;
        p.strategies_ = std::move(by_index);
        return p;
    }

    static Profile from_map(const Graph& g, const std::map<std::string, Strategy>& assignment) {
        Profile p;
        p.strategies_.assign(g.node_count(), Strategy::A);
        for (const auto& id : g.nodes()) {
            auto it = assignment.find(id);
            if (it == assignment.end())
                throw Error(ErrorCode::ProfileMismatch, "node '" + id + "' has no strategy");
            p.strategies_[static_cast<std::size_t>(g.index_of(id))] = it->second;
        }
        if (assignment.size() != g.node_count())
            for (const auto& [id, s] : assignment)
                if (!g.has_node(id))
                    throw Error(ErrorCode::ProfileMismatch, "strategy given for unknown node '" + id + "'");
        return p;
    }

    std::size_t size() const { return strategies_.size(); }
    Strategy at(int index) const { return strategies_.at(static_cast<std::size_t>(index)); }
    const std::vector<Strategy>& strategies() const { return strategies_; }

    Profile with(int index, Strategy s) const {
        Profile p = *this;
        p.strategies_.at(static_cast<std::size_t>(index)) = s;
        return p;
    }

    Profile flipped_all() const {
        Profile p = *this;
        for (auto& s : p.strategies_) s = flipped(s);
        return p;
    }

    std::map<std::string, Strategy> to_map(const Graph& g) const {
        require_covers(g);
        std::map<std::string, Strategy> m;
        for (std::size_t i = 0; i < strategies_.size(); ++i) m.emplace(g.node_id(static_cast<int>(i)), strategies_[i]);
        return m;
    }

    void require_covers(const Graph& g) const {
        if (strategies_.size() != g.node_count())
            throw Error(ErrorCode::ProfileMismatch, "profile covers " + std::to_string(strategies_.size()) +
                                                        " nodes, graph has " + std::to_string(g.node_count()));
    }

    bool operator==(const Profile&) const = default;

private:
    std::vector<Strategy> strategies_;
};

// Counts of A-, B- and C-edges. Components are exact rationals so states may
// be fractional or rescaled; classify_edges always produces integers.
struct EdgeState {
    Rational a_edges;
    Rational b_edges;
    Rational c_edges;

    Rational total() const { return a_edges + b_edges + c_edges; }
    bool is_zero() const { return a_edges == 0 && b_edges == 0 && c_edges == 0; }
    bool is_nonnegative() const { return a_edges >= 0 && b_edges >= 0 && c_edges >= 0; }

    EdgeState operator+(const EdgeState& o) const {
        return {a_edges + o.a_edges, b_edges + o.b_edges, c_edges + o.c_edges};
    }
    EdgeState operator*(const Rational& k) const { return {a_edges * k, b_edges * k, c_edges * k}; }

    bool operator==(const EdgeState&) const = default;
};

inline EdgeState classify_edges(const Graph& g, const Profile& s) {
    s.require_covers(g);
    long a = 0, b = 0, c = 0;
    for (const auto& [u, v] : g.edges()) {
        Strategy su = s.at(u), sv = s.at(v);
        if (su != sv)
            ++c;
        else if (su == Strategy::A)
            ++a;
        else
            ++b;
    }
    return {Rational(a), Rational(b), Rational(c)};
}

}  // namespace netcoord
