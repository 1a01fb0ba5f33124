#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "topolab/union_find.hpp"

namespace topolab {

/// Dense node identifier in [0, node_count).
using NodeId = std::uint32_t;

/// Unordered node pair; orientation is irrelevant.
using Edge = std::pair<NodeId, NodeId>;

/// Per-node exclusion mask; mask[u] != 0 means u is removed.
using NodeMask = std::vector<std::uint8_t>;

/// Immutable simple undirected graph with sorted neighbor lists.
///
/// Adjacency is stored CSR-style: neighbor lists are strictly increasing,
/// self-loop free and symmetric, so edge tests are O(log degree) and
/// neighbor intersections are linear merges. Instances never change after
/// construction and are safe to share across threads.
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edge_count_; }

    std::size_t degree(NodeId u) const {
        assert(u < node_count_);
        return offsets_[u + 1] - offsets_[u];
    }

    std::span<const NodeId> neighbors(NodeId u) const {
        assert(u < node_count_);
        return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const {
        if (u == v) return false;
        if (degree(u) > degree(v)) std::swap(u, v);
        const auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::size_t max_degree() const {
        std::size_t best = 0;
        for (NodeId u = 0; u < node_count_; ++u) best = std::max(best, degree(u));
        return best;
    }

    /// Visits every edge exactly once as (u, v) with u < v.
    template <typename Fn>
    void for_each_edge(Fn&& fn) const {
        for (NodeId u = 0; u < node_count_; ++u) {
            for (NodeId v : neighbors(u)) {
                if (u < v) fn(u, v);
            }
        }
    }

private:
    friend class GraphBuilder;

    std::size_t node_count_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::size_t> offsets_;  // node_count_ + 1 entries
    std::vector<NodeId> adjacency_;     // 2 * edge_count_ entries
};

/// Mutable construction buffer the generators grow a graph in.
///
/// Single-threaded. Callers must keep the graph simple themselves; add_edge
/// asserts it (use has_edge to probe first). freeze() sorts the neighbor
/// lists and produces the immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n_nodes = 0) : adjacency_(n_nodes) {}

    void reserve_nodes(std::size_t n) { adjacency_.reserve(n); }

    NodeId add_node() {
        adjacency_.emplace_back();
        return static_cast<NodeId>(adjacency_.size() - 1);
    }

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t degree(NodeId u) const { return adjacency_[u].size(); }
    std::span<const NodeId> neighbors(NodeId u) const { return adjacency_[u]; }

    bool has_edge(NodeId u, NodeId v) const { return edge_keys_.count(edge_key(u, v)) != 0; }

    void add_edge(NodeId u, NodeId v) {
        assert(u < adjacency_.size() && v < adjacency_.size());
        assert(u != v && !has_edge(u, v));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
        edge_keys_.insert(edge_key(u, v));
        ++edge_count_;
    }

    Graph freeze() && {
        Graph g;
        g.node_count_ = adjacency_.size();
        g.edge_count_ = edge_count_;
        g.offsets_.assign(adjacency_.size() + 1, 0);
        for (std::size_t u = 0; u < adjacency_.size(); ++u) {
            g.offsets_[u + 1] = g.offsets_[u] + adjacency_[u].size();
        }
        g.adjacency_.reserve(2 * edge_count_);
        for (auto& nb : adjacency_) {
            std::sort(nb.begin(), nb.end());
            g.adjacency_.insert(g.adjacency_.end(), nb.begin(), nb.end());
        }
        return g;
    }

private:
    static std::uint64_t edge_key(NodeId u, NodeId v) {
        if (u > v) std::swap(u, v);
        return (std::uint64_t{u} << 32) | v;
    }

    std::vector<std::vector<NodeId>> adjacency_;
    std::unordered_set<std::uint64_t> edge_keys_;
    std::size_t edge_count_ = 0;
};

/// Outcome of building a graph from a raw edge list.
struct BuildResult {
    Graph graph;
    std::size_t duplicates_dropped = 0;
    std::size_t self_loops_dropped = 0;
};

/// Builds a simple graph from possibly messy edge input: self-loops and
/// repeated pairs (in either orientation) are dropped and counted.
/// Throws std::invalid_argument naming the pair when an endpoint lies
/// outside [0, n_nodes).
inline BuildResult build_graph(std::size_t n_nodes, std::span<const Edge> edges) {
    BuildResult result;
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a >= n_nodes || b >= n_nodes) {
            throw std::invalid_argument("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                        "): node id out of range [0, " + std::to_string(n_nodes) +
                                        ")");
        }
        if (a == b) {
            ++result.self_loops_dropped;
            continue;
        }
        normalized.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(normalized.begin(), normalized.end());
    const auto last = std::unique(normalized.begin(), normalized.end());
    result.duplicates_dropped = static_cast<std::size_t>(normalized.end() - last);
    normalized.erase(last, normalized.end());

    GraphBuilder builder(n_nodes);
    for (const auto& [u, v] : normalized) builder.add_edge(u, v);
    result.graph = std::move(builder).freeze();
    return result;
}

/// Size of the largest connected component of the subgraph induced on
/// non-excluded nodes; 0 when every node is excluded. The mask must be
/// empty or of length node_count.
inline std::size_t largest_component(const Graph& g, const NodeMask& excluded) {
    const std::size_t n = g.node_count();
    assert(excluded.empty() || excluded.size() == n);
    if (n == 0) return 0;
    const auto alive = [&](NodeId u) { return excluded.empty() || !excluded[u]; };

    UnionFind components(n);
    g.for_each_edge([&](NodeId u, NodeId v) {
        if (alive(u) && alive(v)) components.unite(u, v);
    });

    std::vector<std::uint32_t> members(n, 0);
    std::size_t best = 0;
    for (NodeId u = 0; u < n; ++u) {
        if (!alive(u)) continue;
        const std::size_t size = ++members[components.find(u)];
        best = std::max(best, size);
    }
    return best;
}

inline std::size_t largest_component(const Graph& g) { return largest_component(g, NodeMask{}); }

inline std::size_t largest_component(const Graph& g, std::span<const NodeId> excluded_ids) {
    NodeMask mask(g.node_count(), 0);
    for (NodeId u : excluded_ids) {
        assert(u < g.node_count());
        mask[u] = 1;
    }
    return largest_component(g, mask);
}

}  // namespace topolab
