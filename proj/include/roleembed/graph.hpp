// graph.hpp — undirected simple graph with dense node ids, BFS ring
// extraction, degree sequences, and diameter.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace roleembed {

using NodeId = std::uint32_t;

/// Undirected, unweighted simple graph. Node ids are dense (0..n-1),
/// adjacency lists are sorted ascending, symmetric, without self-loops
/// or duplicate edges. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list over ids < node_count.
    /// Self-loops and duplicate edges are dropped; the counts of dropped
    /// items are queryable afterwards.
    static Graph from_edges(std::size_t node_count,
                            const std::vector<std::pair<NodeId, NodeId>>& edges);

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<NodeId>& neighbors(NodeId u) const;
    std::size_t degree(NodeId u) const;
    std::size_t max_degree() const;

    std::size_t self_loops_dropped() const { return self_loops_dropped_; }
    std::size_t duplicate_edges_dropped() const { return duplicates_dropped_; }

    /// All edges as (u, v) with u < v, sorted. Mostly for serialization.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
    std::size_t self_loops_dropped_ = 0;
    std::size_t duplicates_dropped_ = 0;
};

/// BFS layering of the component around `source`: rings[k] holds the nodes
/// at exactly k hops, rings[0] = {source}. Rings are sorted ascending.
struct HopRings {
    NodeId source = 0;
    std::vector<std::vector<NodeId>> rings;
};

/// A graph loaded from text, together with the original node tokens
/// (index = dense id) and counts of dropped malformed edges.
struct LoadedGraph {
    Graph graph;
    std::vector<std::string> node_names;
};

/// Parses an edge-list stream: one edge per line, two whitespace-separated
/// node tokens, '#' starts a comment. Node tokens are remapped to dense ids
/// in first-appearance order. Throws on malformed lines (with line number)
/// and on an empty graph.
LoadedGraph load_edge_list(std::istream& in);

/// Writes the edge list using the given node names, one "u v" pair per line.
void save_edge_list(const Graph& g, const std::vector<std::string>& node_names,
                    std::ostream& out);

/// BFS layering truncated at k_max; rings.size() == k_max + 1 with empty
/// rings past the component's eccentricity. Throws if u is out of range.
HopRings khop_rings(const Graph& g, NodeId u, std::size_t k_max);

/// Degrees of the ring members, sorted ascending. Empty ring -> empty.
std::vector<int> ordered_degree_sequence(const Graph& g,
                                         const std::vector<NodeId>& ring);

/// Maximum eccentricity; for disconnected graphs, the max over components.
/// Throws on an empty graph.
std::size_t diameter(const Graph& g);

} // namespace roleembed
