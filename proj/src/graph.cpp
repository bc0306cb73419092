#include "roleembed/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace roleembed {

Graph Graph::from_edges(std::size_t node_count,
                        const std::vector<std::pair<NodeId, NodeId>>& edges) {
    Graph g;
    g.adjacency_.assign(node_count, {});
    for (auto [u, v] : edges) {
        if (u >= node_count || v >= node_count)
            throw std::out_of_range("edge endpoint exceeds node count");
        if (u == v) {
            ++g.self_loops_dropped_;
            continue;
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        auto last = std::unique(nbrs.begin(), nbrs.end());
        g.duplicates_dropped_ += static_cast<std::size_t>(nbrs.end() - last);
        nbrs.erase(last, nbrs.end());
        g.edge_count_ += nbrs.size();
    }
    g.duplicates_dropped_ /= 2; // each duplicate edge was counted from both ends
    g.edge_count_ /= 2;
    return g;
}

const std::vector<NodeId>& Graph::neighbors(NodeId u) const {
    if (u >= adjacency_.size()) throw std::out_of_range("node id out of range");
    return adjacency_[u];
}

std::size_t Graph::degree(NodeId u) const { return neighbors(u).size(); }

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
    return best;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u)
        for (NodeId v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

LoadedGraph load_edge_list(std::istream& in) {
    std::vector<std::string> names;
    std::unordered_map<std::string, NodeId> ids;
    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.emplace(token, static_cast<NodeId>(names.size()));
        if (inserted) names.push_back(token);
        return it->second;
    };

    std::vector<std::pair<NodeId, NodeId>> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue; // blank or comment-only line
        if (!(fields >> b) || (fields >> extra))
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": expected exactly two node tokens");
        const NodeId ua = intern(a); // sequenced: first appearance wins the lower id
        const NodeId ub = intern(b);
        edges.emplace_back(ua, ub);
    }
    if (names.empty()) throw std::runtime_error("edge list is empty");

    LoadedGraph out;
    out.graph = Graph::from_edges(names.size(), edges);
    out.node_names = std::move(names);
    return out;
}

void save_edge_list(const Graph& g, const std::vector<std::string>& node_names,
                    std::ostream& out) {
    if (node_names.size() != g.node_count())
        throw std::invalid_argument("node name table does not match graph size");
    for (auto [u, v] : g.edges())
        out << node_names[u] << ' ' << node_names[v] << '\n';
}

HopRings khop_rings(const Graph& g, NodeId u, std::size_t k_max) {
    if (u >= g.node_count()) throw std::out_of_range("source node out of range");

    HopRings result;
    result.source = u;
    result.rings.assign(k_max + 1, {});
    result.rings[0] = {u};

    std::vector<std::size_t> dist(g.node_count(), SIZE_MAX);
    dist[u] = 0;
    std::queue<NodeId> frontier;
    frontier.push(u);
    while (!frontier.empty()) {
        NodeId x = frontier.front();
        frontier.pop();
        if (dist[x] == k_max) continue;
        for (NodeId y : g.neighbors(x)) {
            if (dist[y] != SIZE_MAX) continue;
            dist[y] = dist[x] + 1;
            result.rings[dist[y]].push_back(y);
            frontier.push(y);
        }
    }
    for (auto& ring : result.rings) std::sort(ring.begin(), ring.end());
    return result;
}

std::vector<int> ordered_degree_sequence(const Graph& g,
                                         const std::vector<NodeId>& ring) {
    std::vector<int> degrees;
    degrees.reserve(ring.size());
    for (NodeId v : ring) degrees.push_back(static_cast<int>(g.degree(v)));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

std::size_t diameter(const Graph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("diameter of empty graph");

    std::size_t best = 0;
    std::vector<std::size_t> dist(g.node_count());
    std::vector<NodeId> frontier;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        std::fill(dist.begin(), dist.end(), SIZE_MAX);
        dist[s] = 0;
        frontier.assign(1, s);
        std::size_t level = 0;
        while (!frontier.empty()) {
            std::vector<NodeId> next;
            ++level;
            for (NodeId x : frontier)
                for (NodeId y : g.neighbors(x))
                    if (dist[y] == SIZE_MAX) {
                        dist[y] = level;
                        next.push_back(y);
                    }
            if (!next.empty()) best = std::max(best, level);
            frontier = std::move(next);
        }
    }
    return best;
}

} // namespace roleembed
