#include "roleembed/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "rng_util.hpp"

namespace roleembed {

Graph gen_barbell(std::size_t clique_size, std::size_t bridge_length) {
    if (clique_size < 2) throw std::invalid_argument("barbell clique size must be >= 2");
    if (bridge_length < 1) throw std::invalid_argument("barbell bridge length must be >= 1");

    const std::size_t c = clique_size, b = bridge_length;
    const std::size_t n = 2 * c + b;
    std::vector<std::pair<NodeId, NodeId>> edges;

    // clique A on [0, c), clique B on [c+b, n)
    for (std::size_t base : {std::size_t{0}, c + b})
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t j = i + 1; j < c; ++j)
                edges.emplace_back(static_cast<NodeId>(base + i),
                                   static_cast<NodeId>(base + j));

    // bridge path [c, c+b) hanging between the connectors c-1 and c+b
    edges.emplace_back(static_cast<NodeId>(c - 1), static_cast<NodeId>(c));
    for (std::size_t i = 0; i + 1 < b; ++i)
        edges.emplace_back(static_cast<NodeId>(c + i), static_cast<NodeId>(c + i + 1));
    edges.emplace_back(static_cast<NodeId>(c + b - 1), static_cast<NodeId>(c + b));

    return Graph::from_edges(n, edges);
}

LabeledDataset barbell_roles(std::size_t clique_size, std::size_t bridge_length) {
    const std::size_t c = clique_size, b = bridge_length;
    const std::size_t n = 2 * c + b;

    LabeledDataset ds;
    ds.class_names.push_back("clique");
    ds.class_names.push_back("connector");
    const std::size_t bridge_classes = (b + 1) / 2;
    for (std::size_t p = 1; p <= bridge_classes; ++p)
        ds.class_names.push_back("bridge_" + std::to_string(p));

    ds.labels.assign(n, 0);
    ds.labels[c - 1] = 1;
    ds.labels[c + b] = 1;
    for (std::size_t i = 0; i < b; ++i) {
        // symmetric distance to the nearest connector
        std::size_t pos = std::min(i + 1, b - i);
        ds.labels[c + i] = static_cast<int>(1 + pos);
    }
    return ds;
}

namespace {

struct RoleTable {
    std::vector<std::string> names;

    int id_for(const std::string& name) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        names.push_back(name);
        return static_cast<int>(names.size() - 1);
    }
};

std::string shape_tag(const ShapeSpec& spec) {
    switch (spec.kind) {
    case ShapeKind::House: return "house";
    case ShapeKind::Fan: return "fan" + std::to_string(spec.size);
    case ShapeKind::Star: return "star" + std::to_string(spec.size);
    }
    throw std::logic_error("unknown shape kind");
}

// Appends one shape's nodes/edges and returns the id of its anchor node
// (the node that joins the cycle).
NodeId append_shape(const ShapeSpec& spec, std::vector<std::pair<NodeId, NodeId>>& edges,
                    std::vector<int>& labels, RoleTable& roles) {
    auto add_node = [&](const std::string& role) {
        labels.push_back(roles.id_for(role));
        return static_cast<NodeId>(labels.size() - 1);
    };

    switch (spec.kind) {
    case ShapeKind::House: {
        // square b0-b1-m1-m0 with roof edges m0-t, m1-t; the roof is the anchor,
        // which keeps the bottom/middle pairs mirror-equivalent
        NodeId b0 = add_node("house_bottom");
        NodeId b1 = add_node("house_bottom");
        NodeId m0 = add_node("house_mid");
        NodeId m1 = add_node("house_mid");
        NodeId t = add_node("house_roof");
        edges.insert(edges.end(), {{b0, b1}, {b0, m0}, {b1, m1}, {m0, m1}, {m0, t}, {m1, t}});
        return t;
    }
    case ShapeKind::Fan: {
        const std::size_t k = spec.size;
        if (k < 1) throw std::invalid_argument("fan size must be >= 1");
        const std::string prefix = "fan" + std::to_string(k);
        NodeId hub = add_node(prefix + "_hub");
        std::vector<NodeId> blades;
        for (std::size_t i = 1; i <= k; ++i) {
            std::size_t pos = std::min(i, k + 1 - i); // blade path is mirror symmetric
            blades.push_back(add_node(prefix + "_blade_" + std::to_string(pos)));
        }
        for (NodeId blade : blades) edges.emplace_back(hub, blade);
        for (std::size_t i = 0; i + 1 < k; ++i) edges.emplace_back(blades[i], blades[i + 1]);
        return hub;
    }
    case ShapeKind::Star: {
        const std::size_t k = spec.size;
        if (k < 1) throw std::invalid_argument("star size must be >= 1");
        const std::string prefix = "star" + std::to_string(k);
        NodeId hub = add_node(prefix + "_hub");
        for (std::size_t i = 0; i < k; ++i) edges.emplace_back(hub, add_node(prefix + "_leaf"));
        return hub;
    }
    }
    throw std::logic_error("unknown shape kind");
}

} // namespace

ShapesGraph gen_cycle_with_shapes(const ShapesGraphConfig& cfg) {
    if (cfg.cycle_len < 3) throw std::invalid_argument("cycle length must be >= 3");
    std::size_t shape_total = 0;
    for (const auto& spec : cfg.shapes) shape_total += spec.count;
    if (shape_total > cfg.cycle_len)
        throw std::invalid_argument("more shapes than cycle attachment slots");

    RoleTable roles;
    std::vector<int> labels;
    std::vector<std::pair<NodeId, NodeId>> edges;

    const int cycle_role = roles.id_for("cycle");
    labels.assign(cfg.cycle_len, cycle_role);
    for (std::size_t i = 0; i < cfg.cycle_len; ++i)
        edges.emplace_back(static_cast<NodeId>(i),
                           static_cast<NodeId>((i + 1) % cfg.cycle_len));

    // attach shapes at evenly spaced cycle nodes, interleaving the types
    // round-robin so equal counts keep same-type shapes rotation-equivalent;
    // the attachment node's role depends on what hangs off it
    std::vector<std::size_t> remaining(cfg.shapes.size());
    for (std::size_t s = 0; s < cfg.shapes.size(); ++s) remaining[s] = cfg.shapes[s].count;
    std::size_t placed = 0, turn = 0;
    while (placed < shape_total) {
        if (remaining[turn % cfg.shapes.size()] == 0) {
            ++turn;
            continue;
        }
        const ShapeSpec& spec = cfg.shapes[turn % cfg.shapes.size()];
        --remaining[turn % cfg.shapes.size()];
        ++turn;

        const NodeId slot = static_cast<NodeId>(placed * cfg.cycle_len / shape_total);
        ++placed;
        labels[slot] = roles.id_for("anchor_" + shape_tag(spec));
        const NodeId anchor = append_shape(spec, edges, labels, roles);
        edges.emplace_back(slot, anchor);
    }

    // seeded uniform perturbation edges on top of the structure
    const std::size_t n = labels.size();
    std::set<std::pair<NodeId, NodeId>> existing;
    for (auto [u, v] : edges) existing.insert(std::minmax(u, v));
    std::mt19937_64 rng(cfg.seed);
    std::size_t added = 0, attempts = 0;
    const std::size_t attempt_cap = 100 * (cfg.perturb_edges + 1);
    while (added < cfg.perturb_edges) {
        if (++attempts > attempt_cap)
            throw std::runtime_error("could not place perturbation edges (graph too dense)");
        NodeId u = static_cast<NodeId>(detail::bounded(rng, n));
        NodeId v = static_cast<NodeId>(detail::bounded(rng, n));
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (!existing.insert(key).second) continue;
        edges.emplace_back(key.first, key.second);
        ++added;
    }

    ShapesGraph out;
    out.graph = Graph::from_edges(n, edges);
    out.roles.labels = std::move(labels);
    out.roles.class_names = std::move(roles.names);
    return out;
}

} // namespace roleembed
