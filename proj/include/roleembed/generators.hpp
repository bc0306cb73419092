// generators.hpp — synthetic graphs with ground-truth role labels.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roleembed/graph.hpp"
#include "roleembed/labels.hpp"

namespace roleembed {

/// Two cliques K_clique_size joined by a path of bridge_length intermediate
/// nodes; one connector per clique attaches to the bridge endpoints.
/// Layout: clique A = [0, c), connector c-1; bridge = [c, c+b); clique B =
/// [c+b, 2c+b), connector c+b. Throws if clique_size < 2 or bridge_length < 1.
Graph gen_barbell(std::size_t clique_size, std::size_t bridge_length);

/// Role classes of gen_barbell by graph automorphism: clique non-connectors,
/// connectors, one class per symmetric bridge-position pair, and the bridge
/// midpoint when bridge_length is odd.
LabeledDataset barbell_roles(std::size_t clique_size, std::size_t bridge_length);

enum class ShapeKind { House, Fan, Star };

struct ShapeSpec {
    ShapeKind kind = ShapeKind::House;
    std::size_t count = 0;
    std::size_t size = 4; // blades for Fan, leaves for Star; House is fixed at 5 nodes
};

struct ShapesGraphConfig {
    std::size_t cycle_len = 30;
    std::vector<ShapeSpec> shapes = {{ShapeKind::House, 10, 4}};
    std::size_t perturb_edges = 0;
    std::uint64_t seed = 0;
};

struct ShapesGraph {
    Graph graph;
    LabeledDataset roles;
};

/// A base cycle with shapes attached at evenly spaced cycle nodes (one
/// anchor node per shape joins one cycle node; types interleave round-robin
/// so equal counts keep same-type shapes rotation-equivalent), plus
/// perturb_edges uniformly random extra edges drawn with the given seed.
/// Node labels are structural positions: plain cycle nodes, attachment
/// nodes per attached shape type, and per-shape-type positions (e.g. house
/// roof/middle/bottom, star hub/leaf). Throws if there are more shapes than
/// cycle nodes or cycle_len < 3.
ShapesGraph gen_cycle_with_shapes(const ShapesGraphConfig& cfg);

} // namespace roleembed
