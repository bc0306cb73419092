// role_distance.hpp — pairwise structural-role distances from per-hop
// ordered degree sequences compared with FastDTW.
#pragma once

#include <cstddef>
#include <vector>

#include "roleembed/graph.hpp"

namespace roleembed {

/// Symmetric nonnegative distance matrix with zero diagonal. The triangle
/// inequality is not guaranteed.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    /// Sets D[i][j] and D[j][i] to the same value.
    void set(std::size_t i, std::size_t j, double value) {
        entries_[i * n_ + j] = value;
        entries_[j * n_ + i] = value;
    }

    double max_entry() const;

    /// Throws unless symmetric, nonnegative and zero on the diagonal.
    void validate() const;

private:
    std::size_t n_ = 0;
    std::vector<double> entries_;
};

struct DistanceConfig {
    std::size_t k = 0;                 // hop depth; defaults_for uses the diameter
    std::vector<double> weights;       // per-hop weights w_0..w_k
    std::size_t fastdtw_radius = 1;

    /// k = diameter(g), all weights 1.
    static DistanceConfig defaults_for(const Graph& g);

    /// Throws unless weights.size() == k+1, all weights >= 0 and one > 0.
    void validate() const;
};

/// Relative-degree cost max(a,b)/min(a,b) - 1. Throws if a or b is zero.
double pair_cost(double a, double b);

/// Classic O(|s1|*|s2|) dynamic-programming DTW under pair_cost, boundary
/// aligned. Throws on empty input.
double exact_dtw(const std::vector<int>& s1, const std::vector<int>& s2);

/// FastDTW: recursive coarsening plus refinement within the given radius.
/// Equals exact_dtw whenever radius >= max(|s1|, |s2|). Throws on empty input.
double fast_dtw(const std::vector<int>& s1, const std::vector<int>& s2,
                std::size_t radius);

/// Sum over hops i=0..k of w_i * FastDTW(L_i(u), L_i(v)). Hops where both
/// rings are empty contribute 0; hops where exactly one ring is empty
/// contribute w_i * (pair_cost(1, max_degree) + 1). Throws if u or v is
/// isolated (degree 0 is outside the cost function's domain).
double structural_distance(const Graph& g, NodeId u, NodeId v,
                           const DistanceConfig& cfg);

/// Full pairwise matrix; entries are computed independently so the result
/// is identical for any thread count. threads == 0 picks the hardware
/// concurrency. Throws if the graph has < 2 nodes or any isolated node.
DistanceMatrix distance_matrix(const Graph& g, const DistanceConfig& cfg,
                               std::size_t threads = 0);

} // namespace roleembed
