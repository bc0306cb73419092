// stress_solver.hpp — embeds a distance matrix into R^d by stress
// majorization (iterated Guttman transform).
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "roleembed/role_distance.hpp"

namespace roleembed {

/// n x d coordinate matrix, row i = position of node i.
struct EmbeddingMatrix {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<double> coords; // row-major

    EmbeddingMatrix() = default;
    EmbeddingMatrix(std::size_t n_, std::size_t d_)
        : n(n_), d(d_), coords(n_ * d_, 0.0) {}

    double at(std::size_t i, std::size_t k) const { return coords[i * d + k]; }
    double& at(std::size_t i, std::size_t k) { return coords[i * d + k]; }

    /// Euclidean distance between rows i and j.
    double row_distance(std::size_t i, std::size_t j) const;
};

/// Square matrix used for the weighted Laplacian.
struct SquareMatrix {
    std::size_t n = 0;
    std::vector<double> data; // row-major

    explicit SquareMatrix(std::size_t n_ = 0) : n(n_), data(n_ * n_, 0.0) {}
    double at(std::size_t i, std::size_t j) const { return data[i * n + j]; }
    double& at(std::size_t i, std::size_t j) { return data[i * n + j]; }
};

struct SolverConfig {
    std::size_t d = 2;
    double epsilon = 1e-3;       // relative stress-change tolerance
    std::size_t max_iters = 1000;
    std::uint64_t seed = 0;
    double init_scale = 1.0;

    void validate() const; // throws on epsilon <= 0, d < 1 or max_iters < 1
};

struct SolverTrace {
    std::vector<double> stresses; // stress(X(0)), stress(X(1)), ...
    std::size_t iterations = 0;
    bool converged = false;
};

/// Sum over i<j of (||X_i - X_j|| - D_ij)^2. Throws on size mismatch.
double stress(const EmbeddingMatrix& X, const DistanceMatrix& D);

/// L^Y: off-diagonal -D_ij / ||Y_i - Y_j|| (0 when the rows coincide),
/// diagonal = negated off-diagonal row sum. Symmetric with zero row sums.
SquareMatrix weighted_laplacian(const EmbeddingMatrix& Y, const DistanceMatrix& D);

/// Majorizing surrogate: sum_{i<j} D_ij^2 + tr(X^T L X) - 2 tr(X^T L^Y Y)
/// with L the complete-graph Laplacian. >= stress(X, D), equal at X == Y.
double surrogate(const EmbeddingMatrix& X, const EmbeddingMatrix& Y,
                 const DistanceMatrix& D);

/// One Guttman-transform step: X(t+1) = (1/n) L^{X(t)} X(t), re-centered to
/// zero column means. Never increases the stress.
EmbeddingMatrix majorize_step(const EmbeddingMatrix& X, const DistanceMatrix& D);

/// Seeded uniform initialization on [-init_scale, init_scale]^d with
/// exactly-coincident rows re-jittered. Deterministic given the seed.
EmbeddingMatrix initial_embedding(std::size_t n, const SolverConfig& cfg);

/// Iterates majorize_step until the relative stress change drops below
/// cfg.epsilon (or stress reaches zero, or max_iters). Deterministic given
/// the seed. For d == 1 a second chain started from classical-MDS
/// coordinates is raced against the seeded one and the lower-stress result
/// returned, since one-dimensional majorization cannot reorder points out
/// of a bad random start.
std::pair<EmbeddingMatrix, SolverTrace> embed(const DistanceMatrix& D,
                                              const SolverConfig& cfg);

} // namespace roleembed
