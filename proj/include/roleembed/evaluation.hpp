// evaluation.hpp — clustering and classification protocols used to score
// embeddings: single-linkage agglomerative clustering with homogeneity /
// completeness / silhouette, and seeded k-fold linear classification.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "roleembed/labels.hpp"
#include "roleembed/stress_solver.hpp"

namespace roleembed {

struct ClusteringReport {
    double homogeneity = 0.0;
    double completeness = 0.0;
    double silhouette = 0.0;
    std::vector<int> predicted;
};

/// Bottom-up merging by minimum single-linkage Euclidean distance until
/// cluster_count clusters remain. Ties break on the smallest pair of
/// cluster anchor ids (the minimum member id of each cluster). Output ids
/// are dense, ordered by each cluster's minimum member id.
std::vector<int> agglomerative_single_linkage(const EmbeddingMatrix& X,
                                              std::size_t cluster_count);

/// Entropy-based homogeneity (each cluster holds one class) and
/// completeness (each class sits in one cluster); a zero-entropy
/// denominator yields 1.0 by convention.
std::pair<double, double> homogeneity_completeness(const std::vector<int>& pred,
                                                   const std::vector<int>& truth);

/// Mean over points of (b - a) / max(a, b); singletons contribute 0.
/// Throws unless there are at least two clusters.
double silhouette(const EmbeddingMatrix& X, const std::vector<int>& pred);

/// Micro-averaged F1; for single-label multi-class this equals accuracy.
double micro_f1(const std::vector<int>& pred, const std::vector<int>& truth);

struct KFoldResult {
    double mean_micro_f1 = 0.0;
    std::vector<double> per_fold;
    bool stratified = true; // false when a class was smaller than the fold count
};

/// Stratified seeded k-fold cross-validation of a one-vs-rest linear
/// classifier (L2-regularized hinge loss, deterministic full-batch
/// subgradient descent, features standardized per training fold). Reports
/// micro-F1 over the concatenated held-out predictions. Classes smaller
/// than the fold count trigger an unstratified seeded split.
KFoldResult classify_kfold(const EmbeddingMatrix& X, const LabeledDataset& truth,
                           std::size_t folds, std::uint64_t seed);

/// Clusters X at cluster_count and scores it against the ground truth.
ClusteringReport evaluate_clustering(const EmbeddingMatrix& X,
                                     const LabeledDataset& truth,
                                     std::size_t cluster_count);

} // namespace roleembed
