#include "roleembed/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "rng_util.hpp"

namespace roleembed {

std::vector<int> agglomerative_single_linkage(const EmbeddingMatrix& X,
                                              std::size_t cluster_count) {
    const std::size_t n = X.n;
    if (cluster_count < 1 || cluster_count > n)
        throw std::invalid_argument("cluster count must be in [1, n]");

    // current single-linkage distances between active clusters
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = X.row_distance(i, j);
            dist[i][j] = d;
            dist[j][i] = d;
        }

    std::vector<bool> active(n, true);
    std::vector<int> anchor(n);            // smallest member id, for tie breaks
    std::vector<std::vector<int>> members(n);
    for (std::size_t i = 0; i < n; ++i) {
        anchor[i] = static_cast<int>(i);
        members[i] = {static_cast<int>(i)};
    }

    for (std::size_t merges = 0; merges < n - cluster_count; ++merges) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_a = 0, best_b = 0;
        int best_lo = 0, best_hi = 0;
        bool found = false;
        for (std::size_t a = 0; a < n; ++a) {
            if (!active[a]) continue;
            for (std::size_t b = a + 1; b < n; ++b) {
                if (!active[b]) continue;
                const int lo = std::min(anchor[a], anchor[b]);
                const int hi = std::max(anchor[a], anchor[b]);
                if (found && dist[a][b] > best) continue;
                if (found && dist[a][b] == best &&
                    (lo > best_lo || (lo == best_lo && hi >= best_hi)))
                    continue;
                best = dist[a][b];
                best_a = a;
                best_b = b;
                best_lo = lo;
                best_hi = hi;
                found = true;
            }
        }

        // merge best_b into best_a; single linkage keeps the minimum
        active[best_b] = false;
        anchor[best_a] = best_lo;
        members[best_a].insert(members[best_a].end(), members[best_b].begin(),
                               members[best_b].end());
        for (std::size_t c = 0; c < n; ++c) {
            if (!active[c] || c == best_a) continue;
            const double d = std::min(dist[best_a][c], dist[best_b][c]);
            dist[best_a][c] = d;
            dist[c][best_a] = d;
        }
    }

    // dense output ids ordered by each cluster's smallest member
    std::vector<std::pair<int, std::size_t>> remaining;
    for (std::size_t c = 0; c < n; ++c)
        if (active[c]) remaining.emplace_back(anchor[c], c);
    std::sort(remaining.begin(), remaining.end());

    std::vector<int> labels(n, -1);
    int next_id = 0;
    for (auto [_, c] : remaining) {
        for (int node : members[c]) labels[static_cast<std::size_t>(node)] = next_id;
        ++next_id;
    }
    return labels;
}

namespace {

double entropy(const std::map<int, std::size_t>& counts, std::size_t total) {
    double h = 0.0;
    for (const auto& [_, c] : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log(p);
    }
    return h;
}

} // namespace

std::pair<double, double> homogeneity_completeness(const std::vector<int>& pred,
                                                   const std::vector<int>& truth) {
    if (pred.size() != truth.size())
        throw std::invalid_argument("prediction and truth must cover the same nodes");
    const std::size_t n = pred.size();
    if (n == 0) throw std::invalid_argument("empty label vectors");

    std::map<int, std::size_t> class_counts, cluster_counts;
    std::map<std::pair<int, int>, std::size_t> joint; // (class, cluster)
    for (std::size_t i = 0; i < n; ++i) {
        ++class_counts[truth[i]];
        ++cluster_counts[pred[i]];
        ++joint[{truth[i], pred[i]}];
    }

    const double h_class = entropy(class_counts, n);
    const double h_cluster = entropy(cluster_counts, n);

    double h_class_given_cluster = 0.0; // H(C|K)
    double h_cluster_given_class = 0.0; // H(K|C)
    for (const auto& [key, c] : joint) {
        const double p_joint = static_cast<double>(c) / static_cast<double>(n);
        h_class_given_cluster -=
            p_joint * std::log(static_cast<double>(c) /
                               static_cast<double>(cluster_counts[key.second]));
        h_cluster_given_class -=
            p_joint * std::log(static_cast<double>(c) /
                               static_cast<double>(class_counts[key.first]));
    }

    const double homogeneity =
        h_class > 0.0 ? 1.0 - h_class_given_cluster / h_class : 1.0;
    const double completeness =
        h_cluster > 0.0 ? 1.0 - h_cluster_given_class / h_cluster : 1.0;
    return {std::clamp(homogeneity, 0.0, 1.0), std::clamp(completeness, 0.0, 1.0)};
}

double silhouette(const EmbeddingMatrix& X, const std::vector<int>& pred) {
    if (pred.size() != X.n)
        throw std::invalid_argument("cluster ids must cover all embedded nodes");
    std::set<int> ids(pred.begin(), pred.end());
    if (ids.size() < 2)
        throw std::invalid_argument("silhouette needs at least two clusters");

    std::map<int, std::size_t> sizes;
    for (int c : pred) ++sizes[c];

    double total = 0.0;
    for (std::size_t i = 0; i < X.n; ++i) {
        if (sizes[pred[i]] == 1) continue; // singleton contributes 0

        std::map<int, double> sum_dist;
        for (std::size_t j = 0; j < X.n; ++j) {
            if (j == i) continue;
            sum_dist[pred[j]] += X.row_distance(i, j);
        }
        const double a =
            sum_dist[pred[i]] / static_cast<double>(sizes[pred[i]] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (const auto& [c, s] : sum_dist) {
            if (c == pred[i]) continue;
            b = std::min(b, s / static_cast<double>(sizes[c]));
        }
        const double denom = std::max(a, b);
        total += denom > 0.0 ? (b - a) / denom : 0.0;
    }
    return total / static_cast<double>(X.n);
}

double micro_f1(const std::vector<int>& pred, const std::vector<int>& truth) {
    if (pred.size() != truth.size())
        throw std::invalid_argument("prediction and truth lengths differ");
    if (pred.empty()) throw std::invalid_argument("empty prediction");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < pred.size(); ++i)
        if (pred[i] == truth[i]) ++correct;
    // single-label multi-class: aggregated F1 reduces to accuracy
    return static_cast<double>(correct) / static_cast<double>(pred.size());
}

namespace {

struct LinearModel {
    std::vector<double> w;
    double b = 0.0;
};

// One-vs-rest hinge-loss training: deterministic full-batch subgradient
// descent, lr 0.1/sqrt(t), L2 regularization 1e-2, 2000 iterations.
LinearModel train_binary(const std::vector<std::vector<double>>& features,
                         const std::vector<double>& targets) {
    constexpr double kLambda = 1e-2;
    constexpr std::size_t kIters = 2000;
    const std::size_t m = features.size();
    const std::size_t dim = features.empty() ? 0 : features[0].size();

    LinearModel model;
    model.w.assign(dim, 0.0);
    std::vector<double> grad(dim);
    for (std::size_t t = 1; t <= kIters; ++t) {
        std::fill(grad.begin(), grad.end(), 0.0);
        double grad_b = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double score = model.b;
            for (std::size_t k = 0; k < dim; ++k) score += model.w[k] * features[i][k];
            if (targets[i] * score < 1.0) {
                for (std::size_t k = 0; k < dim; ++k)
                    grad[k] -= targets[i] * features[i][k];
                grad_b -= targets[i];
            }
        }
        const double inv_m = 1.0 / static_cast<double>(m);
        const double lr = 0.1 / std::sqrt(static_cast<double>(t));
        for (std::size_t k = 0; k < dim; ++k)
            model.w[k] -= lr * (kLambda * model.w[k] + grad[k] * inv_m);
        model.b -= lr * grad_b * inv_m;
    }
    return model;
}

} // namespace

KFoldResult classify_kfold(const EmbeddingMatrix& X, const LabeledDataset& truth,
                           std::size_t folds, std::uint64_t seed) {
    const std::size_t n = X.n;
    if (truth.labels.size() != n)
        throw std::invalid_argument("labels must cover all embedded nodes");
    if (folds < 2) throw std::invalid_argument("need at least 2 folds");
    const std::size_t classes = truth.class_count();
    if (classes < 2) throw std::invalid_argument("need at least 2 classes");

    // stratified seeded split, falling back to a plain shuffle when some
    // class is smaller than the fold count
    std::vector<std::size_t> class_size(classes, 0);
    for (int label : truth.labels) ++class_size[static_cast<std::size_t>(label)];
    const bool stratified =
        std::all_of(class_size.begin(), class_size.end(),
                    [&](std::size_t s) { return s >= folds; });

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> fold_of(n, 0);
    if (stratified) {
        for (std::size_t c = 0; c < classes; ++c) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < n; ++i)
                if (truth.labels[i] == static_cast<int>(c)) members.push_back(i);
            detail::shuffle(members, rng);
            for (std::size_t j = 0; j < members.size(); ++j)
                fold_of[members[j]] = j % folds;
        }
    } else {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        detail::shuffle(order, rng);
        for (std::size_t j = 0; j < n; ++j) fold_of[order[j]] = j % folds;
    }

    KFoldResult result;
    result.stratified = stratified;
    std::vector<int> predictions(n, -1);
    for (std::size_t f = 0; f < folds; ++f) {
        std::vector<std::size_t> train_idx, test_idx;
        for (std::size_t i = 0; i < n; ++i)
            (fold_of[i] == f ? test_idx : train_idx).push_back(i);
        if (train_idx.empty() || test_idx.empty())
            throw std::invalid_argument("fold count too large for dataset");

        // standardize on the training fold
        std::vector<double> mean(X.d, 0.0), scale(X.d, 0.0);
        for (std::size_t i : train_idx)
            for (std::size_t k = 0; k < X.d; ++k) mean[k] += X.at(i, k);
        for (std::size_t k = 0; k < X.d; ++k)
            mean[k] /= static_cast<double>(train_idx.size());
        for (std::size_t i : train_idx)
            for (std::size_t k = 0; k < X.d; ++k) {
                const double diff = X.at(i, k) - mean[k];
                scale[k] += diff * diff;
            }
        for (std::size_t k = 0; k < X.d; ++k) {
            scale[k] = std::sqrt(scale[k] / static_cast<double>(train_idx.size()));
            if (scale[k] < 1e-12) scale[k] = 1.0;
        }
        auto standardized = [&](std::size_t i) {
            std::vector<double> row(X.d);
            for (std::size_t k = 0; k < X.d; ++k)
                row[k] = (X.at(i, k) - mean[k]) / scale[k];
            return row;
        };

        std::vector<std::vector<double>> train_features;
        train_features.reserve(train_idx.size());
        for (std::size_t i : train_idx) train_features.push_back(standardized(i));

        std::vector<LinearModel> models(classes);
        std::vector<double> targets(train_idx.size());
        for (std::size_t c = 0; c < classes; ++c) {
            for (std::size_t r = 0; r < train_idx.size(); ++r)
                targets[r] =
                    truth.labels[train_idx[r]] == static_cast<int>(c) ? 1.0 : -1.0;
            models[c] = train_binary(train_features, targets);
        }

        std::size_t fold_correct = 0;
        for (std::size_t i : test_idx) {
            const std::vector<double> row = standardized(i);
            double best_score = -std::numeric_limits<double>::infinity();
            int best_class = 0;
            for (std::size_t c = 0; c < classes; ++c) {
                double score = models[c].b;
                for (std::size_t k = 0; k < X.d; ++k) score += models[c].w[k] * row[k];
                if (score > best_score) {
                    best_score = score;
                    best_class = static_cast<int>(c);
                }
            }
            predictions[i] = best_class;
            if (best_class == truth.labels[i]) ++fold_correct;
        }
        result.per_fold.push_back(static_cast<double>(fold_correct) /
                                  static_cast<double>(test_idx.size()));
    }

    result.mean_micro_f1 = micro_f1(predictions, truth.labels);
    return result;
}

ClusteringReport evaluate_clustering(const EmbeddingMatrix& X,
                                     const LabeledDataset& truth,
                                     std::size_t cluster_count) {
    if (truth.labels.size() != X.n)
        throw std::invalid_argument("labels must cover all embedded nodes");
    ClusteringReport report;
    report.predicted = agglomerative_single_linkage(X, cluster_count);
    auto [h, c] = homogeneity_completeness(report.predicted, truth.labels);
    report.homogeneity = h;
    report.completeness = c;
    report.silhouette = silhouette(X, report.predicted);
    return report;
}

} // namespace roleembed
