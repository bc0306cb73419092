#include "roleembed/stress_solver.hpp"

#include <cmath>
#include <cstring>
#include <random>
#include <stdexcept>

#include "rng_util.hpp"

namespace roleembed {

double EmbeddingMatrix::row_distance(std::size_t i, std::size_t j) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        const double diff = at(i, k) - at(j, k);
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

void SolverConfig::validate() const {
    if (d < 1) throw std::invalid_argument("embedding dimension must be >= 1");
    if (!(epsilon > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (!(init_scale > 0.0)) throw std::invalid_argument("init_scale must be positive");
}

double stress(const EmbeddingMatrix& X, const DistanceMatrix& D) {
    if (X.n != D.size())
        throw std::invalid_argument("embedding and distance matrix sizes differ");
    double total = 0.0;
    for (std::size_t i = 0; i < X.n; ++i)
        for (std::size_t j = i + 1; j < X.n; ++j) {
            const double diff = X.row_distance(i, j) - D.at(i, j);
            total += diff * diff;
        }
    return total;
}

SquareMatrix weighted_laplacian(const EmbeddingMatrix& Y, const DistanceMatrix& D) {
    if (Y.n != D.size())
        throw std::invalid_argument("embedding and distance matrix sizes differ");
    const std::size_t n = Y.n;
    SquareMatrix L(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dist = Y.row_distance(i, j);
            const double off = dist > 0.0 ? -D.at(i, j) / dist : 0.0;
            L.at(i, j) = off;
            L.at(j, i) = off;
        }
    for (std::size_t i = 0; i < n; ++i) {
        double off_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) off_sum += L.at(i, j);
        L.at(i, i) = -off_sum;
    }
    return L;
}

double surrogate(const EmbeddingMatrix& X, const EmbeddingMatrix& Y,
                 const DistanceMatrix& D) {
    if (X.n != Y.n || X.d != Y.d || X.n != D.size())
        throw std::invalid_argument("surrogate operands have mismatched shapes");
    const std::size_t n = X.n;

    double sum_d2 = 0.0;
    double quad = 0.0; // tr(X^T L X) with L the complete-graph Laplacian
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            sum_d2 += D.at(i, j) * D.at(i, j);
            const double dist = X.row_distance(i, j);
            quad += dist * dist;
        }

    const SquareMatrix LY = weighted_laplacian(Y, D);
    double cross = 0.0; // tr(X^T L^Y Y)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < X.d; ++k) {
            double m = 0.0;
            for (std::size_t j = 0; j < n; ++j) m += LY.at(i, j) * Y.at(j, k);
            cross += X.at(i, k) * m;
        }

    return sum_d2 + quad - 2.0 * cross;
}

EmbeddingMatrix majorize_step(const EmbeddingMatrix& X, const DistanceMatrix& D) {
    if (X.n != D.size())
        throw std::invalid_argument("embedding and distance matrix sizes differ");
    if (X.n < 2) throw std::invalid_argument("majorize_step needs at least 2 rows");
    const std::size_t n = X.n, d = X.d;

    // minimum-norm solution of the singular update system: (1/n) L^X X
    const SquareMatrix LX = weighted_laplacian(X, D);
    EmbeddingMatrix next(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            double sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) sum += LX.at(i, j) * X.at(j, k);
            next.at(i, k) = sum / static_cast<double>(n);
        }

    // fix the translation gauge at the column mean
    for (std::size_t k = 0; k < d; ++k) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += next.at(i, k);
        mean /= static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) next.at(i, k) -= mean;
    }
    return next;
}

namespace {

// Coincident rows would freeze together under the zero-distance
// convention; nudge exact duplicates apart.
void jitter_duplicate_rows(EmbeddingMatrix& X, double scale) {
    auto rows_equal = [&](std::size_t i, std::size_t j) {
        return std::memcmp(&X.coords[i * X.d], &X.coords[j * X.d],
                           X.d * sizeof(double)) == 0;
    };
    for (int pass = 0; pass < 4; ++pass) {
        bool changed = false;
        for (std::size_t i = 0; i < X.n; ++i)
            for (std::size_t j = i + 1; j < X.n; ++j)
                if (rows_equal(i, j)) {
                    X.at(j, 0) += 1e-8 * scale * static_cast<double>(j + 1);
                    changed = true;
                }
        if (!changed) break;
    }
}

// Classical-MDS coordinates (power iteration with deflation on the
// double-centered squared-distance matrix). Used as a second start for
// one-dimensional targets, where the majorization update depends only on
// the point ordering and a random start often fixes the wrong order.
EmbeddingMatrix torgerson_embedding(const DistanceMatrix& D, std::size_t d) {
    const std::size_t n = D.size();
    std::vector<double> B(n * n);
    std::vector<double> row_mean(n, 0.0);
    double grand = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) row_mean[i] += D.at(i, j) * D.at(i, j);
        row_mean[i] /= static_cast<double>(n);
        grand += row_mean[i];
    }
    grand /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            B[i * n + j] =
                -0.5 * (D.at(i, j) * D.at(i, j) - row_mean[i] - row_mean[j] + grand);

    EmbeddingMatrix X(n, d);
    std::vector<std::vector<double>> found;
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<double> v(n, 1.0);
        if (k < n) v[k] = 1.5; // deterministic symmetry break
        for (int iter = 0; iter < 500; ++iter) {
            std::vector<double> next(n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) next[i] += B[i * n + j] * v[j];
            for (const auto& f : found) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += next[i] * f[i];
                for (std::size_t i = 0; i < n; ++i) next[i] -= dot * f[i];
            }
            double norm = 0.0;
            for (double x : next) norm += x * x;
            norm = std::sqrt(norm);
            if (norm < 1e-280) break;
            for (double& x : next) x /= norm;
            v = std::move(next);
        }
        double lambda = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double bi = 0.0;
            for (std::size_t j = 0; j < n; ++j) bi += B[i * n + j] * v[j];
            lambda += v[i] * bi;
        }
        const double scale = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
        for (std::size_t i = 0; i < n; ++i) X.at(i, k) = scale * v[i];
        found.push_back(v);
    }
    jitter_duplicate_rows(X, 1.0);
    return X;
}

std::pair<EmbeddingMatrix, SolverTrace> run_majorization(EmbeddingMatrix X,
                                                         const DistanceMatrix& D,
                                                         const SolverConfig& cfg) {
    SolverTrace trace;
    trace.stresses.push_back(stress(X, D));
    for (std::size_t t = 1; t <= cfg.max_iters; ++t) {
        const double prev = trace.stresses.back();
        if (prev < 1e-30) { // exactly realized; the relative criterion is undefined
            trace.converged = true;
            break;
        }
        X = majorize_step(X, D);
        const double current = stress(X, D);
        trace.stresses.push_back(current);
        trace.iterations = t;
        if (std::abs(current - prev) / prev < cfg.epsilon) {
            trace.converged = true;
            break;
        }
    }
    return {std::move(X), std::move(trace)};
}

} // namespace

EmbeddingMatrix initial_embedding(std::size_t n, const SolverConfig& cfg) {
    cfg.validate();
    EmbeddingMatrix X(n, cfg.d);
    std::mt19937_64 rng(cfg.seed);
    for (double& c : X.coords)
        c = (2.0 * detail::unit_real(rng) - 1.0) * cfg.init_scale;
    jitter_duplicate_rows(X, cfg.init_scale);
    return X;
}

std::pair<EmbeddingMatrix, SolverTrace> embed(const DistanceMatrix& D,
                                              const SolverConfig& cfg) {
    cfg.validate();
    D.validate();
    if (D.size() < 2) throw std::invalid_argument("embedding needs at least 2 nodes");

    auto result = run_majorization(initial_embedding(D.size(), cfg), D, cfg);

    // In one dimension the update moves every point by weight-signed sums
    // alone, so the random start decides the final point ordering. Race a
    // classical-MDS start and keep whichever chain ends lower.
    if (cfg.d == 1) {
        auto ordered = run_majorization(torgerson_embedding(D, 1), D, cfg);
        if (ordered.second.stresses.back() < result.second.stresses.back())
            result = std::move(ordered);
    }
    return result;
}

} // namespace roleembed
