#include "roleembed/role_distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace roleembed {

double DistanceMatrix::max_entry() const {
    double best = 0.0;
    for (double v : entries_) best = std::max(best, v);
    return best;
}

void DistanceMatrix::validate() const {
    if (entries_.size() != n_ * n_)
        throw std::invalid_argument("distance matrix storage size mismatch");
    for (std::size_t i = 0; i < n_; ++i) {
        if (at(i, i) != 0.0)
            throw std::invalid_argument("distance matrix diagonal must be zero");
        for (std::size_t j = 0; j < n_; ++j) {
            double v = at(i, j);
            if (!std::isfinite(v) || v < 0.0)
                throw std::invalid_argument("distance matrix entries must be finite and nonnegative");
            if (v != at(j, i))
                throw std::invalid_argument("distance matrix must be symmetric");
        }
    }
}

DistanceConfig DistanceConfig::defaults_for(const Graph& g) {
    DistanceConfig cfg;
    cfg.k = diameter(g);
    cfg.weights.assign(cfg.k + 1, 1.0);
    cfg.fastdtw_radius = 1;
    return cfg;
}

void DistanceConfig::validate() const {
    if (weights.size() != k + 1)
        throw std::invalid_argument("distance config needs one weight per hop 0..k");
    bool any_positive = false;
    for (double w : weights) {
        if (!(w >= 0.0)) throw std::invalid_argument("hop weights must be nonnegative");
        if (w > 0.0) any_positive = true;
    }
    if (!any_positive) throw std::invalid_argument("at least one hop weight must be positive");
}

double pair_cost(double a, double b) {
    if (a <= 0.0 || b <= 0.0)
        throw std::domain_error("pair_cost requires positive degrees");
    return std::max(a, b) / std::min(a, b) - 1.0;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct PathCell {
    std::size_t i, j;
};

// DTW restricted to per-row column windows [lo[i], hi[i]]. The window must
// contain (0,0) and (n1-1, n2-1) and form a connected monotone corridor.
double dtw_windowed(const std::vector<double>& a, const std::vector<double>& b,
                    const std::vector<std::size_t>& lo, const std::vector<std::size_t>& hi,
                    std::vector<PathCell>* path_out) {
    const std::size_t n1 = a.size(), n2 = b.size();
    std::vector<std::vector<double>> acc(n1);
    std::vector<std::vector<unsigned char>> step(n1); // 1 diag, 2 up, 3 left

    auto cell = [&](std::size_t i, std::size_t j) -> double {
        if (j < lo[i] || j > hi[i]) return kInf;
        return acc[i][j - lo[i]];
    };

    for (std::size_t i = 0; i < n1; ++i) {
        acc[i].assign(hi[i] - lo[i] + 1, kInf);
        step[i].assign(hi[i] - lo[i] + 1, 0);
        for (std::size_t j = lo[i]; j <= hi[i]; ++j) {
            const double c = pair_cost(a[i], b[j]);
            if (i == 0 && j == 0) {
                acc[0][0] = c;
                continue;
            }
            double best = kInf;
            unsigned char chosen = 0;
            if (i > 0 && j > 0 && cell(i - 1, j - 1) < best) { best = cell(i - 1, j - 1); chosen = 1; }
            if (i > 0 && cell(i - 1, j) < best) { best = cell(i - 1, j); chosen = 2; }
            if (j > 0 && cell(i, j - 1) < best) { best = cell(i, j - 1); chosen = 3; }
            if (chosen == 0) continue; // unreachable window cell
            acc[i][j - lo[i]] = c + best;
            step[i][j - lo[i]] = chosen;
        }
    }

    const double total = cell(n1 - 1, n2 - 1);
    if (path_out) {
        path_out->clear();
        std::size_t i = n1 - 1, j = n2 - 1;
        while (true) {
            path_out->push_back({i, j});
            unsigned char s = step[i][j - lo[i]];
            if (s == 0) break;
            if (s == 1) { --i; --j; }
            else if (s == 2) { --i; }
            else { --j; }
        }
        std::reverse(path_out->begin(), path_out->end());
    }
    return total;
}

double dtw_full(const std::vector<double>& a, const std::vector<double>& b,
                std::vector<PathCell>* path_out) {
    std::vector<std::size_t> lo(a.size(), 0), hi(a.size(), b.size() - 1);
    return dtw_windowed(a, b, lo, hi, path_out);
}

// Halves the resolution by averaging adjacent pairs; an odd tail element
// is carried over unchanged.
std::vector<double> coarsen(const std::vector<double>& s) {
    std::vector<double> out;
    out.reserve((s.size() + 1) / 2);
    for (std::size_t i = 0; i < s.size(); i += 2) {
        if (i + 1 < s.size())
            out.push_back((s[i] + s[i + 1]) / 2.0);
        else
            out.push_back(s[i]);
    }
    return out;
}

// Dilates the coarse warp path by `radius` (Chebyshev) at the coarse
// resolution, then projects each dilated cell onto its 2x2 fine block,
// producing per-row column windows.
void expand_window(const std::vector<PathCell>& coarse_path, std::size_t n1,
                   std::size_t n2, std::size_t radius,
                   std::vector<std::size_t>& lo, std::vector<std::size_t>& hi) {
    const std::size_t cn1 = (n1 + 1) / 2, cn2 = (n2 + 1) / 2;
    std::vector<std::size_t> raw_lo(cn1, cn2), raw_hi(cn1, 0);
    for (const auto& cell : coarse_path) {
        raw_lo[cell.i] = std::min(raw_lo[cell.i], cell.j);
        raw_hi[cell.i] = std::max(raw_hi[cell.i], cell.j);
    }

    std::vector<std::size_t> dil_lo(cn1), dil_hi(cn1);
    for (std::size_t ci = 0; ci < cn1; ++ci) {
        std::size_t row_lo = cn2, row_hi = 0;
        const std::size_t from = ci >= radius ? ci - radius : 0;
        const std::size_t to = std::min(cn1 - 1, ci + radius);
        for (std::size_t r = from; r <= to; ++r) {
            row_lo = std::min(row_lo, raw_lo[r]);
            row_hi = std::max(row_hi, raw_hi[r]);
        }
        dil_lo[ci] = row_lo >= radius ? row_lo - radius : 0;
        dil_hi[ci] = std::min(cn2 - 1, row_hi + radius);
    }

    lo.assign(n1, 0);
    hi.assign(n1, 0);
    for (std::size_t i = 0; i < n1; ++i) {
        lo[i] = std::min(2 * dil_lo[i / 2], n2 - 1);
        hi[i] = std::min(2 * dil_hi[i / 2] + 1, n2 - 1);
    }
}

double fast_dtw_impl(const std::vector<double>& a, const std::vector<double>& b,
                     std::size_t radius, std::vector<PathCell>* path_out) {
    const std::size_t min_size = radius + 2;
    if (a.size() <= min_size || b.size() <= min_size)
        return dtw_full(a, b, path_out);

    std::vector<PathCell> coarse_path;
    fast_dtw_impl(coarsen(a), coarsen(b), radius, &coarse_path);

    std::vector<std::size_t> lo, hi;
    expand_window(coarse_path, a.size(), b.size(), radius, lo, hi);
    return dtw_windowed(a, b, lo, hi, path_out);
}

std::vector<double> to_reals(const std::vector<int>& s) {
    return std::vector<double>(s.begin(), s.end());
}

} // namespace

double exact_dtw(const std::vector<int>& s1, const std::vector<int>& s2) {
    if (s1.empty() || s2.empty()) throw std::invalid_argument("DTW input must be nonempty");
    return dtw_full(to_reals(s1), to_reals(s2), nullptr);
}

double fast_dtw(const std::vector<int>& s1, const std::vector<int>& s2,
                std::size_t radius) {
    if (s1.empty() || s2.empty()) throw std::invalid_argument("DTW input must be nonempty");
    return fast_dtw_impl(to_reals(s1), to_reals(s2), radius, nullptr);
}

namespace {

// Per-hop degree sequences of one node, rings 0..k.
std::vector<std::vector<int>> hop_sequences(const Graph& g, NodeId u, std::size_t k) {
    HopRings rings = khop_rings(g, u, k);
    std::vector<std::vector<int>> seqs(k + 1);
    for (std::size_t hop = 0; hop <= k; ++hop)
        seqs[hop] = ordered_degree_sequence(g, rings.rings[hop]);
    return seqs;
}

double pair_distance(const std::vector<std::vector<int>>& su,
                     const std::vector<std::vector<int>>& sv,
                     const DistanceConfig& cfg, double empty_penalty) {
    double total = 0.0;
    for (std::size_t hop = 0; hop <= cfg.k; ++hop) {
        const auto& lu = su[hop];
        const auto& lv = sv[hop];
        if (lu.empty() && lv.empty()) continue;
        if (lu.empty() || lv.empty()) {
            total += cfg.weights[hop] * empty_penalty;
            continue;
        }
        total += cfg.weights[hop] * fast_dtw(lu, lv, cfg.fastdtw_radius);
    }
    return total;
}

double empty_ring_penalty(const Graph& g) {
    // exceeds any single-element alignment cost in this graph
    return pair_cost(1.0, static_cast<double>(g.max_degree())) + 1.0;
}

} // namespace

double structural_distance(const Graph& g, NodeId u, NodeId v,
                           const DistanceConfig& cfg) {
    cfg.validate();
    if (g.degree(u) == 0 || g.degree(v) == 0)
        throw std::domain_error("structural distance is undefined for isolated nodes "
                                "(degree 0 is outside the relative-degree cost domain)");
    return pair_distance(hop_sequences(g, u, cfg.k), hop_sequences(g, v, cfg.k), cfg,
                         empty_ring_penalty(g));
}

DistanceMatrix distance_matrix(const Graph& g, const DistanceConfig& cfg,
                               std::size_t threads) {
    cfg.validate();
    const std::size_t n = g.node_count();
    if (n < 2) throw std::invalid_argument("distance matrix needs at least 2 nodes");
    for (NodeId u = 0; u < n; ++u)
        if (g.degree(u) == 0)
            throw std::domain_error("graph has an isolated node (id " + std::to_string(u) +
                                    "); structural distances are undefined at degree 0");

    std::vector<std::vector<std::vector<int>>> seqs(n);
    for (NodeId u = 0; u < n; ++u) seqs[u] = hop_sequences(g, u, cfg.k);
    const double penalty = empty_ring_penalty(g);

    // flattened strict upper triangle; every entry is computed independently,
    // so the result does not depend on the thread count
    const std::size_t pair_count = n * (n - 1) / 2;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(pair_count);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    DistanceMatrix D(n);
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            auto [i, j] = pairs[p];
            D.set(i, j, pair_distance(seqs[i], seqs[j], cfg, penalty));
        }
    };

    std::size_t thread_count = threads != 0 ? threads
                                            : std::max<std::size_t>(1, std::thread::hardware_concurrency());
    thread_count = std::min(thread_count, std::max<std::size_t>(1, pair_count));
    if (thread_count <= 1) {
        worker(0, pair_count);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (pair_count + thread_count - 1) / thread_count;
        for (std::size_t t = 0; t < thread_count; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(pair_count, begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return D;
}

} // namespace roleembed
