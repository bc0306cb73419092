// io_formats.hpp — persistence: label CSVs, embedding CSVs, the binary
// distance-matrix cache, and flat key=value run configurations.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "roleembed/labels.hpp"
#include "roleembed/role_distance.hpp"
#include "roleembed/stress_solver.hpp"

namespace roleembed {

/// Thrown when a cache file exists but its bytes are not a valid cache
/// (bad magic, truncation). Distinct from a key mismatch, which is a miss.
class CacheCorruptError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a "node,label" CSV. Node tokens are matched against node_names
/// (index = dense id); labels map to dense class ids in first-appearance
/// order. Throws on unknown nodes, duplicate rows, or uncovered nodes.
LabeledDataset read_labels(std::istream& in,
                           const std::vector<std::string>& node_names);

void write_labels(const LabeledDataset& ds,
                  const std::vector<std::string>& node_names, std::ostream& out);

/// Embedding CSV: header "node,x0,...,x{d-1}", one row per node, doubles
/// written with 17 significant digits so read_embedding(write_embedding(X))
/// reproduces the coordinates bitwise.
void write_embedding(const EmbeddingMatrix& X,
                     const std::vector<std::string>& node_names,
                     std::ostream& out);

struct ReadEmbedding {
    EmbeddingMatrix matrix;
    std::vector<std::string> node_names;
};

ReadEmbedding read_embedding(std::istream& in);

void write_trace(const SolverTrace& trace, std::ostream& out);

/// Content hash (FNV-1a 64) of the edge-list bytes and the distance config,
/// used as the cache key.
std::uint64_t distance_cache_key(const std::string& edge_list_bytes,
                                 const DistanceConfig& cfg);

/// Binary cache: magic "RDM1", u64 n, u64 key, then n*(n+1)/2 little-endian
/// doubles (upper triangle, row-major).
void cache_distances(const DistanceMatrix& D, std::uint64_t key,
                     const std::string& path);

/// nullopt on key mismatch (miss); CacheCorruptError on bad magic or
/// truncated payload; nullopt when the file does not exist.
std::optional<DistanceMatrix> load_cached(const std::string& path,
                                          std::uint64_t key);

/// Plain-text form of the distance matrix: a header line holding n, then n
/// comma-separated rows at 17 significant digits.
void write_distance_csv(const DistanceMatrix& D, std::ostream& out);
DistanceMatrix read_distance_csv(std::istream& in);

/// Flat key=value run configuration. Unknown keys are rejected and the
/// referenced input paths must exist at load time.
struct RunConfig {
    std::string edges_path;
    std::string labels_path; // optional, may be empty
    std::string out_dir = ".";
    DistanceConfig distance;  // weights empty = use defaults for the graph
    SolverConfig solver;
    std::size_t eval_runs = 25;
    std::size_t eval_folds = 10;
    bool has_k = false; // distance.k explicit in the file
};

RunConfig load_run_config(const std::string& path);
void save_run_config(const RunConfig& cfg, std::ostream& out);

} // namespace roleembed
