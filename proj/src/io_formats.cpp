#include "roleembed/io_formats.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace roleembed {

namespace {

// 17 significant digits: enough for an exact double round trip
std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& token, std::size_t line_no) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": not a finite number: '" + token + "'");
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

void require_csv_safe(const std::string& field, const char* what) {
    if (field.find(',') != std::string::npos || field.find('\n') != std::string::npos)
        throw std::invalid_argument(std::string(what) + " '" + field +
                                    "' cannot contain commas or newlines");
}

} // namespace

LabeledDataset read_labels(std::istream& in,
                           const std::vector<std::string>& node_names) {
    std::map<std::string, std::size_t> id_of;
    for (std::size_t i = 0; i < node_names.size(); ++i) id_of[node_names[i]] = i;

    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "node,label")
        throw std::runtime_error("label file must start with header 'node,label'");

    LabeledDataset ds;
    ds.labels.assign(node_names.size(), -1);
    std::map<std::string, int> class_of;
    std::vector<std::string> unknown;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 2)
            throw std::runtime_error("label line " + std::to_string(line_no) +
                                     ": expected 'node,label'");
        auto it = id_of.find(fields[0]);
        if (it == id_of.end()) {
            unknown.push_back(fields[0]);
            continue;
        }
        if (ds.labels[it->second] != -1)
            throw std::runtime_error("duplicate label row for node '" + fields[0] + "'");
        auto [cit, inserted] =
            class_of.emplace(fields[1], static_cast<int>(ds.class_names.size()));
        if (inserted) ds.class_names.push_back(fields[1]);
        ds.labels[it->second] = cit->second;
    }

    if (!unknown.empty()) {
        std::string msg = "label file names nodes absent from the graph:";
        for (const auto& name : unknown) msg += " '" + name + "'";
        throw std::runtime_error(msg);
    }
    std::string missing;
    for (std::size_t i = 0; i < ds.labels.size(); ++i)
        if (ds.labels[i] == -1) missing += " '" + node_names[i] + "'";
    if (!missing.empty())
        throw std::runtime_error("label file leaves nodes unlabeled:" + missing);
    return ds;
}

void write_labels(const LabeledDataset& ds,
                  const std::vector<std::string>& node_names, std::ostream& out) {
    if (ds.labels.size() != node_names.size())
        throw std::invalid_argument("label vector does not match node name table");
    for (const auto& name : node_names) require_csv_safe(name, "node name");
    for (const auto& cls : ds.class_names) require_csv_safe(cls, "label");
    out << "node,label\n";
    for (std::size_t i = 0; i < ds.labels.size(); ++i)
        out << node_names[i] << ',' << ds.class_names[static_cast<std::size_t>(ds.labels[i])]
            << '\n';
}

void write_embedding(const EmbeddingMatrix& X,
                     const std::vector<std::string>& node_names,
                     std::ostream& out) {
    if (node_names.size() != X.n)
        throw std::invalid_argument("node name table does not match embedding rows");
    for (const auto& name : node_names) require_csv_safe(name, "node name");
    out << "node";
    for (std::size_t k = 0; k < X.d; ++k) out << ",x" << k;
    out << '\n';
    for (std::size_t i = 0; i < X.n; ++i) {
        out << node_names[i];
        for (std::size_t k = 0; k < X.d; ++k) out << ',' << fmt17(X.at(i, k));
        out << '\n';
    }
}

ReadEmbedding read_embedding(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("embedding file is empty");
    const auto header = split_csv(strip_cr(line));
    if (header.empty() || header[0] != "node")
        throw std::runtime_error("embedding header must start with 'node'");
    const std::size_t d = header.size() - 1;
    if (d == 0) throw std::runtime_error("embedding header has no coordinate columns");
    for (std::size_t k = 0; k < d; ++k)
        if (header[k + 1] != "x" + std::to_string(k))
            throw std::runtime_error("embedding header column " + std::to_string(k + 1) +
                                     " must be x" + std::to_string(k));

    std::vector<std::string> names;
    std::vector<double> coords;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != d + 1)
            throw std::runtime_error("embedding line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(d + 1) + " fields, got " +
                                     std::to_string(fields.size()));
        names.push_back(fields[0]);
        for (std::size_t k = 0; k < d; ++k)
            coords.push_back(parse_double(fields[k + 1], line_no));
    }
    if (names.empty()) throw std::runtime_error("embedding file has no rows");

    ReadEmbedding out;
    out.matrix.n = names.size();
    out.matrix.d = d;
    out.matrix.coords = std::move(coords);
    out.node_names = std::move(names);
    return out;
}

void write_trace(const SolverTrace& trace, std::ostream& out) {
    out << "iter,stress\n";
    for (std::size_t i = 0; i < trace.stresses.size(); ++i)
        out << i << ',' << fmt17(trace.stresses[i]) << '\n';
}

namespace {

constexpr char kCacheMagic[4] = {'R', 'D', 'M', '1'};

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 1099511628211ull;
    }
    return h;
}

void put_u64(std::ostream& out, std::uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(buf), 8);
}

bool get_u64(std::istream& in, std::uint64_t& v) {
    unsigned char buf[8];
    if (!in.read(reinterpret_cast<char*>(buf), 8)) return false;
    v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return true;
}

} // namespace

std::uint64_t distance_cache_key(const std::string& edge_list_bytes,
                                 const DistanceConfig& cfg) {
    std::string canon = "k=" + std::to_string(cfg.k) +
                        ";radius=" + std::to_string(cfg.fastdtw_radius) + ";w=";
    for (double w : cfg.weights) canon += fmt17(w) + ",";

    std::uint64_t h = 1469598103934665603ull;
    h = fnv1a(h, edge_list_bytes.data(), edge_list_bytes.size());
    h = fnv1a(h, canon.data(), canon.size());
    return h;
}

void cache_distances(const DistanceMatrix& D, std::uint64_t key,
                     const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
    out.write(kCacheMagic, 4);
    put_u64(out, D.size());
    put_u64(out, key);
    for (std::size_t i = 0; i < D.size(); ++i)
        for (std::size_t j = i; j < D.size(); ++j)
            put_u64(out, std::bit_cast<std::uint64_t>(D.at(i, j)));
    if (!out) throw std::runtime_error("failed writing cache file: " + path);
}

std::optional<DistanceMatrix> load_cached(const std::string& path,
                                          std::uint64_t key) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt; // no cache yet

    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kCacheMagic, 4) != 0)
        throw CacheCorruptError("cache file has bad magic: " + path);
    std::uint64_t n = 0, stored_key = 0;
    if (!get_u64(in, n) || !get_u64(in, stored_key))
        throw CacheCorruptError("cache file header truncated: " + path);

    DistanceMatrix D(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < D.size(); ++i)
        for (std::size_t j = i; j < D.size(); ++j) {
            std::uint64_t bits = 0;
            if (!get_u64(in, bits))
                throw CacheCorruptError("cache file payload truncated: " + path);
            D.set(i, j, std::bit_cast<double>(bits));
        }

    if (stored_key != key) return std::nullopt; // stale content: miss
    try {
        D.validate();
    } catch (const std::exception& e) {
        throw CacheCorruptError(std::string("cache file holds an invalid matrix: ") + e.what());
    }
    return D;
}

void write_distance_csv(const DistanceMatrix& D, std::ostream& out) {
    out << D.size() << '\n';
    for (std::size_t i = 0; i < D.size(); ++i) {
        for (std::size_t j = 0; j < D.size(); ++j) {
            if (j) out << ',';
            out << fmt17(D.at(i, j));
        }
        out << '\n';
    }
}

DistanceMatrix read_distance_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("distance CSV is empty");
    std::size_t n = 0;
    try {
        n = static_cast<std::size_t>(std::stoull(strip_cr(line)));
    } catch (...) {
        throw std::runtime_error("distance CSV header must hold the matrix size");
    }
    DistanceMatrix D(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw std::runtime_error("distance CSV truncated at row " + std::to_string(i));
        const auto fields = split_csv(strip_cr(line));
        if (fields.size() != n)
            throw std::runtime_error("distance CSV row " + std::to_string(i) + " has " +
                                     std::to_string(fields.size()) + " fields, expected " +
                                     std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            const double v = parse_double(fields[j], i + 2);
            if (j >= i)
                D.set(i, j, v);
            else if (D.at(i, j) != v)
                throw std::runtime_error("distance CSV is not symmetric at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    D.validate();
    return D;
}

namespace {

std::size_t parse_size(const std::string& v, const std::string& key) {
    try {
        return static_cast<std::size_t>(std::stoull(v));
    } catch (...) {
        throw std::runtime_error("run config: bad integer for '" + key + "': " + v);
    }
}

} // namespace

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open run config: " + path);

    RunConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("run config line " + std::to_string(line_no) +
                                     ": expected key=value");
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);

        if (key == "edges") cfg.edges_path = value;
        else if (key == "labels") cfg.labels_path = value;
        else if (key == "out_dir") cfg.out_dir = value;
        else if (key == "k") { cfg.distance.k = parse_size(value, key); cfg.has_k = true; }
        else if (key == "weights") {
            cfg.distance.weights.clear();
            for (const auto& tok : split_csv(value))
                cfg.distance.weights.push_back(parse_double(tok, line_no));
        }
        else if (key == "radius") cfg.distance.fastdtw_radius = parse_size(value, key);
        else if (key == "d") cfg.solver.d = parse_size(value, key);
        else if (key == "epsilon") cfg.solver.epsilon = parse_double(value, line_no);
        else if (key == "max_iters") cfg.solver.max_iters = parse_size(value, key);
        else if (key == "seed") cfg.solver.seed = parse_size(value, key);
        else if (key == "init_scale") cfg.solver.init_scale = parse_double(value, line_no);
        else if (key == "runs") cfg.eval_runs = parse_size(value, key);
        else if (key == "folds") cfg.eval_folds = parse_size(value, key);
        else throw std::runtime_error("run config: unknown key '" + key + "'");
    }

    if (cfg.edges_path.empty())
        throw std::runtime_error("run config: missing required key 'edges'");
    if (!std::filesystem::exists(cfg.edges_path))
        throw std::runtime_error("run config: edges path does not exist: " + cfg.edges_path);
    if (!cfg.labels_path.empty() && !std::filesystem::exists(cfg.labels_path))
        throw std::runtime_error("run config: labels path does not exist: " + cfg.labels_path);
    return cfg;
}

void save_run_config(const RunConfig& cfg, std::ostream& out) {
    out << "edges=" << cfg.edges_path << '\n';
    if (!cfg.labels_path.empty()) out << "labels=" << cfg.labels_path << '\n';
    out << "out_dir=" << cfg.out_dir << '\n';
    if (cfg.has_k) out << "k=" << cfg.distance.k << '\n';
    if (!cfg.distance.weights.empty()) {
        out << "weights=";
        for (std::size_t i = 0; i < cfg.distance.weights.size(); ++i) {
            if (i) out << ',';
            out << fmt17(cfg.distance.weights[i]);
        }
        out << '\n';
    }
    out << "radius=" << cfg.distance.fastdtw_radius << '\n';
    out << "d=" << cfg.solver.d << '\n';
    out << "epsilon=" << fmt17(cfg.solver.epsilon) << '\n';
    out << "max_iters=" << cfg.solver.max_iters << '\n';
    out << "seed=" << cfg.solver.seed << '\n';
    out << "init_scale=" << fmt17(cfg.solver.init_scale) << '\n';
    out << "runs=" << cfg.eval_runs << '\n';
    out << "folds=" << cfg.eval_folds << '\n';
}

} // namespace roleembed
