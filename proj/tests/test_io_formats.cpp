#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "roleembed/io_formats.hpp"

using namespace roleembed;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("roleembed_io_" + name);
    fs::remove(p);
    return p;
}

} // namespace

TEST_CASE("read_labels maps classes in first-appearance order") {
    std::istringstream in("node,label\n0,a\n1,b\n2,a\n");
    const LabeledDataset ds = read_labels(in, {"0", "1", "2"});
    CHECK(ds.class_names == std::vector<std::string>{"a", "b"});
    CHECK(ds.labels == std::vector<int>{0, 1, 0});
}

TEST_CASE("read_labels rejects unknown, duplicate and missing nodes") {
    SUBCASE("unknown node is named in the error") {
        std::istringstream in("node,label\n0,a\n99,b\n1,a\n2,a\n");
        CHECK_THROWS_WITH_AS(read_labels(in, {"0", "1", "2"}), doctest::Contains("99"),
                             std::runtime_error);
    }
    SUBCASE("duplicate row") {
        std::istringstream in("node,label\n0,a\n0,b\n1,a\n2,a\n");
        CHECK_THROWS_AS(read_labels(in, {"0", "1", "2"}), std::runtime_error);
    }
    SUBCASE("uncovered node") {
        std::istringstream in("node,label\n0,a\n1,b\n");
        CHECK_THROWS_WITH_AS(read_labels(in, {"0", "1", "2"}), doctest::Contains("2"),
                             std::runtime_error);
    }
    SUBCASE("bad header") {
        std::istringstream in("id,role\n0,a\n");
        CHECK_THROWS_AS(read_labels(in, {"0"}), std::runtime_error);
    }
}

TEST_CASE("labels round trip") {
    LabeledDataset ds;
    ds.labels = {1, 0, 1, 2};
    ds.class_names = {"hub", "leaf", "bridge"};
    const std::vector<std::string> names = {"n0", "n1", "n2", "n3"};
    std::ostringstream out;
    write_labels(ds, names, out);
    std::istringstream in(out.str());
    const LabeledDataset back = read_labels(in, names);
    // class ids re-densify by first appearance, so compare via names
    for (std::size_t i = 0; i < ds.labels.size(); ++i)
        CHECK(back.class_names[static_cast<std::size_t>(back.labels[i])] ==
              ds.class_names[static_cast<std::size_t>(ds.labels[i])]);
}

TEST_CASE("embedding CSV round trips coordinates bitwise") {
    EmbeddingMatrix X(3, 2);
    X.at(0, 0) = 0.1 + 0.2; // classic non-representable sum
    X.at(0, 1) = -1.0 / 3.0;
    X.at(1, 0) = 1e-300;
    X.at(1, 1) = 12345.6789;
    X.at(2, 0) = 0.0;
    X.at(2, 1) = -0.0;
    std::ostringstream out;
    write_embedding(X, {"a", "b", "c"}, out);

    std::istringstream in(out.str());
    const ReadEmbedding back = read_embedding(in);
    CHECK(back.node_names == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(back.matrix.n == 3);
    REQUIRE(back.matrix.d == 2);
    for (std::size_t i = 0; i < X.coords.size(); ++i)
        CHECK(back.matrix.coords[i] == X.coords[i]);
}

TEST_CASE("read_embedding validates header and rows") {
    SUBCASE("column count mismatch against header") {
        std::istringstream in("node,x0,x1\nv,1.0,2.0,3.0\n");
        CHECK_THROWS_WITH_AS(read_embedding(in), doctest::Contains("line 2"), std::runtime_error);
    }
    SUBCASE("non-numeric coordinate") {
        std::istringstream in("node,x0\nv,notanumber\n");
        CHECK_THROWS_AS(read_embedding(in), std::runtime_error);
    }
    SUBCASE("wrong column names") {
        std::istringstream in("node,y0\nv,1.0\n");
        CHECK_THROWS_AS(read_embedding(in), std::runtime_error);
    }
    SUBCASE("empty file") {
        std::istringstream in("");
        CHECK_THROWS_AS(read_embedding(in), std::runtime_error);
    }
}

TEST_CASE("distance cache stores and reloads bitwise") {
    std::mt19937_64 rng(40);
    std::uniform_real_distribution<double> dist(0.0, 9.0);
    DistanceMatrix D(6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) D.set(i, j, dist(rng));

    const fs::path path = temp_file("cache.rdm");
    const std::uint64_t key = distance_cache_key("0 1\n1 2\n", DistanceConfig{2, {1, 1, 1}, 1});
    cache_distances(D, key, path.string());

    const auto loaded = load_cached(path.string(), key);
    REQUIRE(loaded.has_value());
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(loaded->at(i, j) == D.at(i, j));
    fs::remove(path);
}

TEST_CASE("distance cache misses on a different key") {
    DistanceMatrix D(2);
    D.set(0, 1, 1.5);
    const fs::path path = temp_file("cache_miss.rdm");
    cache_distances(D, 111, path.string());
    CHECK_FALSE(load_cached(path.string(), 222).has_value());
    CHECK(load_cached(path.string(), 111).has_value());
    fs::remove(path);
}

TEST_CASE("missing cache file is a miss, damage is an error") {
    CHECK_FALSE(load_cached("/nonexistent/cache.rdm", 1).has_value());

    const fs::path path = temp_file("cache_bad.rdm");
    SUBCASE("bad magic") {
        std::ofstream(path, std::ios::binary) << "NOPE this is not a cache";
        CHECK_THROWS_AS(load_cached(path.string(), 1), CacheCorruptError);
    }
    SUBCASE("truncated payload") {
        DistanceMatrix D(4);
        D.set(0, 1, 2.0);
        cache_distances(D, 5, path.string());
        fs::resize_file(path, fs::file_size(path) - 9);
        CHECK_THROWS_AS(load_cached(path.string(), 5), CacheCorruptError);
    }
    fs::remove(path);
}

TEST_CASE("distance CSV round trips bitwise") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> dist(0.0, 7.0);
    DistanceMatrix D(5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) D.set(i, j, dist(rng));

    std::ostringstream out;
    write_distance_csv(D, out);
    std::istringstream in(out.str());
    const DistanceMatrix back = read_distance_csv(in);
    REQUIRE(back.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) CHECK(back.at(i, j) == D.at(i, j));
}

TEST_CASE("distance CSV rejects damage") {
    SUBCASE("asymmetric entries") {
        std::istringstream in("2\n0,1.5\n1.25,0\n");
        CHECK_THROWS_AS(read_distance_csv(in), std::runtime_error);
    }
    SUBCASE("truncated rows") {
        std::istringstream in("3\n0,1,2\n1,0,1\n");
        CHECK_THROWS_AS(read_distance_csv(in), std::runtime_error);
    }
    SUBCASE("bad header") {
        std::istringstream in("not-a-number\n");
        CHECK_THROWS_AS(read_distance_csv(in), std::runtime_error);
    }
}

TEST_CASE("cache keys separate configs and inputs") {
    const DistanceConfig a{2, {1, 1, 1}, 1};
    const DistanceConfig b{2, {1, 1, 2}, 1};
    const DistanceConfig c{2, {1, 1, 1}, 3};
    CHECK(distance_cache_key("x", a) != distance_cache_key("x", b));
    CHECK(distance_cache_key("x", a) != distance_cache_key("x", c));
    CHECK(distance_cache_key("x", a) != distance_cache_key("y", a));
    CHECK(distance_cache_key("x", a) == distance_cache_key("x", a));
}

TEST_CASE("run config round trips and validates") {
    const fs::path edges = temp_file("edges.txt");
    std::ofstream(edges) << "0 1\n";

    RunConfig cfg;
    cfg.edges_path = edges.string();
    cfg.distance.k = 3;
    cfg.has_k = true;
    cfg.distance.weights = {1, 0.5, 0.25, 0.125};
    cfg.distance.fastdtw_radius = 2;
    cfg.solver.d = 4;
    cfg.solver.epsilon = 1e-6;
    cfg.solver.max_iters = 777;
    cfg.solver.seed = 9;
    cfg.eval_runs = 5;
    cfg.eval_folds = 3;

    const fs::path path = temp_file("run.cfg");
    {
        std::ofstream out(path);
        save_run_config(cfg, out);
    }
    const RunConfig back = load_run_config(path.string());
    CHECK(back.edges_path == cfg.edges_path);
    CHECK(back.distance.k == 3);
    CHECK(back.has_k);
    CHECK(back.distance.weights == cfg.distance.weights);
    CHECK(back.distance.fastdtw_radius == 2);
    CHECK(back.solver.d == 4);
    CHECK(back.solver.epsilon == cfg.solver.epsilon);
    CHECK(back.solver.max_iters == 777);
    CHECK(back.solver.seed == 9);
    CHECK(back.eval_runs == 5);
    CHECK(back.eval_folds == 3);
    fs::remove(path);
    fs::remove(edges);
}

TEST_CASE("run config rejects unknown keys and dead paths") {
    const fs::path edges = temp_file("edges2.txt");
    std::ofstream(edges) << "0 1\n";
    const fs::path path = temp_file("bad.cfg");

    SUBCASE("unknown key") {
        std::ofstream(path) << "edges=" << edges.string() << "\nbogus_key=1\n";
        CHECK_THROWS_WITH_AS(load_run_config(path.string()), doctest::Contains("bogus_key"),
                             std::runtime_error);
    }
    SUBCASE("edges file must exist") {
        std::ofstream(path) << "edges=/no/such/file.txt\n";
        CHECK_THROWS_AS(load_run_config(path.string()), std::runtime_error);
    }
    SUBCASE("edges key is required") {
        std::ofstream(path) << "d=2\n";
        CHECK_THROWS_AS(load_run_config(path.string()), std::runtime_error);
    }
    fs::remove(path);
    fs::remove(edges);
}
