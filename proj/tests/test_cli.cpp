#include <unistd.h>

#include <sstream>

#include "doctest.h"
#include "kcr/cli.hpp"
#include "kcr/io.hpp"
#include "support.hpp"

using namespace kcr;
namespace fs = std::filesystem;

namespace {

/// Scratch directory removed on destruction.
struct Scratch {
    fs::path dir;
    Scratch() {
        static int counter = 0;
        dir = fs::temp_directory_path() / ("kcr_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string file(const std::string& name, const std::string& contents) const {
        io::write_file(dir / name, contents);
        return (dir / name).string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "kcr");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string crossing_instance(std::uint32_t c) {
    return io::serialize_instance({testing::crossing(), {{0, 3}, {1, 4}}, c});
}

std::string figure_psi_text() {
    PsiInstance p;
    p.pattern_size = 4;
    p.pattern_edges = {{1, 3}, {0, 2}, {0, 2}, {2, 0}, {0, 2}, {3, 1}};
    p.class_a = {0, 1};
    p.class_b = {2, 3};
    for (std::uint32_t i = 0; i < 4; ++i) p.classes.push_back({5 * i, 5 * i + 1, 5 * i + 2, 5 * i + 3, 5 * i + 4});
    p.host_edges = {{2, 14}, {5, 15}};
    p.congestion = 2;
    return io::serialize_psi(p);
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("solve exit codes and witness") {
        Scratch s;
        auto yes = run({"solve", s.file("two.json", crossing_instance(2)), "--witness", s.path("w.json")});
        CHECK(yes.code == 0);
        CHECK(yes.out.find("verdict: YES") != std::string::npos);
        CHECK(io::parse_witness(io::read_file(s.path("w.json"))).paths ==
              std::vector<Path>{{{0, 2, 3}}, {{1, 2, 4}}});

        auto no = run({"solve", s.file("one.json", crossing_instance(1)), "--witness", s.path("none.json")});
        CHECK(no.code == 1);
        CHECK(no.out.find("verdict: NO") != std::string::npos);
        CHECK_FALSE(fs::exists(s.path("none.json")));

        CHECK(run({"solve", s.file("bad.json", "{\"format\":")}).code == 2);
        CHECK(run({"solve", s.path("missing.json")}).code == 2);
        CHECK(run({"solve"}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
    }

    TEST_CASE("solve rejects cyclic graphs") {
        Scratch s;
        auto r = run({"solve", s.file("cyc.json", io::serialize_instance({build_digraph(2, {{0, 1}, {1, 0}}),
                                                                          {{0, 1}}, 1}))});
        CHECK(r.code == 2);
        CHECK(r.err.find("cycl") != std::string::npos);
    }

    TEST_CASE("solve with an offset") {
        Scratch s;
        std::vector<Demand> spread{{0, 3}, {0, 1}, {1, 3}, {2, 3}, {0, 2}, {1, 1}, {3, 3}};
        auto path = s.file("spread.json", io::serialize_instance({build_digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
                                                                  spread, std::nullopt}));
        auto r = run({"solve", path, "--d", "2"});
        CHECK(r.code == 0);
        CHECK(r.out.find("algorithm: subset") != std::string::npos);
        CHECK(r.out.find("chosen subset: 0 1 2 3 4 5") != std::string::npos);

        CHECK(run({"solve", path, "--d", "2", "--algorithm", "product"}).code == 0);
        CHECK(run({"solve", path, "--d", "2", "--jobs", "2", "--deterministic", "false"}).code == 0);
        CHECK(run({"solve", path, "--d", "7"}).code == 2);
        CHECK(run({"solve", path}).code == 2);
        CHECK(run({"solve", path, "--algorithm", "subset"}).code == 2);
        CHECK(run({"solve", path, "--algorithm", "fast"}).code == 2);
    }

    TEST_CASE("solve reports an exhausted cap as an error") {
        Scratch s;
        auto path = s.file("two.json", crossing_instance(2));
        auto r = run({"solve", path, "--cap", "1"});
        CHECK(r.code == 2);
        CHECK(r.err.find("resource exhausted") != std::string::npos);
    }

    TEST_CASE("check") {
        Scratch s;
        auto inst1 = s.file("one.json", crossing_instance(1));
        auto inst2 = s.file("two.json", crossing_instance(2));
        auto good = s.file("good.json", io::serialize_witness({{{{0, 2, 3}}, {{1, 2, 4}}}}));
        auto swapped = s.file("swapped.json", io::serialize_witness({{{{0, 2, 4}}, {{1, 2, 3}}}}));
        auto short_w = s.file("short.json", io::serialize_witness({{{{0, 2, 3}}}}));

        CHECK(run({"check", inst2, good}).code == 0);
        auto over = run({"check", inst1, good});
        CHECK(over.code == 1);
        CHECK(over.out.find("vertex 2 exceeds c") != std::string::npos);
        auto endpoint = run({"check", inst2, swapped});
        CHECK(endpoint.code == 1);
        CHECK(endpoint.out.find("path 0 endpoint") != std::string::npos);
        CHECK(run({"check", inst2, short_w}).code == 2);
        CHECK(run({"check", inst2}).code == 2);
    }

    TEST_CASE("oracle") {
        Scratch s;
        CHECK(run({"oracle", s.file("empty.json", io::serialize_instance({testing::diamond(), {}, 1}))}).code == 0);
        CHECK(run({"oracle", s.file("two.json", crossing_instance(2))}).code == 0);
        CHECK(run({"oracle", s.file("one.json", crossing_instance(1))}).code == 1);

        std::vector<Edge> edges;
        for (Vertex u = 0; u < 9; ++u) {
            for (Vertex v = u + 1; v < 9; ++v) edges.push_back({u, v});
        }
        auto dense = s.file("dense.json", io::serialize_instance({Digraph(9, edges), std::vector<Demand>(4, {0, 8}), 3}));
        auto r = run({"oracle", dense, "--cap", "10"});
        CHECK(r.code == 2);
        CHECK(r.err.find("resource exhausted") != std::string::npos);
        CHECK(run({"oracle", s.file("noc.json", io::serialize_instance({testing::diamond(), {}, std::nullopt}))}).code == 2);
    }

    TEST_CASE("gen-hard") {
        Scratch s;
        auto psi = s.file("psi.json", figure_psi_text());
        auto r = run({"gen-hard", psi, s.path("d.json"), "--map", s.path("map.json")});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("vertices: 300") != std::string::npos);
        CHECK(r.out.find("demands: 18") != std::string::npos);
        auto inst = io::parse_instance(io::read_file(s.path("d.json"))).instance();
        CHECK(inst.graph.num_vertices() == 300);
        CHECK(inst.demands.size() == 18);
        CHECK(io::read_file(s.path("map.json")).find("\"format\": \"kcr-hard-map\"") != std::string::npos);

        REQUIRE(run({"gen-hard", psi, s.path("d2.json"), "--map", s.path("map2.json")}).code == 0);
        CHECK(io::read_file(s.path("d.json")) == io::read_file(s.path("d2.json")));
        CHECK(io::read_file(s.path("map.json")) == io::read_file(s.path("map2.json")));

        CHECK(run({"gen-hard", psi, s.path("d3.json"), "--strict-regular"}).code == 2);
        std::string odd = figure_psi_text();
        odd.replace(odd.find("[1,3]"), 5, "[1,0]");
        auto r2 = run({"gen-hard", s.file("odd.json", odd), s.path("d4.json")});
        CHECK(r2.code == 2);
        CHECK(r2.err.find("not bipartite") != std::string::npos);
    }

    TEST_CASE("gen-random is deterministic per seed") {
        Scratch s;
        auto gen = [&](const std::string& name, const std::string& seed) {
            return run({"gen-random", "--n", "12", "--m", "20", "--k", "3", "--c", "2", "--seed", seed, s.path(name)});
        };
        REQUIRE(gen("a.json", "5").code == 0);
        REQUIRE(gen("b.json", "5").code == 0);
        REQUIRE(gen("c.json", "6").code == 0);
        CHECK(io::read_file(s.path("a.json")) == io::read_file(s.path("b.json")));
        CHECK(io::read_file(s.path("a.json")) != io::read_file(s.path("c.json")));
        auto f = io::parse_instance(io::read_file(s.path("a.json")));
        CHECK(f.graph.num_vertices() == 12);
        CHECK(f.graph.num_edges() == 20);
        CHECK(is_acyclic(f.graph));

        REQUIRE(run({"gen-random", "--n", "1", "--m", "0", "--k", "2", "--c", "1", s.path("tiny.json")}).code == 0);
        auto tiny = run({"solve", s.path("tiny.json")});
        CHECK(tiny.code == 1);
        REQUIRE(run({"gen-random", "--n", "1", "--m", "0", "--k", "2", "--c", "2", s.path("tiny2.json")}).code == 0);
        CHECK(run({"solve", s.path("tiny2.json")}).code == 0);
        CHECK(run({"gen-random", "--n", "3", "--m", "4", "--k", "1", "--c", "1", s.path("x.json")}).code == 2);
    }
}
