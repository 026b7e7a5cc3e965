#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ccc_cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = ccc::cli::cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// A fresh scratch directory per test case.
struct Scratch {
    fs::path dir;
    Scratch() {
        static int counter = 0;
        dir = fs::temp_directory_path() / ("cccurve-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

const char* kSmallGraph =
    "# Directed graph\n"
    "1 2\n2 3\n3 1\n3 4\n4 5\n5 3\n10 3\n";

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("ccc writes a curve and its metadata sidecar") {
        Scratch s;
        write(s / "g.txt", kSmallGraph);
        const Run r = run({"ccc", "--graph", s / "g.txt", "--measure-a", "pagerank:c=0.85", "--measure-b", "indegree",
                           "--seed", "7", "--out", s / "curve.csv"});
        REQUIRE_MESSAGE(r.code == 0, r.err);
        const std::string csv = slurp(s / "curve.csv");
        CHECK(csv.rfind("x,ccc\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
        const auto meta = nlohmann::json::parse(slurp(s / "curve.json"));
        CHECK(meta["measure_a"] == "pagerank(c=0.85,tol=1e-10,max_iter=10000)");
        CHECK(meta["measure_b"] == "indegree");
        CHECK(meta["seed"] == 7);
        CHECK(meta["tie_rule"] == "hierarchical");
        CHECK(meta["graph"]["vertices"] == 6);
        CHECK(meta["graph"]["hash"].get<std::string>().size() == 16);
    }

    TEST_CASE("randomized subcommands demand a seed") {
        const Run gen = run({"generate", "--model", "directed_cm:n=1000,alpha=3", "--out", "unused.txt"});
        CHECK(gen.code == 2);
        CHECK(gen.err.find("--seed") != std::string::npos);
        CHECK(run({"ccc", "--graph", "g", "--measure-a", "indegree", "--measure-b", "outdegree", "--out", "c.csv"}).code == 2);
        CHECK(run({"ensemble", "--model", "directed_cm:n=10", "--measure-a", "indegree", "--measure-b", "outdegree",
                   "--out", "e.csv"})
                  .code == 2);
    }

    TEST_CASE("plot renders the requested references") {
        Scratch s;
        write(s / "curve.csv", "x,ccc\n0.5,0.5\n1,1\n");
        const Run r = run({"plot", "--curve", s / "curve.csv", "--refs", "identity,square", "--out", s / "fig.svg"});
        REQUIRE_MESSAGE(r.code == 0, r.err);
        const std::string svg = slurp(s / "fig.svg");
        CHECK(svg.find("reference identity") != std::string::npos);
        CHECK(svg.find("reference square") != std::string::npos);
        CHECK(svg.find("reference opposed") == std::string::npos);
        CHECK(svg.find(">curve</text>") != std::string::npos);  // label defaults to the file stem
    }

    TEST_CASE("usage errors exit 2, IO and parse failures exit 1") {
        Scratch s;
        CHECK(run({}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({"ccc", "--bogus"}).code == 2);
        write(s / "g.txt", kSmallGraph);
        CHECK(run({"centrality", "--graph", s / "g.txt", "--measure", "pagerank:damping=0.5", "--out", s / "x.csv"}).code == 2);
        CHECK(run({"ccc", "--graph", s / "g.txt", "--measure-a", "indegree", "--measure-b", "indegree", "--seed", "1",
                   "--tie-rule", "coinflip", "--out", s / "x.csv"})
                  .code == 2);
        CHECK(run({"generate", "--model", "directed_cm:n=10,alpha=0.5", "--seed", "1", "--out", s / "x.txt"}).code == 2);
        CHECK(run({"plot", "--out", s / "x.svg"}).code == 2);
        CHECK(run({"plot", "--curve", s / "g.txt", "--refs", "diagonal", "--out", s / "x.svg"}).code == 2);

        const Run missing = run({"centrality", "--graph", s / "nope.txt", "--measure", "indegree", "--out", s / "x.csv"});
        CHECK(missing.code == 1);
        CHECK(missing.err.rfind("cccurve: io:", 0) == 0);

        write(s / "bad.txt", "1 2\n3 4 5\n");
        const Run bad = run({"centrality", "--graph", s / "bad.txt", "--measure", "indegree", "--out", s / "x.csv"});
        CHECK(bad.code == 1);
        CHECK(bad.err.find("line 2") != std::string::npos);

        const Run unwritable = run({"centrality", "--graph", s / "g.txt", "--measure", "indegree", "--out",
                                    s / "no-such-dir/x.csv"});
        CHECK(unwritable.code == 1);

        CHECK(run({"plot", "--curve", s / "g.txt", "--out", s / "x.svg"}).code == 1);  // not a curve CSV
    }

    TEST_CASE("help exits 0") {
        const Run r = run({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("ensemble") != std::string::npos);
    }

    TEST_CASE("identical command lines give byte-identical outputs") {
        Scratch s;
        auto twice = [&](std::vector<std::string> args, const std::string& out) {
            args.push_back("--out");
            args.push_back(s / ("a-" + out));
            REQUIRE(run(args).code == 0);
            args.back() = s / ("b-" + out);
            REQUIRE(run(args).code == 0);
            CHECK(slurp(s / ("a-" + out)) == slurp(s / ("b-" + out)));
            return s / ("a-" + out);
        };
        const std::string graph = twice({"generate", "--model", "directed_cm:n=2000,alpha=2.5", "--seed", "3"}, "g.txt");
        twice({"centrality", "--graph", graph, "--measure", "betweenness:k=4", "--threads", "3"}, "bt.csv");
        twice({"ccc", "--graph", graph, "--measure-a", "katz", "--measure-b", "harmonic", "--seed", "5"}, "c.csv");
        twice({"ensemble", "--model", "undirected_cm:degrees=50x3+40x4+30x5", "--measure-a", "degree", "--measure-b",
               "closeness", "--replicates", "4", "--seed", "11", "--threads", "2"},
              "e.csv");

        // Thread count never changes the bytes.
        REQUIRE(run({"ensemble", "--model", "undirected_cm:degrees=50x3+40x4+30x5", "--measure-a", "degree",
                     "--measure-b", "closeness", "--replicates", "4", "--seed", "11", "--threads", "1", "--out",
                     s / "serial.csv"})
                    .code == 0);
        CHECK(slurp(s / "serial.csv") == slurp(s / "a-e.csv"));
        CHECK(slurp(s / "serial.json") == slurp(s / "a-e.json"));
    }

    TEST_CASE("curve and summary CSVs feed straight into plot") {
        Scratch s;
        REQUIRE(run({"generate", "--model", "graphon:kernel=threshold,n=300", "--seed", "1", "--out", s / "g.txt"}).code == 0);
        REQUIRE(run({"ccc", "--graph", s / "g.txt", "--measure-a", "indegree", "--measure-b", "pagerank", "--seed", "2",
                     "--out", s / "c.csv"})
                    .code == 0);
        REQUIRE(run({"ensemble", "--model", "graphon:kernel=product,n=200", "--measure-a", "indegree", "--measure-b",
                     "pagerank", "--replicates", "3", "--seed", "4", "--out", s / "e.csv"})
                    .code == 0);
        const Run plot = run({"plot", "--curve", s / "c.csv", "--summary", s / "e.csv", "--label", "single",
                              "--label", "band", "--title", "round trip", "--out", s / "fig.svg"});
        REQUIRE_MESSAGE(plot.code == 0, plot.err);
        const std::string svg = slurp(s / "fig.svg");
        CHECK(svg.find(">single</text>") != std::string::npos);
        CHECK(svg.find(">band</text>") != std::string::npos);
        CHECK(svg.find("class=\"band\"") != std::string::npos);
        CHECK(run({"plot", "--curve", s / "c.csv", "--label", "a", "--label", "b", "--out", s / "x.svg"}).code == 2);
    }

    TEST_CASE("ingest converts SNAP to the binary cache without changing results") {
        Scratch s;
        write(s / "g.txt", kSmallGraph);
        REQUIRE(run({"ingest", "--input", s / "g.txt", "--out", s / "g.ccg"}).code == 0);
        REQUIRE(run({"centrality", "--graph", s / "g.txt", "--measure", "pagerank", "--out", s / "a.csv"}).code == 0);
        REQUIRE(run({"centrality", "--graph", s / "g.ccg", "--measure", "pagerank", "--out", s / "b.csv"}).code == 0);
        CHECK(slurp(s / "a.csv") == slurp(s / "b.csv"));
        CHECK(slurp(s / "a.json") == slurp(s / "b.json"));
        CHECK(slurp(s / "a.csv").rfind("vertex,score\n1,", 0) == 0);

        const Run undirected = run({"ingest", "--input", s / "g.txt", "--undirected", "--out", s / "u.txt"});
        CHECK(undirected.code == 0);
        CHECK(undirected.out.find("directed=no") != std::string::npos);
        CHECK(run({"ingest", "--input", s / "g.txt", "--directed", "--undirected", "--out", s / "u.txt"}).code == 2);
    }
}
