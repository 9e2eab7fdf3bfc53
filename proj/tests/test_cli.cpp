#include <doctest.h>

#include <netform/io.hpp>
#include <netform/network.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace
{
    struct Result
    {
        int code;
        std::string out;
        std::string err;
    };

    auto slurp(const fs::path & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    void put(const fs::path & path, const std::string & text)
    {
        std::ofstream(path, std::ios::binary) << text;
    }

    class Workdir
    {
        public:
            Workdir()
            {
                _root = fs::temp_directory_path() / ("netform_cli_" + std::to_string(::getpid()));
                fs::remove_all(_root);
                fs::create_directories(_root);
            }
            ~Workdir() { fs::remove_all(_root); }

            auto operator/ (const std::string & name) const -> fs::path { return _root / name; }

            auto run(const std::string & args) const -> Result
            {
                const char * cli = NETFORM_CLI;
                auto out = _root / "stdout.txt", err = _root / "stderr.txt";
                std::string cmd = std::string{"'"} + cli + "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
                int status = std::system(cmd.c_str());
                REQUIRE(WIFEXITED(status));
                return {WEXITSTATUS(status), slurp(out), slurp(err)};
            }

        private:
            fs::path _root;
    };

    const char * kScenario =
        "group_sizes = 3 5\n"
        "F = 0.4\n"
        "delta = 0.5\n"
        "cost = 0.2\n"
        "seed = 11\n";
}

TEST_CASE("eval reports payoffs and welfare")
{
    Workdir w;
    put(w / "s.txt", kScenario);
    put(w / "cliques.edges", "0 1\n0 2\n1 2\n3 4\n3 5\n3 6\n3 7\n4 5\n4 6\n4 7\n5 6\n5 7\n6 7\n");
    put(w / "empty.edges", "");

    auto r = w.run("eval --scenario " + (w / "s.txt").string() + " --network " + (w / "cliques.edges").string()
        + " --out " + (w / "payoffs.csv").string());
    CHECK(r.code == 0);
    CHECK(r.out.find("welfare 7.8\n") != std::string::npos);
    CHECK(r.out.find("pairwise stable no") != std::string::npos);
    auto csv = slurp(w / "payoffs.csv");
    CHECK(csv.rfind("node,group,degree,payoff\n0,0,2,0.6\n", 0) == 0);
    CHECK(csv.find("\n7,1,4,1.2\n") != std::string::npos);

    r = w.run("eval --scenario " + (w / "s.txt").string() + " --network " + (w / "empty.edges").string());
    CHECK(r.code == 0);
    CHECK(r.out.find("welfare 0\n") != std::string::npos);

    put(w / "bad.edges", "0 1\n2 x\n");
    r = w.run("eval --scenario " + (w / "s.txt").string() + " --network " + (w / "bad.edges").string());
    CHECK(r.code == 1);
    CHECK(r.err.find("bad.edges:2") != std::string::npos);

    put(w / "range.edges", "0 9\n");
    r = w.run("eval --scenario " + (w / "s.txt").string() + " --network " + (w / "range.edges").string());
    CHECK(r.code == 1);
}

TEST_CASE("classify prints regimes and boundaries")
{
    Workdir w;
    put(w / "s.txt", kScenario);
    auto r = w.run("classify --scenario " + (w / "s.txt").string());
    CHECK(r.code == 0);
    CHECK(r.out.find("stable boundaries 0.2 0.4 0.533333333333 0.8\n") != std::string::npos);
    CHECK(r.out.find("stable regime BoundaryTie(0.4)  interconnections 1..2") != std::string::npos);
    CHECK(r.out.find("efficient boundaries 0.0666666666667 0.228571428571 0.8\n") != std::string::npos);

    put(w / "costly.txt", "group_sizes = 3 5\nF = 0.4\ndelta = 0.5\ncost = 0.3\n");
    r = w.run("classify --scenario " + (w / "costly.txt").string());
    CHECK(r.code == 1);
    CHECK(r.err.find("outside the closed-form range") != std::string::npos);

    put(w / "three.txt", "group_sizes = 3 3 3\nF = 0.3 0.3 0.3\ndelta = 0.5\ncost = 0.2\n");
    r = w.run("classify --scenario " + (w / "three.txt").string());
    CHECK(r.code == 0);
    CHECK(r.out.find("pair 0-1") != std::string::npos);
    CHECK(r.out.find("star centred on 2") != std::string::npos);
}

TEST_CASE("sweep output is stable across runs and worker counts")
{
    Workdir w;
    put(w / "s.txt", kScenario);
    auto args = "sweep --scenario " + (w / "s.txt").string() + " --param F12 --from 0 --to 1 --step 0.1 --out ";
    REQUIRE(w.run(args + (w / "a.csv").string() + " --workers 1 --svg " + (w / "a.svg").string()).code == 0);
    REQUIRE(w.run(args + (w / "b.csv").string() + " --workers 3").code == 0);
    auto a = slurp(w / "a.csv");
    CHECK(a == slurp(w / "b.csv"));
    CHECK(a.rfind("F12,stable_inter,efficient_inter,stable_min_welfare,efficient_welfare,poa,method\n", 0) == 0);
    CHECK(std::count(a.begin(), a.end(), '\n') == 12);
    CHECK(slurp(w / "a.svg").find("<svg") != std::string::npos);

    CHECK(w.run("sweep --scenario " + (w / "s.txt").string() + " --param gamma --from 0 --to 1 --step 0.1").code == 1);
    CHECK(w.run("sweep --scenario " + (w / "s.txt").string() + " --param F12 --from 0 --to 1 --step 0").code == 1);
}

TEST_CASE("stable and efficient write edge lists that read back")
{
    Workdir w;
    put(w / "s.txt", "group_sizes = 3 5\nF = 0.3\ndelta = 0.5\ncost = 0.2\n");
    auto r = w.run("stable --scenario " + (w / "s.txt").string() + " --out " + (w / "stable").string());
    REQUIRE(r.code == 0);
    auto summary = slurp(w / "stable" / "summary.csv");
    CHECK(summary.rfind("index,edge_count,inter_count,welfare\n0,14,1,", 0) == 0);
    auto first = netform::read_edge_list_file(w / "stable" / "network_000000.edges", 8);
    CHECK(first.edge_count() == 14);
    std::ostringstream again;
    netform::write_edge_list(again, first);
    CHECK(again.str() == slurp(w / "stable" / "network_000000.edges"));

    r = w.run("efficient --scenario " + (w / "s.txt").string() + " --out " + (w / "eff").string());
    REQUIRE(r.code == 0);
    CHECK(fs::exists(w / "eff" / "summary.csv"));
    CHECK(fs::exists(w / "eff" / "network_000000.edges"));

    r = w.run("poa --scenario " + (w / "s.txt").string());
    CHECK(r.code == 0);
    CHECK(r.out.find("price of anarchy") != std::string::npos);

    CHECK(w.run("stable --scenario " + (w / "s.txt").string()).code == 1);
}

TEST_CASE("caps exceeded exit with code 2")
{
    Workdir w;
    put(w / "big.txt", "group_sizes = 5 5\nF = 0.3\ndelta = 0.5\ncost = 0.2\n");
    auto r = w.run("stable --scenario " + (w / "big.txt").string() + " --out " + (w / "x").string());
    CHECK(r.code == 2);
    CHECK(r.err.find("25") != std::string::npos);
    CHECK(w.run("poa --scenario " + (w / "big.txt").string() + " --space full").code == 2);
}

TEST_CASE("dynamics from a script and from a seed")
{
    Workdir w;
    put(w / "s.txt", kScenario);
    put(w / "script.txt", "0 1\n1 2\n0 2\n0 3\n");
    auto r = w.run("dynamics --scenario " + (w / "s.txt").string() + " --script " + (w / "script.txt").string()
        + " --out " + (w / "trace.csv").string() + " --final " + (w / "final.edges").string());
    CHECK(r.code == 0);
    CHECK(slurp(w / "trace.csv") == "step,i,j,action,intra_count,inter_count\n"
        "1,0,1,added,1,0\n2,1,2,added,2,0\n3,0,2,added,3,0\n4,0,3,added,3,1\n");
    CHECK(slurp(w / "final.edges") == "0 1\n0 2\n0 3\n1 2\n");
    CHECK(r.out.find("converged no") != std::string::npos);

    auto seeded = "dynamics --scenario " + (w / "s.txt").string() + " --max-steps 2000 --out ";
    REQUIRE(w.run(seeded + (w / "t1.csv").string()).code == 0);
    REQUIRE(w.run(seeded + (w / "t2.csv").string()).code == 0);
    CHECK(slurp(w / "t1.csv") == slurp(w / "t2.csv"));
    REQUIRE(w.run(seeded + (w / "t3.csv").string() + " --seed 12").code == 0);
    CHECK(slurp(w / "t1.csv") != slurp(w / "t3.csv"));

    put(w / "start.edges", "0 3\n");
    r = w.run("dynamics --scenario " + (w / "s.txt").string() + " --invariant-check --start " + (w / "start.edges").string());
    CHECK(r.code == 1);

    put(w / "noseed.txt", "group_sizes = 3 5\nF = 0.4\ndelta = 0.5\ncost = 0.2\n");
    CHECK(w.run("dynamics --scenario " + (w / "noseed.txt").string()).code == 1);
}
