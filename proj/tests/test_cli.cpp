#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "sparsity/catalog.hpp"
#include "sparsity/graph.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = sparsity::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json parse_out(const Run& r) { return json::parse(r.out); }

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "sparsity_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("td") {
    auto r = invoke({"td", "named:P_4"});
    REQUIRE(r.code == 0);
    auto j = parse_out(r);
    CHECK(j["treedepth"] == 3);
    CHECK(j["witness_valid"] == true);
    CHECK(j["witness"]["height"] == 3);

    auto refused = invoke({"td", "--exact-limit", "5", "named:K_8"});
    CHECK(refused.code == 3);
    CHECK(refused.out.empty());
    auto e = json::parse(refused.err);
    CHECK(e["exit_code"] == 3);
    CHECK(e["error"] == "size_limit");

    auto big = invoke({"td", "-k", "10", "named:P_1000"});
    CHECK(big.code == 0);
    CHECK(parse_out(big)["decision"] == "yes");
    auto hard = invoke({"--budget", "1", "td", "-k", "6", "named:grid(5,5)"});
    CHECK(hard.code == 4);
}

TEST_CASE("count") {
    auto r = invoke({"count", "--pattern", "named:K_3", "named:Petersen"});
    REQUIRE(r.code == 0);
    CHECK(parse_out(r)["count"] == 0);
    auto b = invoke({"count", "--method", "bruteforce", "--pattern", "P_3", "K_4"});
    REQUIRE(b.code == 0);
    CHECK(parse_out(b)["count"] == 12);
    auto i = invoke({"count", "--mode", "induced", "--pattern", "P_3", "C_5"});
    CHECK(parse_out(i)["count"] == 5);
    CHECK(invoke({"count", "--mode", "minor", "--pattern", "P_3", "C_5"}).code == 2);
}

TEST_CASE("errors") {
    auto unknown = invoke({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(json::parse(unknown.err)["error"] == "usage");
    CHECK(invoke({"td", "--bogus", "K_3"}).code == 2);
    CHECK(invoke({"td", "no_such_graph_anywhere"}).code == 2);

    auto file = scratch("broken.el");
    std::ofstream(file) << "0 1\n1 2 3\n";
    auto parse = invoke({"td", file.string()});
    CHECK(parse.code == 1);
    auto e = json::parse(parse.err);
    CHECK(e["line"] == 2);
    CHECK(parse.err.find('\n') == parse.err.size() - 1);

    auto loop = scratch("loop.el");
    std::ofstream(loop) << "a a\n";
    CHECK(invoke({"td", loop.string()}).code == 1);
}

TEST_CASE("decompose and verify-ltd") {
    auto r = invoke({"decompose", "-p", "2", "grid(4,4)"});
    REQUIRE(r.code == 0);
    auto j = parse_out(r);
    CHECK(j["verified"] == true);
    auto file = scratch("coloring.json");
    std::ofstream(file) << r.out;
    auto v = invoke({"verify-ltd", "-p", "2", "--coloring", file.string(), "grid(4,4)"});
    CHECK(v.code == 0);
    CHECK(parse_out(v)["valid"] == true);

    auto bad = scratch("bad.json");
    std::ofstream(bad) << R"({"colors": [1, 2, 1, 2]})";
    auto f = invoke({"verify-ltd", "-p", "3", "--coloring", bad.string(), "P_4"});
    CHECK(f.code == 1);
    CHECK(parse_out(f)["violating_colors"] == json::array({1, 2}));
}

TEST_CASE("density") {
    auto r = invoke({"density", "--measure", "grad", "-r", "1", "named:Petersen"});
    REQUIRE(r.code == 0);
    auto j = parse_out(r);
    CHECK(j["value"] == "2/1");
    CHECK(j["witness_valid"] == true);
    CHECK(j["witness"]["branch_sets"].size() == 5);
    auto n0 = invoke({"density", "--measure", "nabla0", "K_4"});
    CHECK(parse_out(n0)["value"] == "3/2");
    auto lb = invoke({"density", "--measure", "topgrad", "--lower-bound", "-r", "1", "sub_2(K_4)"});
    CHECK(lb.code == 0);
    CHECK(parse_out(lb)["exact"] == false);
    CHECK(invoke({"density", "--measure", "topgrad", "-r", "1", "sub_2(K_4)"}).code == 3);

    auto csv = invoke({"density-profile", "--family", "trees", "-r", "1", "--sizes", "5,10"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("family,size", 0) == 0);
    auto js = invoke({"--format", "json", "density-profile", "--family", "grids", "--sizes", "3"});
    CHECK(parse_out(js)["rows"].size() == 1);
}

TEST_CASE("applications") {
    auto dn = invoke({"dncolor", "-n", "3", "C_6"});
    CHECK(parse_out(dn)["palette"] == 2);
    auto cover = invoke({"cover", "-r", "1", "Petersen"});
    REQUIRE(cover.code == 0);
    auto cj = parse_out(cover);
    CHECK(cj["valid"] == true);
    CHECK(cj["max_membership"] == 1);
    CHECK(cj["nabla0"] == "3/2");
    CHECK(parse_out(invoke({"oddset", "K_4"}))["size"] == 4);
    auto ch = invoke({"choosable", "-k", "2", "K_{2,4}"});
    CHECK(parse_out(ch)["choosable"] == false);
    auto scan = invoke({"scan", "--s", "5", "--t", "4", "--q", "2", "Petersen"});
    auto sj = parse_out(scan);
    CHECK(sj["patterns"][0]["found"] == "yes");
    CHECK(sj["patterns"][1]["found"] == "no");
    CHECK(sj["patterns"][2]["found"] == "no");
    CHECK(invoke({"scan", "Petersen"}).code == 2);
}

TEST_CASE("homomorphisms") {
    auto h = invoke({"hom", "K_3", "Clebsch"});
    CHECK(h.code == 0);
    CHECK(parse_out(h)["exists"] == false);
    auto c = invoke({"core", "C_4"});
    CHECK(parse_out(c)["order"] == 2);
    auto dir = scratch("family");
    fs::create_directories(dir);
    for (const char* name : {"C_5", "C_7", "Q_3", "K_4"})
        std::ofstream(dir / (std::string(name) + ".el")) << sparsity::serialize_edge_list(sparsity::named(name));
    auto d = invoke({"dual-check", "--pattern", "K_3", "--dual", "named:Clebsch", dir.string()});
    CHECK(d.code == 0);
    auto dj = parse_out(d);
    CHECK(dj["holds"] == "yes");
    CHECK(dj["instances"].size() == 4);
    auto broken = invoke({"dual-check", "--pattern", "K_3", "--dual", "K_2", "C_5"});
    CHECK(broken.code == 1);
}

TEST_CASE("gen") {
    auto clebsch = invoke({"gen", "named:Clebsch"});
    CHECK(std::count(clebsch.out.begin(), clebsch.out.end(), '\n') == 40);
    auto a = invoke({"gen", "random_tree(10, 7)"}), b = invoke({"gen", "random_tree(10, 7)"});
    CHECK(a.out == b.out);
    auto g = sparsity::parse_edge_list(invoke({"gen", "girth5(20, 1)"}).out);
    CHECK(sparsity::girth(g) >= 5);
    auto seeded = invoke({"--seed", "7", "gen", "random_tree(10)"});
    CHECK(seeded.out == a.out);
    CHECK(invoke({"gen", "Heawood"}).code == 2);
}

TEST_CASE("threads do not change output") {
    for (std::vector<std::string> cmd :
         {std::vector<std::string>{"count", "--pattern", "C_4", "grid(5,5)"},
          {"decompose", "-p", "3", "planar(40,3)"},
          {"dual-check", "--pattern", "K_3", "--dual", "Clebsch", "C_5", "C_7", "K_4"}}) {
        auto one = cmd, four = cmd;
        one.insert(one.begin(), {"--threads", "1"});
        four.insert(four.begin(), {"--threads", "4"});
        CHECK(invoke(one).out == invoke(four).out);
    }
}

}  // TEST_SUITE
