#include "cli.hpp"
#include "doctest.h"
#include "support.hpp"

#include "eulerflag/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace testing;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(EULERFLAG_DATA) + "/" + name; }

std::string scratch(const std::string& name, const std::string& contents) {
    auto path = std::filesystem::temp_directory_path() / ("eulerflag_test_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

}  // namespace

TEST_CASE("documented examples") {
    Run psi = cli({"psi", "--poset", data("onegon.json"), "--basis", "cd"});
    CHECK(psi.code == 0);
    CHECK(psi.out == "c^2 - d\n");
    Run check = cli({"check", "eulerian", "--poset", data("chain3_classical.json")});
    CHECK(check.code == 1);
    CHECK(check.out == "FAIL interval (x,z)\n");
    Run phi = cli({"phi", "--n", "3", "--k", "2", "--i", "1", "--method", "recursive"});
    CHECK(phi.code == 0);
    CHECK(phi.out == "dc\n");
}

TEST_CASE("exit codes") {
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    Run missing = cli({"psi", "--poset", data("no_such_file.json")});
    CHECK(missing.code == 2);
    CHECK_FALSE(missing.err.empty());
    CHECK(missing.out.empty());
    CHECK(cli({"psi", "--poset", data("triangle.json")}).code == 2);
    CHECK(cli({"psi", "--poset", scratch("broken.json", "{\"elements\": [")}).code == 2);
    CHECK(cli({"psi", "--poset", data("onegon.json"), "--method", "guess"}).code == 2);
    CHECK(cli({"psi", "--poset", data("chain4_classical.json"), "--basis", "cd"}).code == 2);
    CHECK(cli({"check", "eulerian", "--poset", data("onegon.json")}).out == "PASS\n");
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("psi and flags") {
    for (const char* method : {"chains", "recursion", "mobius"})
        CHECK(cli({"psi", "--poset", data("onegon.json"), "--method", method}).out == "a^2 + b^2\n");
    CHECK(cli({"flags", "f", "--poset", data("onegon.json")}).out == "{} 1\n{1} 1\n{2} 1\n{1,2} 2\n");
    CHECK(cli({"flags", "h", "--poset", data("onegon.json")}).out == "{} 1\n{1} 0\n{2} 0\n{1,2} 1\n");
    CHECK(cli({"qsym", "--poset", data("onegon.json")}).out == "2*M(1,1,1) + M(1,2) + M(2,1) + M(3)\n");
}

TEST_CASE("checks") {
    CHECK(cli({"check", "eulerian", "--poset", data("chain4_classical.json")}).out == "FAIL interval (0,e)\n");
    for (const char* kind : {"ds", "coalgebra", "hsym"})
        CHECK(cli({"check", kind, "--poset", data("onegon.json")}).code == 0);
    CHECK(cli({"check", "alexander", "--poset", data("onegon.json"), "--ranks", "1"}).code == 0);
    CHECK(cli({"check", "alexander", "--poset", data("onegon.json"), "--ranks", "7"}).code == 2);
    CHECK(cli({"check", "hopf", "--poset", data("onegon.json"), "--other", data("twogon.json")}).out == "PASS\n");
    CHECK(cli({"check", "wednesday", "--complex", data("triangle.json"), "--n", "2"}).code == 0);
    CHECK(cli({"check", "local", "--subdivision", data("split_edge.json"), "--n", "2"}).out == "PASS\n");
    CHECK(cli({"check", "inclusion-exclusion", "--complex", data("path.json"), "--other-complex",
               data("triangle.json"), "--n", "3"})
              .code == 0);
    CHECK(cli({"check", "hopf", "--poset", data("onegon.json")}).code == 2);
}

TEST_CASE("emitted posets round-trip") {
    const std::string onegon = data("onegon.json"), twogon = data("twogon.json");
    std::vector<std::pair<std::vector<std::string>, QuasiGradedPoset>> cases{
        {{"op", "dual", "--poset", onegon}, dual(one_gon())},
        {{"op", "product", "--poset", onegon, "--other", twogon},
         cartesian_product(one_gon(), poset_from_json(read_file(twogon)))},
        {{"op", "stanley", "--poset", onegon, "--other", onegon}, stanley_product(one_gon(), one_gon())},
        {{"op", "pyramid", "--poset", onegon}, pyramid(one_gon()).poset},
        {{"op", "zip", "--poset", twogon, "--x", "e1", "--y", "e2", "--z", "v1"},
         zip_zipper(poset_from_json(read_file(twogon)), {"e1", "e2", "v1"}).poset},
        {{"op", "merge", "--poset", twogon, "--x", "e1", "--y", "e2"},
         merge_equal_upset(poset_from_json(read_file(twogon)), "e1", "e2")},
        {{"semi", "--complex", data("mixed.json"), "--n", "3", "--emit-poset"},
         semisuspension(complex_of({{"a", "b", "c"}, {"c", "d"}}), 3)},
        {{"complete", "--poset", data("chain3_classical.json")}, complete_eulerian(three_chain().to_spec())},
        {{"select", "--poset", onegon, "--ranks", "2"}, rank_selection(one_gon(), {2})},
        {{"catalog", "ngon", "--n", "5", "--variant", "2", "--emit-poset"}, ngon_poset(5, 2)},
        {{"omega", "4", "--emit-poset"}, omega_poset(4)},
    };
    for (const auto& [args, expected] : cases) {
        CAPTURE(args[1]);
        Run run = cli(args);
        REQUIRE(run.code == 0);
        QuasiGradedPoset back = poset_from_json(run.out);
        CHECK(back == expected);
        CHECK(poset_to_json(back) + "\n" == run.out);
        CHECK(cli(args).out == run.out);
    }
    std::string zipped = scratch("zipped.json", cli({"op", "zip", "--poset", twogon, "--x", "e1", "--y", "e2", "--z", "v1"}).out);
    CHECK(cli({"psi", "--poset", zipped, "--basis", "cd"}).out == "c^2 - d\n");
    CHECK(cli({"op", "zip", "--poset", twogon, "--x", "e1", "--y", "v2", "--z", "v1"}).code == 2);
}

TEST_CASE("zippers and catalog") {
    Run z = cli({"zippers", "--poset", data("twogon.json")});
    CHECK(z.out.find("x=e1 y=e2 z=v1\n") != std::string::npos);
    CHECK(cli({"omega", "3"}).out == "c^3 - cd - dc\n");
    CHECK(cli({"catalog", "boolean", "--n", "3"}).out == "c^2 + d\n");
    CHECK(cli({"catalog", "ngon", "--n", "5", "--variant", "3"}).out == "c^2 + 3*d\n");
    CHECK(cli({"catalog", "manifold", "--n", "2", "--chi", "2"}).out == "2*c^2 - 4*d\n");
    CHECK(cli({"catalog", "simple-chain", "--f", "4,4"}).out == "c^2 + 2*d\n");
    CHECK(cli({"catalog", "ngon", "--n", "5", "--variant", "4"}).code == 2);
}

TEST_CASE("semisuspensions, shellings and the phi table") {
    const std::string mixed = data("mixed.json");
    std::string direct = cli({"semi", "--complex", mixed, "--n", "3"}).out;
    CHECK(cli({"semi", "--complex", mixed, "--n", "3", "--via", "intersections"}).out == direct);
    CHECK(cli({"semi", "--complex", mixed, "--n", "3", "--via", "h-triangle", "--order", "1,2"}).out == direct);
    CHECK(cli({"semi", "--complex", mixed, "--n", "3", "--via", "h-triangle"}).code == 2);
    CHECK(cli({"semi", "--complex", data("triangle.json"), "--n", "3"}).out == "c^3 + dc\n");

    Run tri = cli({"shell", "--complex", data("triangle.json"), "--order", "{1,2},{1,3},{2,3}"});
    CHECK(tri.code == 0);
    CHECK(tri.out == "h(2,0) = 1\nh(2,1) = 1\nh(2,2) = 1\n");
    CHECK(cli({"shell", "--complex", mixed, "--order", "1,2"}).out == "h(2,1) = 1\nh(3,0) = 1\n");
    Run bad = cli({"shell", "--complex", scratch("two_edges.json", R"({"facets": [["1","2"],["3","4"]]})"), "--order",
                   "1,2"});
    CHECK(bad.code == 1);
    CHECK(bad.out == "FAIL position 2 facet {3,4}\n");
    CHECK(cli({"shell", "--complex", mixed, "--order", "1,9"}).code == 2);

    Run table = cli({"phitable", "--n", "2"});
    CHECK(table.out == "2 0 0: c^2 - 2*d\n2 1 0: c^2 - d\n2 1 1: d\n2 2 0: c^2\n2 2 1: d\n2 2 2: 0\n");
}
