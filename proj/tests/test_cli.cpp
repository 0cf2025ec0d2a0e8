#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sgb/cli.hpp"
#include "sgb/planar.hpp"
#include "sgb/signed_graph.hpp"
#include "sgb/spc.hpp"

using namespace sgb;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("sgb-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string file(const std::string& name) const { return (dir / name).string(); }
    void put(const std::string& name, const std::string& text) const {
        std::ofstream out(file(name));
        out << text;
    }
    std::string get(const std::string& name) const {
        std::ifstream in(file(name));
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

const char* kCneg4 = "sg 4 4\n0 1 +\n1 2 +\n2 3 +\n3 0 -\n";

}  // namespace

TEST_CASE("neg-girth and exit codes") {
    TempDir td;
    td.put("c4.sg", kCneg4);
    CHECK(cli_run({"neg-girth", td.file("c4.sg")}) == 0);
    CHECK(cli_run({"neg-girth", td.file("missing.sg")}) == 2);
    CHECK(cli_run({"bogus-subcommand"}) == 2);
    CHECK(cli_run({"--help"}) == 0);
    CHECK(cli_run({"neg-girth", "--unknown-flag", td.file("c4.sg")}) == 2);
}

TEST_CASE("switch-equiv") {
    TempDir td;
    td.put("a.sg", kCneg4);
    td.put("b.sg", "sg 4 4\n0 1 -\n1 2 +\n2 3 +\n3 0 +\n");
    td.put("c.sg", "sg 4 4\n0 1 +\n1 2 +\n2 3 +\n3 0 +\n");
    CHECK(cli_run({"switch-equiv", td.file("a.sg"), td.file("b.sg")}) == 0);
    CHECK(cli_run({"switch-equiv", td.file("a.sg"), td.file("c.sg")}) == 1);
}

TEST_CASE("wide and expand") {
    TempDir td;
    td.put("tri.swg", "swg 3 3\n0 1 1\n1 2 1\n0 2 2\n");
    td.put("bad.swg", "swg 3 3\n0 1 1\n1 2 -1\n0 2 2\n");
    CHECK(cli_run({"wide", "--k", "2", td.file("tri.swg")}) == 0);
    CHECK(cli_run({"wide", "--k", "3", td.file("bad.swg")}) == 1);
    CHECK(cli_run({"expand", "--k", "2", td.file("tri.swg"), "-o", td.file("tri.sg")}) == 0);
    auto g = read_sg_file(td.file("tri.sg"));
    CHECK(g.n == 9);
    CHECK(*negative_girth(g) == 4);
}

TEST_CASE("spc emits the graph and its labels") {
    TempDir td;
    CHECK(cli_run({"spc", "3", "-o", td.file("spc3.sg")}) == 0);
    auto g = read_sg_file(td.file("spc3.sg"));
    CHECK(g.n == 8);
    CHECK(g.m() == 16);
    auto labels = td.get("spc3.sg.labels");
    CHECK(labels.find("0 0") == 0);
    int lines = 0;
    for (char c : labels)
        if (c == '\n') lines++;
    CHECK(lines == 16);
}

TEST_CASE("edc subcommand") {
    TempDir td;
    td.put("c4.sg", kCneg4);
    CHECK(cli_run({"edc", td.file("c4.sg"), "-o", td.file("edc.sg")}) == 0);
    auto g = read_sg_file(td.file("edc.sg"));
    CHECK(g.n == 8);
    CHECK(g.m() == 12);
}

TEST_CASE("list-cliques") {
    CHECK(cli_run({"list-cliques", "--t", "2", "--k", "2"}) == 0);
}

TEST_CASE("check-bound yes and no") {
    TempDir td;
    CHECK(cli_run({"spc", "3", "-o", td.file("spc3.sg")}) == 0);
    CHECK(cli_run({"check-bound", "--t", "3", "--k", "2", td.file("spc3.sg"), "-o", td.file("cert.json")}) == 0);
    auto cert = td.get("cert.json");
    CHECK(cert.find("\"cliques\"") != std::string::npos);
    int t = 0, k = 0;
    auto cs = certificate_from_json(cert, &t, &k);
    CHECK(cs.cliques.size() == 70);

    td.put("c4.sg", kCneg4);
    CHECK(cli_run({"check-bound", "--t", "2", "--k", "2", td.file("c4.sg"), "-o", td.file("cex.sg"), "--trace",
                   td.file("trace.json")}) == 1);
    auto cex = read_sg_file(td.file("cex.sg"));
    CHECK(!find_homomorphism(cex, read_sg_file(td.file("c4.sg"))).has_value());
    CHECK(td.get("trace.json").find("removals") != std::string::npos);

    // wrong girth is an input error
    td.put("c6.sg", "sg 6 6\n0 1 +\n1 2 +\n2 3 +\n3 4 +\n4 5 +\n5 0 -\n");
    CHECK(cli_run({"check-bound", "--t", "2", "--k", "2", td.file("c6.sg")}) == 2);
}

TEST_CASE("map against a certificate") {
    TempDir td;
    CHECK(cli_run({"spc", "3", "-o", td.file("spc3.sg")}) == 0);
    CHECK(cli_run({"check-bound", "--t", "3", "--k", "2", td.file("spc3.sg"), "-o", td.file("cert.json")}) == 0);
    td.put("c4.sg", kCneg4);
    CHECK(cli_run({"map", "--t", "3", "--k", "2", td.file("c4.sg"), td.file("spc3.sg"), "--certificate",
                   td.file("cert.json"), "-o", td.file("map.json")}) == 0);
    CHECK(td.get("map.json").find("\"image\"") != std::string::npos);

    // a graph with an odd cycle is rejected as unmappable
    td.put("tri.sg", "sg 3 3\n0 1 +\n1 2 +\n2 0 +\n");
    CHECK(cli_run({"map", "--t", "3", "--k", "2", td.file("tri.sg"), td.file("spc3.sg"), "--certificate",
                   td.file("cert.json"), "-o", td.file("m2.json")}) == 1);

    // disconnected inputs are mapped component by component
    td.put("disc.sg", "sg 6 5\n0 1 +\n1 2 +\n2 3 +\n3 0 -\n4 5 -\n");
    CHECK(cli_run({"map", "--t", "3", "--k", "2", td.file("disc.sg"), td.file("spc3.sg"), "--certificate",
                   td.file("cert.json"), "-o", td.file("m3.json")}) == 0);
}

TEST_CASE("hom oracle exit codes") {
    TempDir td;
    td.put("c4.sg", kCneg4);
    td.put("c2.sg", "sg 2 2\n0 1 +\n0 1 -\n");
    CHECK(cli_run({"hom", td.file("c4.sg"), td.file("c4.sg")}) == 0);
    CHECK(cli_run({"hom", td.file("c2.sg"), td.file("c4.sg")}) == 1);
}

TEST_CASE("edge-color subcommand") {
    TempDir td;
    td.put("digon.pm", "pm 2 4\n0 1\n0 1\n0 1\n0 1\nrot 0: 0 1 2 3\nrot 1: 3 2 1 0\n");
    CHECK(cli_run({"edge-color", "--k", "2", td.file("digon.pm"), "-o", td.file("colors.txt")}) == 0);
    auto colors = td.get("colors.txt");
    int lines = 0;
    for (char c : colors)
        if (c == '\n') lines++;
    CHECK(lines == 4);
    CHECK(colors.rfind("color 0 ", 0) == 0);

    // odd-cut violation yields the negative verdict
    td.put("bad.pm",
           "pm 6 12\n0 1\n0 1\n0 2\n0 2\n1 2\n1 4\n3 4\n3 4\n3 5\n3 5\n4 5\n2 5\n"
           "rot 0: 0 1 3 2\nrot 1: 5 1 0 4\nrot 2: 11 4 2 3\nrot 3: 7 6 8 9\n"
           "rot 4: 5 10 6 7\nrot 5: 9 8 10 11\n");
    CHECK(cli_run({"edge-color", "--k", "2", td.file("bad.pm")}) == 1);
}

TEST_CASE("contains-ok subcommand") {
    TempDir td;
    td.put("c4.sg", kCneg4);
    CHECK(cli_run({"contains-ok", "--k", "4", td.file("c4.sg")}) == 1);
    CHECK(cli_run({"contains-ok", "--k", "6", td.file("c4.sg")}) == 0);
}

TEST_CASE("emitted files reparse to equal structures") {
    TempDir td;
    CHECK(cli_run({"spc", "2", "-o", td.file("s.sg")}) == 0);
    auto text = td.get("s.sg");
    auto g = read_sg_file(td.file("s.sg"));
    CHECK(to_sg(g) == text);
}
