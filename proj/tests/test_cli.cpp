#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_lib.hpp"
#include "doctest.h"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = toric::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data_path(const std::string& name) {
    return std::string(TORICMIRROR_TEST_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("charges report matches the documented example") {
    CliResult r = run_cli({"lg", "charges", "--expr", "x^3*y + x*y^5"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("\"q\":[\"2/7\",\"1/7\"]") != std::string::npos);
    CHECK(r.out.find("\"d\":7") != std::string::npos);
}

TEST_CASE("critical count of the stored mirror matches the documented example") {
    CliResult r = run_cli({"hv", "count", "--file", data_path("p2_mirror.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"count\":3") != std::string::npos);
    CHECK(r.out.find("\"degenerate\":false") != std::string::npos);
}

TEST_CASE("polar dual of the stored simplex matches the documented example") {
    CliResult r = run_cli({"polytope", "dual", "--file", data_path("simplex3a.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"dim\":2,\"vertices\":[[-1,-1],[0,1],[1,0]]}\n");
}

TEST_CASE("exit code protocol") {
    CHECK(run_cli({"lg", "charges", "--expr", "x^2 + y^2"}).code == 0);

    CliResult domain = run_cli({"lg", "charges", "--expr", "x^2 + x"});
    CHECK(domain.code == 1);
    CHECK(domain.out.empty());
    CHECK(domain.err.find("\"error\":\"NotSquare\"") != std::string::npos);
    CHECK(domain.err.find("\"detail\":") != std::string::npos);

    CHECK(run_cli({"nosuch"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"lg", "charges", "--bogus", "1"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("missing input is a structured domain error") {
    CliResult r = run_cli({"lg", "charges"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("\"error\":\"ParseError\"") != std::string::npos);
    CHECK(r.err.find("--expr or --file") != std::string::npos);

    CliResult bad = run_cli({"polytope", "dual", "--file", data_path("no_such_file.json")});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("\"error\":\"ParseError\"") != std::string::npos);
}

TEST_CASE("byte-identical output across repeated runs") {
    const std::vector<std::string> args = {"statespace", "bhk", "--expr", "x^3*y + x*y^5",
                                           "--group", "J"};
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"count\":9") != std::string::npos);
}

TEST_CASE("group tokens select the named subgroups") {
    CHECK(run_cli({"group", "generate", "--expr", "x^3*y + x*y^5", "--group", "max"})
              .out.find("\"order\":14") != std::string::npos);
    CHECK(run_cli({"group", "generate", "--expr", "x^3*y + x*y^5", "--group", "J"})
              .out.find("\"order\":7") != std::string::npos);
    CHECK(run_cli({"group", "generate", "--expr", "x^3*y + x*y^5", "--group", "trivial"})
              .out.find("\"order\":1") != std::string::npos);
    CHECK(run_cli({"group", "generate", "--expr", "x^3 + y^3", "--group", "1/3,2/3"})
              .out.find("\"order\":3") != std::string::npos);
    CliResult bad = run_cli({"group", "generate", "--expr", "x^3 + y^3", "--group", "1/2,0"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("NotASymmetry") != std::string::npos);
}

TEST_CASE("degenerate polynomial is rejected by the mirror table") {
    CliResult r = run_cli({"statespace", "bhk", "--expr", "x^2*y + y", "--group", "J"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("\"error\":\"NotNondegenerate\"") != std::string::npos);
}

TEST_CASE("fan subcommands run on the stored projective plane fan") {
    CliResult analyze = run_cli({"fan", "analyze", "--file", data_path("p2_fan.json")});
    CHECK(analyze.code == 0);
    CHECK(analyze.out.find("\"valid\":true") != std::string::npos);
    CHECK(analyze.out.find("\"smooth\":true") != std::string::npos);
    CHECK(analyze.out.find("\"complete\":true") != std::string::npos);

    CliResult charge = run_cli({"fan", "charge", "--file", data_path("p2_fan.json")});
    CHECK(charge.out.find("\"columns\":[[1,1,1]]") != std::string::npos);

    CliResult cg = run_cli({"fan", "classgroup", "--file", data_path("p2_fan.json")});
    CHECK(cg.out.find("\"free_rank\":1") != std::string::npos);
    CHECK(cg.out.find("\"torsion\":[]") != std::string::npos);

    CliResult sub = run_cli({"fan", "subdivides", "--file", data_path("p2_fan.json"),
                             "--coarse", data_path("p2_fan.json")});
    CHECK(sub.out.find("\"subdivides\":true") != std::string::npos);
}

TEST_CASE("anticanonical divisor polytope of the plane is the stored simplex") {
    CliResult div = run_cli({"polytope", "divisor", "--file", data_path("p2_fan.json"),
                             "--divisor", "1,1,1"});
    CHECK(div.code == 0);
    CHECK(div.out == "{\"dim\":2,\"vertices\":[[-1,-1],[-1,2],[2,-1]]}\n");

    CliResult refl = run_cli({"polytope", "reflexive", "--file", data_path("simplex3a.json")});
    CHECK(refl.out.find("\"reflexive\":true") != std::string::npos);
}

TEST_CASE("hv mirror report carries constraints and the solved superpotential") {
    CliResult r = run_cli({"hv", "mirror", "--charges", "1;1;1", "--names", "q"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"param\":\"q\"") != std::string::npos);
    CHECK(r.out.find("\"text\":\"q/(x2*x3) + x2 + x3\"") != std::string::npos);

    CliResult phases = run_cli({"hv", "phases", "--charges", "1,1,1,-3"});
    CHECK(phases.out.find("\"negative\":\"[C^3/Z_3]\"") != std::string::npos);
    CHECK(phases.out.find("\"positive\":\"O_{P(1,1,1)}(-3)\"") != std::string::npos);

    CliResult cy = run_cli({"hv", "batyrev-cy", "--nvars", "5"});
    CHECK(cy.out.find("\"coincide\":true") != std::string::npos);
}

TEST_CASE("output lands in the --out file instead of stdout") {
    const std::string path = "cli_out_test.json";
    CliResult r = run_cli({"wps", "gorenstein", "--weights", "1,2,3", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    std::remove(path.c_str());
    CHECK(contents == "{\"gorenstein\":true,\"total\":6,\"weights\":[1,2,3]}\n");
}

TEST_CASE("weighted projective reports agree on the inertia dimension") {
    CliResult cr = run_cli({"wps", "chenruan", "--weights", "1,2,3"});
    CHECK(cr.out.find("\"total\":6") != std::string::npos);
    CHECK(cr.out.find("{\"phase\":\"1/2\",\"weights\":[2]}") != std::string::npos);
}
