#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "liecoh/catalog.hpp"
#include "liecoh/errors.hpp"

using namespace liecoh;

namespace {

std::string data_dir() {
    if (const char* env = std::getenv("LIECOH_DATA")) return env;
    return "data";
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("parses entries with assertions and expectations") {
    auto entries = parse_catalog(
        "# comment\n"
        "kt: (0,0,0,12) ; lattice_asserted=true ; source=oracle ; expected_betti=1,3,4,3,1 ; "
        "expected_verdict=SYMPLECTIC\n"
        "\n"
        "plain: (0,0,12)\n");
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "kt");
    CHECK(entries[0].lattice_asserted);
    CHECK(entries[0].expected_betti == std::vector<long>{1, 3, 4, 3, 1});
    CHECK(entries[0].expected_verdict == SymplecticVerdict::Symplectic);
    CHECK(entries[0].line == 2);
    CHECK(entries[1].name == "plain");
    CHECK_FALSE(entries[1].lattice_asserted);

    CHECK(parse_catalog("").empty());
    CHECK(parse_catalog("# only comments\n\n").empty());
}

TEST_CASE("rejects duplicates, bad grammar, and unsourced expectations") {
    CHECK_THROWS_WITH_AS(parse_catalog("a: (0,0)\na: (0,0)\n"),
                         doctest::Contains("duplicate name 'a' (first defined at line 1)"),
                         CatalogError);
    CHECK_THROWS_AS(parse_catalog("no tuple here\n"), CatalogError);
    CHECK_THROWS_AS(parse_catalog("x: (0,0) ; unknown_key=1\n"), CatalogError);
    CHECK_THROWS_AS(parse_catalog("x: (0,0) ; expected_betti=1,2,1\n"), CatalogError);
    CHECK_THROWS_AS(parse_catalog("x: (0,0,99)\n"), CatalogError);
    // line numbers attach to tuple errors
    try {
        parse_catalog("ok: (0,0)\nbad: (0,0,99)\n");
        FAIL("expected CatalogError");
    } catch (const CatalogError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("run_catalog isolates entry failures") {
    auto entries = parse_catalog(
        "broken: (0,0,12,13,14+25)\n"  // Jacobi violation
        "fine: (0,0,0,12)\n");
    Report rep = run_catalog(entries);
    REQUIRE(rep.entries.size() == 2);
    CHECK_FALSE(rep.entries[0].error.empty());
    CHECK(rep.entries[1].error.empty());
    CHECK(rep.entries[1].betti == std::vector<long>{1, 3, 4, 3, 1});
    CHECK(rep.entries_failed == 1);
}

TEST_CASE("expectation mismatches are reported and counted") {
    auto entries = parse_catalog(
        "wrong: (0,0,0,12) ; source=deliberate fixture ; expected_betti=1,9,9,9,1\n");
    Report rep = run_catalog(entries);
    CHECK(rep.expectation_mismatches == 1);
    REQUIRE_FALSE(rep.entries[0].mismatches.empty());
}

TEST_CASE("machine format is byte-identical across runs and jobs settings") {
    auto entries = parse_catalog_file(data_dir() + "/catalog.alg");
    RunOptions opts;
    Report a = run_catalog(entries, opts);
    Report b = run_catalog(entries, opts);
    CHECK(machine_format(a) == machine_format(b));

    RunOptions parallel;
    parallel.jobs = 4;
    Report c = run_catalog(entries, parallel);
    CHECK(machine_format(a) == machine_format(c));

    // one line per entry plus the summary line
    std::string text = machine_format(a);
    std::size_t lines = 0;
    for (char ch : text)
        if (ch == '\n') ++lines;
    CHECK(lines == entries.size() + 1);
}

TEST_CASE("shipped catalogs pass their own expectations") {
    for (const std::string file : {"catalog.alg", "six_dim_nilpotent.alg"}) {
        auto entries = parse_catalog_file(data_dir() + "/" + file);
        REQUIRE_FALSE(entries.empty());
        Report rep = run_catalog(entries);
        for (const auto& e : rep.entries) {
            INFO(file, "/", e.entry.name);
            CHECK(e.error.empty());
            CHECK(e.mismatches.empty());
        }
    }
}

TEST_CASE("cli: selftest passes") {
    std::string out;
    CHECK(run_cli({"selftest"}, &out) == 0);
    CHECK(out.find("selftest passed") != std::string::npos);
}

TEST_CASE("cli: check reports the Kodaira-Thurston entry") {
    std::string out;
    int code = run_cli({"check", data_dir() + "/catalog.alg", "--entry", "kt"}, &out);
    CHECK(code == 0);
    CHECK(out.find("(1,3,4,3,1)") != std::string::npos);
    CHECK(out.find("SYMPLECTIC") != std::string::npos);
    CHECK(out.find("aspherical_note") != std::string::npos);
}

TEST_CASE("cli: betti and symplectic subcommands") {
    std::string out;
    CHECK(run_cli({"betti", data_dir() + "/catalog.alg", "--entry", "fls"}, &out) == 0);
    CHECK(out.find("(1,2,3,4,3,2,1)") != std::string::npos);

    CHECK(run_cli({"symplectic", data_dir() + "/catalog.alg", "--entry", "r4", "--witness"},
                  &out) == 0);
    CHECK(out.find("SYMPLECTIC") != std::string::npos);
    CHECK(out.find("witness:") != std::string::npos);
}

TEST_CASE("cli: product command prints the Kunneth profile") {
    std::string out;
    CHECK(run_cli({"product", data_dir() + "/catalog.alg", "r2", "r2"}, &out) == 0);
    CHECK(out.find("(1,4,6,4,1)") != std::string::npos);
}

TEST_CASE("cli: exit status contract") {
    // 0: all checks pass (covered above). 1: expectation mismatch.
    std::string tmp = "/tmp/liecoh_mismatch.alg";
    {
        std::ofstream f(tmp);
        f << "bad: (0,0,0,12) ; source=deliberate fixture ; expected_betti=1,1,1,1,1\n";
    }
    CHECK(run_cli({"check", tmp}) == 1);

    // 2: input errors of all kinds
    CHECK(run_cli({"check", "/nonexistent/file.alg"}) == 2);
    std::string bad = "/tmp/liecoh_bad.alg";
    {
        std::ofstream f(bad);
        f << "x: (0,0,99)\n";
    }
    CHECK(run_cli({"check", bad}) == 2);
    CHECK(run_cli({"frobnicate", "x"}) == 2);
    std::string err;
    CHECK(run_cli({"check"}, nullptr, &err) == 2);
    CHECK_FALSE(err.empty());

    // entry-level Jacobi failures are input errors too
    std::string jac = "/tmp/liecoh_jacobi.alg";
    {
        std::ofstream f(jac);
        f << "broken: (0,0,12,13,14+25)\n";
    }
    CHECK(run_cli({"check", jac}) == 2);
}

TEST_CASE("cli: machine format on a file with a deliberate mismatch flags it") {
    std::string tmp = "/tmp/liecoh_mixed.alg";
    {
        std::ofstream f(tmp);
        f << "good: (0,0,12) ; source=oracle ; expected_betti=1,2,2,1\n";
        f << "bad: (0,0,12) ; source=deliberate fixture ; expected_betti=1,2,9,1\n";
    }
    std::string out;
    CHECK(run_cli({"check", tmp, "--format", "machine"}, &out) == 1);
    CHECK(out.find("\"expectation_ok\":true") != std::string::npos);
    CHECK(out.find("\"expectation_ok\":false") != std::string::npos);
}

}  // TEST_SUITE
