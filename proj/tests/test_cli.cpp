#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#include "coxpoly/closed_forms.hpp"

using json = nlohmann::json;

namespace {

std::string cli_path()
{
    const char* p = std::getenv("COXPOLY_BIN");
    REQUIRE_MESSAGE(p != nullptr, "COXPOLY_BIN must point at the coxpoly binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

void write_file(const std::string& path, const std::string& body)
{
    std::ofstream f(path);
    REQUIRE(f.good());
    f << body;
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("coxeter with both methods agrees and round-trips")
    {
        const RunResult r = run_cli("coxeter --family rect --u 2 --method both");
        CHECK(r.exit_code == 0);
        const json rep = json::parse(r.out);
        CHECK(rep["status"] == "pass");
        CHECK(rep["results"]["equal"] == true);
        const std::vector<long> expect{1, 1, 0, 1, 1};
        CHECK(rep["results"]["coeffs"].get<std::vector<long>>() == expect);
        CHECK(rep["results"]["formula_coeffs"].get<std::vector<long>>() == expect);

        // the serialized coefficient list parses back to the same polynomial
        std::vector<coxpoly::Int> coeffs;
        for (const auto& c : rep["results"]["coeffs"])
            coeffs.emplace_back(c.is_string() ? coxpoly::Int(c.get<std::string>())
                                              : coxpoly::Int(c.get<long>()));
        CHECK(coxpoly::PolyZ(std::move(coeffs)) == coxpoly::chi_rectangle_formula(2));
    }

    TEST_CASE("nakayama polynomial through the matrix route")
    {
        const RunResult r = run_cli("coxeter --family nakayama --n 3 --r 2");
        CHECK(r.exit_code == 0);
        const json rep = json::parse(r.out);
        const std::vector<long> expect{1, 1, 1, 1};
        CHECK(rep["results"]["coeffs"].get<std::vector<long>>() == expect);
    }

    TEST_CASE("usage errors exit with code 2")
    {
        CHECK(run_cli("coxeter --family rect --u 0").exit_code == 2);
        CHECK(run_cli("coxeter --family nosuch --u 1").exit_code == 2);
        CHECK(run_cli("verify nosuchsuite").exit_code == 2);
        CHECK(run_cli("lgroup euler --u 3 --j 99").exit_code == 2);
        CHECK(run_cli("nosuchcommand").exit_code == 2);
        CHECK(run_cli("coxeter --family poset-file --poset /nonexistent.txt").exit_code == 2);
    }

    TEST_CASE("reports are byte-identical across runs")
    {
        const std::string args = "verify four-families --u-max 3 --v-max 3 --verbose";
        const RunResult a = run_cli(args);
        const RunResult b = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);

        const RunResult c = run_cli("verify ladkani --samples 10 --seed 5");
        const RunResult d = run_cli("verify ladkani --samples 10 --seed 5");
        CHECK(c.exit_code == 0);
        CHECK(c.out == d.out);
    }

    TEST_CASE("lgroup subcommands")
    {
        const RunResult solve = run_cli("lgroup solve --u 5 --target zero");
        CHECK(solve.exit_code == 0);
        const json srep = json::parse(solve.out);
        REQUIRE(srep["results"]["solutions"].size() == 1);
        CHECK(srep["results"]["solutions"][0]["a"] == 0);
        CHECK(srep["results"]["solutions"][0]["b"] == 6);

        const RunResult euler = run_cli("lgroup euler --u 3 --j 3");
        CHECK(euler.exit_code == 0);
        CHECK(json::parse(euler.out)["results"]["value"] == 1);
    }

    TEST_CASE("verify sweeps pass and fail paths")
    {
        const RunResult ok = run_cli("verify symmetry --r-max 6");
        CHECK(ok.exit_code == 0);
        CHECK(json::parse(ok.out)["status"] == "pass");

        const RunResult tilt =
            run_cli("verify tilting --u 2 --v 2 --which post");
        CHECK(tilt.exit_code == 0);
        const json trep = json::parse(tilt.out);
        CHECK(trep["results"]["tilting"]["rigid"] == true);
        CHECK(trep["results"]["tilting"]["k0_unimodular"] == true);
        CHECK(trep["results"]["tilting"]["end_matches_poset"] == true);
        CHECK(trep["results"]["tilting"]["chi_matches_nakayama"] == true);

        const RunResult serial = run_cli("verify tilting --u 2 --v 2 --which post --serial");
        CHECK(serial.out == tilt.out);
    }

    TEST_CASE("poset file input feeds cartan, coxeter and flip")
    {
        const std::string path = "/tmp/coxpoly_test_poset.txt";
        write_file(path,
                   "# three chain\n"
                   "elem a\nelem b\nelem c\n"
                   "a < b\nb < c\n");
        const RunResult cartan = run_cli("cartan --family poset-file --poset " + path);
        CHECK(cartan.exit_code == 0);
        const json crep = json::parse(cartan.out);
        CHECK(crep["results"]["cartan"].size() == 3);
        CHECK(crep["results"]["det"] == 1);

        const RunResult flip = run_cli("flip --poset " + path + " --closed a");
        CHECK(flip.exit_code == 0);
        const json frep = json::parse(flip.out);
        CHECK(frep["results"]["equal"] == true);
        CHECK(frep["status"] == "pass");

        CHECK(run_cli("flip --poset " + path + " --closed b").exit_code == 2);  // not closed
        CHECK(run_cli("flip --poset " + path + " --closed zz").exit_code == 2);
    }

    TEST_CASE("hom subcommand reads the complex literal format")
    {
        const std::string xp = "/tmp/coxpoly_test_x.cplx";
        const std::string yp = "/tmp/coxpoly_test_y.cplx";
        write_file(xp, "@-1: 1\n@0: 3\n");
        write_file(yp, "@-1: 2\n@0: 3\n");
        const RunResult r =
            run_cli("hom --n 3 --r 3 --x " + xp + " --y " + yp + " --k 0");
        CHECK(r.exit_code == 0);
        CHECK(json::parse(r.out)["results"]["dim"] == 1);

        // swapped direction has no nonzero maps
        const RunResult r2 =
            run_cli("hom --n 3 --r 3 --x " + yp + " --y " + xp + " --k 0");
        CHECK(json::parse(r2.out)["results"]["dim"] == 0);

        // --expect turns a mismatch into a verification failure (exit 1)
        const RunResult r3 =
            run_cli("hom --n 3 --r 3 --x " + xp + " --y " + yp + " --k 0 --expect 7");
        CHECK(r3.exit_code == 1);
        CHECK(json::parse(r3.out)["status"] == "fail");
    }

    TEST_CASE("csv format emits flat deterministic rows")
    {
        const RunResult r = run_cli("--format csv coxeter --family rect --u 1");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("results.coeffs,1,1,1\n") != std::string::npos);
        CHECK(r.out.find("status,pass\n") != std::string::npos);
        const RunResult again = run_cli("--format csv coxeter --family rect --u 1");
        CHECK(r.out == again.out);
    }
}
