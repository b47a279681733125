#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "segrecalc/errors.hpp"
#include "segrecalc/io.hpp"
#include "support/catalog.hpp"
#include "support/run_cli.hpp"

using namespace segrecalc;

namespace {

const char* kPaperFile =
    "# flat limit of twisted cubics\n"
    "ring 32003 [x,y,z,w]\n"
    "z^2, y*z, x*z,\n"
    "y^2*w - x^2*(x+w)\n";

}  // namespace

TEST_CASE("ideal file parsing") {
    IdealFile file = parse_ideal_file(kPaperFile);
    CHECK(file.modulus == 32003);
    CHECK(file.vars == std::vector<std::string>{"x", "y", "z", "w"});
    CHECK(file.generators.size() == 4);
    CHECK(file.ideal().equals(catalog::paper_ideal()));

    // generators may be separated by commas, newlines, or both
    IdealFile alt = parse_ideal_file("ring 32003 [x,y]\nx^2\nx*y, y^2");
    CHECK(alt.generators.size() == 3);

    // prime override replaces the file's modulus
    IdealFile overridden = parse_ideal_file("ring 32003 [x,y]\nx", 101u);
    CHECK(overridden.modulus == 101);
    CHECK(overridden.ring->field().modulus() == 101);
}

TEST_CASE("ideal file rejections") {
    CHECK_THROWS_AS(parse_ideal_file(""), input_error);
    CHECK_THROWS_AS(parse_ideal_file("x^2, y\nring 32003 [x,y]"), input_error);
    CHECK_THROWS_AS(parse_ideal_file("ring 32004 [x,y]\nx"), input_error);   // not prime
    CHECK_THROWS_AS(parse_ideal_file("ring 32003 []\nx"), input_error);      // no vars
    CHECK_THROWS_AS(parse_ideal_file("ring 32003 [x,y]\n"), input_error);    // no gens
    CHECK_THROWS_AS(parse_ideal_file("ring 32003 [x,y]\nx^2 - y"), input_error);  // inhomogeneous
    CHECK_THROWS_AS(parse_ideal_file("ring 32003 [x,y]\nx^2 + q"), parse_error);

    IdealFile file = parse_ideal_file(kPaperFile);
    CHECK_THROWS_AS(file.single_generator(), input_error);
    IdealFile single = parse_ideal_file("ring 32003 [x,y,z]\ny^2*z - x^3");
    CHECK(single.single_generator().degree() == 3);
}

TEST_CASE("compute JSON matches the documented shape") {
    SegreClassVector s = segre_class(catalog::paper_ideal(), 3, 2, 0);
    nlohmann::json j = segre_to_json(s, 32003);
    CHECK(j["ambient"] == 3);
    CHECK(j["dim"] == 1);
    CHECK(j["d"] == 3);
    CHECK(j["segre"]["1"] == 3);
    CHECK(j["segre"]["0"] == -10);
    validate_segre_json(j);

    // round-trip through text
    nlohmann::json back = nlohmann::json::parse(j.dump());
    CHECK(back == j);
    validate_segre_json(back);
}

TEST_CASE("verification report JSON round-trips against its schema") {
    VerificationReport r = verify_main_a(catalog::line_in_P3(), 1, 7, 2);
    nlohmann::json j = report_to_json(r, 32003);
    validate_report_json(j);
    nlohmann::json back = nlohmann::json::parse(j.dump(2));
    CHECK(back == j);
    validate_report_json(back);
    CHECK(back["pass"] == true);
    CHECK(back["kind"] == "main-a");

    nlohmann::json broken = j;
    broken.erase("checks");
    CHECK_THROWS_AS(validate_report_json(broken), input_error);
}

TEST_CASE("identical file and config give byte-identical JSON") {
    SegreClassVector a = segre_class(catalog::paper_ideal(), 3, 2, 12345);
    SegreClassVector b = segre_class(catalog::paper_ideal(), 3, 2, 12345);
    CHECK(segre_to_json(a, 32003).dump(2) == segre_to_json(b, 32003).dump(2));

    VerificationReport ra = verify_main_b(catalog::paper_ideal(), 3, 99, 2);
    VerificationReport rb = verify_main_b(catalog::paper_ideal(), 3, 99, 2);
    CHECK(report_to_json(ra, 32003).dump(2) == report_to_json(rb, 32003).dump(2));
}

TEST_CASE("command line end to end") {
    std::string file = run_cli::write_temp_file("paper.ideal", kPaperFile);
    std::string cli = run_cli::cli_path();

    auto compute = run_cli::run(cli + " compute --json " + file);
    REQUIRE(compute.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(compute.output);
    CHECK(j["segre"]["1"] == 3);
    CHECK(j["segre"]["0"] == -10);
    CHECK(j["d"] == 3);
    validate_segre_json(j);

    // determinism at the process level
    auto again = run_cli::run(cli + " compute --json " + file);
    CHECK(again.output == compute.output);
    auto reseeded = run_cli::run(cli + " compute --json --seed 9 " + file);
    CHECK(nlohmann::json::parse(reseeded.output)["segre"] == j["segre"]);

    auto verify = run_cli::run(cli + " verify main-a --json " + file);
    CHECK(verify.exit_code == 0);
    nlohmann::json vj = nlohmann::json::parse(verify.output);
    CHECK(vj["pass"] == true);
    validate_report_json(vj);

    auto bprime = run_cli::run(cli + " verify b-prime --c 1 " + file);
    CHECK(bprime.exit_code == 0);
}

TEST_CASE("command line exit codes") {
    std::string cli = run_cli::cli_path();

    std::string bad = run_cli::write_temp_file("bad.ideal", "rng 32003 [x]\nx");
    CHECK(run_cli::run(cli + " compute " + bad).exit_code == 1);

    std::string paper = run_cli::write_temp_file("paper.ideal", kPaperFile);
    CHECK(run_cli::run(cli + " verify b-prime --c 99 " + paper).exit_code == 1);
    CHECK(run_cli::run(cli + " compute --degree 1 " + paper).exit_code == 1);

    // JSON error objects carry the machine-readable reason
    auto err = run_cli::run(cli + " compute --json " + bad);
    CHECK(err.exit_code == 1);
    nlohmann::json ej = nlohmann::json::parse(err.output);
    CHECK(ej["error"]["code"] == 1);
    CHECK(ej["error"]["kind"] == "input");

    // resource budget via the environment: exit 3
    auto starved = run_cli::run("SEGRECALC_BUDGET=1 " + cli + " compute " + paper);
    CHECK(starved.exit_code == 3);
    auto starved_json = run_cli::run("SEGRECALC_BUDGET=1 " + cli + " compute --json " + paper);
    CHECK(nlohmann::json::parse(starved_json.output)["error"]["kind"] == "resource");
}

TEST_CASE("command line single-polynomial commands") {
    std::string cli = run_cli::cli_path();

    std::string cusp =
        run_cli::write_temp_file("cusp.ideal", "ring 32003 [x,y,z]\ny^2*z - x^3\n");
    auto csm = run_cli::run(cli + " csm --json " + cusp);
    REQUIRE(csm.exit_code == 0);
    nlohmann::json cj = nlohmann::json::parse(csm.output);
    CHECK(cj["euler"] == 2);
    CHECK(cj["char_p_caveat"] == true);

    auto bertini = run_cli::run(cli + " bertini --json " + cusp);
    CHECK(bertini.exit_code == 0);
    CHECK(nlohmann::json::parse(bertini.output)["command"] == "bertini");

    std::string fat =
        run_cli::write_temp_file("fat.ideal", "ring 32003 [x,y,z]\nx^2, x*y, y^2\n");
    auto mult = run_cli::run(cli + " mult --json " + fat);
    REQUIRE(mult.exit_code == 0);
    CHECK(nlohmann::json::parse(mult.output)["multiplicity"] == 4);

    // hypersurface commands demand exactly one generator
    std::string paper = run_cli::write_temp_file("paper.ideal", kPaperFile);
    CHECK(run_cli::run(cli + " csm " + paper).exit_code == 1);
}
