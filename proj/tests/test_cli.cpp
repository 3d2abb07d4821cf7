#include <sys/wait.h>

#include <cstdio>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"

// Drives the installed binary as a subprocess: exit codes, exact output
// shapes, and the JSON re-serialization guarantee. QKAP_CLI_PATH is injected
// by the build.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_raw(const std::string& tail) {
    const std::string cmd = std::string(QKAP_CLI_PATH) + " " + tail;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + cmd);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// stdout only
RunResult run(const std::string& args) { return run_raw(args + " 2>/dev/null"); }
// stderr only
RunResult run_err(const std::string& args) { return run_raw(args + " 2>&1 1>/dev/null"); }

bool json_roundtrips(const std::string& printed) {
    // printed output is the dump plus one trailing newline
    if (printed.empty() || printed.back() != '\n') return false;
    std::string body = printed.substr(0, printed.size() - 1);
    return nlohmann::ordered_json::parse(body).dump(2) == body;
}

}  // namespace

TEST_CASE("coeffs: human table") {
    RunResult r = run("coeffs kaplansky 6 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "kaplansky m=2 n=6\n"
          "  degree: 10\n"
          "  coeffs: [1, 1, 2, 2, 3, 2, 3, 2, 2, 1, 1]\n"
          "  symmetric: yes  unimodal: no\n");
}

TEST_CASE("coeffs: JSON is exact and re-serializes byte-identically") {
    RunResult r = run("coeffs kaplansky 6 2 --json");
    CHECK(r.exit_code == 0);
    CHECK(json_roundtrips(r.out));
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["family"] == "kaplansky");
    CHECK(j["params"]["n"] == 6);
    CHECK(j["params"]["m"] == 2);
    CHECK(j["degree"] == 10);
    CHECK(j["coeffs"] ==
          nlohmann::ordered_json::array(
              {"1", "1", "2", "2", "3", "2", "3", "2", "2", "1", "1"}));
    CHECK(j["symmetric"] == true);
    CHECK(j["unimodal"] == false);
    // fixed key order
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"family", "params", "degree", "coeffs",
                                           "symmetric", "unimodal"});
}

TEST_CASE("coeffs: CSV rows") {
    RunResult r = run("coeffs gaussian 4 2 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "exponent,coefficient\n"
          "0,1\n"
          "1,1\n"
          "2,2\n"
          "3,1\n"
          "4,1\n");
}

TEST_CASE("coeffs: the zero polynomial is representable, not an error") {
    RunResult r = run("coeffs gaussian 3 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "gaussian m=5 n=3\n"
          "  degree: none (zero polynomial)\n"
          "  coeffs: []\n");
    RunResult j = run("coeffs gaussian 3 5 --json");
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::ordered_json::parse(j.out);
    CHECK(parsed["degree"] == -1);
    CHECK(parsed["coeffs"].empty());
}

TEST_CASE("coeffs: remaining families") {
    RunResult c = run("coeffs catalan 3 --json");
    CHECK(c.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(c.out);
    CHECK(j["coeffs"] ==
          nlohmann::ordered_json::array({"1", "0", "1", "1", "1", "0", "1"}));
    CHECK(j["unimodal"] == false);

    RunResult rs = run("coeffs reiner-stanton 2 2 --csv");
    CHECK(rs.exit_code == 0);
    CHECK(rs.out ==
          "exponent,coefficient\n"
          "0,1\n"
          "1,1\n"
          "2,1\n"
          "3,1\n"
          "4,1\n");
}

TEST_CASE("coeffs: domain and usage errors exit 2") {
    RunResult r = run_err("coeffs kaplansky 0 0");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("error:") != std::string::npos);
    CHECK(run("coeffs nosuch 3").exit_code == 2);
    CHECK(run("coeffs kaplansky 6").exit_code == 2);       // needs two parameters
    CHECK(run("coeffs catalan 3 4").exit_code == 2);       // takes one
    CHECK(run("coeffs gaussian -1 0").exit_code == 2);     // negative n
    CHECK(run("coeffs kaplansky 6 2 --json --csv").exit_code == 2);
}

TEST_CASE("check: single check with overridden bound") {
    RunResult r = run("check thm-comb-int --max-n 4 --csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "check,outcome,instances,counterexamples\n"
          "thm-comb-int,verified,15,0\n");

    RunResult j = run("check thm-comb-int --max-n 4 --json");
    CHECK(j.exit_code == 0);
    CHECK(json_roundtrips(j.out));
    auto parsed = nlohmann::ordered_json::parse(j.out);
    CHECK(parsed["check"] == "thm-comb-int");
    CHECK(parsed["bounds"]["max_n"] == 4);
    CHECK(parsed["outcome"] == "verified");
    CHECK(parsed["instances"] == 15);
    CHECK(parsed["counterexamples"].empty());
}

TEST_CASE("check: human report") {
    RunResult r = run("check kaplansky-nonunimodal-example");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("check kaplansky-nonunimodal-example  [m=2 n=6]") != std::string::npos);
    CHECK(r.out.find("outcome: verified") != std::string::npos);
    CHECK(r.out.find("counterexamples: none") != std::string::npos);
}

TEST_CASE("check: errors exit 2") {
    RunResult unknown = run_err("check no-such-check");
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.out.find("valid ids") != std::string::npos);
    CHECK(unknown.out.find("macmahon-inv") != std::string::npos);

    CHECK(run("check macmahon-inv --max-n 1000").exit_code == 2);  // guard
    CHECK(run("check kaplansky-nonunimodal-example --max-n 7").exit_code == 2);
    CHECK(run("check macmahon-inv --profile huge").exit_code == 2);
    CHECK(run("check all --max-n 5").exit_code == 2);
    CHECK(run("check").exit_code == 2);
}

TEST_CASE("check all at quick profile: clean registry, exit 0") {
    RunResult human = run("check all --profile quick");
    CHECK(human.exit_code == 0);
    CHECK(human.out.find("registry: 29 checks, 27 verified, 0 falsified, 2 scans "
                         "(0 violations)") != std::string::npos);

    RunResult csv = run("check all --profile quick --csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("check,outcome,instances,counterexamples\n") == 0);
    CHECK(csv.out.find("macmahon-inv,verified,45,0\n") != std::string::npos);
    CHECK(csv.out.find("conj18-scan,scan-report,5,0\n") != std::string::npos);

    RunResult json = run("check all --profile quick --json");
    CHECK(json.exit_code == 0);
    CHECK(json_roundtrips(json.out));
    auto arr = nlohmann::ordered_json::parse(json.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 29);
    CHECK(arr[0]["check"] == "macmahon-inv");
    for (const auto& rep : arr) {
        std::string outcome = rep["outcome"];
        CHECK((outcome == "verified" || outcome == "scan-report"));
        CHECK(rep["counterexamples"].empty());
    }
}

TEST_CASE("scan: clean ranges exit 0") {
    RunResult r = run("scan conj18 --to 20 --json");  // --from defaults to 16
    CHECK(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["check"] == "conj18-scan");
    CHECK(j["bounds"]["from"] == 16);
    CHECK(j["bounds"]["to"] == 20);
    CHECK(j["outcome"] == "scan-report");
    CHECK(j["counterexamples"].empty());

    RunResult r19 = run("scan conj19 --to 25");  // --from defaults to 1
    CHECK(r19.exit_code == 0);
    CHECK(r19.out.find("check conj19-scan  [from=1 to=25]") != std::string::npos);
    CHECK(r19.out.find("counterexamples: none") != std::string::npos);
}

TEST_CASE("scan: a range with dips exits 1 and reports them") {
    RunResult r = run("scan conj18 --from 2 --to 15 --json");
    CHECK(r.exit_code == 1);
    CHECK(json_roundtrips(r.out));
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["outcome"] == "scan-report");
    REQUIRE(j["counterexamples"].size() == 11);
    CHECK(j["counterexamples"][0]["params"]["n"] == 4);
    CHECK(j["counterexamples"][0]["index"] == 5);
    CHECK(j["instances"] == 14);
}

TEST_CASE("scan: errors exit 2") {
    CHECK(run("scan conj20 --to 5").exit_code == 2);
    CHECK(run("scan conj18 --from 20 --to 15").exit_code == 2);
    CHECK(run("scan conj18 --from -1 --to 5").exit_code == 2);
    CHECK(run("scan conj18 --to 61").exit_code == 2);   // past the guard
    CHECK(run("scan conj19 --to 51").exit_code == 2);   // past the guard
    CHECK(run("scan conj18").exit_code == 2);           // --to is required
}

TEST_CASE("bijection: human output") {
    RunResult r = run("bijection foata 10010110");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "foata: 10010110 -> 11010010\n"
          "  input  inv=8 maj=12\n"
          "  image  inv=12 maj=13\n");
}

TEST_CASE("bijection: JSON and CSV") {
    RunResult j = run("bijection tau 0101011 --json");
    CHECK(j.exit_code == 0);
    CHECK(json_roundtrips(j.out));
    auto parsed = nlohmann::ordered_json::parse(j.out);
    CHECK(parsed["map"] == "tau");
    CHECK(parsed["input"] == "0101011");
    CHECK(parsed["image"] == "010100111");
    CHECK(parsed["input_maj"] == 6);
    CHECK(parsed["image_maj"] == 6);

    RunResult c = run("bijection psi 101 --csv");
    CHECK(c.exit_code == 0);
    CHECK(c.out ==
          "map,input,image,input_inv,input_maj,image_inv,image_maj\n"
          "psi,101,1010,1,1,3,4\n");
}

TEST_CASE("bijection: varphi and wrap are the same map") {
    RunResult a = run("bijection varphi 10");
    RunResult b = run("bijection wrap 10");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out.find("10 -> 0101") != std::string::npos);
    CHECK(b.out.find("10 -> 0101") != std::string::npos);
    RunResult inv_r = run("bijection varphi-inv 0101");
    CHECK(inv_r.exit_code == 0);
    CHECK(inv_r.out.find("0101 -> 10") != std::string::npos);
}

TEST_CASE("bijection: errors exit 2") {
    RunResult not_image = run_err("bijection psi-inv 011");
    CHECK(not_image.exit_code == 2);
    CHECK(not_image.out.find("error:") != std::string::npos);
    CHECK(run("bijection foata 01a1").exit_code == 2);
    CHECK(run("bijection nosuch 01").exit_code == 2);
    CHECK(run("bijection foata").exit_code == 2);
}

TEST_CASE("top-level usage") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("check --help").exit_code == 0);
    CHECK(run("").exit_code == 2);          // a subcommand is required
    CHECK(run("frobnicate").exit_code == 2);
}
