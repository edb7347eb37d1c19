#include "xy/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using namespace xy;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// value of "key=..." on its own line
double value_of(const std::string& text, const std::string& key) {
    const std::string needle = key + "=";
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (line.rfind(needle, 0) == 0) return std::stod(line.substr(needle.size()));
    FAIL("missing key ", key);
    return 0.0;
}

std::vector<std::string> lines_with(const std::string& text, const std::string& sub) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (line.find(sub) != std::string::npos) out.push_back(line);
    return out;
}

double last_field(const std::string& csv_line) {
    return std::stod(csv_line.substr(csv_line.rfind(',') + 1));
}

}  // namespace

TEST_CASE("eval reports the strong-field limit point") {
    const CliRun r = run({"eval", "--gamma", "0", "--eta", "2", "--temp", "0.1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("useful=false") != std::string::npos);
    CHECK(value_of(r.out, "max_fidelity") == doctest::Approx(2.0 / 3.0).epsilon(1e-4));
    CHECK(value_of(r.out, "fef") == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(value_of(r.out, "concurrence") < 1e-4);
}

TEST_CASE("eval accepts --beta as the inverse of --temp") {
    const CliRun a = run({"eval", "--gamma", "0.4", "--eta", "0.7", "--temp", "0.25"});
    const CliRun b = run({"eval", "--gamma", "0.4", "--eta", "0.7", "--beta", "4"});
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);
    const CliRun both = run({"eval", "--temp", "1", "--beta", "1"});
    CHECK(both.code == 1);
}

TEST_CASE("critical reproduces the isotropic transition curve") {
    const CliRun r =
        run({"critical", "--gamma", "0", "--eta-max", "1", "--steps", "11"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("gamma,eta,J,T,quantity,value", 0) == 0);
    const std::vector<std::string> t1 = lines_with(r.out, ",t1,");
    const std::vector<std::string> t2 = lines_with(r.out, ",t2,");
    REQUIRE(t1.size() == 11);
    REQUIRE(t2.size() == 11);
    // the disentanglement temperature does not move with the field
    for (const std::string& line : t1)
        CHECK(last_field(line) == doctest::Approx(1.13459).epsilon(1e-4));
    // the usefulness temperature decreases from the same value to zero
    CHECK(last_field(t2.front()) == doctest::Approx(1.13459).epsilon(1e-4));
    for (std::size_t i = 0; i + 1 < t2.size(); ++i)
        CHECK(last_field(t2[i + 1]) < last_field(t2[i]));
    CHECK(last_field(t2.back()) == 0.0);
}

TEST_CASE("critical reports absent values as nan and converges past the crossing") {
    const CliRun r = run({"critical", "--gamma", "0", "--eta-min", "1.5", "--eta-max", "2",
                          "--steps", "2", "--format", "json"});
    CHECK(r.code == 0);
    const nlohmann::json arr = nlohmann::json::parse(r.out);
    REQUIRE(arr.size() == 4);
    for (const auto& row : arr) {
        CHECK(row["T"].is_null());
        if (row["quantity"] == "t2") CHECK(row["value"].is_null());
        if (row["quantity"] == "t1") CHECK(row["value"].is_number());
    }
}

TEST_CASE("critical exits 3 when the uniqueness scan rejects a point") {
    // the entanglement revival stripe makes the t1 crossing non-unique
    const CliRun r = run({"critical", "--gamma", "0.5", "--eta-min", "1.25", "--eta-max",
                          "1.55", "--steps", "2"});
    CHECK(r.code == 3);
    const std::vector<std::string> t1 = lines_with(r.out, ",t1,");
    REQUIRE(t1.size() == 2);
    for (const std::string& line : t1) CHECK(std::isnan(last_field(line)));
}

TEST_CASE("sweep output is byte-identical across runs and thread counts") {
    const std::vector<std::string> args = {"sweep",   "--variable",   "eta",  "--start", "0",
                                           "--stop",  "2",            "--steps", "25",
                                           "--gamma", "0.5",          "--temp",  "0.7",
                                           "--quantities", "concurrence,fef,max_fidelity,ent_fidelity"};
    const CliRun a = run(args);
    CHECK(a.code == 0);
    setenv("XYCHAIN_THREADS", "3", 1);
    const CliRun b = run(args);
    setenv("XYCHAIN_THREADS", "1", 1);
    const CliRun c = run(args);
    unsetenv("XYCHAIN_THREADS");
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("sweep emits parseable JSON mirroring the CSV schema") {
    const CliRun r = run({"sweep", "--variable", "xi", "--start", "0", "--stop", "1.5",
                          "--steps", "4", "--gamma", "0.5", "--eta", "1.5", "--temp", "0.8",
                          "--quantities", "partial_fidelity", "--format", "json"});
    CHECK(r.code == 0);
    const nlohmann::json arr = nlohmann::json::parse(r.out);
    REQUIRE(arr.size() == 4);
    CHECK(arr[0]["gamma"] == 0.5);
    CHECK(arr[0]["eta"] == 1.5);
    CHECK(arr[0]["J"] == 1.0);
    CHECK(arr[0]["T"] == 0.8);
    CHECK(arr[0]["xi"] == 0.0);
    CHECK(arr[0]["quantity"] == "partial_fidelity");
    CHECK(arr[0]["value"].is_number());
    CHECK(arr[3]["xi"] == doctest::Approx(1.5));
}

TEST_CASE("sweep rejects invalid requests with a usage error") {
    CHECK(run({"sweep", "--variable", "T", "--start", "0.1", "--stop", "2", "--quantities",
               "t1"})
              .code == 1);
    CHECK(run({"sweep", "--variable", "xi", "--start", "0", "--stop", "1", "--quantities",
               "concurrence"})
              .code == 1);
    CHECK(run({"sweep", "--variable", "eta", "--start", "2", "--stop", "0", "--quantities",
               "fef"})
              .code == 1);
    CHECK(run({"sweep", "--variable", "eta", "--start", "0", "--stop", "1", "--quantities",
               "bogus"})
              .code == 1);
    CHECK(run({"sweep", "--variable", "gamma", "--start", "-2", "--stop", "1", "--quantities",
               "fef"})
              .code == 1);
    CHECK(run({"sweep", "--variable", "eta", "--stop", "1", "--quantities", "fef"}).code == 1);
}

TEST_CASE("usage errors and help have the contracted exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"eval", "--gamma", "1.5"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"eval", "--temp", "-1"}).code == 1);
}

TEST_CASE("mc-fidelity is reproducible for a fixed seed") {
    const std::vector<std::string> args = {"mc-fidelity", "--gamma", "0.5", "--eta", "0.3",
                                           "--temp", "0.8", "--samples", "50000"};
    const CliRun a = run(args);
    const CliRun b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    // automatic correction choice: weak field picks the singlet pair (2, 2)
    CHECK(a.out.find(" m=2 n=2 ") != std::string::npos);
    CHECK(value_of(a.out, "value") ==
          doctest::Approx(value_of(a.out, "closed")).epsilon(5e-3));
    std::vector<std::string> other = args;
    other.push_back("--seed");
    other.push_back("43");
    CHECK(run(other).out != a.out);
}

TEST_CASE("sweep --output writes the same bytes to a file") {
    const std::string path = "cli_sweep_test_output.csv";
    const std::vector<std::string> base = {"sweep", "--variable", "gamma", "--start", "-1",
                                           "--stop", "1", "--steps", "7", "--eta", "0.4",
                                           "--temp", "0.9", "--quantities", "concurrence,fef"};
    const CliRun direct = run(base);
    std::vector<std::string> to_file = base;
    to_file.push_back("--output");
    to_file.push_back(path);
    const CliRun filed = run(to_file);
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("verify subcommand passes on a small grid") {
    const CliRun r = run({"verify", "--grid", "40", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    CHECK(lines_with(r.out, "PASS").size() == 11);
    CHECK(lines_with(r.out, "FAIL").empty());
}
