#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef PETERSON_CLI_PATH
#error "PETERSON_CLI_PATH must point at the built binary"
#endif

namespace {

using Json = nlohmann::json;

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(PETERSON_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

const Json& find_check(const Json& report, const std::string& name) {
    for (const auto& check : report.at("checks"))
        if (check.at("name") == name) return check;
    throw std::runtime_error("check not found: " + name);
}

}  // namespace

TEST_CASE("verify runs the pipeline and honors the exit contract") {
    RunResult ok = run_cli("verify --n 3");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("all checks passed") != std::string::npos);

    RunResult usage = run_cli("verify --n 1");
    CHECK(usage.exit_code == 2);

    RunResult missing = run_cli("verify");
    CHECK(missing.exit_code == 2);

    RunResult odd = run_cli("verify --n 3 --degree-bound 7");
    CHECK(odd.exit_code == 2);
}

TEST_CASE("verify --json emits the schema with the n = 2 series") {
    RunResult r = run_cli("verify --n 2 --degree-bound 8 --json");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j.at("schema") == "peterson-report/1");
    CHECK(find_check(j, "equivariant_series").at("details").at("equivariant_series") ==
          Json(std::vector<int>{1, 2, 2, 2, 2}));
}

TEST_CASE("identical invocations produce byte-identical JSON") {
    std::string cmd = "verify --n 3 --json --threads 2";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("fixed-points lists the block-form permutations") {
    RunResult r = run_cli("fixed-points --n 3 --json");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    REQUIRE(j.at("points").size() == 4);
    bool found = false;
    for (const auto& p : j.at("points"))
        if (p.at("subset") == Json(std::vector<int>{1}) &&
            p.at("one_line") == Json(std::vector<int>{1, 3, 2}))
            found = true;
    CHECK(found);
}

TEST_CASE("restrict prints the value at every fixed point") {
    RunResult r = run_cli("restrict --n 3 --class xi_2 --json");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    std::map<std::string, std::string> values;
    for (const auto& row : j.at("values")) {
        std::string key;
        for (const auto& v : row.at("one_line")) key += std::to_string(v.get<int>());
        values[key] = row.at("value");
    }
    CHECK(values["123"] == "0");
    CHECK(values["132"] == "t");
    CHECK(values["213"] == "0");
    CHECK(values["321"] == "2*t");

    RunResult bad = run_cli("restrict --n 3 --class xi_9");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("position") != std::string::npos);
}

TEST_CASE("hilbert prints computed series for both variants") {
    RunResult r = run_cli("hilbert --n 3 --ordinary --degree-bound 8 --json");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j.at("coefficients") == Json(std::vector<int>{1, 2, 1, 0, 0}));
    CHECK(j.at("equal") == true);

    RunResult eq = run_cli("hilbert --n 3 --degree-bound 8 --json");
    CHECK(Json::parse(eq.output).at("coefficients") == Json(std::vector<int>{1, 3, 4, 4, 4}));
}

TEST_CASE("regseq handles the trivial case, files, and usage errors") {
    RunResult r2 = run_cli("regseq --n 2 --json");
    CHECK(r2.exit_code == 0);
    Json j = Json::parse(r2.output);
    CHECK(j.at("trivial") == true);
    CHECK(j.at("only_origin") == true);
    CHECK(j.at("branches").at("count") == 0);

    namespace fs = std::filesystem;
    fs::path file = fs::temp_directory_path() / "peterson_cli_system.json";
    {
        std::ofstream out(file);
        out << R"({"q": 2, "a": ["1"], "b": ["1"]})";
    }
    RunResult rfile = run_cli("regseq --system " + file.string() + " --json");
    CHECK(rfile.exit_code == 1);  // a nonzero solution exists
    Json jf = Json::parse(rfile.output);
    CHECK(jf.at("only_origin") == false);
    CHECK(jf.at("branches").at("witness").at("kernel_basis") ==
          Json::parse(R"([[ "1", "1" ]])"));
    fs::remove(file);

    // systems need at least two variables
    {
        std::ofstream out(file);
        out << R"({"q": 1, "a": [], "b": []})";
    }
    CHECK(run_cli("regseq --system " + file.string()).exit_code == 2);
    fs::remove(file);

    CHECK(run_cli("regseq").exit_code == 2);
}

TEST_CASE("groebner reduces an ideal from a file") {
    namespace fs = std::filesystem;
    fs::path file = fs::temp_directory_path() / "peterson_cli_ideal.json";
    {
        std::ofstream out(file);
        out << R"({"variables": ["x", "y", "z"], "generators": ["x - y", "y - z"]})";
    }
    RunResult r = run_cli("groebner --ideal " + file.string() + " --order lex --json");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j.at("basis") == Json(std::vector<std::string>{"y - z", "x - z"}));

    {
        std::ofstream out(file);
        out << R"({"variables": ["x"], "generators": ["x^2 - x"]})";
    }
    CHECK(run_cli("groebner --ideal " + file.string()).exit_code == 2);  // not homogeneous
    fs::remove(file);

    CHECK(run_cli("groebner --ideal /nonexistent.json").exit_code == 2);
}
