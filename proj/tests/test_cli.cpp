#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string cli_bin() {
    const char* env = std::getenv("LATTES_CLI_BIN");
    REQUIRE(env != nullptr);
    return env;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path outfile =
        fs::temp_directory_path() / ("lattes_cli_out_" + std::to_string(counter++) + ".txt");
    const std::string cmd = cli_bin() + " " + args + " > " + outfile.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(outfile, std::ios::binary);
    r.out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    fs::remove(outfile);
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("cli exit code contract") {
    CHECK(run("verify --suite groups --samples 10").exit_code == 0);
    CHECK(run("verify --suite nosuch").exit_code == 2);
    CHECK(run("nosuchcommand").exit_code == 2);
    // unreachable tolerance forces a clean failure, not a crash
    CHECK(run("verify --suite theta --tol-scale 1e-20").exit_code == 1);
}

TEST_CASE("cli verify emits parseable, reproducible JSON") {
    const std::string args = "verify --suite dynamics --samples 100 --seed 42 --json";
    const RunResult a = run(args);
    REQUIRE(a.exit_code == 0);
    const RunResult b = run(args);
    CHECK(a.out == b.out);  // byte-identical across runs

    const nlohmann::json j = nlohmann::json::parse(a.out);
    CHECK(j.at("suite") == "dynamics");
    CHECK(j.at("overall_pass") == true);
    bool sawsemi = false;
    for (const auto& c : j.at("checks")) {
        if (c.at("id").get<std::string>().rfind("dynamics.semiconjugacy_f", 0) == 0) {
            sawsemi = true;
            CHECK(c.at("pass") == true);
            CHECK(c.at("max_residual").get<double>() <= 1e-6);
        }
    }
    CHECK(sawsemi);
    // parse -> reserialize with sorted keys is byte-stable
    CHECK(nlohmann::json::parse(a.out).dump(2) + "\n" == a.out);
}

TEST_CASE("cli green command") {
    const RunResult r = run("green --map power --point 2,1,1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("0.693147180559945") != std::string::npos);

    // homogeneity visible through the CLI
    const RunResult a = run("green --map f1 --point 1,2,3");
    const RunResult b = run("green --map f1 --point 2,4,6");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    const double ga = std::stod(a.out.substr(a.out.find("green") + 5));
    const double gb = std::stod(b.out.substr(b.out.find("green") + 5));
    CHECK(std::abs(gb - ga - std::log(2.0)) < 1e-9);

    CHECK(run("green --map power --point 0,0,0").exit_code == 2);
    CHECK(run("green --map nosuch --point 1,1,1").exit_code == 2);
    CHECK(run("green --map power --point bogus").exit_code == 2);
}

TEST_CASE("cli boundary command writes deterministic files") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "lattes_cli_boundary";
    fs::create_directories(dir);
    const std::string base1 = (dir / "run1").string();
    const std::string base2 = (dir / "run2").string();
    const std::string common = "boundary --map f1 --slice \"z=(s,t,1)\" --res 32 --range -2,2,-2,2";
    REQUIRE(run(common + " --out " + base1).exit_code == 0);
    REQUIRE(run(common + " --out " + base2).exit_code == 0);
    const std::string csv1 = slurp(base1 + ".csv");
    CHECK(!csv1.empty());
    CHECK(csv1 == slurp(base2 + ".csv"));
    const std::string ppm1 = slurp(base1 + ".ppm");
    CHECK(ppm1.substr(0, 2) == "P6");
    CHECK(ppm1 == slurp(base2 + ".ppm"));
    CHECK(csv1.rfind("row,col,re_param,im_param,green_value\n", 0) == 0);

    CHECK(run("boundary --map f1 --slice \"z=(s,t,1)\" --res 0 --out " + base1).exit_code == 2);
    CHECK(run("boundary --map f1 --slice \"z=(1,2,3)\" --res 8 --out " + base1).exit_code == 2);
    fs::remove_all(dir);
}

TEST_CASE("cli orbit command") {
    const RunResult text = run("orbit --map g");
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("{X=0} -> {Z=0} -> {Y=Z} -> {X=Y} -> {X=Z} -> {Y=Z}") != std::string::npos);
    CHECK(text.out.find("6 post-critical lines") != std::string::npos);

    const RunResult f1 = run("orbit --map f1");
    REQUIRE(f1.exit_code == 0);
    CHECK(f1.out.find("closed (critically finite at line level)") != std::string::npos);

    const RunResult j = run("orbit --map g --json");
    REQUIRE(j.exit_code == 0);
    const nlohmann::json graph = nlohmann::json::parse(j.out);
    CHECK(graph.at("closed") == true);
    CHECK(graph.at("post_critical_lines") == 6);
    CHECK(graph.at("nodes").size() == 8);
    int resolved = 0;
    for (const auto& n : graph.at("nodes"))
        if (n.at("image").get<int>() >= 0) ++resolved;
    CHECK(resolved == 8);
}

TEST_CASE("cli groups command") {
    const RunResult g212 = run("groups g212");
    REQUIRE(g212.exit_code == 0);
    CHECK(g212.out.find("order       8") != std::string::npos);
    CHECK(g212.out.find("reflections 4") != std::string::npos);

    const RunResult s3 = run("groups s3");
    REQUIRE(s3.exit_code == 0);
    CHECK(s3.out.find("order       6") != std::string::npos);

    const RunResult s5 = run("groups situation5");
    REQUIRE(s5.exit_code == 0);
    CHECK(s5.out.find("order       32") != std::string::npos);
    CHECK(s5.out.find("16 linear + 16 with the half-period translation") != std::string::npos);
    CHECK(s5.out.find("6 droites") != std::string::npos);

    CHECK(run("groups nosuch").exit_code == 2);
}

TEST_CASE("cli groups registry") {
    const RunResult text = run("groups registry");
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("6 droites") != std::string::npos);
    CHECK(text.out.find("entry 6") != std::string::npos);

    const RunResult j = run("groups registry --json");
    REQUIRE(j.exit_code == 0);
    const nlohmann::json reg = nlohmann::json::parse(j.out);
    REQUIRE(reg.size() == 6);
    CHECK(reg[0].at("order") == 8);
    CHECK(reg[4].at("branch_locus") == "6 droites");
    CHECK(reg[4].at("branch_line_count") == 6);
}
