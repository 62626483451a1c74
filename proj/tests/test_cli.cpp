#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftconv/forms.hpp"

#include <json.hpp>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace shiftconv;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("shiftconv_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args, const fs::path& out_dir = {}) {
    std::string cmd = std::string(SHIFTCONV_CLI_PATH) + " " + args;
    if (!out_dir.empty()) cmd += " --out-dir " + out_dir.string();
    cmd += " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

std::size_t fields(const std::string& line) { return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1; }

}  // namespace

TEST_CASE("forms command") {
    TempDir dir;
    REQUIRE(run("forms --delta --trunc 1000", dir.path) == 0);
    std::ifstream in(dir.path / "delta.form");
    REQUIRE(in);
    const CuspForm d = read_form(in, "delta");
    CHECK(d.trunc_order() == 1000);
    CHECK(d.series()[2] == -24);
    CHECK(d.series()[6] == -6048);
    CHECK(d.series()[1000] == mpq_class("-30328412970240000"));

    TempDir empty;
    CHECK(run("forms --weight 10", empty.path) == 0);
    CHECK(fs::is_empty(empty.path));

    TempDir two;
    REQUIRE(run("forms --weight 24 --trunc 100", two.path) == 0);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(two.path)) {
        CHECK(entry.path().extension() == ".form");
        ++files;
    }
    CHECK(files == 2);

    CHECK(run("forms --weight 36", dir.path) == 2);
    CHECK(run("forms --weight 11", dir.path) == 2);
    CHECK(run("forms --delta --weight 12", dir.path) == 2);
    CHECK(run("forms --delta --trunc 2000000", dir.path) == 2);
    CHECK(run("forms --no-such-flag", dir.path) == 2);
    CHECK(run("", dir.path) == 2);
}

TEST_CASE("scan command") {
    TempDir dir;
    REQUIRE(run("scan --form delta --r-min 1 --r-max 10 --M 1000,100", dir.path) == 0);
    const auto rows = lines(slurp(dir.path / "scan.csv"));
    REQUIRE(rows.size() == 21);
    CHECK(rows[0] == "form_id,k,r,M,count_zero,count_nonzero,count_positive,count_negative,first_sign_change");
    for (const auto& row : rows) CHECK(fields(row) == 9);

    TempDir zero;
    REQUIRE(run("scan --form zero --r-min 1 --r-max 3 --M 50", zero.path) == 0);
    const auto zrows = lines(slurp(zero.path / "scan.csv"));
    REQUIRE(zrows.size() == 4);
    for (std::size_t i = 1; i < zrows.size(); ++i) {
        CHECK(zrows[i].find("zero,12,") == 0);
        CHECK(zrows[i].substr(zrows[i].find(",50,")) == ",50,50,0,0,0,");
    }

    TempDir smoke;
    REQUIRE(run("scan --form delta --r-min 1 --r-max 10 --M 10", smoke.path) == 0);
    const auto srows = lines(slurp(smoke.path / "scan.csv"));
    CHECK(srows.size() == 11);
    for (const auto& row : srows) CHECK(fields(row) == 9);

    CHECK(run("scan --form delta --r-min 3 --r-max 2", dir.path) == 2);
    CHECK(run("scan --form /no/such/file.form", dir.path) == 2);
}

TEST_CASE("scan from a form file and determinism across thread counts") {
    TempDir dir;
    REQUIRE(run("forms --delta --trunc 600", dir.path) == 0);
    TempDir a, b;
    const std::string file = (dir.path / "delta.form").string();
    REQUIRE(run("scan --form " + file + " --r-min 1 --r-max 6 --M 100,500 --threads 1", a.path) == 0);
    REQUIRE(run("scan --form " + file + " --r-min 1 --r-max 6 --M 100,500 --threads 4", b.path) == 0);
    CHECK(slurp(a.path / "scan.csv") == slurp(b.path / "scan.csv"));
    CHECK(run("scan --form " + file + " --r-min 1 --r-max 6 --M 1000", dir.path) == 2);
}

TEST_CASE("verify command") {
    TempDir a, b;
    REQUIRE(run("verify --threads 1", a.path) == 0);
    REQUIRE(run("verify --threads 3", b.path) == 0);
    const std::string report = slurp(a.path / "verify.json");
    CHECK(report == slurp(b.path / "verify.json"));
    const auto doc = nlohmann::json::parse(report);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["all_passed"] == true);
    CHECK(doc["checks"].size() == 7);
    for (const auto& c : doc["checks"]) {
        CHECK(c["passed"] == true);
        CHECK(!c["anchor"].get<std::string>().empty());
    }

    TempDir bug;
    CHECK(run("verify --inject-bug --checks unfolding,only_zero", bug.path) == 1);
    const auto bdoc = nlohmann::json::parse(slurp(bug.path / "verify.json"));
    REQUIRE(bdoc["checks"].size() == 2);
    CHECK(bdoc["checks"][0]["name"] == "unfolding");
    CHECK(bdoc["checks"][0]["passed"] == false);
    CHECK(bdoc["checks"][1]["passed"] == true);
    CHECK(bdoc["all_passed"] == false);

    TempDir none;
    CHECK(run("verify --checks \"\"", none.path) == 0);
    const auto ndoc = nlohmann::json::parse(slurp(none.path / "verify.json"));
    CHECK(ndoc["checks"].empty());
    CHECK(ndoc["all_passed"] == true);

    CHECK(run("verify --checks bogus", none.path) == 2);
}

TEST_CASE("output directory from the environment") {
    TempDir dir;
    ::setenv("SHIFTCONV_OUTPUT_DIR", dir.path.c_str(), 1);
    const int code = run("verify --checks only_zero");
    ::unsetenv("SHIFTCONV_OUTPUT_DIR");
    CHECK(code == 0);
    CHECK(fs::exists(dir.path / "verify.json"));
}
