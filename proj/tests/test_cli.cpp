#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "json.hpp"

#include "gaprecover/sequence_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "gaprecover");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = gaprecover::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("gaprecover_cli_" + std::to_string(counter_++))) {
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name, const std::string& contents = {}) const {
        const auto p = (path_ / name).string();
        if (!contents.empty()) std::ofstream(p) << contents;
        return p;
    }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("recover-deg on a single neighbour") {
    TempDir dir;
    const auto in = dir.file("x.csv", "t,re,im\n1,1,0\n");
    const auto r = run({"recover-deg", "--in", in});
    CHECK(r.code == 0);
    std::istringstream back(r.out);
    const auto y = gaprecover::read_sequence_csv(back);
    CHECK(y.start() == 0);
    CHECK(std::abs(y[0] - gaprecover::Complex{1.0}) < 1e-14);

    const auto single = run({"recover-deg", "--in", in, "--single"});
    CHECK(single.code == 0);
    std::istringstream single_back(single.out);
    CHECK(gaprecover::read_sequence_csv(single_back)[0] == gaprecover::Complex{1.0});
    CHECK(single.out == "t,re,im\n0,1,0\n");
}

TEST_CASE("recover-bl on an empty sequence") {
    TempDir dir;
    const auto in = dir.file("x.csv", "t,re,im\n");
    const auto r = run({"recover-bl", "--in", in, "--cutoff", "0.1pi", "--m", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "t,re,im\n0,0,0\n1,0,0\n");
    const auto j = run({"recover-bl", "--in", in, "--cutoff", "0.1pi", "--format", "json"});
    CHECK(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.at("recovered").size() == 1);
}

TEST_CASE("input errors exit with status 1") {
    TempDir dir;
    const auto bad = dir.file("bad.csv", "t,re,im\n0,1,0\n1,abc,0\n");
    const auto r = run({"recover-bl", "--in", bad, "--cutoff", "0.1pi"});
    CHECK(r.code == 1);
    CHECK(r.err.find("row 3") != std::string::npos);

    const auto good = dir.file("good.csv", "t,re,im\n0,1,0\n");
    CHECK(run({"recover-bl", "--in", good, "--cutoff", "pi"}).code == 1);
    CHECK(run({"recover-bl", "--in", good, "--cutoff", "0"}).code == 1);
    CHECK(run({"recover-bl", "--in", good}).code == 1);
    CHECK(run({"recover-deg", "--in", good, "--omega0", "-pi"}).code == 1);
    CHECK(run({"recover-deg", "--in", good, "--m", "5", "--max-order", "3"}).code == 1);
    CHECK(run({"recover-bl", "--in", dir.file("missing.csv"), "--cutoff", "0.1pi"}).code == 1);
    CHECK(run({"experiment"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("numerical failures exit with status 2") {
    const auto r = run({"bounds", "--scheme", "bl", "--m", "20"});
    CHECK(r.code == 2);
    CHECK(r.err.find("numerical failure") != std::string::npos);
}

TEST_CASE("generate then recover") {
    TempDir dir;
    const auto deg = dir.file("deg.csv");
    REQUIRE(run({"generate", "--kind", "degenerate", "--m", "2", "--q", "40", "--seed", "3", "--out", deg}).code == 0);
    const auto x = gaprecover::read_sequence_csv_file(deg);
    const auto observed = dir.file("obs.csv");
    gaprecover::write_sequence_csv_file(observed, x.without({0, 2}));
    const auto r = run({"recover-deg", "--in", observed, "--m", "2"});
    REQUIRE(r.code == 0);
    std::istringstream back(r.out);
    const auto y = gaprecover::read_sequence_csv(back);
    for (gaprecover::Index t = 0; t <= 2; ++t) CHECK(std::abs(y[t] - x[t]) <= 1e-10);

    const auto bl = dir.file("bl.csv");
    REQUIRE(run({"generate", "--kind", "bl", "--q", "2000", "--cutoff", "0.1pi", "--seed", "9", "--out", bl}).code == 0);
    const auto z = gaprecover::read_sequence_csv_file(bl);
    const auto obs2 = dir.file("obs2.csv");
    gaprecover::write_sequence_csv_file(obs2, z.without({0, 0}));
    const auto r2 = run({"recover-bl", "--in", obs2, "--cutoff", "0.1pi", "--single"});
    REQUIRE(r2.code == 0);
    std::istringstream back2(r2.out);
    CHECK(std::abs(gaprecover::read_sequence_csv(back2)[0] - z[0]) <= 1e-2 * (1.0 + std::abs(z[0])));

    const auto again = run({"generate", "--kind", "ell1", "--q", "5", "--seed", "3"});
    CHECK(again.out == run({"generate", "--kind", "ell1", "--q", "5", "--seed", "3"}).out);
    CHECK(again.out != run({"generate", "--kind", "ell1", "--q", "5", "--seed", "4"}).out);
}

TEST_CASE("experiment from a config file") {
    TempDir dir;
    const auto cfg = dir.file("cfg.json", R"({"generator":"bl","cutoff_true":"0.1pi",
        "methods":[{"kind":"wx1","param":"0.1pi"},{"kind":"wx1","param":"0.05pi"},{"kind":"wx2","param":"pi"}],
        "n_obs":100,"q":50,"trials":4,"seed":1})");
    const auto summary = dir.file("summary.json");
    const auto r = run({"experiment", "--config", cfg, "--summary", summary, "--threads", "2"});
    REQUIRE(r.code == 0);
    CHECK(count_lines(r.out) == 1 + 3 * 4);
    const auto parsed = nlohmann::json::parse(slurp(summary));
    CHECK(parsed.at("trials") == 4);
    CHECK(parsed.at("methods").size() == 3);

    const auto preset = run({"experiment", "--preset", "fig1", "--trials", "2", "--format", "json"});
    CHECK(preset.code == 0);
    CHECK(nlohmann::json::parse(preset.out).at("trials") == 2);
}

TEST_CASE("bounds output") {
    const auto r = run({"bounds", "--scheme", "bl", "--cutoff", "0.5pi", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("value").get<double>() == doctest::Approx(2.0));
    CHECK(j.at("method") == "exact");

    const auto d = run({"bounds", "--scheme", "deg", "--omega0", "pi", "--m", "1", "--from", "inf", "--to", "2"});
    REQUIRE(d.code == 0);
    CHECK(d.out.rfind("matrix,from,to,value,upper,method\nB^-1,inf,2,", 0) == 0);
}
