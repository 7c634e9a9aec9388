#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "gcdel/bitstring.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kTool = GCDEL_TOOL;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("gcdel_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args, const std::string& stdoutFile = "") {
    std::string cmd = kTool + " " + args;
    if (!stdoutFile.empty()) cmd += " > " + stdoutFile;
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

} // namespace

TEST_CASE("encode/corrupt/decode round trip with the worked example") {
    TempDir tmp;
    write_file(tmp.file("msg.txt"), "1110000011010001\n");

    const std::string codeFlags = "--k 16 --delta 1 --c 2 --ell 4";
    REQUIRE(run("encode " + codeFlags + " --input " + tmp.file("msg.txt") + " --output " +
                tmp.file("cw.txt")) == 0);
    CHECK(slurp(tmp.file("cw.txt")) == "11100000110100010000110000111111\n");

    REQUIRE(run("corrupt --input " + tmp.file("cw.txt") + " --output " + tmp.file("rx.txt") +
                " --positions 14") == 0);
    const json sidecar = json::parse(slurp(tmp.file("rx.txt") + ".deletions.json"));
    CHECK(sidecar["positions"] == json::array({14}));
    CHECK(sidecar["output_bits"] == 31);

    REQUIRE(run("decode " + codeFlags + " --input " + tmp.file("rx.txt") + " --output " +
                tmp.file("out.txt"),
                tmp.file("report.json")) == 0);
    CHECK(slurp(tmp.file("out.txt")) == "1110000011010001\n");
    const json report = json::parse(slurp(tmp.file("report.json")));
    CHECK(report["status"] == "success");
}

TEST_CASE("decode failure reports ambiguity with exit code 1") {
    TempDir tmp;
    write_file(tmp.file("msg.txt"), "1101000010000101\n");
    const std::string codeFlags = "--k 16 --delta 1 --c 2 --ell 4";
    REQUIRE(run("encode " + codeFlags + " --input " + tmp.file("msg.txt") + " --output " +
                tmp.file("cw.txt")) == 0);
    REQUIRE(run("corrupt --input " + tmp.file("cw.txt") + " --output " + tmp.file("rx.txt") +
                " --positions 14") == 0);

    const int rc = run("decode " + codeFlags + " --input " + tmp.file("rx.txt"),
                       tmp.file("report.json"));
    CHECK(rc == 1);
    const json report = json::parse(slurp(tmp.file("report.json")));
    CHECK(report["status"] == "failure");
    CHECK(report["reason"] == "ambiguous");
    CHECK(report["distinct_candidates"] == 2);
}

TEST_CASE("usage and config errors exit with code 2") {
    TempDir tmp;
    CHECK(run("decode --k 16 --delta 1 --c 2", tmp.file("junk.json")) == 2); // missing --input
    write_file(tmp.file("rx.txt"), "1010\n");
    // ell does not divide k
    CHECK(run("decode --k 16 --delta 1 --c 2 --ell 5 --input " + tmp.file("rx.txt"),
              tmp.file("err.json")) == 2);
    const json err = json::parse(slurp(tmp.file("err.json")));
    CHECK(err["error"]["code"] == "config_error");
}

TEST_CASE("raw bit files round trip") {
    TempDir tmp;
    write_file(tmp.file("msg.txt"), "1110000011010001\n");
    const std::string codeFlags = "--k 16 --delta 1 --c 2 --ell 4";
    REQUIRE(run("encode " + codeFlags + " --format raw --input " + tmp.file("msg.txt") +
                " --output " + tmp.file("cw.raw")) == 0);
    // 8-byte length header plus 4 packed bytes
    CHECK(fs::file_size(tmp.file("cw.raw")) == 12);
    REQUIRE(run("decode " + codeFlags + " --input " + tmp.file("cw.raw") + " --output " +
                tmp.file("out.txt"),
                tmp.file("report.json")) == 0);
    CHECK(slurp(tmp.file("out.txt")) == "1110000011010001\n");
}

TEST_CASE("experiment records are byte-identical across reruns and job counts") {
    TempDir tmp;
    const std::string flags =
        "experiment --k 16 --delta 1 --c 2 --ell 4 --trials 400 --seed 7 --format json";
    REQUIRE(run(flags + " --jobs 1 --output " + tmp.file("a.json")) == 0);
    REQUIRE(run(flags + " --jobs 8 --output " + tmp.file("b.json")) == 0);
    REQUIRE(run(flags + " --jobs 1 --output " + tmp.file("c.json")) == 0);
    const std::string a = slurp(tmp.file("a.json"));
    CHECK(a == slurp(tmp.file("b.json")));
    CHECK(a == slurp(tmp.file("c.json")));
    const json rec = json::parse(a);
    CHECK(rec["k"] == 16);
    CHECK(rec["seed"] == 7);
    CHECK(rec["wrong_decodes"] == 0);
    CHECK(rec["mean_decode_us"].is_null()); // timing is opt-in
}

TEST_CASE("experiment csv uses the documented column order") {
    TempDir tmp;
    REQUIRE(run("experiment --k 16 --delta 1 --c 2 --ell 4 --trials 50 --seed 1 --format csv"
                " --output " + tmp.file("r.csv")) == 0);
    const std::string csv = slurp(tmp.file("r.csv"));
    CHECK(csv.rfind("k,delta,c,ell,trials,seed,failures,wrong_decodes,rate,ci_low,ci_high,"
                    "rate_R,case_count,mean_decode_us\n", 0) == 0);
}

TEST_CASE("bound and exhaustive subcommands") {
    TempDir tmp;
    REQUIRE(run("bound --k 16 --c 3", tmp.file("b.json")) == 0);
    const json b = json::parse(slurp(tmp.file("b.json")));
    CHECK(b["bound"] == doctest::Approx(0.03125));

    REQUIRE(run("exhaustive --k 8 --delta 1 --c 2 --ell 4", tmp.file("e.json")) == 0);
    const json e = json::parse(slurp(tmp.file("e.json")));
    CHECK(e["instances"] == 256 * 24);
    CHECK(e["wrong_decodes"] == 0);
}

TEST_CASE("sync records are reproducible and self-describing") {
    TempDir tmp;
    const std::string flags =
        "sync --length 20000 --d 8 --strategy sync_gc --delta 2 --seed 11 --format json";
    REQUIRE(run(flags + " --output " + tmp.file("s1.json")) == 0);
    REQUIRE(run(flags + " --output " + tmp.file("s2.json")) == 0);
    const std::string s1 = slurp(tmp.file("s1.json"));
    CHECK(s1 == slurp(tmp.file("s2.json")));
    const json rec = json::parse(s1);
    CHECK(rec["strategy"] == "sync_gc");
    CHECK(rec["d"] == 8);
    CHECK(rec["success"] == true);
    CHECK(rec["exact"] == true);
    CHECK(rec["seed"] == 11);
    CHECK(rec["config"]["center_m"] == 25);
}

TEST_CASE("config file supplies defaults, flags override") {
    TempDir tmp;
    write_file(tmp.file("exp.conf"), "k=16\ndelta=1\nc=2\nell=4\ntrials=50\nseed=3\n");
    REQUIRE(run("experiment --config " + tmp.file("exp.conf"), tmp.file("a.json")) == 0);
    const json a = json::parse(slurp(tmp.file("a.json")));
    CHECK(a["trials"] == 50);
    CHECK(a["seed"] == 3);
    REQUIRE(run("experiment --config " + tmp.file("exp.conf") + " --seed 9",
                tmp.file("b.json")) == 0);
    const json b = json::parse(slurp(tmp.file("b.json")));
    CHECK(b["seed"] == 9);
}
