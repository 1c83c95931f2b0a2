#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "test_util.hpp"

namespace fs = std::filesystem;
using testutil::data_path;
using testutil::u8;

namespace {

// Runs a shell command, captures its stdout, returns the exit code.
int run_cmd(const std::string& cmd, std::string* out = nullptr) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string captured;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) captured.append(buf, n);
    const int status = pclose(pipe);
    if (out) *out = captured;
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string bin() { return std::string("'") + LATIN2AJAMI_BIN + "'"; }

std::string base_cmd() {
    return bin() + " --table '" + data_path("wolof.glyph") + "' --profile '" +
           data_path("wolof.profile") + "'";
}

// Scratch directory, removed when the test case ends.
struct TempDir {
    fs::path path;
    TempDir(const char* tag) {
        path = fs::temp_directory_path() /
               ("ajami_cli_" + std::to_string(getpid()) + "_" + tag);
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name, const std::string& bytes) const {
        const fs::path p = path / name;
        std::ofstream(p, std::ios::binary) << bytes;
        return p.string();
    }
};

const std::string kDekkandoo =
    u8(U"دكَّندو");

}  // namespace

TEST_CASE("cli: stdin to stdout") {
    std::string out;
    CHECK(run_cmd("printf '%s' 'dëkkandoo' | " + base_cmd(), &out) == 0);
    CHECK(out == kDekkandoo);
    // explicit "-" positional behaves the same
    CHECK(run_cmd("printf '%s' 'dëkkandoo' | " + base_cmd() + " -", &out) == 0);
    CHECK(out == kDekkandoo);
}

TEST_CASE("cli: file input") {
    TempDir tmp("file_input");
    const auto in = tmp.file("in.txt", "dëkkandoo");
    std::string out;
    CHECK(run_cmd(base_cmd() + " '" + in + "'", &out) == 0);
    CHECK(out == kDekkandoo);
}

TEST_CASE("cli: multiple inputs concatenate on stdout") {
    TempDir tmp("multi");
    const auto a = tmp.file("a.txt", "b");
    const auto b = tmp.file("b.txt", "d");
    std::string out;
    CHECK(run_cmd(base_cmd() + " '" + a + "' '" + b + "'", &out) == 0);
    CHECK(out == u8(U"بْ") + u8(U"دْ"));
}

TEST_CASE("cli: output file is written atomically in place") {
    TempDir tmp("outfile");
    const auto in = tmp.file("in.txt", ",");
    const auto target = (tmp.path / "out.txt").string();
    CHECK(run_cmd(base_cmd() + " --output '" + target + "' '" + in + "'") == 0);
    CHECK(testutil::read_file(target) == u8(U"،"));
    CHECK_FALSE(fs::exists(target + ".tmp"));
}

TEST_CASE("cli: output directory gets one .ajami.txt per input") {
    TempDir tmp("outdir");
    const auto a = tmp.file("first.txt", "b");
    const auto b = tmp.file("second.txt", "d");
    const auto outdir = (tmp.path / "out").string();
    fs::create_directories(outdir);
    CHECK(run_cmd(base_cmd() + " --output '" + outdir + "' '" + a + "' '" + b + "'") ==
          0);
    CHECK(testutil::read_file(outdir + "/first.ajami.txt") == u8(U"بْ"));
    CHECK(testutil::read_file(outdir + "/second.ajami.txt") == u8(U"دْ"));
}

TEST_CASE("cli: flags reach the preprocessor") {
    std::string out;
    CHECK(run_cmd("printf 7 | " + base_cmd() + " --digits arabic-indic", &out) == 0);
    CHECK(out == u8(U"٧"));
    CHECK(run_cmd("printf 'si.' | " + base_cmd() + " --final-dot triple", &out) == 0);
    CHECK(out == u8(U"سِ؞"));
    CHECK(run_cmd("printf bd | " + base_cmd() + " --tatweel", &out) == 0);
    CHECK(out == u8(U"بْـدْ"));
}

TEST_CASE("cli: nfc flag composes decomposed input") {
    TempDir tmp("nfc");
    // b + e + combining diaeresis + t
    const auto in = tmp.file("in.txt", "be\xCC\x88t");
    std::string out;
    CHECK(run_cmd(base_cmd() + " --nfc '" + in + "'", &out) == 0);
    CHECK(out == u8(U"بتْ"));
    // without the flag the combining mark passes through untouched
    CHECK(run_cmd(base_cmd() + " '" + in + "'", &out) == 0);
    CHECK(out == u8(U"ب̈تْ"));
}

TEST_CASE("cli: trace goes to stderr") {
    std::string err;
    CHECK(run_cmd("printf ',' | " + base_cmd() + " --trace 2>&1 1>/dev/null", &err) ==
          0);
    CHECK(err.find("BRANCH") != std::string::npos);
    CHECK(err.find("U+060C") != std::string::npos);
    // stdout still carries the transliteration
    std::string out;
    CHECK(run_cmd("printf ',' | " + base_cmd() + " --trace 2>/dev/null", &out) == 0);
    CHECK(out == u8(U"،"));
}

TEST_CASE("cli: stats go to stderr and include coverage warnings") {
    std::string err;
    CHECK(run_cmd("printf 'dëkk' | " + base_cmd() + " --stats 2>&1 1>/dev/null",
                  &err) == 0);
    CHECK(err.find("scalars in:") != std::string::npos);
    CHECK(err.find("branch C.c:") != std::string::npos);
    CHECK(err.find("warning:") != std::string::npos);  // the shipped digit gaps
}

TEST_CASE("cli: usage errors exit 1") {
    CHECK(run_cmd(bin() + " --table x 2>/dev/null") == 1);  // missing --profile
    CHECK(run_cmd(base_cmd() + " --bogus 2>/dev/null") == 1);
    CHECK(run_cmd(base_cmd() + " --digits roman 2>/dev/null") == 1);
    TempDir tmp("trace_two");
    const auto a = tmp.file("a.txt", "b");
    const auto b = tmp.file("b.txt", "d");
    std::string err;
    CHECK(run_cmd(base_cmd() + " --trace '" + a + "' '" + b + "' 2>&1 1>/dev/null",
                  &err) == 1);
    CHECK(err.find("--trace") != std::string::npos);
}

TEST_CASE("cli: help exits 0") {
    std::string out;
    CHECK(run_cmd(bin() + " --help", &out) == 0);
    CHECK(out.find("--table") != std::string::npos);
}

TEST_CASE("cli: missing files exit 2 and name the path") {
    std::string err;
    CHECK(run_cmd(bin() + " --table /no/such.glyph --profile '" +
                      data_path("wolof.profile") + "' /dev/null 2>&1 1>/dev/null",
                  &err) == 2);
    CHECK(err.find("/no/such.glyph") != std::string::npos);

    TempDir tmp("missing_input");
    CHECK(run_cmd(base_cmd() + " '" + (tmp.path / "ghost.txt").string() +
                      "' 2>&1 1>/dev/null",
                  &err) == 2);
    CHECK(err.find("ghost.txt") != std::string::npos);
}

TEST_CASE("cli: malformed table exits 2 with a line number") {
    TempDir tmp("bad_table");
    const auto bad = tmp.file("bad.glyph", "20,20\nnot a row\n");
    std::string err;
    CHECK(run_cmd(bin() + " --table '" + bad + "' --profile '" +
                      data_path("wolof.profile") + "' /dev/null 2>&1 1>/dev/null",
                  &err) == 2);
    CHECK(err.find("line 2") != std::string::npos);
}

TEST_CASE("cli: invalid utf-8 input exits 2 with a byte offset") {
    TempDir tmp("bad_utf8");
    const auto bad = tmp.file("bad.txt", std::string("ab\xFF", 3));
    std::string err;
    CHECK(run_cmd(base_cmd() + " '" + bad + "' 2>&1 1>/dev/null", &err) == 2);
    CHECK(err.find("invalid UTF-8 at byte 2") != std::string::npos);
}

TEST_CASE("cli: input BOM is tolerated, none is emitted") {
    TempDir tmp("bom");
    const auto in = tmp.file("bom.txt", std::string("\xEF\xBB\xBF", 3) + "b");
    std::string out;
    CHECK(run_cmd(base_cmd() + " '" + in + "'", &out) == 0);
    CHECK(out == u8(U"بْ"));
}

TEST_CASE("cli: LATIN2AJAMI_DATA resolves bare table and profile names") {
    std::string out;
    const std::string cmd = "LATIN2AJAMI_DATA='" + std::string(AJAMI_DATA_DIR) +
                            "' " + bin() +
                            " --table wolof.glyph --profile wolof.profile";
    CHECK(run_cmd("printf ',' | " + cmd, &out) == 0);
    CHECK(out == u8(U"،"));
}
