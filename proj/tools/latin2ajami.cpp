// latin2ajami: batch Latin -> Ajami transliteration.
//
// Exit codes: 0 success, 1 bad arguments, 2 file/format error (table,
// profile or input), 3 internal error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ajami/parse_error.hpp"
#include "ajami/translit_engine.hpp"
#include "ajami/unicode.hpp"

namespace fs = std::filesystem;
using namespace ajami;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

// A path given on the command line is used as-is when it exists; otherwise
// it is retried under $LATIN2AJAMI_DATA. The original spelling is kept for
// error messages.
std::string resolve_data_path(const std::string& given) {
    if (fs::exists(given)) return given;
    if (const char* dir = std::getenv("LATIN2AJAMI_DATA")) {
        const fs::path joined = fs::path(dir) / given;
        if (fs::exists(joined)) return joined.string();
    }
    return given;
}

std::optional<std::string> read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        if (std::cin.bad()) return std::nullopt;
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return ss.str();
}

bool write_file_atomic(const fs::path& target, const std::string& bytes,
                       std::string& err) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            err = "cannot open '" + tmp.string() + "' for writing";
            return false;
        }
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            err = "write to '" + tmp.string() + "' failed";
            return false;
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        err = "cannot rename '" + tmp.string() + "' to '" + target.string() +
              "': " + ec.message();
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

std::string display_name(const std::string& input) {
    return input == "-" ? "stdin" : input;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Batch Latin -> Ajami transliterator for West African languages"};

    std::string table_path, profile_path, output_path;
    std::string final_dot = "simple", digits = "western";
    bool tatweel = false, trace = false, stats = false, nfc = false;
    std::vector<std::string> inputs;

    app.add_option("--table", table_path, "Glyph table file")->required();
    app.add_option("--profile", profile_path, "Language profile file")->required();
    app.add_option("--final-dot", final_dot, "Sentence-final dot style")
        ->check(CLI::IsMember({"simple", "triple"}));
    app.add_option("--digits", digits, "Digit presentation")
        ->check(CLI::IsMember({"western", "arabic-indic"}));
    app.add_flag("--tatweel", tatweel, "Insert tatweel between adjacent consonants");
    app.add_flag("--trace", trace, "Dump the rule trace to stderr (single input only)");
    app.add_flag("--stats", stats, "Print per-input statistics to stderr");
    app.add_flag("--nfc", nfc, "Compose decomposed Latin letters before transliterating");
    app.add_option("--output", output_path,
                   "Output file, or directory for per-input .ajami.txt files "
                   "(default: stdout)");
    app.add_option("inputs", inputs, "Input files, - for stdin (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (inputs.empty()) inputs.push_back("-");
    if (trace && inputs.size() != 1) {
        std::fprintf(stderr, "error: --trace takes exactly one input\n");
        return kExitUsage;
    }

    try {
        table_path = resolve_data_path(table_path);
        profile_path = resolve_data_path(profile_path);

        const auto table_text = read_all(table_path);
        if (!table_text) {
            std::fprintf(stderr, "error: cannot read table file '%s'\n",
                         table_path.c_str());
            return kExitData;
        }
        const auto profile_text = read_all(profile_path);
        if (!profile_text) {
            std::fprintf(stderr, "error: cannot read profile file '%s'\n",
                         profile_path.c_str());
            return kExitData;
        }

        GlyphTable table;
        LanguageProfile profile;
        try {
            table = parse_glyph_table(*table_text);
        } catch (const ParseError& e) {
            std::fprintf(stderr, "error: table %s: %s\n", table_path.c_str(), e.what());
            return kExitData;
        }
        try {
            profile = parse_profile(*profile_text);
        } catch (const ParseError& e) {
            std::fprintf(stderr, "error: profile %s: %s\n", profile_path.c_str(),
                         e.what());
            return kExitData;
        }

        if (stats) {
            for (const auto& w : validate_against_profile(table, profile))
                std::fprintf(stderr, "warning: %s\n", w.message.c_str());
        }

        TranslitOptions options;
        options.final_dot =
            final_dot == "triple" ? FinalDotStyle::Triple : FinalDotStyle::Simple;
        options.digits =
            digits == "arabic-indic" ? DigitStyle::ArabicIndic : DigitStyle::Western;
        options.tatweel = tatweel;

        const bool dir_mode = !output_path.empty() && fs::is_directory(output_path);
        std::string combined;  // stdout or single-file mode

        for (const auto& input : inputs) {
            auto bytes = read_all(input);
            if (!bytes) {
                std::fprintf(stderr, "error: cannot read input '%s'\n",
                             display_name(input).c_str());
                return kExitData;
            }

            std::string_view view = *bytes;
            if (view.size() >= 3 && view.substr(0, 3) == "\xEF\xBB\xBF")
                view.remove_prefix(3);  // tolerate a UTF-8 BOM on input
            const std::size_t bom_skip = bytes->size() - view.size();

            const auto decoded = uni::decode_utf8(view);
            if (!decoded.ok) {
                std::fprintf(stderr, "error: %s: invalid UTF-8 at byte %zu\n",
                             display_name(input).c_str(),
                             decoded.error_offset + bom_skip);
                return kExitData;
            }

            std::u32string text = decoded.text;
            if (nfc) text = uni::compose_latin(text);

            RuleTrace rule_trace;
            const auto res = transliterate(text, profile, table, options,
                                           trace ? &rule_trace : nullptr);
            const std::string out_bytes = uni::encode_utf8(res.output);

            if (trace) std::fputs(format_trace(rule_trace).c_str(), stderr);
            if (stats) {
                std::fprintf(stderr, "-- stats: %s --\n", display_name(input).c_str());
                std::fputs(format_stats(res.stats).c_str(), stderr);
            }

            if (dir_mode) {
                fs::path name = input == "-" ? fs::path("stdin") : fs::path(input).stem();
                name += ".ajami.txt";
                const fs::path target = fs::path(output_path) / name;
                std::string err;
                if (!write_file_atomic(target, out_bytes, err)) {
                    std::fprintf(stderr, "error: %s\n", err.c_str());
                    return kExitData;
                }
            } else {
                combined += out_bytes;
            }
        }

        if (!dir_mode) {
            if (output_path.empty()) {
                std::fwrite(combined.data(), 1, combined.size(), stdout);
                if (std::fflush(stdout) != 0) {
                    std::fprintf(stderr, "error: write to stdout failed\n");
                    return kExitData;
                }
            } else {
                std::string err;
                if (!write_file_atomic(output_path, combined, err)) {
                    std::fprintf(stderr, "error: %s\n", err.c_str());
                    return kExitData;
                }
            }
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitInternal;
    }
}
