#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ajami/glyph_table.hpp"
#include "ajami/language_profile.hpp"
#include "ajami/preprocessor.hpp"

namespace ajami {

/// Arabic-script scalars the rules emit by name.
namespace marks {
inline constexpr char32_t kShadda = 0x0651;
inline constexpr char32_t kSukun = 0x0652;
inline constexpr char32_t kAlif = 0x0627;
inline constexpr char32_t kMaddaAlif = 0x0622;
inline constexpr char32_t kFatha = 0x064E;
inline constexpr char32_t kWaw = 0x0648;
inline constexpr char32_t kYa = 0x064A;
inline constexpr char32_t kTatweel = 0x0640;
}  // namespace marks

/// Two leading spaces and one trailing space around the text, so every
/// scanned position has a previous character and word boundaries are
/// uniform at the edges.
std::u32string pad(std::u32string_view text);

/// One row per scanned position of the padded text. `index` is the 1-based
/// position, so the first scanned row (the second leading pad) has index 2.
/// `prev`/`curr` show the working buffer, i.e. they reflect in-place
/// replacements made by earlier windows (a consumed geminate slot shows the
/// shadda, a consumed long-vowel slot shows its carrier letter). `next` is
/// absent on the last row. `branches` is the comma-joined rule labels that
/// fired, e.g. "c,h". Concatenating `emitted` over all rows gives the
/// engine output exactly; the pad rows' own pass-through spaces are not
/// part of the output and carry no emission.
struct TraceEntry {
    std::size_t index;
    char32_t prev;
    char32_t curr;
    std::optional<char32_t> next;
    std::string branches;
    std::u32string emitted;
};

struct RuleTrace {
    std::vector<TraceEntry> entries;
};

struct TranslitStats {
    std::uint64_t scalars_in = 0;   // before preprocessing
    std::uint64_t scalars_out = 0;
    std::uint64_t unmapped_in_range = 0;       // passed through, <= 0x2FF
    std::uint64_t passthrough_out_of_range = 0;  // passed through, > 0x2FF
    std::map<std::string, std::uint64_t> branch_counts;
};

struct TranslitResult {
    std::u32string output;
    TranslitStats stats;
};

/// Runs the full pipeline: preprocess, pad, then the windowed rule scan.
/// Total over all scalar input; unmapped in-range scalars pass through
/// unchanged (and are counted), scalars above 0x2FF bypass the table.
/// When `trace` is non-null every scanned window is recorded.
TranslitResult transliterate(std::u32string_view text, const LanguageProfile& profile,
                             const GlyphTable& table, const TranslitOptions& options = {},
                             RuleTrace* trace = nullptr);

/// UTF-8 in, UTF-8 out. Input must be valid UTF-8 (checked by the caller
/// via uni::decode_utf8); this overload asserts on invalid input.
std::string transliterate_utf8(std::string_view utf8, const LanguageProfile& profile,
                               const GlyphTable& table, const TranslitOptions& options = {},
                               RuleTrace* trace = nullptr);

/// Renders the trace as aligned text columns I, B, C, D, BRANCH, OUTPUT.
/// Spaces print as chr(32), other scalars print literally when printable
/// ASCII and as U+XXXX otherwise; absent cells print as "-".
std::string format_trace(const RuleTrace& trace);

std::string format_stats(const TranslitStats& stats);

}  // namespace ajami
