#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ajami {

class LanguageProfile;

/// Latin -> Ajami glyph correspondences, indexed by Latin scalar value.
///
/// File format, one row per line:
///
///     LATIN_HEX,AJAMI_HEX[;AJAMI_HEX...]
///
/// Hex is case-insensitive with no 0x/U+ prefix. `#` starts a comment,
/// blank lines are skipped, LF and CRLF both accepted. The Latin scalar
/// must be in [0, 0x2FF]; the Ajami side is 1..4 Unicode scalars (private
/// use area allowed). Duplicate Latin scalars are an error reported with
/// the later line number.
class GlyphTable {
public:
    static constexpr char32_t kMaxIndex = 0x2FF;

    enum class LookupStatus { Mapped, Unmapped, OutOfRange };

    struct LookupResult {
        LookupStatus status;
        /// Valid only when status == Mapped.
        const std::u32string* seq = nullptr;
    };

    LookupResult lookup(char32_t cp) const {
        if (cp > kMaxIndex) return {LookupStatus::OutOfRange};
        const auto& s = rows_[cp];
        if (s.empty()) return {LookupStatus::Unmapped};
        return {LookupStatus::Mapped, &s};
    }

    bool populated(char32_t cp) const {
        return cp <= kMaxIndex && !rows_[cp].empty();
    }

    void set(char32_t latin, std::u32string ajami);
    std::size_t populated_count() const;

    bool operator==(const GlyphTable& other) const { return rows_ == other.rows_; }

private:
    std::array<std::u32string, kMaxIndex + 1> rows_;
};

/// Parses table file contents. Throws ParseError with a 1-based line number
/// on malformed hex, out-of-range Latin scalar, invalid Ajami scalar,
/// empty or over-long sequences, and duplicate rows.
GlyphTable parse_glyph_table(std::string_view contents);

/// Writes the populated rows back in file format, sorted by Latin scalar.
/// parse(serialize(t)) == t.
std::string serialize_glyph_table(const GlyphTable& table);

struct CoverageWarning {
    char32_t cp;
    std::string role;  // "vowel", "consonant", "digit", "punctuation"
    std::string message;
};

/// One warning per profile character (vowel, consonant, digit, listed
/// punctuation) with no populated table entry. Empty means full coverage.
/// Note the shipped tables leave digits unpopulated on purpose: digit
/// presentation is handled by the preprocessor, so digit warnings are
/// expected there.
std::vector<CoverageWarning> validate_against_profile(const GlyphTable& table,
                                                      const LanguageProfile& profile);

}  // namespace ajami
