#include "ajami/glyph_table.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "ajami/language_profile.hpp"
#include "ajami/parse_error.hpp"
#include "ajami/unicode.hpp"

namespace ajami {

namespace {

constexpr std::size_t kMaxSeqLen = 4;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Bare hex, no 0x/U+ prefix, case-insensitive.
bool parse_hex(std::string_view s, char32_t& out) {
    if (s.empty() || s.size() > 8) return false;
    char32_t v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else return false;
        v = (v << 4) | static_cast<char32_t>(d);
    }
    out = v;
    return true;
}

std::string hex_of(char32_t cp) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%X", static_cast<unsigned>(cp));
    return buf;
}

}  // namespace

void GlyphTable::set(char32_t latin, std::u32string ajami) {
    if (latin > kMaxIndex) throw ParseError(0, "latin scalar out of range: " + hex_of(latin));
    if (ajami.empty() || ajami.size() > kMaxSeqLen)
        throw ParseError(0, "ajami sequence must hold 1..4 scalars");
    rows_[latin] = std::move(ajami);
}

std::size_t GlyphTable::populated_count() const {
    std::size_t n = 0;
    for (const auto& s : rows_)
        if (!s.empty()) ++n;
    return n;
}

GlyphTable parse_glyph_table(std::string_view contents) {
    GlyphTable table;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= contents.size()) {
        std::size_t eol = contents.find('\n', pos);
        std::string_view line;
        if (eol == std::string_view::npos) {
            if (pos == contents.size()) break;
            line = contents.substr(pos);
            pos = contents.size() + 1;
        } else {
            line = contents.substr(pos, eol - pos);
            pos = eol + 1;
        }
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto comma = line.find(',');
        if (comma == std::string_view::npos)
            throw ParseError(lineno, "expected LATIN_HEX,AJAMI_HEX");
        char32_t latin;
        if (!parse_hex(trim(line.substr(0, comma)), latin))
            throw ParseError(lineno, "malformed latin hex");
        if (latin > GlyphTable::kMaxIndex)
            throw ParseError(lineno, "latin scalar " + hex_of(latin) + " above 2FF");
        if (table.populated(latin))
            throw ParseError(lineno, "duplicate entry for " + hex_of(latin));

        std::u32string seq;
        std::string_view rest = line.substr(comma + 1);
        while (true) {
            const auto semi = rest.find(';');
            std::string_view item =
                trim(semi == std::string_view::npos ? rest : rest.substr(0, semi));
            char32_t cp;
            if (!parse_hex(item, cp)) throw ParseError(lineno, "malformed ajami hex");
            if (!uni::is_scalar(cp))
                throw ParseError(lineno, "ajami value " + hex_of(cp) + " is not a Unicode scalar");
            seq.push_back(cp);
            if (semi == std::string_view::npos) break;
            rest = rest.substr(semi + 1);
        }
        if (seq.size() > kMaxSeqLen)
            throw ParseError(lineno, "ajami sequence longer than 4 scalars");
        table.set(latin, std::move(seq));
    }
    return table;
}

std::string serialize_glyph_table(const GlyphTable& table) {
    std::string out;
    for (char32_t cp = 0; cp <= GlyphTable::kMaxIndex; ++cp) {
        const auto r = table.lookup(cp);
        if (r.status != GlyphTable::LookupStatus::Mapped) continue;
        out += hex_of(cp);
        out += ',';
        for (std::size_t i = 0; i < r.seq->size(); ++i) {
            if (i) out += ';';
            out += hex_of((*r.seq)[i]);
        }
        out += '\n';
    }
    return out;
}

std::vector<CoverageWarning> validate_against_profile(const GlyphTable& table,
                                                      const LanguageProfile& profile) {
    std::vector<CoverageWarning> warnings;
    auto check = [&](char32_t cp, const char* role) {
        if (table.populated(cp)) return;
        char label[16];
        std::snprintf(label, sizeof label, "U+%04X", static_cast<unsigned>(cp));
        warnings.push_back(
            {cp, role, std::string(role) + " " + label + " has no table entry"});
    };
    for (char32_t cp : profile.vowels) check(cp, "vowel");
    for (char32_t cp : profile.consonants) check(cp, "consonant");
    for (char32_t cp = '0'; cp <= '9'; ++cp) check(cp, "digit");
    for (char32_t cp : profile.punctuation) check(cp, "punctuation");
    return warnings;
}

}  // namespace ajami
