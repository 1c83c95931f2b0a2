#include "ajami/language_profile.hpp"

#include <cstdio>
#include <stdexcept>

#include "ajami/parse_error.hpp"
#include "ajami/translit_engine.hpp"
#include "ajami/unicode.hpp"

namespace ajami {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

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

// An item is a literal character or a U+XXXX escape; returns its scalars.
std::u32string parse_item(std::string_view item, std::size_t lineno) {
    if (item.size() > 2 && (item.substr(0, 2) == "U+" || item.substr(0, 2) == "u+")) {
        char32_t cp;
        if (!parse_hex(item.substr(2), cp) || !uni::is_scalar(cp))
            throw ParseError(lineno, "bad scalar escape '" + std::string(item) + "'");
        return std::u32string(1, cp);
    }
    auto d = uni::decode_utf8(item);
    if (!d.ok) throw ParseError(lineno, "item is not valid UTF-8");
    return d.text;
}

std::vector<std::u32string> parse_list(std::string_view value, std::size_t lineno) {
    std::vector<std::u32string> items;
    std::size_t pos = 0;
    while (pos <= value.size()) {
        auto comma = value.find(',', pos);
        std::string_view piece = comma == std::string_view::npos
                                     ? value.substr(pos)
                                     : value.substr(pos, comma - pos);
        piece = trim(piece);
        if (!piece.empty()) items.push_back(parse_item(piece, lineno));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return items;
}

char32_t single_scalar(const std::u32string& item, std::size_t lineno, const char* what) {
    if (item.size() != 1)
        throw ParseError(lineno, std::string(what) + " must be a single scalar");
    return item[0];
}

std::string show(char32_t cp) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
    return buf;
}

bool reserved_scalar(char32_t cp) {
    return cp == 0x20 || cp == 0x09 || cp == 0x0A || cp == 0x0D ||
           (cp >= '0' && cp <= '9') || cp == marks::kTatweel;
}

}  // namespace

CharClass LanguageProfile::classify(char32_t cp) const {
    if (cp == 0x20 || cp == 0x09 || cp == 0x0A || cp == 0x0D) return CharClass::Space;
    if (cp >= '0' && cp <= '9') return CharClass::Digit;
    if (vowels.count(cp)) return CharClass::Vowel;
    if (consonants.count(cp)) return CharClass::Consonant;
    if (punctuation.count(cp)) return CharClass::Punctuation;
    return CharClass::Other;
}

CarrierKind LanguageProfile::carrier_for(char32_t vowel) const {
    auto it = long_vowel_carriers.find(vowel);
    if (it == long_vowel_carriers.end())
        throw std::logic_error("no long-vowel carrier for " + show(vowel));
    return it->second;
}

LanguageProfile parse_profile(std::string_view contents) {
    LanguageProfile p;
    std::string section;
    std::set<std::string> seen_keys;
    bool has_vowels = false, has_consonants = false, has_lam = false;

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

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(lineno, "unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "classes" && section != "prenasal" && section != "carriers")
                throw ParseError(lineno, "unknown section [" + section + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(lineno, "expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        const std::string qualified = section + "/" + key;
        if (!seen_keys.insert(qualified).second)
            throw ParseError(lineno, "duplicate key '" + key + "'");

        if (section.empty()) {
            if (key == "name") {
                p.name = std::string(value);
                if (p.name.empty()) throw ParseError(lineno, "name must not be empty");
            } else {
                throw ParseError(lineno, "unknown key '" + key + "'");
            }
        } else if (section == "classes") {
            auto items = parse_list(value, lineno);
            auto to_set = [&](std::set<char32_t>& dst, const char* what) {
                for (const auto& it : items) {
                    char32_t cp = single_scalar(it, lineno, what);
                    if (reserved_scalar(cp))
                        throw ParseError(lineno, show(cp) + " collides with a built-in class");
                    if (!dst.insert(cp).second)
                        throw ParseError(lineno, "duplicate " + std::string(what) + " " + show(cp));
                }
            };
            if (key == "vowels") {
                to_set(p.vowels, "vowel");
                has_vowels = true;
            } else if (key == "consonants") {
                to_set(p.consonants, "consonant");
                has_consonants = true;
            } else if (key == "nasals") {
                to_set(p.nasals, "nasal");
            } else if (key == "punctuation") {
                to_set(p.punctuation, "punctuation mark");
            } else if (key == "lam") {
                p.lam_char = single_scalar(parse_item(value, lineno), lineno, "lam");
                has_lam = true;
            } else {
                throw ParseError(lineno, "unknown key '" + key + "' in [classes]");
            }
        } else if (section == "prenasal") {
            if (key != "pairs") throw ParseError(lineno, "unknown key '" + key + "' in [prenasal]");
            for (const auto& it : parse_list(value, lineno)) {
                if (it.size() != 2)
                    throw ParseError(lineno, "prenasal pair must be exactly two scalars");
                if (!p.prenasal_pairs.insert({it[0], it[1]}).second)
                    throw ParseError(lineno, "duplicate prenasal pair");
            }
        } else {  // carriers
            char32_t vowel = single_scalar(parse_item(key, lineno), lineno, "carrier key");
            CarrierKind kind;
            if (value == "ALIF") kind = CarrierKind::Alif;
            else if (value == "YA") kind = CarrierKind::Ya;
            else if (value == "WAW") kind = CarrierKind::Waw;
            else throw ParseError(lineno, "carrier must be ALIF, YA or WAW");
            if (!p.long_vowel_carriers.emplace(vowel, kind).second)
                throw ParseError(lineno, "duplicate carrier for " + show(vowel));
        }
    }

    if (p.name.empty()) throw ParseError(0, "missing name");
    if (!has_vowels) throw ParseError(0, "missing vowels");
    if (!has_consonants) throw ParseError(0, "missing consonants");
    if (!has_lam) throw ParseError(0, "missing lam");

    for (char32_t cp : p.vowels)
        if (p.consonants.count(cp))
            throw ParseError(0, show(cp) + " is listed as both vowel and consonant");
    for (char32_t cp : p.punctuation)
        if (p.vowels.count(cp) || p.consonants.count(cp))
            throw ParseError(0, show(cp) + " is listed as both letter and punctuation");
    for (char32_t cp : p.nasals)
        if (!p.consonants.count(cp))
            throw ParseError(0, "nasal " + show(cp) + " is not in consonants");
    for (const auto& [first, second] : p.prenasal_pairs) {
        if (!p.nasals.count(first))
            throw ParseError(0, "prenasal pair must start with a nasal, got " + show(first));
        if (!p.consonants.count(second))
            throw ParseError(0, "prenasal pair must end with a consonant, got " + show(second));
    }
    for (char32_t cp : p.vowels)
        if (!p.long_vowel_carriers.count(cp))
            throw ParseError(0, "vowel " + show(cp) + " has no long-vowel carrier");
    for (const auto& [vowel, kind] : p.long_vowel_carriers) {
        (void)kind;
        if (!p.vowels.count(vowel))
            throw ParseError(0, "carrier listed for non-vowel " + show(vowel));
    }
    return p;
}

}  // namespace ajami
