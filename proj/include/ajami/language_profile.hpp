#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ajami {

enum class CharClass { Vowel, Consonant, Space, Digit, Punctuation, Other };

enum class CarrierKind { Alif, Ya, Waw };

/// Per-language data the rule scanner consults: character classes, nasal
/// subset, prenasal pairs, long-vowel carrier choice, the lam letter and
/// the punctuation inventory.
///
/// Profile file format (INI-style):
///
///     name = wolof
///     [classes]
///     vowels      = a, à, e, ...
///     consonants  = b, c, d, ...
///     nasals      = m, n, ñ, ŋ
///     punctuation = U+002C, ., ;, :, !, ?
///     lam         = l
///     [prenasal]
///     pairs = mb, mp, nd, ...
///     [carriers]
///     a = ALIF
///     o = WAW
///     ...
///
/// List items are comma-separated; an item is either a literal scalar or a
/// U+XXXX escape (needed for the comma itself). `#` starts a comment.
class LanguageProfile {
public:
    std::string name;
    std::set<char32_t> vowels;
    std::set<char32_t> consonants;
    std::set<char32_t> nasals;
    std::set<char32_t> punctuation;
    std::set<std::pair<char32_t, char32_t>> prenasal_pairs;
    std::map<char32_t, CarrierKind> long_vowel_carriers;
    char32_t lam_char = 0;

    CharClass classify(char32_t cp) const;

    bool is_vowel(char32_t cp) const { return vowels.count(cp) != 0; }
    bool is_consonant(char32_t cp) const { return consonants.count(cp) != 0; }
    bool is_nasal(char32_t cp) const { return nasals.count(cp) != 0; }

    bool is_prenasal_pair(char32_t first, char32_t second) const {
        return prenasal_pairs.count({first, second}) != 0;
    }

    CarrierKind carrier_for(char32_t vowel) const;
};

/// Parses profile file contents. Throws ParseError on unknown sections or
/// keys, duplicate keys, malformed items, and on invariant violations:
/// vowel/consonant overlap, nasals not a subset of consonants, prenasal
/// pairs without nasal first + consonant second element, a vowel missing
/// its carrier, a carrier line for a non-vowel, class entries that collide
/// with the built-in Space/Digit classes or the tatweel scalar.
LanguageProfile parse_profile(std::string_view contents);

}  // namespace ajami
