#pragma once

#include <string>
#include <string_view>

#include "ajami/language_profile.hpp"

namespace ajami {

enum class FinalDotStyle { Simple, Triple };
enum class DigitStyle { Western, ArabicIndic };

struct TranslitOptions {
    FinalDotStyle final_dot = FinalDotStyle::Simple;
    DigitStyle digits = DigitStyle::Western;
    bool tatweel = false;
};

/// The fixed pipeline the engine runs before scanning:
/// lowercase -> final dot -> digits -> tatweel. Running it twice gives the
/// same result as running it once.
std::u32string preprocess(std::u32string_view text, const TranslitOptions& options,
                          const LanguageProfile& profile);

// Individual passes, in pipeline order.

/// Simple lowercase fold (exact over the glyph table range [0, 0x2FF]).
std::u32string lowercase_fold(std::u32string_view text);

/// Simple keeps U+002E; Triple replaces every U+002E with U+061E.
std::u32string apply_final_dot(std::u32string_view text, FinalDotStyle style);

/// Western keeps U+0030..U+0039; ArabicIndic maps them to U+0660..U+0669.
std::u32string map_digits(std::u32string_view text, DigitStyle style);

/// Inserts U+0640 between every pair of adjacent profile consonants.
/// Removing the inserted tatweels gives back the input.
std::u32string insert_tatweel(std::u32string_view text, const LanguageProfile& profile);

}  // namespace ajami
