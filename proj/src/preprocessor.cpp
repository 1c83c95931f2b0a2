#include "ajami/preprocessor.hpp"

#include "ajami/translit_engine.hpp"
#include "ajami/unicode.hpp"

namespace ajami {

std::u32string lowercase_fold(std::u32string_view text) {
    return uni::lowercase(text);
}

std::u32string apply_final_dot(std::u32string_view text, FinalDotStyle style) {
    std::u32string out(text);
    if (style == FinalDotStyle::Triple) {
        for (auto& cp : out)
            if (cp == U'.') cp = 0x061E;  // three dots punctuation
    }
    return out;
}

std::u32string map_digits(std::u32string_view text, DigitStyle style) {
    std::u32string out(text);
    if (style == DigitStyle::ArabicIndic) {
        for (auto& cp : out)
            if (cp >= U'0' && cp <= U'9') cp = cp - U'0' + 0x0660;
    }
    return out;
}

std::u32string insert_tatweel(std::u32string_view text, const LanguageProfile& profile) {
    std::u32string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        out.push_back(text[i]);
        if (i + 1 < text.size() && profile.is_consonant(text[i]) &&
            profile.is_consonant(text[i + 1]))
            out.push_back(marks::kTatweel);
    }
    return out;
}

std::u32string preprocess(std::u32string_view text, const TranslitOptions& options,
                          const LanguageProfile& profile) {
    std::u32string s = lowercase_fold(text);
    s = apply_final_dot(s, options.final_dot);
    s = map_digits(s, options.digits);
    if (options.tatweel) s = insert_tatweel(s, profile);
    return s;
}

}  // namespace ajami
