#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ajami::uni {

/// Strict UTF-8 decode. Rejects overlong forms, surrogates and truncated
/// sequences. On failure returns the byte offset of the first bad sequence.
struct DecodeResult {
    std::u32string text;
    bool ok = false;
    std::size_t error_offset = 0;
};

DecodeResult decode_utf8(std::string_view bytes);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view text);

/// Simple lowercase mapping, exact for scalars in [0, 0x2FF] (the range the
/// glyph table indexes); scalars above pass through unchanged.
char32_t simple_lower(char32_t cp);
std::u32string lowercase(std::u32string_view text);

/// Canonical composition for Latin base + combining mark sequences whose
/// composite lands in [0, 0x2FF] (e.g. e + U+0308 -> ë). Not a general NFC
/// implementation; it covers the precomposed letters the engine can map.
std::u32string compose_latin(std::u32string_view text);

inline bool is_scalar(char32_t cp) {
    return cp <= 0x10FFFF && !(cp >= 0xD800 && cp <= 0xDFFF);
}

}  // namespace ajami::uni
