#include "ajami/unicode.hpp"

namespace ajami::uni {

#include "unicode_tables.inc"

DecodeResult decode_utf8(std::string_view bytes) {
    DecodeResult r;
    r.text.reserve(bytes.size());
    std::size_t i = 0;
    const auto n = bytes.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(bytes[i]);
        char32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            r.error_offset = i;
            return r;
        }
        if (i + len > n) {
            r.error_offset = i;
            return r;
        }
        for (std::size_t k = 1; k < len; ++k) {
            const auto bk = static_cast<unsigned char>(bytes[i + k]);
            if ((bk & 0xC0) != 0x80) {
                r.error_offset = i;
                return r;
            }
            cp = (cp << 6) | (bk & 0x3F);
        }
        // Overlong forms, surrogates, out of range.
        static constexpr char32_t kMinByLen[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (len > 1 && cp < kMinByLen[len]) {
            r.error_offset = i;
            return r;
        }
        if (!is_scalar(cp)) {
            r.error_offset = i;
            return r;
        }
        r.text.push_back(cp);
        i += len;
    }
    r.ok = true;
    return r;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(std::u32string_view text) {
    std::string out;
    out.reserve(text.size() * 2);
    for (char32_t cp : text) append_utf8(out, cp);
    return out;
}

char32_t simple_lower(char32_t cp) {
    if (cp < 0x300) return kLowerTable[cp];
    return cp;
}

std::u32string lowercase(std::u32string_view text) {
    std::u32string out;
    out.reserve(text.size());
    for (char32_t cp : text) out.push_back(simple_lower(cp));
    return out;
}

namespace {

bool find_composed(char32_t base, char32_t mark, char32_t& out) {
    if (base > 0xFFFF || mark > 0xFFFF) return false;
    // kComposePairs is sorted by (base, mark); linear scan with early exit
    // is fine at this size, but binary search keeps it honest.
    std::size_t lo = 0, hi = std::size(kComposePairs);
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const auto& p = kComposePairs[mid];
        if (p.base < base || (p.base == base && p.mark < mark)) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < std::size(kComposePairs) && kComposePairs[lo].base == base &&
        kComposePairs[lo].mark == mark) {
        out = kComposePairs[lo].composed;
        return true;
    }
    return false;
}

}  // namespace

std::u32string compose_latin(std::u32string_view text) {
    std::u32string out;
    out.reserve(text.size());
    for (char32_t cp : text) {
        char32_t composed;
        if (!out.empty() && find_composed(out.back(), cp, composed)) {
            out.back() = composed;
        } else {
            out.push_back(cp);
        }
    }
    return out;
}

}  // namespace ajami::uni
