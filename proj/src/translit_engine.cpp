#include "ajami/translit_engine.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdio>

#include "ajami/unicode.hpp"

namespace ajami {

namespace {

char32_t carrier_scalar(CarrierKind kind) {
    switch (kind) {
        case CarrierKind::Alif: return marks::kAlif;
        case CarrierKind::Ya: return marks::kYa;
        case CarrierKind::Waw: return marks::kWaw;
    }
    return marks::kAlif;
}

// A slot an earlier window consumed: the working buffer already holds the
// replacement scalar; when the scan reaches the slot it emits `pending`
// under `label` and applies no rules of its own.
struct SlotState {
    bool consumed = false;
    std::u32string pending;
    const char* label = "";
};

}  // namespace

std::u32string pad(std::u32string_view text) {
    std::u32string s;
    s.reserve(text.size() + 3);
    s.push_back(U' ');
    s.push_back(U' ');
    s.append(text);
    s.push_back(U' ');
    return s;
}

TranslitResult transliterate(std::u32string_view text, const LanguageProfile& profile,
                             const GlyphTable& table, const TranslitOptions& options,
                             RuleTrace* trace) {
    TranslitResult res;
    res.stats.scalars_in = text.size();

    std::u32string working = pad(preprocess(text, options, profile));
    std::vector<SlotState> slots(working.size());
    const std::size_t last = working.size() - 1;

    std::u32string& out = res.output;
    out.reserve(working.size() + working.size() / 2);

    auto count_branch = [&](char prefix, const char* label) {
        std::string key(1, prefix);
        key += '.';
        key += label;
        ++res.stats.branch_counts[key];
    };

    for (std::size_t j = 1; j <= last; ++j) {
        const char32_t prev = working[j - 1];
        const char32_t curr = working[j];
        std::optional<char32_t> next;
        if (j + 1 <= last) next = working[j + 1];
        const bool pad_row = (j == 1 || j == last);

        std::string branches;
        std::u32string emitted;

        // Terminal lookup step shared by every chain. Returns "h" when the
        // table maps curr and "i" when curr passes through (unmapped or
        // above the table range). The synthetic pad spaces contribute no
        // output of their own.
        auto terminal = [&](const char* mapped_label, const char* fallback_label) {
            const auto r = table.lookup(curr);
            if (r.status == GlyphTable::LookupStatus::Mapped) {
                if (!pad_row) emitted.append(*r.seq);
                return mapped_label;
            }
            if (!pad_row) {
                emitted.push_back(curr);
                if (r.status == GlyphTable::LookupStatus::Unmapped)
                    ++res.stats.unmapped_in_range;
                else
                    ++res.stats.passthrough_out_of_range;
            }
            return fallback_label;
        };

        auto next_is_vowel = [&] { return next && profile.is_vowel(*next); };

        if (slots[j].consumed) {
            branches = slots[j].label;
            emitted = slots[j].pending;
            count_branch('S', slots[j].label);
        } else {
            switch (profile.classify(curr)) {
                case CharClass::Consonant: {
                    const char* mod = nullptr;
                    char32_t post_mark = 0;
                    if (next && *next == curr) {
                        // c: geminate pair; the second consonant's slot
                        // becomes the shadda.
                        mod = "c";
                        working[j + 1] = marks::kShadda;
                        slots[j + 1] = {true, std::u32string(1, marks::kShadda), "i"};
                    } else if (profile.is_nasal(curr)) {
                        mod = "d";  // nasal: bare letter, no extra mark
                    } else if ((profile.is_prenasal_pair(prev, curr) ||
                                (next && profile.is_prenasal_pair(curr, *next))) &&
                               !next_is_vowel()) {
                        mod = "e";
                        post_mark = marks::kShadda;
                    } else if (next && profile.is_prenasal_pair(curr, *next)) {
                        mod = "f";
                        post_mark = marks::kShadda;
                    } else if (!next_is_vowel()) {
                        mod = "g";  // closed position: letter takes a sukun
                        post_mark = marks::kSukun;
                    }
                    const char* term = terminal("h", "i");
                    if (post_mark) emitted.push_back(post_mark);
                    if (mod) {
                        branches = std::string(mod) + "," + term;
                        count_branch('C', mod);
                    } else {
                        branches = term;
                    }
                    count_branch('C', term);
                    break;
                }
                case CharClass::Vowel: {
                    const bool prev_is_boundary =
                        profile.classify(prev) == CharClass::Space ||
                        profile.classify(prev) == CharClass::Punctuation;
                    const bool aa = curr == U'a' && next && *next == U'a';
                    if (aa && prev_is_boundary) {
                        // b: word-initial aa collapses to the madda form.
                        branches = "b";
                        emitted.push_back(marks::kMaddaAlif);
                        working[j + 1] = marks::kMaddaAlif;
                        slots[j + 1] = {true, {}, "b"};
                        count_branch('V', "b");
                        break;
                    }
                    const char* mod = nullptr;
                    if (aa && prev == profile.lam_char) {
                        // c: lam + aa; the alif lands before the vowel mark
                        // and stands in for the long-vowel carrier.
                        mod = "c";
                    } else if (aa && prev == marks::kShadda && j >= 2 &&
                               working[j - 2] == profile.lam_char) {
                        // d: geminated lam + aa (the window sees the shadda
                        // that replaced the second lam)
                        mod = "d";
                    }
                    if (mod) {
                        emitted.push_back(marks::kAlif);
                        slots[j + 1] = {true, {}, mod};
                        const char* term = terminal("f", "g");
                        branches = std::string(mod) + "," + term;
                        count_branch('V', mod);
                        count_branch('V', term);
                        break;
                    }
                    if (next && *next == curr) {
                        // e: long vowel; the second vowel's slot becomes the
                        // carrier letter.
                        const char32_t carrier = carrier_scalar(profile.carrier_for(curr));
                        working[j + 1] = carrier;
                        slots[j + 1] = {true, std::u32string(1, carrier), "h"};
                        const char* term = terminal("f", "g");
                        branches = std::string("e,") + term;
                        count_branch('V', "e");
                        count_branch('V', term);
                        break;
                    }
                    branches = terminal("f", "g");
                    count_branch('V', branches.c_str());
                    break;
                }
                case CharClass::Space:
                case CharClass::Punctuation: {
                    // a: a word begins with a vowel right after this
                    // boundary, so an alif carrier follows the boundary's
                    // own image. Skipped when branch b's madda will cover
                    // the word start instead.
                    const bool madda_ahead = next && *next == U'a' && j + 2 <= last &&
                                             working[j + 2] == U'a';
                    if (next_is_vowel() && !madda_ahead) {
                        const char* term = terminal("h", "i");
                        emitted.push_back(marks::kAlif);
                        branches = std::string("a,") + term;
                        count_branch('P', "a");
                        count_branch('P', term);
                    } else {
                        branches = terminal("h", "i");
                        count_branch('P', branches.c_str());
                    }
                    break;
                }
                case CharClass::Digit:
                case CharClass::Other: {
                    branches = terminal("h", "i");
                    count_branch('O', branches.c_str());
                    break;
                }
            }
        }

        out.append(emitted);
        if (trace)
            trace->entries.push_back({j + 1, prev, curr, next, branches, emitted});
    }

    res.stats.scalars_out = out.size();
    return res;
}

std::string transliterate_utf8(std::string_view utf8, const LanguageProfile& profile,
                               const GlyphTable& table, const TranslitOptions& options,
                               RuleTrace* trace) {
    const auto d = uni::decode_utf8(utf8);
    assert(d.ok && "transliterate_utf8 requires valid UTF-8");
    const auto r = transliterate(d.text, profile, table, options, trace);
    return uni::encode_utf8(r.output);
}

namespace {

std::string render_scalar(char32_t cp) {
    if (cp == U' ') return "chr(32)";
    if (cp > 0x20 && cp < 0x7F) return std::string(1, static_cast<char>(cp));
    char buf[16];
    std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
    return buf;
}

std::string render_emitted(const std::u32string& seq) {
    if (seq.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ' ';
        out += render_scalar(seq[i]);
    }
    return out;
}

}  // namespace

std::string format_trace(const RuleTrace& trace) {
    static constexpr const char* kHeaders[6] = {"I", "B", "C", "D", "BRANCH", "OUTPUT"};
    std::vector<std::array<std::string, 6>> rows;
    rows.reserve(trace.entries.size());
    for (const auto& e : trace.entries) {
        rows.push_back({std::to_string(e.index), render_scalar(e.prev),
                        render_scalar(e.curr), e.next ? render_scalar(*e.next) : "-",
                        e.branches, render_emitted(e.emitted)});
    }
    std::size_t width[6];
    for (int c = 0; c < 6; ++c) {
        width[c] = std::string(kHeaders[c]).size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    std::string out;
    auto emit_row = [&](const std::array<std::string, 6>& r) {
        for (int c = 0; c < 6; ++c) {
            out += r[c];
            if (c < 5) out.append(width[c] - r[c].size() + 2, ' ');
        }
        out += '\n';
    };
    emit_row({kHeaders[0], kHeaders[1], kHeaders[2], kHeaders[3], kHeaders[4], kHeaders[5]});
    for (const auto& r : rows) emit_row(r);
    return out;
}

std::string format_stats(const TranslitStats& stats) {
    std::string out;
    out += "scalars in:            " + std::to_string(stats.scalars_in) + "\n";
    out += "scalars out:           " + std::to_string(stats.scalars_out) + "\n";
    out += "unmapped (in range):   " + std::to_string(stats.unmapped_in_range) + "\n";
    out += "passthrough (>2FF):    " + std::to_string(stats.passthrough_out_of_range) + "\n";
    for (const auto& [label, n] : stats.branch_counts)
        out += "branch " + label + ":  " + std::to_string(n) + "\n";
    return out;
}

}  // namespace ajami
