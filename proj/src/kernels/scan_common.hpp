#pragma once

// Shared byte classification and candidate verification for the scan
// kernels. Every variant (scalar, AVX2, NEON) finds 4-byte case-insensitive
// "test" candidates its own way and funnels them through verify_candidate(),
// so boundary semantics live in exactly one place.

#include <cstddef>
#include <cstdint>

namespace testscan::kernels::detail {

inline bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }
inline bool is_upper(unsigned char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_lower(unsigned char c) { return c >= 'a' && c <= 'z'; }

// Bytes >= 0x80 (UTF-8 continuation/lead bytes) are treated as caseless
// letters: they extend a word but never trigger a case split.
inline bool is_word(unsigned char c) {
    return is_digit(c) || is_upper(c) || is_lower(c) || c >= 0x80;
}

// Camel split between adjacent word bytes a|b, with c the byte after b.
// Splits at lower->Upper and before the last capital of an all-caps run
// followed by lowercase (XMLTest -> XML|Test). Digits and caseless bytes
// never split.
inline bool camel_split(unsigned char a, unsigned char b, unsigned char c) {
    if (is_lower(a) && is_upper(b)) return true;
    if (is_upper(a) && is_upper(b) && is_lower(c)) return true;
    return false;
}

inline bool eq_ci(unsigned char c, unsigned char lower) {
    return (c | 0x20u) == lower && (is_lower(c) || is_upper(c));
}

// True when text[i..i+4) is a whole word segment equal to "test"
// (case-insensitive). Callers guarantee i + 4 <= size and that the four
// bytes already matched t/e/s/t case-insensitively.
inline bool verify_candidate(const char* data, std::size_t size, std::size_t i) {
    const auto at = [&](std::size_t k) -> unsigned char {
        return k < size ? static_cast<unsigned char>(data[k]) : 0;
    };
    const unsigned char c0 = at(i), c1 = at(i + 1), c2 = at(i + 2), c3 = at(i + 3);
    const unsigned char after = at(i + 4), after2 = at(i + 5);

    // The four bytes must form one segment: no internal camel split.
    if (camel_split(c0, c1, c2) || camel_split(c1, c2, c3) || camel_split(c2, c3, after))
        return false;
    // Segment starts at i.
    if (i != 0) {
        const unsigned char before = at(i - 1);
        if (is_word(before) && !camel_split(before, c0, c1)) return false;
    }
    // Segment ends at i+4.
    if (i + 4 != size) {
        if (is_word(after) && !camel_split(c3, after, after2)) return false;
    }
    return true;
}

inline bool candidate_at(const char* data, std::size_t i) {
    const auto* p = reinterpret_cast<const unsigned char*>(data) + i;
    return eq_ci(p[0], 't') && eq_ci(p[1], 'e') && eq_ci(p[2], 's') && eq_ci(p[3], 't');
}

// Whitespace that keeps a line blank. '\n' is the line terminator and is
// handled separately.
inline bool is_blank_byte(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

} // namespace testscan::kernels::detail
