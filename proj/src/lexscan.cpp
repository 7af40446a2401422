#include "testscan/lexscan.hpp"

#include "testscan/kernels.hpp"

#include <algorithm>

namespace testscan::lex {

namespace {

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }
bool is_upper(unsigned char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(unsigned char c) { return c >= 'a' && c <= 'z'; }
bool is_word(unsigned char c) { return is_digit(c) || is_upper(c) || is_lower(c) || c >= 0x80; }

bool camel_split(unsigned char a, unsigned char b, unsigned char c) {
    if (is_lower(a) && is_upper(b)) return true;
    if (is_upper(a) && is_upper(b) && is_lower(c)) return true;
    return false;
}

bool has_extension(std::string_view path, std::string_view ext) {
    return path.size() > ext.size() && path.ends_with(ext);
}

} // namespace

std::string_view basename_of(std::string_view path) {
    const auto pos = path.find_last_of("/\\");
    return pos == std::string_view::npos ? path : path.substr(pos + 1);
}

void replace_invalid_utf8(std::string& text) {
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        const auto b = static_cast<unsigned char>(text[i]);
        if (b < 0x80) {
            ++i;
            continue;
        }
        std::size_t len = 0;
        unsigned cp_min = 0;
        if ((b & 0xE0) == 0xC0) {
            len = 2;
            cp_min = 0x80;
        } else if ((b & 0xF0) == 0xE0) {
            len = 3;
            cp_min = 0x800;
        } else if ((b & 0xF8) == 0xF0) {
            len = 4;
            cp_min = 0x10000;
        } else {
            text[i++] = '?';
            continue;
        }
        if (i + len > n) {
            text[i++] = '?';
            continue;
        }
        unsigned cp = b & (0xFFu >> (len + 1));
        bool ok = true;
        for (std::size_t k = 1; k < len; ++k) {
            const auto cont = static_cast<unsigned char>(text[i + k]);
            if ((cont & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (cont & 0x3Fu);
        }
        if (!ok || cp < cp_min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            text[i++] = '?';
            continue;
        }
        i += len;
    }
}

StripResult strip_comments_and_strings_checked(std::string_view raw) {
    enum class State { code, line_comment, block_comment, string_lit, char_lit };

    StripResult out;
    out.text.assign(raw.begin(), raw.end());
    std::string& t = out.text;
    const std::size_t n = t.size();

    State state = State::code;
    const auto blank = [&](std::size_t i) {
        if (t[i] != '\n') t[i] = ' ';
    };

    std::size_t i = 0;
    while (i < n) {
        const char c = t[i];
        switch (state) {
        case State::code:
            if (c == '/' && i + 1 < n && t[i + 1] == '/') {
                blank(i);
                blank(i + 1);
                i += 2;
                state = State::line_comment;
            } else if (c == '/' && i + 1 < n && t[i + 1] == '*') {
                blank(i);
                blank(i + 1);
                i += 2;
                state = State::block_comment;
            } else if (c == '"') {
                blank(i);
                ++i;
                state = State::string_lit;
            } else if (c == '\'') {
                blank(i);
                ++i;
                state = State::char_lit;
            } else {
                ++i;
            }
            break;
        case State::line_comment:
            if (c == '\n') {
                state = State::code;
            } else {
                blank(i);
            }
            ++i;
            break;
        case State::block_comment:
            if (c == '*' && i + 1 < n && t[i + 1] == '/') {
                blank(i);
                blank(i + 1);
                i += 2;
                state = State::code;
            } else {
                blank(i);
                ++i;
            }
            break;
        case State::string_lit:
        case State::char_lit: {
            const char quote = (state == State::string_lit) ? '"' : '\'';
            if (c == '\\' && i + 1 < n) {
                blank(i);
                blank(i + 1);
                i += 2;
            } else if (c == quote) {
                blank(i);
                ++i;
                state = State::code;
            } else if (c == '\n') {
                // Malformed literal; a raw newline cannot appear in one.
                ++i;
                state = State::code;
            } else {
                blank(i);
                ++i;
            }
            break;
        }
        }
    }
    out.unterminated = state != State::code;
    return out;
}

std::string strip_comments_and_strings(std::string_view raw) {
    return strip_comments_and_strings_checked(raw).text;
}

std::vector<WordSegment> segment_words(std::string_view text, WordSegment::Source source) {
    std::vector<WordSegment> segments;
    const std::size_t n = text.size();
    std::size_t i = 0;
    const auto at = [&](std::size_t k) -> unsigned char {
        return k < n ? static_cast<unsigned char>(text[k]) : 0;
    };
    while (i < n) {
        if (!is_word(at(i))) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < n && is_word(at(j))) ++j;
        // Camel-split the run [i, j).
        std::size_t start = i;
        for (std::size_t p = i + 1; p < j; ++p) {
            const unsigned char next = (p + 1 < j) ? at(p + 1) : 0;
            if (camel_split(at(p - 1), at(p), next)) {
                segments.push_back({std::string(text.substr(start, p - start)), start, source});
                start = p;
            }
        }
        segments.push_back({std::string(text.substr(start, j - start)), start, source});
        i = j;
    }
    return segments;
}

bool contains_test_word(std::string_view text) {
    return kernels::count_test_words(text) > 0;
}

std::size_t count_test_occurrences(const SourceFileRecord& record) {
    return kernels::count_test_words(record.raw_content);
}

bool filename_contains_test(std::string_view path) {
    return contains_test_word(basename_of(path));
}

bool path_contains_test(std::string_view path) {
    // '/' and '\\' are delimiters, so segmenting the whole path equals the
    // union of per-component segmentations.
    return contains_test_word(path);
}

SourceFileRecord SourceFileRecord::from_content(std::string path, std::string raw) {
    SourceFileRecord rec;
    rec.path = std::move(path);
    replace_invalid_utf8(raw);
    rec.raw_content = std::move(raw);
    auto stripped = strip_comments_and_strings_checked(rec.raw_content);
    rec.code_view = std::move(stripped.text);
    rec.strip_warning = stripped.unterminated;
    rec.line_count = kernels::count_lines(rec.raw_content);
    rec.is_java = has_extension(rec.path, ".java");
    rec.is_searchable = rec.is_java || has_extension(rec.path, ".properties");
    return rec;
}

} // namespace testscan::lex
