#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace testscan::lex {

/// A letter/digit run produced by word segmentation. Runs split at
/// non-alphanumeric delimiters (underscores included) and at camel-case
/// humps; digits bind to their run.
struct WordSegment {
    enum class Source { identifier, freetext };

    std::string text;
    std::size_t start_offset = 0;
    Source source = Source::freetext;
};

/// One scanned file. `code_view` is `raw_content` with comment bodies and
/// string/char literal bodies blanked to spaces, byte-for-byte same length
/// and with every newline preserved.
struct SourceFileRecord {
    std::string path;
    std::string raw_content;
    std::string code_view;
    std::size_t line_count = 0;
    bool is_java = false;
    bool is_searchable = false;
    bool strip_warning = false; // unterminated comment/literal blanked to EOF

    /// Builds the record: replaces invalid UTF-8 bytes, derives code_view
    /// and the extension flags. `path` is kept repository-relative.
    static SourceFileRecord from_content(std::string path, std::string raw);
};

struct StripResult {
    std::string text;
    bool unterminated = false;
};

/// Same-length blanking of comments and string/char literals. Newlines
/// inside comments survive so line numbers stay stable.
std::string strip_comments_and_strings(std::string_view raw);
StripResult strip_comments_and_strings_checked(std::string_view raw);

/// Length-preserving cleanup: every byte of an invalid UTF-8 sequence is
/// replaced with '?'.
void replace_invalid_utf8(std::string& text);

std::vector<WordSegment> segment_words(std::string_view text,
                                       WordSegment::Source source = WordSegment::Source::freetext);

/// True when any segment of `text` equals "test" ignoring case.
bool contains_test_word(std::string_view text);

/// Occurrences of the word "test" in the raw file content (case-insensitive,
/// whole segments only; segments with digits never match).
std::size_t count_test_occurrences(const SourceFileRecord& record);

/// Word match against the basename, extension included ('.' delimits).
bool filename_contains_test(std::string_view path);

/// Word match against any path component.
bool path_contains_test(std::string_view path);

std::string_view basename_of(std::string_view path);

/// Search-API file size limit; larger files are skipped by the corpus walk.
inline constexpr std::size_t kMaxSearchableBytes = 384 * 1024;

} // namespace testscan::lex
