#pragma once

#include "testscan/detector.hpp"
#include "testscan/registry.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace testscan::corpus {

struct ScanOptions {
    std::string repo_name;              // defaults to the root directory name
    int workers = 0;                    // 0 = logical CPU count
    bool include_properties = false;    // .properties rows (occurrence stats only)
    bool record_timing = true;          // false zeroes scan_time for stable output
    const registry::Registry* registry = nullptr; // required
};

/// One scanned file that contained the word "test" in content or filename.
struct CorpusRow {
    std::string repo;
    std::string path;
    std::size_t test_word_count = 0;
    bool filename_has_test = false;
    bool path_has_test = false;
    int test_count = 0;
    detect::Style style = detect::Style::not_a_test;
    detect::Confidence confidence = detect::Confidence::low;
    double kloc = 0.0;      // non-blank lines / 1000
    double scan_time = 0.0; // milliseconds

    bool operator==(const CorpusRow&) const = default;
};

struct RepoSummary {
    std::string repo;
    std::size_t files_scanned = 0; // searchable files examined
    std::size_t files_matched = 0; // rows emitted
    std::size_t files_skipped = 0; // unreadable or over the size limit
    long long total_test_cases = 0;
    double custom_main_class_fraction = 0.0; // CUSTOM_MAIN share of the .java rows
    double avg_ms_per_kloc = 0.0;
};

struct ScanResult {
    std::vector<CorpusRow> rows; // sorted by path
    RepoSummary summary;
};

/// Walks `root` (skipping hidden directories, not following symlinks), runs
/// the detection pipeline on every `.java` file and keeps a row per file
/// whose content or filename contains the word "test". Warnings go to
/// stderr. Throws data_error when the root is missing.
ScanResult scan_repository(const std::filesystem::path& root, const ScanOptions& options);

enum class Format { jsonl, csv };

Format parse_format(std::string_view name);

/// Writes rows sorted by path. JSONL: one object per row with the CorpusRow
/// field names. CSV: header then RFC-4180-quoted records.
void write_rows(const std::vector<CorpusRow>& rows, const std::filesystem::path& dest,
                Format format);
void write_rows(const std::vector<CorpusRow>& rows, std::ostream& out, Format format);

/// Reads rows back from a .jsonl or .csv file (decided by extension).
std::vector<CorpusRow> read_rows(const std::filesystem::path& source);

/// Total scan time divided by total KLOC. Throws undefined_measure_error on
/// empty rows or zero total KLOC.
double measure_throughput(const std::vector<CorpusRow>& rows);

} // namespace testscan::corpus
