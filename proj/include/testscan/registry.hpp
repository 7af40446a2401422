#pragma once

#include "testscan/lexscan.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace testscan::registry {

enum class Category { unit, behavioural, assertion, mock, generator, spec_by_example };

std::string_view category_code(Category c); // "U", "B", "A", "M", "G", "SbE"
Category parse_category(std::string_view code);

/// One catalog entry. `import_prefix` is empty for catalog-only rows whose
/// package is unknown; only `active` rows take part in import detection.
struct FrameworkRecord {
    std::string name;
    std::string import_prefix;
    Category category = Category::unit;
    bool requires_test_word = false;
    bool active = false;

    bool has_prefix() const { return !import_prefix.empty(); }
};

/// A framework import found in a file. Frameworks sharing one catalog prefix
/// (JUnit 4 and JUnit 5 both ship under org.junit) are reported once as the
/// `junit4or5` family; `refined` carries the disambiguated name when the
/// import itself settles it (org.junit.jupiter -> JUnit 5).
struct ImportMatch {
    std::string framework;      // family or framework name
    std::string import_prefix;  // catalog prefix that matched
    std::string matched_import; // canonical `import a.b.C;` statement text
    std::size_t line = 0;       // 1-based line of the first match
    bool requires_test_word = false;
    std::string refined; // empty when no refinement applies
};

class Registry {
public:
    /// Parses the registry data file: one record per line, tab- or
    /// comma-separated `name, prefix, category, requires_test_word, active`.
    /// '#' starts a comment line. Throws data_error naming the offending row.
    static Registry load(const std::filesystem::path& file);
    static Registry from_records(std::vector<FrameworkRecord> records);

    const std::vector<FrameworkRecord>& records() const { return records_; }
    const FrameworkRecord* find(std::string_view name) const;
    std::size_t active_count() const;

    std::vector<ImportMatch> detect_imports(const lex::SourceFileRecord& record) const;

private:
    std::vector<FrameworkRecord> records_;

    struct DetectionEntry {
        std::string name;
        std::string prefix;
        bool requires_test_word = false;
    };
    std::vector<DetectionEntry> detection_; // active prefixes, families merged
    void build_detection_index();
};

/// True when `imported` equals `prefix` or extends it at a '.' boundary.
bool prefix_matches(std::string_view imported, std::string_view prefix);

inline std::vector<ImportMatch> detect_imports(const lex::SourceFileRecord& record,
                                               const Registry& registry) {
    return registry.detect_imports(record);
}

} // namespace testscan::registry
