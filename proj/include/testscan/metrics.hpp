#pragma once

#include "testscan/lexscan.hpp"
#include "testscan/registry.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace testscan::metrics {

/// One lexically-recognized method declaration.
struct MethodInfo {
    std::string name;
    bool is_public = false;
    bool is_static = false;
    bool returns_void = false;
    bool is_constructor = false;
    bool test_annotated = false; // @Test (plain, with args, or fully qualified)
    bool nested = false;         // declared deeper than the top-level type body
    bool test_prefix = false;    // first word segment of the name is "test"
    bool test_suffix = false;    // last word segment of the name is "test"
    std::vector<std::string> called_idents; // identifiers invoked inside the body
};

/// The per-file counters feeding classification, plus the method table they
/// are derived from.
struct FileMetrics {
    int annotation_test_count = 0;
    int prefix_method_count = 0;
    int suffix_method_count = 0;
    int public_method_count = 0;
    bool has_main = false; // public static void main present
    bool path_has_test = false;
    bool dollar_class = false; // '$' in the primary class name (from filename)
    std::size_t test_word_count = 0;

    int method_count = 0;
    bool degraded = false; // brace balancing failed; counters are best-effort
    bool class_level_test_annotation = false;
    bool has_nested_methods = false;

    std::vector<MethodInfo> methods;
};

/// Populates every counter from the record's code view (occurrence count and
/// path flag come from raw content/path). Purely lexical; no full parse.
FileMetrics extract_metrics(const lex::SourceFileRecord& record,
                            const std::vector<registry::ImportMatch>& imports);

/// Non-blank lines of the raw content (blank = whitespace only).
std::size_t count_lines_of_code(const lex::SourceFileRecord& record);

} // namespace testscan::metrics
