#pragma once

#include "testscan/metrics.hpp"
#include "testscan/registry.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace testscan::detect {

enum class Style {
    annotation,
    name_prefix,
    name_suffix,
    custom_main,
    framework_runner,
    not_a_test,
};

enum class Confidence { high, medium, low };

enum class Tag { master_test, multiple_execution_risk, main_present };

std::string_view style_name(Style s);
std::string_view confidence_name(Confidence c);
std::string_view tag_name(Tag t);
Style parse_style(std::string_view name);
Confidence parse_confidence(std::string_view name);

/// Per-file detection outcome.
struct TestReport {
    std::string path;
    int test_count = 0;
    Style style = Style::not_a_test;
    Confidence confidence = Confidence::low;
    std::vector<std::string> frameworks;        // names from the import matches
    std::vector<Tag> tags;                      // sorted, unique
    std::vector<std::string> counted_methods;   // names credited as test cases
    metrics::FileMetrics metrics;

    bool has_tag(Tag t) const;
};

/// Applies the priority rules: generated ($) classes never count; @Test
/// annotations outrank naming conventions; naming conventions need a
/// framework import; a main() without any import but with the word "test"
/// is a customized solution; main() alongside an import is a runner.
TestReport classify(const metrics::FileMetrics& m,
                    const std::vector<registry::ImportMatch>& imports);

/// True iff the report encodes the customized-testing-solution conditions
/// (no framework import, main() present, >= 1 "test" occurrence).
bool is_customized_solution(const TestReport& report);

/// Adds practice tags: MASTER_TEST (one test case among >= 4 methods),
/// MULTIPLE_EXECUTION_RISK (a counted prefix-named method is also called
/// from another method body), MAIN_PRESENT.
TestReport tag_practices(const metrics::FileMetrics& m, TestReport report);

/// classify + tag_practices over a record, resolving imports first.
TestReport analyze(const lex::SourceFileRecord& record, const registry::Registry& registry);

} // namespace testscan::detect
