#include "testscan/detector.hpp"

#include "testscan/errors.hpp"

#include <algorithm>

namespace testscan::detect {

std::string_view style_name(Style s) {
    switch (s) {
    case Style::annotation: return "ANNOTATION";
    case Style::name_prefix: return "NAME_PREFIX";
    case Style::name_suffix: return "NAME_SUFFIX";
    case Style::custom_main: return "CUSTOM_MAIN";
    case Style::framework_runner: return "FRAMEWORK_RUNNER";
    case Style::not_a_test: return "NOT_A_TEST";
    }
    return "NOT_A_TEST";
}

std::string_view confidence_name(Confidence c) {
    switch (c) {
    case Confidence::high: return "HIGH";
    case Confidence::medium: return "MEDIUM";
    case Confidence::low: return "LOW";
    }
    return "LOW";
}

std::string_view tag_name(Tag t) {
    switch (t) {
    case Tag::master_test: return "MASTER_TEST";
    case Tag::multiple_execution_risk: return "MULTIPLE_EXECUTION_RISK";
    case Tag::main_present: return "MAIN_PRESENT";
    }
    return "MAIN_PRESENT";
}

Style parse_style(std::string_view name) {
    for (Style s : {Style::annotation, Style::name_prefix, Style::name_suffix,
                    Style::custom_main, Style::framework_runner, Style::not_a_test}) {
        if (style_name(s) == name) return s;
    }
    throw usage_error("unknown style '" + std::string(name) + "'");
}

Confidence parse_confidence(std::string_view name) {
    for (Confidence c : {Confidence::high, Confidence::medium, Confidence::low}) {
        if (confidence_name(c) == name) return c;
    }
    throw usage_error("unknown confidence '" + std::string(name) + "'");
}

bool TestReport::has_tag(Tag t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

namespace {

enum class NameRule { prefix, suffix };

std::vector<std::string> methods_matching(const metrics::FileMetrics& m, NameRule rule) {
    std::vector<std::string> names;
    for (const auto& method : m.methods) {
        if (method.is_constructor) continue;
        if ((rule == NameRule::prefix && method.test_prefix) ||
            (rule == NameRule::suffix && method.test_suffix))
            names.push_back(method.name);
    }
    return names;
}

std::vector<std::string> annotated_methods(const metrics::FileMetrics& m) {
    std::vector<std::string> names;
    for (const auto& method : m.methods) {
        if (!method.is_constructor && method.test_annotated) names.push_back(method.name);
    }
    return names;
}

bool has_junit3_import(const std::vector<registry::ImportMatch>& imports) {
    return std::any_of(imports.begin(), imports.end(), [](const registry::ImportMatch& i) {
        return i.import_prefix == "junit.framework";
    });
}

bool has_test_word_framework(const std::vector<registry::ImportMatch>& imports) {
    return std::any_of(imports.begin(), imports.end(),
                       [](const registry::ImportMatch& i) { return i.requires_test_word; });
}

} // namespace

TestReport classify(const metrics::FileMetrics& m,
                    const std::vector<registry::ImportMatch>& imports) {
    TestReport r;
    r.metrics = m;
    for (const auto& imp : imports) r.frameworks.push_back(imp.framework);

    if (m.dollar_class) {
        r.style = Style::not_a_test;
        r.test_count = 0;
        r.confidence = Confidence::high;
        return r;
    }
    if (m.annotation_test_count > 0) {
        r.style = Style::annotation;
        r.test_count = m.annotation_test_count;
        r.confidence = Confidence::high;
        r.counted_methods = annotated_methods(m);
        return r;
    }
    if (has_junit3_import(imports) ||
        (has_test_word_framework(imports) && m.prefix_method_count > 0)) {
        r.style = Style::name_prefix;
        r.test_count = m.prefix_method_count;
        r.confidence = Confidence::high;
        r.counted_methods = methods_matching(m, NameRule::prefix);
        return r;
    }
    if (!imports.empty() && (m.prefix_method_count > 0 || m.suffix_method_count > 0)) {
        // Ties break toward the prefix convention.
        const bool prefer_prefix = m.prefix_method_count >= m.suffix_method_count;
        r.style = prefer_prefix ? Style::name_prefix : Style::name_suffix;
        r.test_count = prefer_prefix ? m.prefix_method_count : m.suffix_method_count;
        r.confidence = Confidence::medium;
        r.counted_methods =
            methods_matching(m, prefer_prefix ? NameRule::prefix : NameRule::suffix);
        return r;
    }
    if (imports.empty() && m.has_main && m.test_word_count >= 1) {
        r.style = Style::custom_main;
        const bool prefer_prefix = m.prefix_method_count >= m.suffix_method_count;
        r.test_count = std::max(m.prefix_method_count, m.suffix_method_count);
        r.confidence = Confidence::low;
        if (r.test_count > 0)
            r.counted_methods =
                methods_matching(m, prefer_prefix ? NameRule::prefix : NameRule::suffix);
        return r;
    }
    if (!imports.empty() && m.has_main) {
        // Rules 1-3 yielded nothing, so the count they contribute is zero.
        r.style = Style::framework_runner;
        r.test_count = 0;
        r.confidence = Confidence::medium;
        return r;
    }
    r.style = Style::not_a_test;
    r.test_count = 0;
    r.confidence = Confidence::high;
    return r;
}

bool is_customized_solution(const TestReport& report) {
    return report.style == Style::custom_main;
}

TestReport tag_practices(const metrics::FileMetrics& m, TestReport report) {
    report.tags.clear();
    if (report.test_count == 1 && m.method_count >= 4)
        report.tags.push_back(Tag::master_test);
    if (report.style == Style::name_prefix) {
        bool risk = false;
        for (const auto& callee : m.methods) {
            if (callee.is_constructor || !callee.test_prefix) continue;
            for (const auto& caller : m.methods) {
                if (&caller == &callee) continue;
                if (std::find(caller.called_idents.begin(), caller.called_idents.end(),
                              callee.name) != caller.called_idents.end()) {
                    risk = true;
                    break;
                }
            }
            if (risk) break;
        }
        if (risk) report.tags.push_back(Tag::multiple_execution_risk);
    }
    if (m.has_main) report.tags.push_back(Tag::main_present);
    std::sort(report.tags.begin(), report.tags.end());
    report.tags.erase(std::unique(report.tags.begin(), report.tags.end()),
                      report.tags.end());
    return report;
}

TestReport analyze(const lex::SourceFileRecord& record, const registry::Registry& registry) {
    const auto imports = registry.detect_imports(record);
    const auto m = metrics::extract_metrics(record, imports);
    TestReport report = classify(m, imports);
    report.path = record.path;
    return tag_practices(m, std::move(report));
}

} // namespace testscan::detect
