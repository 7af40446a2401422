#include "testscan/stats.hpp"

#include "testscan/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_map>

namespace testscan::stats {

using nlohmann::json;

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw usage_error("pearson: vector lengths differ (" + std::to_string(x.size()) +
                          " vs " + std::to_string(y.size()) + ")");
    const std::size_t n = x.size();
    if (n < 2) throw usage_error("pearson: need at least two samples");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw undefined_measure_error("pearson: constant vector, correlation undefined");
    return sxy / std::sqrt(sxx * syy);
}

namespace {

double ratio(long long num, long long den, const char* what) {
    if (den <= 0)
        throw undefined_measure_error(std::string(what) + ": zero denominator");
    return static_cast<double>(num) / static_cast<double>(den);
}

} // namespace

double sensitivity(const ConfusionCounts& c) { return ratio(c.tp, c.tp + c.fn, "sensitivity"); }
double specificity(const ConfusionCounts& c) { return ratio(c.tn, c.tn + c.fp, "specificity"); }
double accuracy(const ConfusionCounts& c) { return ratio(c.tp + c.tn, c.total(), "accuracy"); }

std::string_view verdict_name(Verdict v) {
    return v == Verdict::accept_null ? "ACCEPT_NULL" : "REJECT_NULL";
}

Verdict hypothesis_verdict(double r) {
    if (std::isnan(r) || std::fabs(r) > 1.0 + 1e-9)
        throw usage_error("hypothesis_verdict: r outside [-1, 1]");
    return std::fabs(r) >= 0.8 ? Verdict::reject_null : Verdict::accept_null;
}

std::string_view subset_name(Subset s) {
    switch (s) {
    case Subset::all: return "ALL";
    case Subset::path_has_test: return "PATH_HAS_TEST";
    case Subset::filename_has_test: return "FILENAME_HAS_TEST";
    }
    return "ALL";
}

Subset parse_subset(std::string_view name) {
    if (name == "ALL" || name == "all") return Subset::all;
    if (name == "PATH_HAS_TEST" || name == "path") return Subset::path_has_test;
    if (name == "FILENAME_HAS_TEST" || name == "filename") return Subset::filename_has_test;
    throw usage_error("unknown subset '" + std::string(name) + "'");
}

CorrelationResult subset_correlation(const std::vector<corpus::CorpusRow>& rows,
                                     Subset subset) {
    std::vector<double> x, y;
    CorrelationResult result;
    result.subset = subset;
    for (const auto& row : rows) {
        const bool keep = subset == Subset::all ||
                          (subset == Subset::path_has_test && row.path_has_test) ||
                          (subset == Subset::filename_has_test && row.filename_has_test);
        if (keep) {
            x.push_back(static_cast<double>(row.test_word_count));
            y.push_back(static_cast<double>(row.test_count));
        } else {
            ++result.discarded_rows;
            result.discarded_test_cases += row.test_count;
        }
    }
    result.n = x.size();
    result.r = pearson(x, y);
    result.strong = std::fabs(result.r) >= 0.8;
    return result;
}

std::vector<LabelEntry> load_labels(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw data_error("cannot open labels file " + file.string());

    std::vector<LabelEntry> labels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            const json j = json::parse(line);
            LabelEntry entry;
            entry.path = j.at("path").get<std::string>();
            entry.expected_test_count = j.at("expected_test_count").get<int>();
            if (j.contains("expected_style"))
                entry.expected_style = j.at("expected_style").get<std::string>();
            if (j.contains("expected_method_count"))
                entry.expected_method_count = j.at("expected_method_count").get<int>();
            if (j.contains("methods")) {
                entry.has_methods = true;
                for (const auto& m : j.at("methods")) {
                    entry.methods.emplace_back(m.at("name").get<std::string>(),
                                               m.at("is_test").get<bool>());
                }
            }
            labels.push_back(std::move(entry));
        } catch (const json::exception& e) {
            throw data_error("bad label in " + file.string() + ":" + std::to_string(lineno) +
                             ": " + e.what());
        }
    }
    return labels;
}

EvalReport evaluate_against_labels(const std::vector<corpus::CorpusRow>& rows,
                                   const std::vector<LabelEntry>& labels) {
    std::unordered_map<std::string, const LabelEntry*> by_path;
    for (const auto& label : labels) by_path[label.path] = &label;

    EvalReport report;
    for (const auto& row : rows) {
        const auto it = by_path.find(row.path);
        if (it == by_path.end()) {
            report.unlabeled_paths.push_back(row.path);
            continue;
        }
        const LabelEntry& label = *it->second;
        ++report.files_evaluated;

        long long labeled_tests = label.expected_test_count;
        long long labeled_methods = labeled_tests;
        if (label.has_methods) {
            labeled_methods = static_cast<long long>(label.methods.size());
            labeled_tests = static_cast<long long>(
                std::count_if(label.methods.begin(), label.methods.end(),
                              [](const auto& m) { return m.second; }));
        } else if (label.expected_method_count >= 0) {
            labeled_methods = label.expected_method_count;
        }

        const long long predicted = row.test_count;
        const long long tp = std::min(predicted, labeled_tests);
        const long long fp = std::max<long long>(predicted - labeled_tests, 0);
        const long long fn = std::max<long long>(labeled_tests - predicted, 0);
        const long long tn = std::max<long long>(labeled_methods - labeled_tests - fp, 0);
        report.counts.tp += tp;
        report.counts.fp += fp;
        report.counts.fn += fn;
        report.counts.tn += tn;

        if (!label.expected_style.empty()) {
            ++report.style_checked;
            if (label.expected_style == detect::style_name(row.style)) ++report.style_matches;
        }
    }
    if (report.counts.total() > 0) report.method_accuracy = accuracy(report.counts);
    if (report.counts.tp + report.counts.fn > 0)
        report.test_sensitivity = sensitivity(report.counts);
    return report;
}

EvalReport evaluate_against_labels(const std::vector<corpus::CorpusRow>& rows,
                                   const std::filesystem::path& labels_file) {
    return evaluate_against_labels(rows, load_labels(labels_file));
}

} // namespace testscan::stats
