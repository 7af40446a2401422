#pragma once

#include "testscan/corpus.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace testscan::stats {

struct ConfusionCounts {
    long long tp = 0;
    long long fp = 0;
    long long tn = 0;
    long long fn = 0;

    long long total() const { return tp + fp + tn + fn; }
};

/// Pearson's correlation coefficient. Throws usage_error on mismatched
/// lengths or fewer than two samples, undefined_measure_error when either
/// vector is constant.
double pearson(std::span<const double> x, std::span<const double> y);

double sensitivity(const ConfusionCounts& c); // tp / (tp + fn)
double specificity(const ConfusionCounts& c); // tn / (tn + fp)
double accuracy(const ConfusionCounts& c);    // (tp + tn) / total

enum class Verdict { accept_null, reject_null };

std::string_view verdict_name(Verdict v);

/// ACCEPT_NULL iff r is inside (-0.8, 0.8); |r| >= 0.8 rejects the null.
/// Throws usage_error when |r| > 1 (allowing round-off slack).
Verdict hypothesis_verdict(double r);

enum class Subset { all, path_has_test, filename_has_test };

std::string_view subset_name(Subset s);
Subset parse_subset(std::string_view name);

struct CorrelationResult {
    double r = 0.0;
    std::size_t n = 0;
    bool strong = false; // |r| >= 0.8
    Subset subset = Subset::all;
    std::size_t discarded_rows = 0;       // rows outside the subset
    long long discarded_test_cases = 0;   // their test cases
};

/// Pearson over (test_word_count, test_count) of the rows in the subset.
CorrelationResult subset_correlation(const std::vector<corpus::CorpusRow>& rows,
                                     Subset subset);

/// Ground truth for one file. `methods` is optional extra detail: per-method
/// name and whether a human marked it as a test case.
struct LabelEntry {
    std::string path;
    int expected_test_count = 0;
    std::string expected_style; // empty = unchecked
    std::vector<std::pair<std::string, bool>> methods;
    bool has_methods = false;
    int expected_method_count = -1; // -1 = unknown
};

std::vector<LabelEntry> load_labels(const std::filesystem::path& file);

struct EvalReport {
    ConfusionCounts counts;
    double method_accuracy = 0.0; // (tp + tn) / total, method level
    double test_sensitivity = 0.0; // tp / (tp + fn) over labeled test cases
    std::size_t files_evaluated = 0;
    std::size_t style_matches = 0;
    std::size_t style_checked = 0;
    std::vector<std::string> unlabeled_paths; // rows without a label (excluded)
};

/// Method-level confusion from detector counts vs labeled dispositions.
/// Per file with predicted P, labeled E test methods of T total:
/// tp=min(P,E), fp=max(P-E,0), fn=max(E-P,0), tn=T-E-fp (clamped).
EvalReport evaluate_against_labels(const std::vector<corpus::CorpusRow>& rows,
                                   const std::vector<LabelEntry>& labels);
EvalReport evaluate_against_labels(const std::vector<corpus::CorpusRow>& rows,
                                   const std::filesystem::path& labels_file);

} // namespace testscan::stats
