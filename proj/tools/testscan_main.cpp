// testscan: finds test classes and counts test cases in Java repositories
// by lexical scanning, and hosts the mining/statistics companions.

#include "testscan/corpus.hpp"
#include "testscan/detector.hpp"
#include "testscan/errors.hpp"
#include "testscan/miner.hpp"
#include "testscan/registry.hpp"
#include "testscan/stats.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

using namespace testscan;
using nlohmann::json;

namespace {

std::filesystem::path resolve_registry(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("TESTSCAN_REGISTRY"); env != nullptr && *env != '\0')
        return env;
    return "data/frameworks.tsv";
}

json summary_json(const corpus::RepoSummary& s) {
    return json{{"repo", s.repo},
                {"files_scanned", s.files_scanned},
                {"files_matched", s.files_matched},
                {"files_skipped", s.files_skipped},
                {"total_test_cases", s.total_test_cases},
                {"custom_main_class_fraction", s.custom_main_class_fraction},
                {"avg_ms_per_kloc", s.avg_ms_per_kloc}};
}

void print_pretty_summary(const corpus::RepoSummary& s, std::ostream& out) {
    out << "repository           " << s.repo << '\n'
        << "files scanned        " << s.files_scanned << '\n'
        << "files with \"test\"    " << s.files_matched << '\n'
        << "files skipped        " << s.files_skipped << '\n'
        << "test cases           " << s.total_test_cases << '\n'
        << "custom-main fraction " << s.custom_main_class_fraction << '\n'
        << "avg ms per KLOC      " << s.avg_ms_per_kloc << '\n';
}

struct ScanArgs {
    std::string root;
    std::string out;
    std::string format = "jsonl";
    std::string repo;
    std::string registry_file;
    int workers = 0;
    bool include_properties = false;
    bool no_times = false;
    bool pretty = false;
};

int run_scan(const ScanArgs& a) {
    const auto reg = registry::Registry::load(resolve_registry(a.registry_file));
    corpus::ScanOptions opts;
    opts.registry = &reg;
    opts.repo_name = a.repo;
    opts.workers = a.workers;
    opts.include_properties = a.include_properties;
    opts.record_timing = !a.no_times;
    const auto result = corpus::scan_repository(a.root, opts);

    const auto format = corpus::parse_format(a.format);
    if (!a.out.empty()) {
        corpus::write_rows(result.rows, a.out, format);
        if (a.pretty)
            print_pretty_summary(result.summary, std::cout);
        else
            std::cout << summary_json(result.summary).dump() << '\n';
    } else {
        corpus::write_rows(result.rows, std::cout, format);
        if (a.pretty)
            print_pretty_summary(result.summary, std::cerr);
        else
            std::cerr << summary_json(result.summary).dump() << '\n';
    }
    return 0;
}

struct StatsArgs {
    std::string rows;
    std::string subset = "all";
    bool pretty = false;
};

int run_stats(const StatsArgs& a) {
    const auto rows = corpus::read_rows(a.rows);
    const auto subset = stats::parse_subset(a.subset);
    const auto result = stats::subset_correlation(rows, subset);
    const auto verdict = stats::hypothesis_verdict(result.r);
    const json out{{"r", result.r},
                   {"n", result.n},
                   {"verdict", result.strong ? "STRONG" : "WEAK"},
                   {"hypothesis", stats::verdict_name(verdict)},
                   {"subset", stats::subset_name(result.subset)},
                   {"discarded_rows", result.discarded_rows},
                   {"discarded_test_cases", result.discarded_test_cases}};
    if (a.pretty) {
        std::cout << "subset " << stats::subset_name(result.subset) << ": r = " << result.r
                  << " over n = " << result.n << " files ("
                  << (result.strong ? "STRONG" : "WEAK") << ", "
                  << stats::verdict_name(verdict) << "); discarded "
                  << result.discarded_rows << " rows / " << result.discarded_test_cases
                  << " test cases\n";
    } else {
        std::cout << out.dump() << '\n';
    }
    return 0;
}

struct EvalArgs {
    std::string rows;
    std::string labels;
    bool pretty = false;
};

int run_eval(const EvalArgs& a) {
    const auto rows = corpus::read_rows(a.rows);
    const auto report = stats::evaluate_against_labels(rows, std::filesystem::path(a.labels));
    json out{{"files_evaluated", report.files_evaluated},
             {"tp", report.counts.tp},
             {"fp", report.counts.fp},
             {"tn", report.counts.tn},
             {"fn", report.counts.fn},
             {"method_accuracy", report.method_accuracy},
             {"style_matches", report.style_matches},
             {"style_checked", report.style_checked},
             {"unlabeled", report.unlabeled_paths}};
    if (report.counts.tp + report.counts.fn > 0)
        out["sensitivity"] = stats::sensitivity(report.counts);
    if (report.counts.tn + report.counts.fp > 0)
        out["specificity"] = stats::specificity(report.counts);
    if (report.counts.total() > 0) out["accuracy"] = stats::accuracy(report.counts);
    if (a.pretty) {
        std::cout << "files evaluated  " << report.files_evaluated << '\n'
                  << "tp/fp/tn/fn      " << report.counts.tp << '/' << report.counts.fp
                  << '/' << report.counts.tn << '/' << report.counts.fn << '\n'
                  << "method accuracy  " << report.method_accuracy << '\n';
    } else {
        std::cout << out.dump() << '\n';
    }
    for (const auto& path : report.unlabeled_paths)
        std::cerr << "warning: no label for " << path << '\n';
    return 0;
}

struct MineArgs {
    std::string candidates;
    std::string out;
    std::string base_url = "https://api.github.com";
    bool live = false;
};

int run_mine(const MineArgs& a) {
    auto candidates = mine::load_candidates(a.candidates);

    if (a.live) {
        auto transport = mine::make_http_transport(a.base_url, mine::token_from_env());
        mine::SystemClock clock;
        mine::SearchClient client(*transport, clock);
        for (auto& c : candidates) {
            if (c.content_hits == 0) {
                const auto found = client.execute_search(
                    mine::build_query(mine::QueryKind::content_word, "test", c.repo));
                if (found.status == mine::SearchOutcome::Status::skipped) {
                    std::cerr << "warning: " << c.repo << " skipped: " << found.skip_reason
                              << '\n';
                    continue;
                }
                c.content_hits = found.total_count;
            }
            if (c.filename_hits == 0) {
                const auto found = client.execute_search(
                    mine::build_query(mine::QueryKind::filename_word, "test", c.repo));
                if (found.status == mine::SearchOutcome::Status::ok)
                    c.filename_hits = found.total_count;
            }
        }
    }

    std::vector<mine::RepoCandidate> scored;
    scored.reserve(candidates.size());
    for (const auto& c : candidates) scored.push_back(mine::score_relevance(c, candidates));
    auto ranked = mine::rank_candidates(scored);
    std::vector<mine::RepoCandidate> output = ranked;
    for (const auto& c : scored) {
        if (c.relevance == mine::RepoCandidate::Relevance::rejected) output.push_back(c);
    }

    if (!a.out.empty()) {
        mine::write_candidates(output, a.out);
    } else {
        mine::write_candidates(output, std::cout);
    }
    std::cerr << "accepted " << ranked.size() << " of " << scored.size() << " candidates\n";
    return 0;
}

struct RegistryArgs {
    std::string registry_file;
    bool pretty = false;
};

int run_registry_list(const RegistryArgs& a) {
    const auto reg = registry::Registry::load(resolve_registry(a.registry_file));
    for (const auto& rec : reg.records()) {
        if (a.pretty) {
            std::string prefix = rec.has_prefix() ? rec.import_prefix : "-";
            std::cout << (rec.active ? "active   " : "inactive ") << rec.name;
            for (std::size_t i = rec.name.size(); i < 44; ++i) std::cout << ' ';
            std::cout << registry::category_code(rec.category) << "  "
                      << (rec.requires_test_word ? "test-word" : "         ") << "  "
                      << prefix << '\n';
        } else {
            std::cout << json{{"name", rec.name},
                              {"import_prefix", rec.import_prefix},
                              {"category", registry::category_code(rec.category)},
                              {"requires_test_word", rec.requires_test_word},
                              {"active", rec.active}}
                             .dump()
                      << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"static test-case identification for Java repositories"};
    app.require_subcommand(1);
    app.set_config("--config");

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "scan a repository tree and emit per-file rows");
    scan->add_option("root", scan_args.root, "repository root directory")->required();
    scan->add_option("-o,--out", scan_args.out, "row output file (default: stdout)");
    scan->add_option("--format", scan_args.format, "row format: jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    scan->add_option("--repo", scan_args.repo, "repository label for the rows");
    scan->add_option("--workers", scan_args.workers, "worker threads (0 = logical CPUs)");
    scan->add_option("--registry", scan_args.registry_file, "framework registry file");
    scan->add_flag("--include-properties", scan_args.include_properties,
                   ".properties rows with occurrence stats");
    scan->add_flag("--no-times", scan_args.no_times,
                   "zero scan_time fields for byte-reproducible output");
    scan->add_flag("--pretty", scan_args.pretty, "human-readable summary");

    StatsArgs stats_args;
    auto* stats_cmd = app.add_subcommand("stats", "correlation report over scanned rows");
    stats_cmd->add_option("rows", stats_args.rows, "row file from scan (.jsonl or .csv)")
        ->required();
    stats_cmd->add_option("--subset", stats_args.subset, "all, path or filename")
        ->check(CLI::IsMember({"all", "path", "filename"}));
    stats_cmd->add_flag("--pretty", stats_args.pretty, "human-readable report");

    EvalArgs eval_args;
    auto* eval_cmd =
        app.add_subcommand("eval", "compare detection against ground-truth labels");
    eval_cmd->add_option("rows", eval_args.rows, "row file from scan")->required();
    eval_cmd->add_option("labels", eval_args.labels, "label file (jsonl)")->required();
    eval_cmd->add_flag("--pretty", eval_args.pretty, "human-readable report");

    MineArgs mine_args;
    auto* mine_cmd =
        app.add_subcommand("mine", "score and rank repository candidates for scanning");
    mine_cmd->add_option("candidates", mine_args.candidates, "candidate metadata (jsonl)")
        ->required();
    mine_cmd->add_option("-o,--out", mine_args.out, "output file (default: stdout)");
    mine_cmd->add_option("--base-url", mine_args.base_url, "code-search endpoint");
    mine_cmd->add_flag("--live", mine_args.live,
                       "fill missing hit counts via the search API (needs GITHUB_TOKEN)");

    RegistryArgs registry_args;
    auto* registry_cmd = app.add_subcommand("registry", "framework catalog");
    auto* list_cmd = registry_cmd->add_subcommand("list", "print the catalog");
    list_cmd->add_option("--registry", registry_args.registry_file,
                         "framework registry file");
    list_cmd->add_flag("--pretty", registry_args.pretty, "aligned table");
    registry_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
        if (*scan) return run_scan(scan_args);
        if (*stats_cmd) return run_stats(stats_args);
        if (*eval_cmd) return run_eval(eval_args);
        if (*mine_cmd) return run_mine(mine_args);
        if (*registry_cmd) return run_registry_list(registry_args);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
