#include "testscan/corpus.hpp"

#include "testscan/errors.hpp"
#include "testscan/lexscan.hpp"
#include "testscan/metrics.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace testscan::corpus {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

bool hidden_name(const fs::path& p) {
    const auto name = p.filename().string();
    return name.size() > 1 && name.front() == '.';
}

std::string relative_path(const fs::path& root, const fs::path& file) {
    auto rel = file.lexically_relative(root).generic_string();
    return rel.empty() ? file.generic_string() : rel;
}

struct WorkItem {
    fs::path file;
    std::string rel_path;
};

std::vector<WorkItem> collect_files(const fs::path& root, bool include_properties) {
    std::vector<WorkItem> items;
    fs::recursive_directory_iterator it(
        root, fs::directory_options::skip_permission_denied);
    const fs::recursive_directory_iterator end;
    for (; it != end; ++it) {
        const auto& entry = *it;
        if (entry.is_directory()) {
            if (hidden_name(entry.path()) || entry.is_symlink()) it.disable_recursion_pending();
            continue;
        }
        if (entry.is_symlink() || !entry.is_regular_file()) continue;
        const auto ext = entry.path().extension().string();
        if (ext == ".java" || (include_properties && ext == ".properties"))
            items.push_back({entry.path(), relative_path(root, entry.path())});
    }
    std::sort(items.begin(), items.end(),
              [](const WorkItem& a, const WorkItem& b) { return a.rel_path < b.rel_path; });
    return items;
}

struct FileOutcome {
    bool has_row = false;
    bool skipped = false;
    CorpusRow row;
    std::string warning;
};

FileOutcome process_file(const WorkItem& item, const ScanOptions& options) {
    FileOutcome out;

    std::error_code ec;
    const auto size = fs::file_size(item.file, ec);
    if (!ec && size > lex::kMaxSearchableBytes) {
        out.skipped = true;
        out.warning = "skipping " + item.rel_path + ": larger than the searchable limit";
        return out;
    }

    std::ifstream in(item.file, std::ios::binary);
    if (!in) {
        out.skipped = true;
        out.warning = "skipping " + item.rel_path + ": unreadable";
        return out;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        out.skipped = true;
        out.warning = "skipping " + item.rel_path + ": read error";
        return out;
    }

    const auto started = std::chrono::steady_clock::now();
    const auto record = lex::SourceFileRecord::from_content(item.rel_path, buffer.str());

    CorpusRow row;
    row.repo = options.repo_name;
    row.path = item.rel_path;
    row.test_word_count = lex::count_test_occurrences(record);
    row.filename_has_test = lex::filename_contains_test(record.path);
    row.path_has_test = lex::path_contains_test(record.path);
    row.kloc = static_cast<double>(metrics::count_lines_of_code(record)) / 1000.0;

    if (record.is_java) {
        const auto report = detect::analyze(record, *options.registry);
        row.test_count = report.test_count;
        row.style = report.style;
        row.confidence = report.confidence;
    } else {
        row.test_count = 0;
        row.style = detect::Style::not_a_test;
        row.confidence = detect::Confidence::high;
    }
    if (options.record_timing) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        row.scan_time =
            std::chrono::duration<double, std::milli>(elapsed).count();
    }

    if (record.strip_warning)
        out.warning = item.rel_path + ": unterminated comment or literal, blanked to EOF";

    // The row criterion: the word in the content or in the filename.
    if (row.test_word_count > 0 || row.filename_has_test) {
        out.has_row = true;
        out.row = std::move(row);
    }
    return out;
}

} // namespace

ScanResult scan_repository(const fs::path& root, const ScanOptions& options) {
    if (options.registry == nullptr)
        throw usage_error("scan_repository: options.registry is required");
    std::error_code ec;
    if (!fs::exists(root, ec) || !fs::is_directory(root, ec))
        throw data_error("scan root does not exist: " + root.string());

    ScanOptions opts = options;
    if (opts.repo_name.empty()) {
        opts.repo_name = root.filename().string();
        if (opts.repo_name.empty()) opts.repo_name = root.string();
    }

    const auto items = collect_files(root, opts.include_properties);

    int workers = opts.workers;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
    workers = std::min<int>(workers, std::max<int>(1, static_cast<int>(items.size())));

    std::vector<FileOutcome> outcomes(items.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size()) break;
            outcomes[i] = process_file(items[i], opts);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ScanResult result;
    result.summary.repo = opts.repo_name;
    result.summary.files_scanned = items.size();

    std::size_t java_rows = 0;
    std::size_t custom_main_rows = 0;
    double total_kloc = 0.0;
    double total_ms = 0.0;
    for (auto& out : outcomes) {
        if (!out.warning.empty()) std::cerr << "warning: " << out.warning << '\n';
        if (out.skipped) {
            ++result.summary.files_skipped;
            continue;
        }
        if (!out.has_row) continue;
        result.summary.total_test_cases += out.row.test_count;
        total_kloc += out.row.kloc;
        total_ms += out.row.scan_time;
        if (out.row.path.ends_with(".java")) {
            ++java_rows;
            if (out.row.style == detect::Style::custom_main) ++custom_main_rows;
        }
        result.rows.push_back(std::move(out.row));
    }
    // collect_files sorted the work list, and outcomes preserve that order.
    result.summary.files_matched = result.rows.size();
    if (java_rows > 0)
        result.summary.custom_main_class_fraction =
            static_cast<double>(custom_main_rows) / static_cast<double>(java_rows);
    if (total_kloc > 0.0) result.summary.avg_ms_per_kloc = total_ms / total_kloc;
    return result;
}

Format parse_format(std::string_view name) {
    if (name == "jsonl") return Format::jsonl;
    if (name == "csv") return Format::csv;
    throw usage_error("unknown row format '" + std::string(name) + "'");
}

namespace {

json row_to_json(const CorpusRow& row) {
    return json{{"repo", row.repo},
                {"path", row.path},
                {"test_word_count", row.test_word_count},
                {"filename_has_test", row.filename_has_test},
                {"path_has_test", row.path_has_test},
                {"test_count", row.test_count},
                {"style", detect::style_name(row.style)},
                {"confidence", detect::confidence_name(row.confidence)},
                {"kloc", row.kloc},
                {"scan_time", row.scan_time}};
}

CorpusRow row_from_json(const json& j) {
    CorpusRow row;
    row.repo = j.at("repo").get<std::string>();
    row.path = j.at("path").get<std::string>();
    row.test_word_count = j.at("test_word_count").get<std::size_t>();
    row.filename_has_test = j.at("filename_has_test").get<bool>();
    row.path_has_test = j.at("path_has_test").get<bool>();
    row.test_count = j.at("test_count").get<int>();
    row.style = detect::parse_style(j.at("style").get<std::string>());
    row.confidence = detect::parse_confidence(j.at("confidence").get<std::string>());
    row.kloc = j.at("kloc").get<double>();
    row.scan_time = j.at("scan_time").get<double>();
    return row;
}

std::string csv_quote(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string format_double(double v) {
    // nlohmann's shortest-round-trip formatting, reused for CSV stability
    return json(v).dump();
}

constexpr const char* kCsvHeader =
    "repo,path,test_word_count,filename_has_test,path_has_test,test_count,style,"
    "confidence,kloc,scan_time";

std::vector<std::string> parse_csv_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

} // namespace

void write_rows(const std::vector<CorpusRow>& rows, std::ostream& out, Format format) {
    std::vector<const CorpusRow*> sorted;
    sorted.reserve(rows.size());
    for (const auto& r : rows) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const CorpusRow* a, const CorpusRow* b) { return a->path < b->path; });

    if (format == Format::jsonl) {
        for (const auto* row : sorted) out << row_to_json(*row).dump() << '\n';
    } else {
        out << kCsvHeader << "\r\n";
        for (const auto* row : sorted) {
            out << csv_quote(row->repo) << ',' << csv_quote(row->path) << ','
                << row->test_word_count << ',' << (row->filename_has_test ? "true" : "false")
                << ',' << (row->path_has_test ? "true" : "false") << ',' << row->test_count
                << ',' << detect::style_name(row->style) << ','
                << detect::confidence_name(row->confidence) << ',' << format_double(row->kloc)
                << ',' << format_double(row->scan_time) << "\r\n";
        }
    }
}

void write_rows(const std::vector<CorpusRow>& rows, const fs::path& dest, Format format) {
    std::ofstream out(dest, std::ios::binary);
    if (!out) throw data_error("cannot write rows to " + dest.string());
    write_rows(rows, out, format);
    if (!out.flush()) throw data_error("write failed for " + dest.string());
}

std::vector<CorpusRow> read_rows(const fs::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw data_error("cannot read rows from " + source.string());

    std::vector<CorpusRow> rows;
    std::string line;
    const bool csv = source.extension() == ".csv";
    bool header = csv;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            if (csv) {
                if (header) {
                    header = false;
                    continue;
                }
                const auto f = parse_csv_record(line);
                if (f.size() != 10)
                    throw data_error("expected 10 fields, got " + std::to_string(f.size()));
                CorpusRow row;
                row.repo = f[0];
                row.path = f[1];
                row.test_word_count = std::stoull(f[2]);
                row.filename_has_test = f[3] == "true";
                row.path_has_test = f[4] == "true";
                row.test_count = std::stoi(f[5]);
                row.style = detect::parse_style(f[6]);
                row.confidence = detect::parse_confidence(f[7]);
                row.kloc = std::stod(f[8]);
                row.scan_time = std::stod(f[9]);
                rows.push_back(std::move(row));
            } else {
                rows.push_back(row_from_json(json::parse(line)));
            }
        } catch (const std::exception& e) {
            throw data_error("bad row in " + source.string() + ":" + std::to_string(lineno) +
                             ": " + e.what());
        }
    }
    return rows;
}

double measure_throughput(const std::vector<CorpusRow>& rows) {
    if (rows.empty()) throw undefined_measure_error("throughput: no rows");
    double total_kloc = 0.0;
    double total_ms = 0.0;
    for (const auto& row : rows) {
        total_kloc += row.kloc;
        total_ms += row.scan_time;
    }
    if (total_kloc <= 0.0) throw undefined_measure_error("throughput: zero total KLOC");
    return total_ms / total_kloc;
}

} // namespace testscan::corpus
