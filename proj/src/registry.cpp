#include "testscan/registry.hpp"

#include "testscan/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace testscan::registry {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_fields(const std::string& line) {
    const char sep = line.find('\t') != std::string::npos ? '\t' : ',';
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) fields.push_back(trim(field));
    return fields;
}

bool parse_flag(std::string_view v, std::string_view where) {
    std::string s(v);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "yes" || s == "true" || s == "1") return true;
    if (s == "no" || s == "false" || s == "0" || s == "na" || s == "n/a" || s.empty())
        return false;
    throw data_error("registry: bad flag '" + std::string(v) + "' in " + std::string(where));
}

bool valid_prefix(std::string_view prefix) {
    if (prefix.empty() || prefix.front() == '.' || prefix.back() == '.') return false;
    bool seg_empty = true;
    for (char c : prefix) {
        if (c == '.') {
            if (seg_empty) return false;
            seg_empty = true;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
                   c == '-') {
            seg_empty = false;
        } else {
            return false;
        }
    }
    return !seg_empty;
}

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

} // namespace

std::string_view category_code(Category c) {
    switch (c) {
    case Category::unit: return "U";
    case Category::behavioural: return "B";
    case Category::assertion: return "A";
    case Category::mock: return "M";
    case Category::generator: return "G";
    case Category::spec_by_example: return "SbE";
    }
    return "U";
}

Category parse_category(std::string_view code) {
    // Combined categories like "U/M" keep the primary first.
    const auto slash = code.find('/');
    const std::string_view primary = slash == std::string_view::npos ? code : code.substr(0, slash);
    if (primary == "U") return Category::unit;
    if (primary == "B") return Category::behavioural;
    if (primary == "A") return Category::assertion;
    if (primary == "M") return Category::mock;
    if (primary == "G") return Category::generator;
    if (primary == "SbE") return Category::spec_by_example;
    throw data_error("registry: unknown category '" + std::string(code) + "'");
}

bool prefix_matches(std::string_view imported, std::string_view prefix) {
    if (imported == prefix) return true;
    return imported.size() > prefix.size() && imported.substr(0, prefix.size()) == prefix &&
           imported[prefix.size()] == '.';
}

Registry Registry::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw data_error("registry: cannot open " + file.string());

    std::vector<FrameworkRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = file.filename().string() + ":" + std::to_string(lineno);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;

        const auto fields = split_fields(line);
        if (fields.size() != 5)
            throw data_error("registry: expected 5 fields, got " +
                             std::to_string(fields.size()) + " in " + where);

        FrameworkRecord rec;
        rec.name = fields[0];
        if (rec.name.empty()) throw data_error("registry: empty name in " + where);
        if (fields[1] != "-" && fields[1] != "N/A" && !fields[1].empty()) {
            if (!valid_prefix(fields[1]))
                throw data_error("registry: bad import prefix '" + fields[1] + "' in " + where);
            rec.import_prefix = fields[1];
        }
        try {
            rec.category = parse_category(fields[2]);
        } catch (const data_error& e) {
            throw data_error(std::string(e.what()) + " in " + where);
        }
        rec.requires_test_word = parse_flag(fields[3], where);
        rec.active = parse_flag(fields[4], where);
        if (rec.active && !rec.has_prefix())
            throw data_error("registry: active record '" + rec.name +
                             "' lacks an import prefix in " + where);
        records.push_back(std::move(rec));
    }
    return from_records(std::move(records));
}

Registry Registry::from_records(std::vector<FrameworkRecord> records) {
    Registry r;
    r.records_ = std::move(records);
    r.build_detection_index();
    return r;
}

void Registry::build_detection_index() {
    // Active frameworks sharing a prefix collapse into one family entry.
    std::map<std::string, std::vector<const FrameworkRecord*>> by_prefix;
    std::vector<std::string> order;
    for (const auto& rec : records_) {
        if (!rec.active || !rec.has_prefix()) continue;
        auto& bucket = by_prefix[rec.import_prefix];
        if (bucket.empty()) order.push_back(rec.import_prefix);
        bucket.push_back(&rec);
    }
    detection_.clear();
    for (const auto& prefix : order) {
        const auto& members = by_prefix[prefix];
        DetectionEntry entry;
        entry.prefix = prefix;
        for (const auto* m : members) entry.requires_test_word |= m->requires_test_word;
        if (members.size() == 1) {
            entry.name = members.front()->name;
        } else {
            std::vector<std::string> names;
            for (const auto* m : members) names.push_back(m->name);
            std::sort(names.begin(), names.end());
            if (names == std::vector<std::string>{"JUnit 4", "JUnit 5"}) {
                entry.name = "junit4or5";
            } else {
                std::string joined;
                for (const auto& n : names) {
                    if (!joined.empty()) joined += '/';
                    joined += n;
                }
                entry.name = joined;
            }
        }
        detection_.push_back(std::move(entry));
    }
}

const FrameworkRecord* Registry::find(std::string_view name) const {
    for (const auto& rec : records_) {
        if (rec.name == name) return &rec;
    }
    return nullptr;
}

std::size_t Registry::active_count() const {
    return static_cast<std::size_t>(
        std::count_if(records_.begin(), records_.end(),
                      [](const FrameworkRecord& r) { return r.active; }));
}

namespace {

struct ImportedName {
    std::string dotted;    // name with any trailing ".*" removed
    std::string canonical; // normalized `import a.b.C;` statement
    std::size_t line = 1;
};

/// Pulls `import [static] a.b.C;` statements and fully-qualified annotation
/// usages (`@a.b.C`) out of a code view.
std::vector<ImportedName> collect_imports(std::string_view code) {
    std::vector<ImportedName> out;
    const std::size_t n = code.size();
    std::size_t i = 0;
    std::size_t line = 1;

    const auto skip_ws = [&](std::size_t k) {
        while (k < n && std::isspace(static_cast<unsigned char>(code[k]))) {
            if (code[k] == '\n') ++line;
            ++k;
        }
        return k;
    };
    const auto read_ident = [&](std::size_t k, std::string& out_ident) {
        out_ident.clear();
        while (k < n && ident_char(code[k])) out_ident.push_back(code[k++]);
        return k;
    };
    // Reads `a.b.c` or `a.b.*`, tolerating whitespace around dots.
    const auto read_dotted = [&](std::size_t k, std::string& dotted) {
        dotted.clear();
        std::string ident;
        while (true) {
            k = skip_ws(k);
            if (k < n && code[k] == '*') {
                dotted += '*';
                ++k;
                break;
            }
            if (k >= n || !ident_start(code[k])) break;
            k = read_ident(k, ident);
            dotted += ident;
            const std::size_t after = skip_ws(k);
            if (after < n && code[after] == '.') {
                dotted += '.';
                k = after + 1;
            } else {
                k = after;
                break;
            }
        }
        return k;
    };

    std::string ident;
    while (i < n) {
        const char c = code[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (c == '@') {
            const std::size_t at_line = line;
            std::string dotted;
            std::size_t k = read_dotted(i + 1, dotted);
            if (dotted.find('.') != std::string::npos && dotted.back() != '.' &&
                dotted.back() != '*') {
                out.push_back({dotted, "import " + dotted + ";", at_line});
            }
            i = k > i ? k : i + 1;
            continue;
        }
        if (ident_start(c)) {
            const std::size_t word_line = line;
            std::size_t k = read_ident(i, ident);
            if (ident == "import") {
                std::size_t j = skip_ws(k);
                bool is_static = false;
                std::string maybe_static;
                const std::size_t after_static = read_ident(j, maybe_static);
                if (maybe_static == "static") {
                    is_static = true;
                    j = skip_ws(after_static);
                }
                std::string dotted;
                j = read_dotted(j, dotted);
                if (!dotted.empty() && dotted.back() != '.') {
                    std::string name = dotted;
                    if (name.size() >= 2 && name.ends_with(".*"))
                        name.resize(name.size() - 2);
                    std::string canonical = "import ";
                    if (is_static) canonical += "static ";
                    canonical += dotted;
                    canonical += ';';
                    out.push_back({std::move(name), std::move(canonical), word_line});
                }
                i = j;
                continue;
            }
            (void)word_line;
            i = k;
            continue;
        }
        ++i;
    }
    return out;
}

} // namespace

std::vector<ImportMatch> Registry::detect_imports(const lex::SourceFileRecord& record) const {
    const auto imports = collect_imports(record.code_view);
    std::vector<ImportMatch> matches;
    for (const auto& entry : detection_) {
        const ImportedName* first = nullptr;
        bool jupiter = false;
        for (const auto& imp : imports) {
            if (!prefix_matches(imp.dotted, entry.prefix)) continue;
            if (first == nullptr) first = &imp;
            if (entry.prefix == "org.junit" && prefix_matches(imp.dotted, "org.junit.jupiter"))
                jupiter = true;
        }
        if (first == nullptr) continue;
        ImportMatch m;
        m.framework = entry.name;
        m.import_prefix = entry.prefix;
        m.matched_import = first->canonical;
        m.line = first->line;
        m.requires_test_word = entry.requires_test_word;
        if (jupiter) m.refined = "JUnit 5";
        matches.push_back(std::move(m));
    }
    return matches;
}

} // namespace testscan::registry
