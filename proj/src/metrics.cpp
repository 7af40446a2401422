#include "testscan/metrics.hpp"

#include "testscan/kernels.hpp"

#include <cctype>
#include <optional>
#include <string_view>
#include <unordered_set>
#include <utility>

namespace testscan::metrics {

namespace {

bool ident_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}
bool ident_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
}

const std::unordered_set<std::string_view> kStatementKeywords{
    "if",    "for",      "while",      "switch", "catch",   "return", "new",
    "throw", "assert",   "else",       "do",     "try",     "finally", "case",
    "break", "continue", "instanceof", "yield",  "package", "import", "extends",
    "implements", "super", "this"};

const std::unordered_set<std::string_view> kModifiers{
    "public",       "private", "protected", "static",  "final",     "abstract",
    "synchronized", "native",  "strictfp",  "default", "transient", "volatile",
    "sealed"};

const std::unordered_set<std::string_view> kPrimitives{
    "void", "int", "long", "short", "byte", "char", "boolean", "float", "double"};

const std::unordered_set<std::string_view> kTypeKeywords{"class", "interface", "enum",
                                                         "record"};

bool is_keyword(std::string_view s) {
    return kStatementKeywords.contains(s) || kModifiers.contains(s) ||
           kPrimitives.contains(s) || kTypeKeywords.contains(s);
}

struct Token {
    enum class Kind { ident, number, annotation, punct };
    Kind kind;
    std::string_view text; // annotation text excludes the '@'
};

std::vector<Token> tokenize(std::string_view code) {
    std::vector<Token> tokens;
    const std::size_t n = code.size();
    std::size_t i = 0;
    while (i < n) {
        const auto c = static_cast<unsigned char>(code[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < n && ident_char(static_cast<unsigned char>(code[j]))) ++j;
            tokens.push_back({Token::Kind::ident, code.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i + 1;
            while (j < n && ident_char(static_cast<unsigned char>(code[j]))) ++j;
            tokens.push_back({Token::Kind::number, code.substr(i, j - i)});
            i = j;
            continue;
        }
        if (c == '@') {
            // Dotted annotation name. `@interface` declares an annotation type
            // and is handed over as the type keyword itself.
            std::size_t j = i + 1;
            while (j < n && std::isspace(static_cast<unsigned char>(code[j]))) ++j;
            const std::size_t start = j;
            while (j < n && (ident_char(static_cast<unsigned char>(code[j])) || code[j] == '.'))
                ++j;
            if (j > start) {
                const auto name = code.substr(start, j - start);
                tokens.push_back({name == "interface" ? Token::Kind::ident
                                                      : Token::Kind::annotation,
                                  name});
                i = j;
                continue;
            }
            tokens.push_back({Token::Kind::punct, code.substr(i, 1)});
            ++i;
            continue;
        }
        tokens.push_back({Token::Kind::punct, code.substr(i, 1)});
        ++i;
    }
    return tokens;
}

std::string_view annotation_simple_name(std::string_view dotted) {
    const auto pos = dotted.find_last_of('.');
    return pos == std::string_view::npos ? dotted : dotted.substr(pos + 1);
}

bool word_is_test(std::string_view s) {
    if (s.size() != 4) return false;
    const auto lc = [](char c) { return static_cast<char>(c | 0x20); };
    return lc(s[0]) == 't' && lc(s[1]) == 'e' && lc(s[2]) == 's' && lc(s[3]) == 't';
}

/// Lexical recognition of method declarations: optional annotations and
/// modifiers, a return type (or none for constructors), an identifier, a
/// parameter list, then `{` or `;`. Brace scopes are tracked so nested and
/// anonymous-class methods are found too, flagged as nested.
class MethodScanner {
public:
    explicit MethodScanner(FileMetrics& out) : out_(out) {}

    void run(std::string_view code) {
        for (const auto& tok : tokenize(code)) step(tok);
        if (!scope_.empty()) out_.degraded = true;
    }

private:
    struct Scope {
        enum class Kind { type, method, block };
        Kind kind;
        std::string name;      // type or method name
        int method_index = -1; // into out_.methods for method scopes
        int saved_paren_depth = 0;
    };

    enum class Cand { none, in_params, after_params };

    FileMetrics& out_;
    std::vector<Scope> scope_;
    int paren_depth_ = 0;

    std::vector<Token> segment_; // declaration tokens at paren depth 0
    bool has_assign_ = false;
    bool has_type_keyword_ = false;

    Cand cand_ = Cand::none;
    std::string cand_name_;
    std::size_t cand_name_index_ = 0;
    // Call entry recorded for the candidate name, dropped if it turns out to
    // be a declaration.
    std::optional<std::pair<int, std::size_t>> cand_call_;

    Token last_{Token::Kind::punct, ""};
    bool has_last_ = false;

    int enclosing_method() const {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
            if (it->kind == Scope::Kind::method) return it->method_index;
        }
        return -1;
    }

    void reset_segment() {
        segment_.clear();
        has_assign_ = false;
        has_type_keyword_ = false;
        cand_ = Cand::none;
        cand_call_.reset();
    }

    bool acceptable_before_name(std::size_t name_index) const {
        if (name_index == 0) return true; // segment start (constructor form)
        const Token& b = segment_[name_index - 1];
        switch (b.kind) {
        case Token::Kind::annotation: return true;
        case Token::Kind::ident:
            return !kStatementKeywords.contains(b.text) && !kTypeKeywords.contains(b.text);
        case Token::Kind::punct: return b.text == ">" || b.text == "]";
        case Token::Kind::number: return false;
        }
        return false;
    }

    std::optional<std::pair<int, std::size_t>> record_call() {
        if (!has_last_ || last_.kind != Token::Kind::ident || is_keyword(last_.text))
            return std::nullopt;
        const int m = enclosing_method();
        if (m < 0) return std::nullopt;
        auto& calls = out_.methods[static_cast<std::size_t>(m)].called_idents;
        calls.emplace_back(last_.text);
        return std::make_pair(m, calls.size() - 1);
    }

    void maybe_start_candidate(std::optional<std::pair<int, std::size_t>> call_entry) {
        if (cand_ != Cand::none || has_assign_ || has_type_keyword_) return;
        if (segment_.empty()) return;
        const Token& name = segment_.back();
        if (name.kind != Token::Kind::ident || is_keyword(name.text)) return;
        if (!acceptable_before_name(segment_.size() - 1)) return;
        cand_ = Cand::in_params;
        cand_name_ = std::string(name.text);
        cand_name_index_ = segment_.size() - 1;
        cand_call_ = call_entry;
    }

    struct Declaration {
        std::vector<std::string_view> annotations;
        bool is_public = false;
        bool is_static = false;
        bool returns_void = false;
        bool has_return_type = false;
    };

    Declaration analyze_pre_tokens() const {
        Declaration d;
        std::vector<std::string_view> type_idents;
        for (std::size_t k = 0; k < cand_name_index_; ++k) {
            const Token& t = segment_[k];
            if (t.kind == Token::Kind::annotation) {
                d.annotations.push_back(t.text);
            } else if (t.kind == Token::Kind::ident) {
                if (kModifiers.contains(t.text)) {
                    if (t.text == "public") d.is_public = true;
                    if (t.text == "static") d.is_static = true;
                } else {
                    type_idents.push_back(t.text);
                }
            }
        }
        d.has_return_type = !type_idents.empty();
        d.returns_void = type_idents.size() == 1 && type_idents[0] == "void";
        return d;
    }

    // Returns true when the candidate was accepted and recorded.
    bool confirm_method(bool with_body) {
        const Declaration d = analyze_pre_tokens();
        const bool top_is_type = !scope_.empty() && scope_.back().kind == Scope::Kind::type;
        const bool constructor =
            !d.has_return_type && top_is_type && scope_.back().name == cand_name_;
        // A bare call or enum constant is neither; constructors need a body.
        if (!d.has_return_type && !(constructor && with_body)) {
            cand_ = Cand::none;
            return false;
        }

        MethodInfo info;
        info.name = cand_name_;
        info.is_public = d.is_public;
        info.is_static = d.is_static;
        info.returns_void = d.returns_void;
        info.is_constructor = constructor;
        info.nested = !(scope_.size() == 1 && scope_[0].kind == Scope::Kind::type);
        for (const auto& a : d.annotations) {
            if (annotation_simple_name(a) == "Test") info.test_annotated = true;
        }
        if (!constructor) {
            const auto segments =
                lex::segment_words(info.name, lex::WordSegment::Source::identifier);
            if (!segments.empty()) {
                info.test_prefix = word_is_test(segments.front().text);
                info.test_suffix = word_is_test(segments.back().text);
            }
        }
        if (cand_call_) {
            auto& calls = out_.methods[static_cast<std::size_t>(cand_call_->first)].called_idents;
            if (cand_call_->second < calls.size())
                calls.erase(calls.begin() + static_cast<long>(cand_call_->second));
        }
        out_.methods.push_back(std::move(info));
        if (with_body) {
            scope_.push_back({Scope::Kind::method, cand_name_,
                              static_cast<int>(out_.methods.size()) - 1, paren_depth_});
            paren_depth_ = 0;
        }
        cand_ = Cand::none;
        return true;
    }

    void open_type_or_block() {
        if (has_type_keyword_) {
            std::string name;
            bool next_is_name = false;
            for (const auto& t : segment_) {
                if (t.kind == Token::Kind::annotation) {
                    if (annotation_simple_name(t.text) == "Test")
                        out_.class_level_test_annotation = true;
                } else if (t.kind == Token::Kind::ident && kTypeKeywords.contains(t.text)) {
                    next_is_name = true;
                } else if (next_is_name && t.kind == Token::Kind::ident &&
                           name.empty()) {
                    name = std::string(t.text);
                }
            }
            scope_.push_back({Scope::Kind::type, std::move(name), -1, paren_depth_});
        } else {
            scope_.push_back({Scope::Kind::block, std::string(), -1, paren_depth_});
        }
        paren_depth_ = 0;
    }

    void step(const Token& tok) {
        if (tok.kind == Token::Kind::punct && tok.text.size() == 1) {
            switch (tok.text[0]) {
            case '(': {
                auto call_entry = record_call();
                if (paren_depth_ == 0) maybe_start_candidate(call_entry);
                ++paren_depth_;
                set_last(tok);
                return;
            }
            case ')':
                if (paren_depth_ > 0) --paren_depth_;
                if (cand_ == Cand::in_params && paren_depth_ == 0) cand_ = Cand::after_params;
                set_last(tok);
                return;
            case '{':
                if (paren_depth_ == 0 && cand_ == Cand::after_params &&
                    confirm_method(/*with_body=*/true)) {
                    reset_segment();
                } else {
                    open_type_or_block();
                    reset_segment();
                }
                set_last(tok);
                return;
            case '}':
                if (scope_.empty()) {
                    out_.degraded = true;
                } else {
                    paren_depth_ = scope_.back().saved_paren_depth;
                    scope_.pop_back();
                }
                reset_segment();
                set_last(tok);
                return;
            case ';':
                if (paren_depth_ == 0) {
                    if (cand_ == Cand::after_params) confirm_method(/*with_body=*/false);
                    reset_segment();
                }
                set_last(tok);
                return;
            default: break;
            }
        }
        if (paren_depth_ == 0) {
            if (cand_ == Cand::after_params) {
                // Only a throws clause may sit between the parameter list and
                // the body; anything else means this was an expression.
                const bool allowed =
                    (tok.kind == Token::Kind::ident &&
                     !kStatementKeywords.contains(tok.text) &&
                     !kTypeKeywords.contains(tok.text)) ||
                    tok.kind == Token::Kind::annotation ||
                    (tok.kind == Token::Kind::punct && (tok.text == "." || tok.text == ","));
                if (!allowed) cand_ = Cand::none;
            }
            if (tok.kind == Token::Kind::punct && tok.text == "=") has_assign_ = true;
            if (tok.kind == Token::Kind::ident && kTypeKeywords.contains(tok.text))
                has_type_keyword_ = true;
            segment_.push_back(tok);
        }
        set_last(tok);
    }

    void set_last(const Token& tok) {
        last_ = tok;
        has_last_ = true;
    }
};

} // namespace

FileMetrics extract_metrics(const lex::SourceFileRecord& record,
                            const std::vector<registry::ImportMatch>&) {
    FileMetrics m;
    MethodScanner scanner(m);
    scanner.run(record.code_view);

    for (const auto& method : m.methods) {
        if (method.is_constructor) continue;
        ++m.method_count;
        if (method.test_annotated) ++m.annotation_test_count;
        if (method.test_prefix) ++m.prefix_method_count;
        if (method.test_suffix) ++m.suffix_method_count;
        if (method.is_public) ++m.public_method_count;
        if (method.nested) m.has_nested_methods = true;
        if (method.name == "main" && method.is_public && method.is_static &&
            method.returns_void)
            m.has_main = true;
    }

    m.test_word_count = lex::count_test_occurrences(record);
    m.path_has_test = lex::path_contains_test(record.path);

    auto stem = lex::basename_of(record.path);
    if (const auto dot = stem.find_last_of('.'); dot != std::string_view::npos)
        stem = stem.substr(0, dot);
    m.dollar_class = stem.find('$') != std::string_view::npos;

    if (record.strip_warning) m.degraded = true;
    return m;
}

std::size_t count_lines_of_code(const lex::SourceFileRecord& record) {
    return kernels::count_nonblank_lines(record.raw_content);
}

} // namespace testscan::metrics
