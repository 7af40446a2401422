#include "testscan/miner.hpp"

#include "testscan/errors.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <thread>

namespace testscan::mine {

using nlohmann::json;

namespace {

bool valid_repo(std::string_view repo) {
    const auto slash = repo.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == repo.size())
        return false;
    return repo.find('/', slash + 1) == std::string_view::npos;
}

constexpr std::string_view kContentMid = "+in:file+language:java+repo:";
constexpr std::string_view kFilenameMid = "+language:java+repo:";

} // namespace

SearchQuery build_query(QueryKind kind, std::string_view term, std::string_view repo) {
    if (term.empty()) throw usage_error("build_query: empty term");
    if (!valid_repo(repo))
        throw usage_error("build_query: repo must be owner/name, got '" + std::string(repo) +
                          "'");
    SearchQuery q;
    q.kind = kind;
    q.term = std::string(term);
    q.repo = std::string(repo);
    switch (kind) {
    case QueryKind::content_word:
        q.rendered = "?q=" + q.term + std::string(kContentMid) + q.repo;
        break;
    case QueryKind::filename_word:
        q.rendered = "?q=filename:" + q.term + std::string(kFilenameMid) + q.repo;
        break;
    case QueryKind::framework_import:
        q.rendered = "?q=\"" + q.term + "\"" + std::string(kContentMid) + q.repo;
        break;
    }
    return q;
}

std::optional<SearchQuery> parse_query(std::string_view rendered) {
    if (!rendered.starts_with("?q=")) return std::nullopt;
    std::string_view body = rendered.substr(3);

    const auto finish = [&](QueryKind kind, std::string_view term,
                            std::string_view repo) -> std::optional<SearchQuery> {
        if (term.empty() || !valid_repo(repo)) return std::nullopt;
        SearchQuery q = build_query(kind, term, repo);
        if (q.rendered != rendered) return std::nullopt;
        return q;
    };

    if (body.starts_with("filename:")) {
        const auto mid = body.find(kFilenameMid);
        if (mid == std::string_view::npos) return std::nullopt;
        return finish(QueryKind::filename_word, body.substr(9, mid - 9),
                      body.substr(mid + kFilenameMid.size()));
    }
    if (body.starts_with("\"")) {
        const auto close = body.find('"', 1);
        if (close == std::string_view::npos) return std::nullopt;
        if (body.substr(close + 1, kContentMid.size()) != kContentMid) return std::nullopt;
        return finish(QueryKind::framework_import, body.substr(1, close - 1),
                      body.substr(close + 1 + kContentMid.size()));
    }
    const auto mid = body.find(kContentMid);
    if (mid == std::string_view::npos) return std::nullopt;
    return finish(QueryKind::content_word, body.substr(0, mid),
                  body.substr(mid + kContentMid.size()));
}

std::chrono::steady_clock::time_point SystemClock::now() {
    return std::chrono::steady_clock::now();
}

void SystemClock::sleep_for(std::chrono::milliseconds d) { std::this_thread::sleep_for(d); }

RateLimiter::RateLimiter(Clock& clock, RateLimits limits) : clock_(clock), limits_(limits) {}

void RateLimiter::acquire() {
    using namespace std::chrono;
    constexpr auto kMinute = minutes(1);
    constexpr auto kHour = hours(1);
    while (true) {
        const auto now = clock_.now();
        while (!search_window_.empty() && now - search_window_.front() >= kMinute)
            search_window_.pop_front();
        while (!global_window_.empty() && now - global_window_.front() >= kHour)
            global_window_.pop_front();

        milliseconds wait{0};
        if (static_cast<int>(search_window_.size()) >= limits_.search_per_minute)
            wait = std::max(wait, ceil<milliseconds>(search_window_.front() + kMinute - now));
        if (static_cast<int>(global_window_.size()) >= limits_.global_per_hour)
            wait = std::max(wait, ceil<milliseconds>(global_window_.front() + kHour - now));
        if (wait == milliseconds{0}) {
            search_window_.push_back(now);
            global_window_.push_back(now);
            return;
        }
        clock_.sleep_for(std::max(wait, milliseconds{1}));
    }
}

SearchClient::SearchClient(Transport& transport, Clock& clock, RateLimits limits)
    : transport_(transport), clock_(clock), limiter_(clock, limits) {}

TransportResponse SearchClient::fetch_with_retries(const std::string& rendered, int page) {
    constexpr int kAttempts = 4;
    std::chrono::milliseconds backoff{1000};
    TransportResponse resp;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        limiter_.acquire();
        resp = transport_.fetch(rendered, page, kPageSize);
        const bool transient =
            resp.status == 429 || resp.status == 500 || resp.status == 502 ||
            resp.status == 503;
        if (!transient) return resp;
        if (attempt + 1 < kAttempts) {
            clock_.sleep_for(backoff);
            backoff *= 2;
        }
    }
    throw data_error("search failed after retries (status " + std::to_string(resp.status) +
                     ")");
}

SearchOutcome SearchClient::execute_search(const SearchQuery& query) {
    SearchOutcome out;
    int page = 1;
    while (true) {
        const auto resp = fetch_with_retries(query.rendered, page);
        if (resp.status == 403 || resp.status == 404 || resp.status == 451) {
            out.status = SearchOutcome::Status::skipped;
            out.skip_reason = "repository deleted, private, or blocked (status " +
                              std::to_string(resp.status) + ")";
            out.items.clear();
            return out;
        }
        if (resp.status != 200)
            throw data_error("search returned status " + std::to_string(resp.status));

        out.total_count = resp.total_count;
        for (const auto& item : resp.items) {
            if (static_cast<int>(out.items.size()) >= kResultCap) {
                out.capped = true;
                break;
            }
            out.items.push_back(item);
        }
        if (out.total_count > kResultCap) out.capped = true;
        if (static_cast<int>(out.items.size()) >= kResultCap) break;
        if (static_cast<long long>(out.items.size()) >= resp.total_count) break;
        if (static_cast<int>(resp.items.size()) < kPageSize) break; // exhausted
        ++page;
    }
    out.status = SearchOutcome::Status::ok;
    return out;
}

namespace {

class HttpTransport final : public Transport {
public:
    HttpTransport(std::string base_url, std::string token)
        : base_url_(std::move(base_url)), token_(std::move(token)) {}

    TransportResponse fetch(const std::string& rendered_query, int page,
                            int per_page) override {
        httplib::Client client(base_url_);
        client.set_follow_location(true);
        httplib::Headers headers{{"Accept", "application/vnd.github+json"},
                                 {"Authorization", "Bearer " + token_},
                                 {"User-Agent", "testscan"}};
        const std::string target = "/search/code" + rendered_query +
                                   "&page=" + std::to_string(page) +
                                   "&per_page=" + std::to_string(per_page);
        const auto res = client.Get(target, headers);
        TransportResponse out;
        if (!res) {
            out.status = 503; // connection-level failure, treated as transient
            return out;
        }
        out.status = res->status;
        if (res->status != 200) return out;
        try {
            const json j = json::parse(res->body);
            out.total_count = j.value("total_count", 0LL);
            if (j.contains("items")) {
                for (const auto& item : j.at("items")) {
                    SearchItem si;
                    si.path = item.value("path", "");
                    if (item.contains("repository"))
                        si.repo = item.at("repository").value("full_name", "");
                    out.items.push_back(std::move(si));
                }
            }
        } catch (const json::exception& e) {
            throw data_error(std::string("bad search response: ") + e.what());
        }
        return out;
    }

private:
    std::string base_url_;
    std::string token_;
};

} // namespace

std::unique_ptr<Transport> make_http_transport(std::string base_url, std::string token) {
    if (token.empty()) throw data_error("search transport: empty API token");
    return std::make_unique<HttpTransport>(std::move(base_url), std::move(token));
}

std::string token_from_env() {
    if (const char* tok = std::getenv("GITHUB_TOKEN"); tok != nullptr && *tok != '\0')
        return tok;
    throw data_error("GITHUB_TOKEN is not set; mining needs an API token");
}

std::string_view relevance_name(RepoCandidate::Relevance r) {
    switch (r) {
    case RepoCandidate::Relevance::pending: return "PENDING";
    case RepoCandidate::Relevance::accepted: return "ACCEPTED";
    case RepoCandidate::Relevance::rejected: return "REJECTED";
    }
    return "PENDING";
}

std::string_view reason_name(RepoCandidate::Reason r) {
    switch (r) {
    case RepoCandidate::Reason::none: return "NONE";
    case RepoCandidate::Reason::history: return "HISTORY";
    case RepoCandidate::Reason::bot: return "BOT";
    case RepoCandidate::Reason::clone: return "CLONE";
    }
    return "NONE";
}

std::set<std::string> tokenize_readme(std::string_view text) {
    std::set<std::string> tokens;
    std::string token;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            token.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else if (!token.empty()) {
            tokens.insert(token);
            token.clear();
        }
    }
    if (!token.empty()) tokens.insert(token);
    return tokens;
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 1.0;
    std::size_t inter = 0;
    for (const auto& t : a) inter += b.count(t);
    const std::size_t uni = a.size() + b.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

RepoCandidate score_relevance(RepoCandidate candidate,
                              const std::vector<RepoCandidate>& corpus) {
    candidate.reason = RepoCandidate::Reason::none;
    candidate.community_score = 0;
    if (candidate.commit_count < kMinCommits) {
        candidate.relevance = RepoCandidate::Relevance::rejected;
        candidate.reason = RepoCandidate::Reason::history;
        return candidate;
    }
    if (candidate.max_commits_per_day > kBotCommitsPerDay) {
        candidate.relevance = RepoCandidate::Relevance::rejected;
        candidate.reason = RepoCandidate::Reason::bot;
        return candidate;
    }
    if (!candidate.readme_tokens.empty()) {
        for (const auto& other : corpus) {
            if (other.repo == candidate.repo || other.readme_tokens.empty()) continue;
            if (jaccard(candidate.readme_tokens, other.readme_tokens) >= kCloneSimilarity) {
                candidate.relevance = RepoCandidate::Relevance::rejected;
                candidate.reason = RepoCandidate::Reason::clone;
                return candidate;
            }
        }
    }
    candidate.relevance = RepoCandidate::Relevance::accepted;
    candidate.community_score = candidate.contributor_count;
    return candidate;
}

std::vector<RepoCandidate> rank_candidates(std::vector<RepoCandidate> candidates) {
    std::vector<RepoCandidate> accepted;
    for (auto& c : candidates) {
        if (c.relevance == RepoCandidate::Relevance::accepted) accepted.push_back(std::move(c));
    }
    std::sort(accepted.begin(), accepted.end(), [](const RepoCandidate& a,
                                                   const RepoCandidate& b) {
        if (a.content_hits != b.content_hits) return a.content_hits > b.content_hits;
        if (a.contributor_count != b.contributor_count)
            return a.contributor_count > b.contributor_count;
        return a.repo < b.repo;
    });
    return accepted;
}

namespace {

json candidate_to_json(const RepoCandidate& c) {
    json fw = json::object();
    for (const auto& [name, hits] : c.framework_hits) fw[name] = hits;
    return json{{"repo", c.repo},
                {"content_hits", c.content_hits},
                {"filename_hits", c.filename_hits},
                {"framework_hits", fw},
                {"commit_count", c.commit_count},
                {"max_commits_per_day", c.max_commits_per_day},
                {"contributor_count", c.contributor_count},
                {"readme_tokens", c.readme_tokens},
                {"relevance", relevance_name(c.relevance)},
                {"reason", reason_name(c.reason)},
                {"community_score", c.community_score}};
}

RepoCandidate candidate_from_json(const json& j) {
    RepoCandidate c;
    c.repo = j.at("repo").get<std::string>();
    c.content_hits = j.value("content_hits", 0LL);
    c.filename_hits = j.value("filename_hits", 0LL);
    if (j.contains("framework_hits")) {
        for (const auto& [name, hits] : j.at("framework_hits").items())
            c.framework_hits[name] = hits.get<long long>();
    }
    c.commit_count = j.value("commit_count", 0LL);
    c.max_commits_per_day = j.value("max_commits_per_day", 0LL);
    c.contributor_count = j.value("contributor_count", 0LL);
    if (j.contains("readme_tokens")) {
        for (const auto& t : j.at("readme_tokens")) c.readme_tokens.insert(t.get<std::string>());
    } else if (j.contains("readme")) {
        c.readme_tokens = tokenize_readme(j.at("readme").get<std::string>());
    }
    return c;
}

} // namespace

std::vector<RepoCandidate> load_candidates(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw data_error("cannot open candidate file " + file.string());
    std::vector<RepoCandidate> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(candidate_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw data_error("bad candidate in " + file.string() + ":" +
                             std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void write_candidates(const std::vector<RepoCandidate>& candidates, std::ostream& out) {
    for (const auto& c : candidates) out << candidate_to_json(c).dump() << '\n';
}

void write_candidates(const std::vector<RepoCandidate>& candidates,
                      const std::filesystem::path& dest) {
    std::ofstream out(dest, std::ios::binary);
    if (!out) throw data_error("cannot write candidates to " + dest.string());
    write_candidates(candidates, out);
    if (!out.flush()) throw data_error("write failed for " + dest.string());
}

} // namespace testscan::mine
