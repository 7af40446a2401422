#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace testscan::mine {

enum class QueryKind { content_word, filename_word, framework_import };

struct SearchQuery {
    QueryKind kind = QueryKind::content_word;
    std::string term;
    std::string repo; // owner/name
    std::string rendered;
};

/// Renders one of the three code-search query templates:
///   CONTENT_WORD     ?q=<term>+in:file+language:java+repo:<repo>
///   FILENAME_WORD    ?q=filename:<term>+language:java+repo:<repo>
///   FRAMEWORK_IMPORT ?q="<package>"+in:file+language:java+repo:<repo>
/// Throws usage_error unless `repo` is `owner/name` and `term` is non-empty.
SearchQuery build_query(QueryKind kind, std::string_view term, std::string_view repo);

/// Inverse of build_query; nullopt when the string fits no template.
std::optional<SearchQuery> parse_query(std::string_view rendered);

struct SearchItem {
    std::string path;
    std::string repo;
};

struct TransportResponse {
    int status = 0;
    long long total_count = 0;
    std::vector<SearchItem> items;
};

/// Search backend. Tests drive the client with a scripted transport; the
/// real one speaks HTTP to a code-search endpoint.
class Transport {
public:
    virtual ~Transport() = default;
    virtual TransportResponse fetch(const std::string& rendered_query, int page,
                                    int per_page) = 0;
};

class Clock {
public:
    virtual ~Clock() = default;
    virtual std::chrono::steady_clock::time_point now() = 0;
    virtual void sleep_for(std::chrono::milliseconds d) = 0;
};

class SystemClock final : public Clock {
public:
    std::chrono::steady_clock::time_point now() override;
    void sleep_for(std::chrono::milliseconds d) override;
};

struct RateLimits {
    int search_per_minute = 30;
    int global_per_hour = 5000;
};

/// Sliding-window limiter. acquire() waits (via the clock) until a request
/// slot is free in both windows, then records the request. It never fails.
class RateLimiter {
public:
    RateLimiter(Clock& clock, RateLimits limits);
    void acquire();

private:
    Clock& clock_;
    RateLimits limits_;
    std::deque<std::chrono::steady_clock::time_point> search_window_;
    std::deque<std::chrono::steady_clock::time_point> global_window_;
};

struct SearchOutcome {
    enum class Status { ok, skipped };
    Status status = Status::ok;
    std::vector<SearchItem> items;
    long long total_count = 0;
    bool capped = false; // more than the 1,000-result window existed
    std::string skip_reason;
};

inline constexpr int kResultCap = 1000;
inline constexpr int kPageSize = 100;

class SearchClient {
public:
    SearchClient(Transport& transport, Clock& clock, RateLimits limits = {});

    /// Paginates to exhaustion or the 1,000-result cap. Transient failures
    /// (429/5xx) are retried with backoff; deleted/private/blocked
    /// repositories (403/404/451) yield a SKIPPED outcome.
    SearchOutcome execute_search(const SearchQuery& query);

private:
    Transport& transport_;
    Clock& clock_;
    RateLimiter limiter_;

    TransportResponse fetch_with_retries(const std::string& rendered, int page);
};

/// HTTP transport for a GitHub-style /search/code endpoint. The token comes
/// from the environment (GITHUB_TOKEN); base_url supports mock servers.
std::unique_ptr<Transport> make_http_transport(std::string base_url, std::string token);
std::string token_from_env(); // throws data_error when unset

struct RepoCandidate {
    enum class Relevance { pending, accepted, rejected };
    enum class Reason { none, history, bot, clone };

    std::string repo;
    long long content_hits = 0;
    long long filename_hits = 0;
    std::map<std::string, long long> framework_hits;
    long long commit_count = 0;
    long long max_commits_per_day = 0;
    long long contributor_count = 0;
    std::set<std::string> readme_tokens;
    Relevance relevance = Relevance::pending;
    Reason reason = Reason::none;
    long long community_score = 0;
};

std::string_view relevance_name(RepoCandidate::Relevance r);
std::string_view reason_name(RepoCandidate::Reason r);

/// Lowercased alphanumeric tokens of a readme.
std::set<std::string> tokenize_readme(std::string_view text);
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

inline constexpr long long kMinCommits = 50;
inline constexpr long long kBotCommitsPerDay = 1000;
inline constexpr double kCloneSimilarity = 0.9;

/// Applies the relevance rules in order: HISTORY (< 50 commits), BOT
/// (> 1000 commits/day), CLONE (readme Jaccard >= 0.9 against a distinct
/// repo). Accepted candidates get contributor_count as community score.
RepoCandidate score_relevance(RepoCandidate candidate,
                              const std::vector<RepoCandidate>& corpus);

/// Accepted candidates ordered by content hits desc, contributors desc,
/// repo name asc.
std::vector<RepoCandidate> rank_candidates(std::vector<RepoCandidate> candidates);

std::vector<RepoCandidate> load_candidates(const std::filesystem::path& file);
void write_candidates(const std::vector<RepoCandidate>& candidates,
                      const std::filesystem::path& dest);
void write_candidates(const std::vector<RepoCandidate>& candidates, std::ostream& out);

} // namespace testscan::mine
