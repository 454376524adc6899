#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "tagclust/corpus.hpp"

namespace tagclust {

// Assembles a snapshot from a SteamSpy-compatible API:
//   <base>?request=all&page=N        bulk page, ends at the first empty object
//   <base>?request=appdetails&appid=X per-game details with the tag map
// Every response is cached as one JSON file in cache_dir keyed by page or
// app id; cached entries are never refetched unless force_refresh is set.
struct FetchOptions {
    // Empty picks up TAGCLUST_API_BASE, then the public SteamSpy endpoint.
    std::string base_url;
    std::filesystem::path cache_dir;
    std::chrono::milliseconds page_delay{60000};  // between bulk page requests
    std::chrono::milliseconds app_delay{1000};    // between per-app requests
    bool force_refresh = false;
    bool offline = false;  // assemble from cache only, no network
    int max_pages = -1;    // cap for testing; -1 walks pages until empty
};

struct FetchResult {
    std::size_t requests_made = 0;  // network requests (0 on a warm cache)
    std::size_t games = 0;
};

// Fetches (or reads from cache), assembles, validates, and writes the
// snapshot JSON. Throws a retriable network error naming the failed URL, a
// parse error naming a malformed cache file, or an "incomplete snapshot"
// data error listing the missing cache entries when offline.
FetchResult fetch_snapshot(const FetchOptions& options,
                           const std::filesystem::path& snapshot_out);

}  // namespace tagclust
