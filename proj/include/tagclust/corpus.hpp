#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tagclust/error.hpp"

namespace tagclust {

// One game as exposed by a SteamSpy-style snapshot: identity, review count,
// and the top-20 community tags with their vote counts.
struct GameRecord {
    std::int64_t app_id = 0;  // positive, unique within a corpus
    std::string title;
    std::int64_t review_count = 0;
    std::map<std::string, std::int64_t> tag_votes;  // at most 20 entries, each vote count >= 1

    bool has_tag(const std::string& tag) const { return tag_votes.count(tag) != 0; }

    bool operator==(const GameRecord&) const = default;
};

// Vote share of `tag` relative to the game's most voted tag, in [0,1].
// 0 when the tag is absent or the game has no tags at all.
double priority(const GameRecord& game, const std::string& tag);

// Immutable set of games plus the universe of tags they carry. Safe for
// unlimited concurrent readers once constructed.
class Corpus {
public:
    Corpus() = default;

    // Validates all invariants (positive unique app ids, vote counts >= 1,
    // at most 20 tags per game) and derives the tag universe.
    static Corpus from_games(std::vector<GameRecord> games, std::string provenance);

    const std::vector<GameRecord>& games() const { return games_; }
    std::size_t size() const { return games_.size(); }

    // Sorted union of tag names over all games.
    const std::vector<std::string>& tag_universe() const { return tag_universe_; }

    const std::string& provenance() const { return provenance_; }
    const std::string& fetched_at() const { return fetched_at_; }
    void set_fetched_at(std::string ts) { fetched_at_ = std::move(ts); }

    // Games with at least one tag; only these ever enter a feature matrix.
    const std::vector<std::size_t>& tagged_indices() const { return tagged_; }
    // Sidecar list of games with an empty tag map. Retained but never clustered.
    const std::vector<std::size_t>& untagged_indices() const { return untagged_; }

    bool operator==(const Corpus&) const = default;

private:
    std::vector<GameRecord> games_;
    std::vector<std::string> tag_universe_;
    std::string provenance_;
    std::string fetched_at_;
    std::vector<std::size_t> tagged_;
    std::vector<std::size_t> untagged_;
};

// Reads the canonical snapshot document:
//   {"games": [{"appid": int, "name": str, "reviews": int, "tags": {str: int}}],
//    "fetched_at": str}
// Schema violations name the offending JSON path, e.g. "games[3].tags.Action".
Corpus load_snapshot(const std::filesystem::path& path);

void save_snapshot(const Corpus& corpus, const std::filesystem::path& path);

// Sub-corpus of games with review_count >= min_reviews and, when given, the
// required tag assigned. Recomputes the tag universe and records the filter
// in the provenance. filter_corpus(c, 0, nullopt) returns c unchanged, and
// re-applying the same filter is a no-op.
Corpus filter_corpus(const Corpus& corpus, std::int64_t min_reviews,
                     const std::optional<std::string>& required_tag = std::nullopt);

}  // namespace tagclust
