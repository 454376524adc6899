#include "tagclust/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

namespace tagclust {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& why) {
    throw Error(ErrorKind::parse, "snapshot schema violation at " + path + ": " + why);
}

std::int64_t require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_error(path, "expected an integer");
    return j.get<std::int64_t>();
}

std::string require_string(const json& j, const std::string& path) {
    if (!j.is_string()) schema_error(path, "expected a string");
    return j.get<std::string>();
}

}  // namespace

double priority(const GameRecord& game, const std::string& tag) {
    if (game.tag_votes.empty()) return 0.0;
    auto it = game.tag_votes.find(tag);
    if (it == game.tag_votes.end()) return 0.0;
    std::int64_t n_max = 0;
    for (const auto& [name, votes] : game.tag_votes) n_max = std::max(n_max, votes);
    return static_cast<double>(it->second) / static_cast<double>(n_max);
}

Corpus Corpus::from_games(std::vector<GameRecord> games, std::string provenance) {
    std::unordered_set<std::int64_t> seen_ids;
    seen_ids.reserve(games.size());
    for (std::size_t i = 0; i < games.size(); ++i) {
        const auto& g = games[i];
        if (g.app_id <= 0)
            throw Error(ErrorKind::data,
                        "game #" + std::to_string(i) + " has non-positive app_id " +
                            std::to_string(g.app_id));
        if (!seen_ids.insert(g.app_id).second)
            throw Error(ErrorKind::data, "duplicate app_id " + std::to_string(g.app_id));
        if (g.review_count < 0)
            throw Error(ErrorKind::data,
                        "app_id " + std::to_string(g.app_id) + " has negative review_count");
        if (g.tag_votes.size() > 20)
            throw Error(ErrorKind::data, "app_id " + std::to_string(g.app_id) + " has " +
                                             std::to_string(g.tag_votes.size()) +
                                             " tags; at most 20 allowed");
        for (const auto& [tag, votes] : g.tag_votes) {
            if (tag.empty())
                throw Error(ErrorKind::data,
                            "app_id " + std::to_string(g.app_id) + " has an empty tag name");
            if (votes < 1)
                throw Error(ErrorKind::data, "app_id " + std::to_string(g.app_id) + " tag \"" +
                                                 tag + "\" has vote count < 1");
        }
    }

    Corpus c;
    c.games_ = std::move(games);
    c.provenance_ = std::move(provenance);

    std::unordered_set<std::string> universe;
    for (std::size_t i = 0; i < c.games_.size(); ++i) {
        const auto& g = c.games_[i];
        if (g.tag_votes.empty()) {
            c.untagged_.push_back(i);
        } else {
            c.tagged_.push_back(i);
            for (const auto& [tag, votes] : g.tag_votes) universe.insert(tag);
        }
    }
    c.tag_universe_.assign(universe.begin(), universe.end());
    std::sort(c.tag_universe_.begin(), c.tag_universe_.end());
    return c;
}

Corpus load_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::data, "cannot open snapshot: " + path.string());

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::parse, "malformed JSON in " + path.string() + ": " + e.what());
    }

    if (!doc.is_object()) schema_error("$", "expected a JSON object");
    if (!doc.contains("games")) schema_error("games", "missing required member");
    const json& games_node = doc["games"];
    if (!games_node.is_array()) schema_error("games", "expected an array");

    std::vector<GameRecord> games;
    games.reserve(games_node.size());
    for (std::size_t i = 0; i < games_node.size(); ++i) {
        const std::string base = "games[" + std::to_string(i) + "]";
        const json& jg = games_node[i];
        if (!jg.is_object()) schema_error(base, "expected an object");

        GameRecord g;
        if (!jg.contains("appid")) schema_error(base + ".appid", "missing required member");
        g.app_id = require_int(jg["appid"], base + ".appid");
        if (g.app_id <= 0) schema_error(base + ".appid", "expected a positive integer");

        if (!jg.contains("name")) schema_error(base + ".name", "missing required member");
        g.title = require_string(jg["name"], base + ".name");

        if (!jg.contains("reviews")) schema_error(base + ".reviews", "missing required member");
        g.review_count = require_int(jg["reviews"], base + ".reviews");
        if (g.review_count < 0) schema_error(base + ".reviews", "expected a non-negative integer");

        if (!jg.contains("tags")) schema_error(base + ".tags", "missing required member");
        const json& jt = jg["tags"];
        if (jt.is_array()) {
            // SteamSpy encodes an empty tag map as [].
            if (!jt.empty()) schema_error(base + ".tags", "expected an object");
        } else if (jt.is_object()) {
            if (jt.size() > 20) schema_error(base + ".tags", "more than 20 tag entries");
            for (const auto& [tag, votes] : jt.items()) {
                std::int64_t v = require_int(votes, base + ".tags." + tag);
                if (v < 1) schema_error(base + ".tags." + tag, "expected a vote count >= 1");
                g.tag_votes[tag] = v;
            }
        } else {
            schema_error(base + ".tags", "expected an object");
        }
        games.push_back(std::move(g));
    }

    Corpus corpus = Corpus::from_games(std::move(games), "snapshot " + path.string());
    if (doc.contains("fetched_at"))
        corpus.set_fetched_at(require_string(doc["fetched_at"], "fetched_at"));
    return corpus;
}

void save_snapshot(const Corpus& corpus, const std::filesystem::path& path) {
    json doc;
    doc["fetched_at"] = corpus.fetched_at();
    json arr = json::array();
    for (const auto& g : corpus.games()) {
        json jg;
        jg["appid"] = g.app_id;
        jg["name"] = g.title;
        jg["reviews"] = g.review_count;
        json tags = json::object();
        for (const auto& [tag, votes] : g.tag_votes) tags[tag] = votes;
        jg["tags"] = std::move(tags);
        arr.push_back(std::move(jg));
    }
    doc["games"] = std::move(arr);

    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::data, "cannot write snapshot: " + path.string());
    out << doc.dump(2) << '\n';
}

Corpus filter_corpus(const Corpus& corpus, std::int64_t min_reviews,
                     const std::optional<std::string>& required_tag) {
    if (min_reviews <= 0 && !required_tag) return corpus;

    std::vector<GameRecord> kept;
    for (const auto& g : corpus.games()) {
        if (g.review_count < min_reviews) continue;
        if (required_tag && !g.has_tag(*required_tag)) continue;
        kept.push_back(g);
    }

    std::string note = "filter(min_reviews=" + std::to_string(min_reviews);
    if (required_tag) note += ", tag=" + *required_tag;
    note += ")";

    std::string provenance = corpus.provenance();
    bool already_noted = provenance.size() >= note.size() &&
                         provenance.compare(provenance.size() - note.size(), note.size(), note) == 0;
    if (!already_noted)
        provenance = provenance.empty() ? note : provenance + "; " + note;

    Corpus out = Corpus::from_games(std::move(kept), std::move(provenance));
    out.set_fetched_at(corpus.fetched_at());
    return out;
}

}  // namespace tagclust
