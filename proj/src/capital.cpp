#include "tagclust/capital.hpp"

#include <map>
#include <unordered_set>

namespace tagclust {

std::size_t CapitalTagSet::total_tags() const {
    std::size_t n = 0;
    for (const auto& rank : ranks) n += rank.size();
    return n;
}

std::vector<std::string> CapitalTagSet::all_tags() const {
    std::vector<std::string> out;
    out.reserve(total_tags());
    for (const auto& rank : ranks)
        out.insert(out.end(), rank.begin(), rank.end());
    return out;
}

void CapitalTagSet::validate() const {
    if (lambdas.size() != ranks.size())
        throw Error(ErrorKind::data, "capital tag set has " + std::to_string(ranks.size()) +
                                         " ranks but " + std::to_string(lambdas.size()) +
                                         " lambdas");
    for (double l : lambdas)
        if (!(l > 0.0))
            throw Error(ErrorKind::data, "capital tag lambdas must be > 0");
    std::unordered_set<std::string> seen;
    for (const auto& rank : ranks)
        for (const auto& tag : rank) {
            if (tag.empty()) throw Error(ErrorKind::data, "capital tag names must be non-empty");
            if (!seen.insert(tag).second)
                throw Error(ErrorKind::data, "capital tag \"" + tag + "\" appears in two ranks");
        }
}

CapitalTagSet default_capital_tags() {
    CapitalTagSet set;
    set.ranks = {
        {"Singleplayer", "Multiplayer", "Action", "Casual", "Adventure", "Strategy", "Anime"},
        {"RPG", "2D", "3D", "Atmospheric", "Simulation", "Colorful", "Puzzle"},
        {"Pixel Graphics", "Funny", "Story Rich", "Fantasy", "Arcade", "Relaxing", "Shooter",
         "Management", "Horror", "Sci-fi", "Platformer", "Co-op", "Third Person", "Open World",
         "Rogue-like", "Exploration", "Sports"},
    };
    set.lambdas = {0.25, 0.7, 1.0};
    return set;
}

double coverage(const Corpus& corpus, const std::vector<std::string>& tags) {
    if (corpus.games().empty()) return 1.0;
    if (tags.empty()) return 0.0;
    std::unordered_set<std::string> wanted(tags.begin(), tags.end());
    std::size_t covered = 0;
    for (const auto& g : corpus.games()) {
        for (const auto& [tag, votes] : g.tag_votes) {
            if (wanted.count(tag)) {
                ++covered;
                break;
            }
        }
    }
    return static_cast<double>(covered) / static_cast<double>(corpus.size());
}

std::vector<std::string> discover_capital_rank(const Corpus& corpus,
                                               const std::vector<std::string>& excluded,
                                               double min_marginal_gain) {
    if (!(min_marginal_gain > 0.0 && min_marginal_gain < 1.0))
        throw Error(ErrorKind::usage, "min_marginal_gain must be strictly between 0 and 1");

    const std::size_t n = corpus.size();
    std::vector<std::string> picked;
    if (n == 0) return picked;

    std::unordered_set<std::string> skip(excluded.begin(), excluded.end());

    // std::map keeps candidate iteration in lexicographic order, which the
    // tie-break below relies on.
    std::map<std::string, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < corpus.games().size(); ++i)
        for (const auto& [tag, votes] : corpus.games()[i].tag_votes)
            if (!skip.count(tag)) members[tag].push_back(i);

    std::vector<char> covered(n, 0);
    while (!members.empty()) {
        const std::string* best_tag = nullptr;
        std::size_t best_added = 0;
        std::size_t best_total = 0;
        for (const auto& [tag, games] : members) {
            std::size_t added = 0;
            for (std::size_t i : games)
                if (!covered[i]) ++added;
            bool better = added > best_added ||
                          (added == best_added && added > 0 && games.size() > best_total);
            if (better) {
                best_tag = &tag;
                best_added = added;
                best_total = games.size();
            }
        }
        if (best_tag == nullptr) break;
        double gain = static_cast<double>(best_added) / static_cast<double>(n);
        if (gain < min_marginal_gain) break;

        picked.push_back(*best_tag);
        for (std::size_t i : members[*best_tag]) covered[i] = 1;
        members.erase(*best_tag);
    }
    return picked;
}

CapitalTagSet discover_all_ranks(const Corpus& corpus, int n_ranks, double min_marginal_gain) {
    if (n_ranks < 1) throw Error(ErrorKind::usage, "n_ranks must be >= 1");
    CapitalTagSet set;
    std::vector<std::string> excluded;
    for (int r = 0; r < n_ranks; ++r) {
        auto rank = discover_capital_rank(corpus, excluded, min_marginal_gain);
        excluded.insert(excluded.end(), rank.begin(), rank.end());
        set.ranks.push_back(std::move(rank));
        set.lambdas.push_back(1.0);
    }
    return set;
}

nlohmann::json to_json(const CapitalTagSet& set) {
    nlohmann::json j;
    j["ranks"] = set.ranks;
    j["lambdas"] = set.lambdas;
    return j;
}

CapitalTagSet capital_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("ranks") || !j.contains("lambdas"))
        throw Error(ErrorKind::parse, "capital tag set JSON must have \"ranks\" and \"lambdas\"");
    CapitalTagSet set;
    try {
        set.ranks = j["ranks"].get<std::vector<std::vector<std::string>>>();
        set.lambdas = j["lambdas"].get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse, std::string("invalid capital tag set JSON: ") + e.what());
    }
    set.validate();
    return set;
}

}  // namespace tagclust
