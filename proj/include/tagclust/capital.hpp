#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tagclust/corpus.hpp"

namespace tagclust {

// Ordered ranks of capital tags. Rank i is a short list of tags that jointly
// cover most games once the tags of ranks < i are removed, plus one scaling
// factor per rank used by the weighted feature pipeline.
struct CapitalTagSet {
    std::vector<std::vector<std::string>> ranks;
    std::vector<double> lambdas;  // one per rank, all > 0

    std::size_t rank_count() const { return ranks.size(); }
    std::size_t total_tags() const;
    std::vector<std::string> all_tags() const;  // concatenated rank by rank

    // Throws on duplicate tags across ranks, lambda/rank count mismatch, or
    // non-positive lambdas.
    void validate() const;

    bool operator==(const CapitalTagSet&) const = default;
};

// The shipped default set: three ranks of sizes 7, 7 and 17 with scaling
// factors 0.25, 0.7 and 1.
CapitalTagSet default_capital_tags();

// Fraction of games in the corpus carrying at least one of `tags`.
// An empty corpus counts as fully covered.
double coverage(const Corpus& corpus, const std::vector<std::string>& tags);

// Greedy maximum-coverage selection over the corpus tag universe minus
// `excluded`. Stops when the best remaining tag would add less than
// min_marginal_gain (a fraction of the corpus) to the covered share.
// Ties break toward the tag assigned to more games, then the
// lexicographically smaller name. Returns tags in selection order.
std::vector<std::string> discover_capital_rank(const Corpus& corpus,
                                               const std::vector<std::string>& excluded,
                                               double min_marginal_gain);

// Runs discover_capital_rank n_ranks times, excluding all previously chosen
// tags each round. Lambdas default to 1 per rank.
CapitalTagSet discover_all_ranks(const Corpus& corpus, int n_ranks, double min_marginal_gain);

// JSON form: {"ranks": [[str]], "lambdas": [number]}
nlohmann::json to_json(const CapitalTagSet& set);
CapitalTagSet capital_from_json(const nlohmann::json& j);

}  // namespace tagclust
