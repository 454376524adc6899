#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "tagclust/corpus.hpp"

namespace tagclust {

// phi(x) = 2 * arcsin(sqrt(x)), the arcsine transform behind Cohen's h.
double phi_arcsine(double p);

// Cohen's h between two proportions: phi(p1) - phi(p2), in [-pi, pi].
// Throws for proportions outside [0, 1].
double cohens_h(double p1, double p2);

// How one tag splits between a cluster and the full set it came from.
struct TagProportion {
    std::string tag;
    double p_in_cluster = 0.0;
    double p_in_set = 0.0;
    double h = 0.0;  // cohens_h(p_in_cluster, p_in_set)
};

struct ClusterNaming {
    int cluster_index = 0;
    // Top tags by h, descending. Ties prefer the higher in-cluster
    // proportion, then the lexicographically smaller tag.
    std::vector<std::pair<std::string, double>> name_tags;
    double naming_score = 0.0;  // h of the top tag
    std::size_t size = 0;
};

struct ClusteringReport {
    std::vector<ClusterNaming> clusters;
    double total_naming_score = 0.0;  // size-weighted average of cluster scores
    std::size_t set_size = 0;
    std::string pipeline;  // informational label, may be empty
    int k = 0;
    std::size_t excluded_games = 0;
};

// One entry per tag assigned to >= 1 game of the cluster, with proportions
// relative to the cluster and to `set`, sorted by tag name. The proportions
// use binary assignment over all tags of the corpus, never restricted to
// capital tags. Throws on an empty cluster.
std::vector<TagProportion> tag_proportions(const Corpus& corpus,
                                           std::span<const std::size_t> cluster,
                                           std::span<const std::size_t> set);
// Same, with the whole corpus as the reference set.
std::vector<TagProportion> tag_proportions(const Corpus& corpus,
                                           std::span<const std::size_t> cluster);

// Top-m tags by h plus the cluster's naming score (the top h). Throws when
// the cluster is empty or carries no tags at all.
ClusterNaming name_cluster(const Corpus& corpus, std::span<const std::size_t> cluster,
                           std::span<const std::size_t> set, int m);
ClusterNaming name_cluster(const Corpus& corpus, std::span<const std::size_t> cluster, int m);

// Names every cluster against the set S = union of the clusters and returns
// the size-weighted average naming score. A single cluster scores exactly 0.
// Each cluster's name_tags carries at least the top three tags (when they
// exist) for diagnostics, regardless of m.
ClusteringReport score_clustering(const Corpus& corpus,
                                  const std::vector<std::vector<std::size_t>>& clusters, int m);

nlohmann::json to_json(const ClusteringReport& report);

// Display name per cluster: the top tag, widened to `width` tags joined with
// "-". When two clusters share the same top tag and width is 1, both are
// widened to two tags to keep names distinctive.
std::vector<std::string> display_names(const ClusteringReport& report, int width);

// Per-cluster listing ordered by naming score: display name, score to two
// decimals, size, top tags, and the most-reviewed member titles.
std::string render_report_text(const Corpus& corpus,
                               const std::vector<std::vector<std::size_t>>& clusters,
                               const ClusteringReport& report, int top_titles);

}  // namespace tagclust
