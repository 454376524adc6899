#include "tagclust/naming.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "tagclust/detail/format.hpp"

namespace tagclust {

double phi_arcsine(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(ErrorKind::usage, "proportion " + std::to_string(p) + " outside [0, 1]");
    return 2.0 * std::asin(std::sqrt(p));
}

double cohens_h(double p1, double p2) { return phi_arcsine(p1) - phi_arcsine(p2); }

namespace {

using TagCounts = std::map<std::string, std::size_t>;

TagCounts count_tags(const Corpus& corpus, std::span<const std::size_t> indices) {
    TagCounts counts;
    for (std::size_t gi : indices) {
        if (gi >= corpus.size())
            throw Error(ErrorKind::usage, "game index " + std::to_string(gi) + " out of range");
        for (const auto& [tag, votes] : corpus.games()[gi].tag_votes) ++counts[tag];
    }
    return counts;
}

std::vector<TagProportion> proportions_from_counts(const TagCounts& cluster_counts,
                                                   std::size_t cluster_size,
                                                   const TagCounts& set_counts,
                                                   std::size_t set_size) {
    std::vector<TagProportion> out;
    out.reserve(cluster_counts.size());
    for (const auto& [tag, count] : cluster_counts) {
        TagProportion tp;
        tp.tag = tag;
        tp.p_in_cluster = static_cast<double>(count) / static_cast<double>(cluster_size);
        auto it = set_counts.find(tag);
        std::size_t set_count = it == set_counts.end() ? 0 : it->second;
        tp.p_in_set = static_cast<double>(set_count) / static_cast<double>(set_size);
        tp.h = cohens_h(tp.p_in_cluster, tp.p_in_set);
        out.push_back(std::move(tp));
    }
    return out;
}

ClusterNaming naming_from_proportions(std::vector<TagProportion> props, std::size_t cluster_size,
                                      int m) {
    if (m < 1) throw Error(ErrorKind::usage, "name width m must be >= 1");
    if (props.empty())
        throw Error(ErrorKind::data, "cluster has no tags; nothing to name it after");
    std::sort(props.begin(), props.end(), [](const TagProportion& a, const TagProportion& b) {
        if (a.h != b.h) return a.h > b.h;
        if (a.p_in_cluster != b.p_in_cluster) return a.p_in_cluster > b.p_in_cluster;
        return a.tag < b.tag;
    });
    ClusterNaming naming;
    naming.size = cluster_size;
    naming.naming_score = props.front().h;
    std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(m), props.size());
    naming.name_tags.reserve(take);
    for (std::size_t i = 0; i < take; ++i)
        naming.name_tags.emplace_back(props[i].tag, props[i].h);
    return naming;
}

}  // namespace

std::vector<TagProportion> tag_proportions(const Corpus& corpus,
                                           std::span<const std::size_t> cluster,
                                           std::span<const std::size_t> set) {
    if (cluster.empty()) throw Error(ErrorKind::data, "cannot score an empty cluster");
    if (set.empty()) throw Error(ErrorKind::data, "reference set is empty");
    return proportions_from_counts(count_tags(corpus, cluster), cluster.size(),
                                   count_tags(corpus, set), set.size());
}

std::vector<TagProportion> tag_proportions(const Corpus& corpus,
                                           std::span<const std::size_t> cluster) {
    std::vector<std::size_t> all(corpus.size());
    std::iota(all.begin(), all.end(), 0);
    return tag_proportions(corpus, cluster, all);
}

ClusterNaming name_cluster(const Corpus& corpus, std::span<const std::size_t> cluster,
                           std::span<const std::size_t> set, int m) {
    return naming_from_proportions(tag_proportions(corpus, cluster, set), cluster.size(), m);
}

ClusterNaming name_cluster(const Corpus& corpus, std::span<const std::size_t> cluster, int m) {
    return naming_from_proportions(tag_proportions(corpus, cluster), cluster.size(), m);
}

ClusteringReport score_clustering(const Corpus& corpus,
                                  const std::vector<std::vector<std::size_t>>& clusters, int m) {
    if (clusters.empty()) throw Error(ErrorKind::usage, "clustering has no clusters");
    if (m < 1) throw Error(ErrorKind::usage, "name width m must be >= 1");

    std::vector<std::size_t> set;
    for (const auto& c : clusters) {
        if (c.empty()) throw Error(ErrorKind::data, "cannot score an empty cluster");
        set.insert(set.end(), c.begin(), c.end());
    }
    const std::size_t set_size = set.size();
    TagCounts set_counts = count_tags(corpus, set);

    const int width = std::max(m, 3);  // keep top-3 for diagnostics
    ClusteringReport report;
    report.k = static_cast<int>(clusters.size());
    report.set_size = set_size;

    double weighted_sum = 0.0;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        auto props = proportions_from_counts(count_tags(corpus, clusters[i]), clusters[i].size(),
                                             set_counts, set_size);
        ClusterNaming naming = naming_from_proportions(std::move(props), clusters[i].size(), width);
        naming.cluster_index = static_cast<int>(i);
        weighted_sum += naming.naming_score * static_cast<double>(naming.size);
        report.clusters.push_back(std::move(naming));
    }
    report.total_naming_score = weighted_sum / static_cast<double>(set_size);
    return report;
}

nlohmann::json to_json(const ClusteringReport& report) {
    nlohmann::json j;
    j["k"] = report.k;
    j["pipeline"] = report.pipeline;
    j["set_size"] = report.set_size;
    j["excluded_games"] = report.excluded_games;
    j["total_naming_score"] = report.total_naming_score;
    nlohmann::json clusters = nlohmann::json::array();
    for (const auto& c : report.clusters) {
        nlohmann::json jc;
        jc["cluster"] = c.cluster_index;
        jc["size"] = c.size;
        jc["naming_score"] = c.naming_score;
        nlohmann::json tags = nlohmann::json::array();
        for (const auto& [tag, h] : c.name_tags) tags.push_back({{"tag", tag}, {"h", h}});
        jc["name_tags"] = std::move(tags);
        clusters.push_back(std::move(jc));
    }
    j["clusters"] = std::move(clusters);
    return j;
}

std::vector<std::string> display_names(const ClusteringReport& report, int width) {
    if (width < 1) throw Error(ErrorKind::usage, "name width must be >= 1");

    std::unordered_map<std::string, int> top_tag_uses;
    for (const auto& c : report.clusters)
        if (!c.name_tags.empty()) ++top_tag_uses[c.name_tags.front().first];

    std::vector<std::string> names;
    names.reserve(report.clusters.size());
    for (const auto& c : report.clusters) {
        int w = width;
        if (w == 1 && !c.name_tags.empty() && top_tag_uses[c.name_tags.front().first] > 1)
            w = 2;  // widen duplicated names so clusters stay tellable apart
        std::string name;
        for (int i = 0; i < w && i < static_cast<int>(c.name_tags.size()); ++i) {
            if (i > 0) name += '-';
            name += c.name_tags[i].first;
        }
        names.push_back(std::move(name));
    }
    return names;
}

std::string render_report_text(const Corpus& corpus,
                               const std::vector<std::vector<std::size_t>>& clusters,
                               const ClusteringReport& report, int top_titles) {
    std::ostringstream out;
    out << "pipeline: " << (report.pipeline.empty() ? "(unspecified)" : report.pipeline)
        << "  k: " << report.k << "  clustered games: " << report.set_size
        << "  excluded (no feature): " << report.excluded_games << '\n';
    out << "total naming score: " << detail::fmt_fixed2(report.total_naming_score) << "\n\n";

    auto names = display_names(report, 1);

    std::vector<std::size_t> order(report.clusters.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        double sa = report.clusters[a].naming_score;
        double sb = report.clusters[b].naming_score;
        if (sa != sb) return sa > sb;
        return a < b;
    });

    for (std::size_t idx : order) {
        const ClusterNaming& c = report.clusters[idx];
        out << names[idx] << " (" << detail::fmt_fixed2(c.naming_score) << "): " << c.size
            << " games\n";

        out << "  top tags:";
        for (std::size_t i = 0; i < c.name_tags.size(); ++i) {
            out << (i == 0 ? " " : ", ") << c.name_tags[i].first << " ("
                << detail::fmt_fixed2(c.name_tags[i].second) << ")";
        }
        out << '\n';

        if (top_titles > 0 && idx < clusters.size()) {
            std::vector<std::size_t> members = clusters[idx];
            std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
                const auto& ga = corpus.games()[a];
                const auto& gb = corpus.games()[b];
                if (ga.review_count != gb.review_count) return ga.review_count > gb.review_count;
                return ga.app_id < gb.app_id;
            });
            out << "  most reviewed:";
            std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(top_titles),
                                                     members.size());
            for (std::size_t i = 0; i < take; ++i)
                out << (i == 0 ? " " : "; ") << corpus.games()[members[i]].title;
            out << '\n';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace tagclust
