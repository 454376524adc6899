#include "tagclust/features.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "tagclust/detail/format.hpp"

namespace tagclust {

const char* to_string(PipelineKind kind) {
    switch (kind) {
        case PipelineKind::binary_all_tags: return "binary-all-tags";
        case PipelineKind::priority_all_tags: return "priority-all-tags";
        case PipelineKind::priority_capital: return "priority-capital";
        case PipelineKind::weighted_capital: return "weighted-capital";
    }
    return "unknown";
}

std::optional<PipelineKind> pipeline_from_name(std::string_view name) {
    if (name == "binary-all-tags") return PipelineKind::binary_all_tags;
    if (name == "priority-all-tags") return PipelineKind::priority_all_tags;
    if (name == "priority-capital") return PipelineKind::priority_capital;
    if (name == "weighted-capital") return PipelineKind::weighted_capital;
    return std::nullopt;
}

std::vector<std::string> pipeline_names() {
    return {"binary-all-tags", "priority-all-tags", "priority-capital", "weighted-capital"};
}

void PipelineSpec::validate() const {
    if (needs_capital() && !capital)
        throw Error(ErrorKind::usage, std::string(to_string(kind)) +
                                          " pipeline requires a capital tag set");
    if (!needs_capital() && capital)
        throw Error(ErrorKind::usage, std::string(to_string(kind)) +
                                          " pipeline does not take a capital tag set");
}

FeatureMatrix build_features(const Corpus& corpus, const PipelineSpec& spec) {
    spec.validate();

    FeatureMatrix fm;
    fm.pipeline = spec;

    if (spec.needs_capital()) {
        const CapitalTagSet& cs = *spec.capital;
        cs.validate();
        fm.rank_offsets.push_back(0);
        for (const auto& rank : cs.ranks) {
            fm.columns.insert(fm.columns.end(), rank.begin(), rank.end());
            fm.rank_offsets.push_back(fm.columns.size());
        }
    } else {
        fm.columns = corpus.tag_universe();  // already lexicographic
    }

    std::unordered_map<std::string, std::size_t> col_of;
    col_of.reserve(fm.columns.size());
    for (std::size_t c = 0; c < fm.columns.size(); ++c) col_of[fm.columns[c]] = c;

    const bool binary = spec.kind == PipelineKind::binary_all_tags;
    const bool weighted = spec.kind == PipelineKind::weighted_capital;
    const std::size_t dim = fm.columns.size();

    std::vector<double> row(dim);
    for (std::size_t gi : corpus.tagged_indices()) {
        const GameRecord& g = corpus.games()[gi];
        std::fill(row.begin(), row.end(), 0.0);

        std::int64_t n_max = 0;
        for (const auto& [tag, votes] : g.tag_votes) n_max = std::max(n_max, votes);

        bool nonzero = false;
        for (const auto& [tag, votes] : g.tag_votes) {
            auto it = col_of.find(tag);
            if (it == col_of.end()) continue;
            row[it->second] = binary ? 1.0
                                     : static_cast<double>(votes) / static_cast<double>(n_max);
            nonzero = true;
        }

        if (weighted && nonzero) {
            const auto& lambdas = spec.capital->lambdas;
            for (std::size_t r = 0; r + 1 < fm.rank_offsets.size(); ++r) {
                double sumsq = 0.0;
                for (std::size_t c = fm.rank_offsets[r]; c < fm.rank_offsets[r + 1]; ++c)
                    sumsq += row[c] * row[c];
                if (sumsq == 0.0) continue;  // no capital tag of this rank: leave zeros
                double scale = lambdas[r] / std::sqrt(sumsq);
                for (std::size_t c = fm.rank_offsets[r]; c < fm.rank_offsets[r + 1]; ++c)
                    row[c] *= scale;
            }
        }

        if (!nonzero) {
            fm.excluded_games.push_back(gi);
        } else {
            fm.rows.push_back(gi);
            fm.values.insert(fm.values.end(), row.begin(), row.end());
        }
    }
    return fm;
}

std::pair<std::size_t, std::size_t> column_block(const FeatureMatrix& fm, int rank) {
    if (fm.rank_offsets.empty())
        throw Error(ErrorKind::usage, "column_block requires a capital pipeline");
    const int n_ranks = static_cast<int>(fm.rank_offsets.size()) - 1;
    if (rank < 1 || rank > n_ranks)
        throw Error(ErrorKind::usage, "rank " + std::to_string(rank) + " out of range [1, " +
                                          std::to_string(n_ranks) + "]");
    return {fm.rank_offsets[rank - 1], fm.rank_offsets[rank]};
}

void export_features_csv(const FeatureMatrix& fm, const Corpus& corpus, std::ostream& out) {
    out << "app_id";
    for (const auto& tag : fm.columns) out << ',' << detail::csv_escape(tag);
    out << '\n';
    for (std::size_t r = 0; r < fm.row_count(); ++r) {
        out << corpus.games()[fm.rows[r]].app_id;
        for (double v : fm.row(r)) out << ',' << detail::fmt_full(v);
        out << '\n';
    }
}

}  // namespace tagclust
