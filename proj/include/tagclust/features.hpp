#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tagclust/capital.hpp"
#include "tagclust/corpus.hpp"

namespace tagclust {

// The four feature pipelines.
enum class PipelineKind {
    binary_all_tags,    // 1 if assigned, 0 otherwise, over all tags
    priority_all_tags,  // vote share n/n_max, over all tags
    priority_capital,   // vote share, capital tag columns only
    weighted_capital,   // per-rank l2-normalised vote shares scaled by lambda_i
};

const char* to_string(PipelineKind kind);
std::optional<PipelineKind> pipeline_from_name(std::string_view name);
std::vector<std::string> pipeline_names();  // all four, fixed order

struct PipelineSpec {
    PipelineKind kind = PipelineKind::weighted_capital;
    std::optional<CapitalTagSet> capital;  // required iff the kind uses capital tags

    bool needs_capital() const {
        return kind == PipelineKind::priority_capital || kind == PipelineKind::weighted_capital;
    }
    void validate() const;
};

// Dense |rows| x |columns| matrix over the tagged games of a corpus.
// Rows hold game indices into the corpus; games whose entire feature row is
// zero are listed in excluded_games instead.
struct FeatureMatrix {
    std::vector<std::size_t> rows;
    std::vector<std::string> columns;
    std::vector<double> values;  // row-major
    PipelineSpec pipeline;
    std::vector<std::size_t> excluded_games;
    std::vector<std::size_t> rank_offsets;  // capital pipelines: column offset per rank + end

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return columns.size(); }
    double at(std::size_t r, std::size_t c) const { return values[r * columns.size() + c]; }
    std::span<const double> row(std::size_t r) const {
        return {values.data() + r * columns.size(), columns.size()};
    }
};

FeatureMatrix build_features(const Corpus& corpus, const PipelineSpec& spec);

// Contiguous column range [first, last) of the rank-i capital tags, 1-based.
// Only valid for capital pipelines.
std::pair<std::size_t, std::size_t> column_block(const FeatureMatrix& fm, int rank);

// CSV with header "app_id,<tag>,..." and one row per retained game.
void export_features_csv(const FeatureMatrix& fm, const Corpus& corpus, std::ostream& out);

}  // namespace tagclust
