#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tagclust/features.hpp"

namespace tagclust {

struct KMeansConfig {
    int k = 8;
    int n_init = 10;    // random restarts; the lowest-inertia one wins
    int max_iter = 300;
    double tol = 1e-4;  // relative Frobenius centroid shift for convergence
    std::uint64_t seed = 0;
};

struct Partition {
    int k = 0;
    std::vector<int> assignments;   // per feature-matrix row, in [0, k)
    std::vector<double> centroids;  // k x dim, row-major
    double inertia = 0.0;
    int iterations_run = 0;
    std::uint64_t seed = 0;
    // Inertia after each Lloyd iteration of the winning restart. Diagnostic;
    // never serialized.
    std::vector<double> inertia_history;
};

// k-means++ seeding followed by Lloyd iterations, cfg.n_init times with
// restart seeds cfg.seed + restart index; returns the restart with lowest
// inertia. Empty clusters are refilled by relocating the centroid onto the
// point currently farthest from its own centroid. Deterministic for fixed
// (fm, cfg).
Partition kmeans(const FeatureMatrix& fm, const KMeansConfig& cfg);

// One partition per k in [k_lo, k_hi], all using cfg's seed and options.
std::vector<std::pair<int, Partition>> sweep_k(const FeatureMatrix& fm, int k_lo, int k_hi,
                                               const KMeansConfig& cfg);

// The k whose curve point lies farthest from the chord joining the first and
// last points. Ties go to the smaller k. Curve needs >= 3 points with
// strictly increasing k.
int elbow_k(const std::vector<std::pair<int, double>>& curve);

// Groups feature-matrix rows by assigned cluster; entry i holds the corpus
// game indices of cluster i, ascending.
std::vector<std::vector<std::size_t>> clusters_by_game(const FeatureMatrix& fm,
                                                       const Partition& partition);

// JSON form: {"k": int, "assignments": [int], "inertia": number, "seed": int}
nlohmann::json to_json(const Partition& partition);
Partition partition_from_json(const nlohmann::json& j);

}  // namespace tagclust
