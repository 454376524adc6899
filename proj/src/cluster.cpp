#include "tagclust/cluster.hpp"

#include <cmath>
#include <limits>

#include "tagclust/detail/rng.hpp"

namespace tagclust {

namespace {

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

struct LloydResult {
    std::vector<int> assign;
    std::vector<double> centroids;  // k x dim
    double inertia = 0.0;
    int iterations = 0;
    std::vector<double> history;
};

// One seeded restart: k-means++ init, then Lloyd until the centroid shift is
// small relative to the centroid norm or max_iter is hit.
LloydResult lloyd_run(const FeatureMatrix& fm, int k, int max_iter, double tol,
                      std::uint64_t seed) {
    const std::size_t n = fm.row_count();
    const std::size_t dim = fm.col_count();
    std::mt19937_64 rng(seed);

    LloydResult res;
    res.centroids.assign(static_cast<std::size_t>(k) * dim, 0.0);
    auto centroid = [&](int c) {
        return std::span<double>(res.centroids.data() + static_cast<std::size_t>(c) * dim, dim);
    };
    auto set_centroid = [&](int c, std::span<const double> v) {
        std::copy(v.begin(), v.end(), centroid(c).begin());
    };

    // k-means++ seeding
    set_centroid(0, fm.row(detail::uniform_index(rng, n)));
    std::vector<double> d2(n);
    for (std::size_t i = 0; i < n; ++i) d2[i] = sq_dist(fm.row(i), centroid(0));
    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        for (double d : d2) total += d;
        std::size_t pick;
        if (total <= 0.0) {
            pick = detail::uniform_index(rng, n);  // all points coincide with a centroid
        } else {
            double r = detail::uniform_double(rng) * total;
            double cum = 0.0;
            pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                if (d2[i] <= 0.0) continue;
                cum += d2[i];
                if (cum > r) {
                    pick = i;
                    break;
                }
            }
        }
        set_centroid(c, fm.row(pick));
        for (std::size_t i = 0; i < n; ++i)
            d2[i] = std::min(d2[i], sq_dist(fm.row(i), centroid(c)));
    }

    res.assign.assign(n, 0);
    std::vector<std::size_t> sizes(k, 0);

    auto assign_all = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            int best = 0;
            double best_d = sq_dist(fm.row(i), centroid(0));
            for (int c = 1; c < k; ++c) {
                double d = sq_dist(fm.row(i), centroid(c));
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            res.assign[i] = best;
        }
        std::fill(sizes.begin(), sizes.end(), 0);
        for (int a : res.assign) ++sizes[a];
    };

    // Relocate each empty cluster's centroid onto the point farthest from its
    // current centroid (only stealing from clusters that keep >= 1 member).
    auto repair_empty = [&] {
        for (int c = 0; c < k; ++c) {
            if (sizes[c] > 0) continue;
            double worst = -1.0;
            std::size_t worst_i = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (sizes[res.assign[i]] < 2) continue;
                double d = sq_dist(fm.row(i), centroid(res.assign[i]));
                if (d > worst) {
                    worst = d;
                    worst_i = i;
                }
            }
            if (worst_i == n) continue;  // nothing to steal (k > distinct points)
            --sizes[res.assign[worst_i]];
            res.assign[worst_i] = c;
            sizes[c] = 1;
            set_centroid(c, fm.row(worst_i));
        }
    };

    auto compute_inertia = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += sq_dist(fm.row(i), centroid(res.assign[i]));
        return s;
    };

    std::vector<double> next(res.centroids.size());
    for (int iter = 1; iter <= max_iter; ++iter) {
        res.iterations = iter;
        assign_all();
        repair_empty();

        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double* dst = next.data() + static_cast<std::size_t>(res.assign[i]) * dim;
            auto r = fm.row(i);
            for (std::size_t j = 0; j < dim; ++j) dst[j] += r[j];
        }
        for (int c = 0; c < k; ++c) {
            double* dst = next.data() + static_cast<std::size_t>(c) * dim;
            if (sizes[c] == 0) {  // keep the relocated centroid as is
                auto cur = centroid(c);
                std::copy(cur.begin(), cur.end(), dst);
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) dst[j] /= static_cast<double>(sizes[c]);
        }

        double shift2 = 0.0;
        double norm2 = 0.0;
        for (std::size_t i = 0; i < res.centroids.size(); ++i) {
            double d = next[i] - res.centroids[i];
            shift2 += d * d;
            norm2 += res.centroids[i] * res.centroids[i];
        }
        res.centroids.swap(next);

        res.history.push_back(compute_inertia());
        if (std::sqrt(shift2) <= tol * std::sqrt(std::max(norm2, 1e-300))) break;
    }

    // Make assignments consistent with the final centroids.
    assign_all();
    repair_empty();
    res.inertia = compute_inertia();
    res.history.push_back(res.inertia);
    return res;
}

}  // namespace

Partition kmeans(const FeatureMatrix& fm, const KMeansConfig& cfg) {
    if (cfg.k < 1) throw Error(ErrorKind::usage, "k must be >= 1");
    if (cfg.n_init < 1) throw Error(ErrorKind::usage, "n_init must be >= 1");
    if (cfg.max_iter < 1) throw Error(ErrorKind::usage, "max_iter must be >= 1");
    if (cfg.tol < 0.0) throw Error(ErrorKind::usage, "tol must be >= 0");
    const std::size_t n = fm.row_count();
    if (n < static_cast<std::size_t>(cfg.k))
        throw Error(ErrorKind::infeasible, "k=" + std::to_string(cfg.k) +
                                               " exceeds the feature row count " +
                                               std::to_string(n));

    LloydResult best;
    bool have_best = false;
    for (int r = 0; r < cfg.n_init; ++r) {
        LloydResult run = lloyd_run(fm, cfg.k, cfg.max_iter, cfg.tol,
                                    cfg.seed + static_cast<std::uint64_t>(r));
        if (!have_best || run.inertia < best.inertia) {
            best = std::move(run);
            have_best = true;
        }
    }

    Partition p;
    p.k = cfg.k;
    p.assignments = std::move(best.assign);
    p.centroids = std::move(best.centroids);
    p.inertia = best.inertia;
    p.iterations_run = best.iterations;
    p.seed = cfg.seed;
    p.inertia_history = std::move(best.history);
    return p;
}

std::vector<std::pair<int, Partition>> sweep_k(const FeatureMatrix& fm, int k_lo, int k_hi,
                                               const KMeansConfig& cfg) {
    if (k_lo < 1 || k_hi < k_lo)
        throw Error(ErrorKind::usage, "invalid k range [" + std::to_string(k_lo) + ", " +
                                          std::to_string(k_hi) + "]");
    std::vector<std::pair<int, Partition>> out;
    out.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (int k = k_lo; k <= k_hi; ++k) {
        KMeansConfig c = cfg;
        c.k = k;
        out.emplace_back(k, kmeans(fm, c));
    }
    return out;
}

int elbow_k(const std::vector<std::pair<int, double>>& curve) {
    if (curve.size() < 3)
        throw Error(ErrorKind::infeasible, "elbow selection needs at least 3 curve points");
    for (std::size_t i = 1; i < curve.size(); ++i)
        if (curve[i].first <= curve[i - 1].first)
            throw Error(ErrorKind::usage, "curve k values must be strictly increasing");

    const double x0 = curve.front().first, y0 = curve.front().second;
    const double dx = curve.back().first - x0;
    const double dy = curve.back().second - y0;

    // Perpendicular distance to the end-to-end chord, up to the constant
    // chord length; strict > keeps the smallest k on ties.
    double best = -1.0;
    std::size_t best_i = 1;
    for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
        double cross = dx * (curve[i].second - y0) - (curve[i].first - x0) * dy;
        double d = std::abs(cross);
        if (d > best) {
            best = d;
            best_i = i;
        }
    }
    return curve[best_i].first;
}

std::vector<std::vector<std::size_t>> clusters_by_game(const FeatureMatrix& fm,
                                                       const Partition& partition) {
    std::vector<std::vector<std::size_t>> clusters(partition.k);
    for (std::size_t r = 0; r < fm.row_count(); ++r)
        clusters[partition.assignments[r]].push_back(fm.rows[r]);
    return clusters;
}

nlohmann::json to_json(const Partition& partition) {
    nlohmann::json j;
    j["k"] = partition.k;
    j["assignments"] = partition.assignments;
    j["inertia"] = partition.inertia;
    j["seed"] = partition.seed;
    return j;
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("assignments") ||
        !j.contains("inertia") || !j.contains("seed"))
        throw Error(ErrorKind::parse, "partition JSON must have k, assignments, inertia, seed");
    Partition p;
    try {
        p.k = j["k"].get<int>();
        p.assignments = j["assignments"].get<std::vector<int>>();
        p.inertia = j["inertia"].get<double>();
        p.seed = j["seed"].get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse, std::string("invalid partition JSON: ") + e.what());
    }
    return p;
}

}  // namespace tagclust
