#include "momo/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace momo {

namespace {

double squared_distance(const DecisionVector& a, const DecisionVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

std::vector<DecisionVector> seed_centroids(std::span<const DecisionVector> points, std::size_t k,
                                           RandomStream& rng) {
    const std::size_t n = points.size();
    std::vector<DecisionVector> centroids;
    centroids.reserve(k);
    centroids.push_back(points[rng.uniform_index(n)]);

    std::vector<double> nearest(n);
    for (std::size_t i = 0; i < n; ++i) {
        nearest[i] = squared_distance(points[i], centroids.front());
    }
    while (centroids.size() < k) {
        double total = 0.0;
        for (double d : nearest) {
            total += d;
        }
        std::size_t pick = 0;
        if (total > 0.0) {
            const double target = rng.uniform() * total;
            double acc = 0.0;
            pick = n;
            for (std::size_t i = 0; i < n; ++i) {
                acc += nearest[i];
                if (target < acc && nearest[i] > 0.0) {
                    pick = i;
                    break;
                }
            }
            if (pick == n) {
                // Rounding pushed target past the last positive weight.
                for (std::size_t i = n; i-- > 0;) {
                    if (nearest[i] > 0.0) {
                        pick = i;
                        break;
                    }
                }
            }
        } else {
            pick = rng.uniform_index(n);
        }
        centroids.push_back(points[pick]);
        for (std::size_t i = 0; i < n; ++i) {
            nearest[i] = std::min(nearest[i], squared_distance(points[i], centroids.back()));
        }
    }
    return centroids;
}

std::vector<std::size_t> assign(std::span<const DecisionVector> points, const std::vector<DecisionVector>& centroids) {
    std::vector<std::size_t> labels(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t label = 0;
        for (std::size_t c = 0; c < centroids.size(); ++c) {
            const double d = squared_distance(points[i], centroids[c]);
            if (d < best) {
                best = d;
                label = c;
            }
        }
        labels[i] = label;
    }
    return labels;
}

void repair_empty(std::span<const DecisionVector> points, std::vector<std::size_t>& labels,
                  std::vector<DecisionVector>& centroids) {
    const std::size_t k = centroids.size();
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t l : labels) {
        ++counts[l];
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] != 0) {
            continue;
        }
        std::size_t donor = points.size();
        double worst = -1.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (counts[labels[i]] < 2) {
                continue;
            }
            const double d = squared_distance(points[i], centroids[labels[i]]);
            if (d > worst) {
                worst = d;
                donor = i;
            }
        }
        // k <= n guarantees some cluster holds two points while one is empty.
        --counts[labels[donor]];
        labels[donor] = c;
        counts[c] = 1;
        centroids[c] = points[donor];
    }
}

std::vector<DecisionVector> means(std::span<const DecisionVector> points, const std::vector<std::size_t>& labels,
                                  std::size_t k) {
    const std::size_t d = points.front().size();
    std::vector<DecisionVector> out(k, DecisionVector(d, 0.0));
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        ++counts[labels[i]];
        for (std::size_t j = 0; j < d; ++j) {
            out[labels[i]][j] += points[i][j];
        }
    }
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t j = 0; j < d; ++j) {
            out[c][j] /= static_cast<double>(counts[c]);
        }
    }
    return out;
}

double inertia(std::span<const DecisionVector> points, const std::vector<std::size_t>& labels,
               const std::vector<DecisionVector>& centroids) {
    double s = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        s += squared_distance(points[i], centroids[labels[i]]);
    }
    return s;
}

}  // namespace

std::vector<DecisionVector> normalize_points(std::span<const DecisionVector> points) {
    std::vector<DecisionVector> out(points.begin(), points.end());
    if (points.empty()) {
        return out;
    }
    const std::size_t d = points.front().size();
    for (std::size_t j = 0; j < d; ++j) {
        double lo = points.front()[j];
        double hi = lo;
        for (const auto& p : points) {
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
        const double range = hi - lo;
        for (auto& p : out) {
            p[j] = range > 0.0 ? std::clamp((p[j] - lo) / range, 0.0, 1.0) : 0.0;
        }
    }
    return out;
}

std::vector<std::size_t> Partition::sizes() const {
    std::vector<std::size_t> out(k, 0);
    for (std::size_t l : assignment) {
        ++out[l];
    }
    return out;
}

bool Partition::has_singleton() const {
    const auto s = sizes();
    return std::find(s.begin(), s.end(), std::size_t{1}) != s.end();
}

DistanceMatrix::DistanceMatrix(std::span<const DecisionVector> points) : n_(points.size()), d_(n_ * n_, 0.0) {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            const double d = std::sqrt(squared_distance(points[i], points[j]));
            d_[i * n_ + j] = d;
            d_[j * n_ + i] = d;
        }
    }
}

Partition kmeans(std::span<const DecisionVector> points, std::size_t k, RandomStream& rng,
                 const KMeansOptions& options, std::vector<double>* inertia_trace) {
    if (k == 0 || k > points.size()) {
        throw std::invalid_argument("kmeans: k must lie in [1, number of points]");
    }
    std::vector<DecisionVector> centroids = seed_centroids(points, k, rng);
    std::vector<std::size_t> labels = assign(points, centroids);
    repair_empty(points, labels, centroids);

    for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
        centroids = means(points, labels, k);
        if (inertia_trace) {
            inertia_trace->push_back(inertia(points, labels, centroids));
        }
        auto next = assign(points, centroids);
        repair_empty(points, next, centroids);
        if (next == labels) {
            break;
        }
        labels = std::move(next);
    }

    Partition p;
    p.k = k;
    p.centroids = means(points, labels, k);
    p.assignment = std::move(labels);
    return p;
}

double silhouette_score(const DistanceMatrix& distances, const Partition& partition) {
    if (partition.k < 2) {
        throw std::invalid_argument("silhouette_score: need at least 2 clusters");
    }
    const std::size_t n = distances.size();
    if (partition.assignment.size() != n) {
        throw std::invalid_argument("silhouette_score: partition/point count mismatch");
    }
    const auto sizes = partition.sizes();
    std::vector<double> sums(partition.k);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t own = partition.assignment[i];
        if (sizes[own] <= 1) {
            continue;
        }
        std::fill(sums.begin(), sums.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            sums[partition.assignment[j]] += distances(i, j);
        }
        const double a = sums[own] / static_cast<double>(sizes[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < partition.k; ++c) {
            if (c != own && sizes[c] > 0) {
                b = std::min(b, sums[c] / static_cast<double>(sizes[c]));
            }
        }
        if (!std::isfinite(b)) {
            continue;
        }
        const double denom = std::max(a, b);
        if (denom > 0.0) {
            total += (b - a) / denom;
        }
    }
    return total / static_cast<double>(n);
}

double silhouette_score(std::span<const DecisionVector> points, const Partition& partition) {
    return silhouette_score(DistanceMatrix(points), partition);
}

ClusterCountSearch search_cluster_count(std::span<const DecisionVector> points, RandomStream& rng) {
    if (points.size() < 3) {
        throw std::invalid_argument("optimal_k: need at least 3 points");
    }
    const DistanceMatrix distances(points);
    ClusterCountSearch result;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 2; k <= points.size(); ++k) {
        const Partition p = kmeans(points, k, rng);
        const double s = silhouette_score(distances, p);
        result.scores.push_back(s);
        result.k_max = k;
        if (s > best) {
            best = s;
            result.k_star = k;
        }
        if (p.has_singleton()) {
            break;
        }
    }
    return result;
}

std::size_t optimal_k(std::span<const DecisionVector> points, RandomStream& rng) {
    return search_cluster_count(points, rng).k_star;
}

}  // namespace momo
