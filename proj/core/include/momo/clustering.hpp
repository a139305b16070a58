#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "momo/core.hpp"
#include "momo/random.hpp"

namespace momo {

/// Per-dimension min/max scaling to [0,1]. Zero-range dimensions map to 0.
std::vector<DecisionVector> normalize_points(std::span<const DecisionVector> points);

struct Partition {
    std::vector<std::size_t> assignment;  // label in [0, k) per point
    std::vector<DecisionVector> centroids;
    std::size_t k = 0;

    std::vector<std::size_t> sizes() const;
    bool has_singleton() const;
};

/// Dense symmetric matrix of pairwise Euclidean distances.
class DistanceMatrix {
  public:
    explicit DistanceMatrix(std::span<const DecisionVector> points);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

  private:
    std::size_t n_;
    std::vector<double> d_;
};

struct KMeansOptions {
    std::size_t max_iterations = 100;
};

/// Lloyd's k-means with D^2-weighted (k-means++) seeding, one replicate.
///
/// Iterates until the assignment stops changing or max_iterations is hit.
/// Empty clusters are repaired by moving the point farthest from its centroid
/// (taken from a cluster with at least two members) into the empty cluster.
/// Requires 1 <= k <= points.size(). If inertia_trace is non-null, the
/// within-cluster sum of squares after every centroid update is appended.
Partition kmeans(std::span<const DecisionVector> points, std::size_t k, RandomStream& rng,
                 const KMeansOptions& options = {}, std::vector<double>* inertia_trace = nullptr);

/// Mean silhouette width with Euclidean distances. Points in singleton
/// clusters contribute 0. Requires k >= 2.
double silhouette_score(std::span<const DecisionVector> points, const Partition& partition);
double silhouette_score(const DistanceMatrix& distances, const Partition& partition);

struct ClusterCountSearch {
    std::size_t k_star = 2;
    std::size_t k_max = 2;          // the first k whose partition had a singleton
    std::vector<double> scores;     // scores[k - 2] for k in [2, k_max]
};

/// Tries k = 2, 3, ... until a partition contains a singleton cluster (that k
/// is included), scoring each with the silhouette index. Highest score wins;
/// ties go to the smallest k. Requires at least 3 points.
ClusterCountSearch search_cluster_count(std::span<const DecisionVector> points, RandomStream& rng);

std::size_t optimal_k(std::span<const DecisionVector> points, RandomStream& rng);

}  // namespace momo
