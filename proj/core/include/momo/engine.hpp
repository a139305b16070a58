#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "momo/clustering.hpp"
#include "momo/core.hpp"
#include "momo/problems.hpp"
#include "momo/random.hpp"

namespace momo {

// Randomness in a run comes from one RandomStream seeded with config.seed and
// is consumed in this order:
//   1. initialization: N x D uniforms, solution by solution;
//   2. every generation:
//      a. cluster-count search on the parent population (k-means for k = 2..K),
//      b. k-means at the stabilized count k_bar,
//      c. parent tie-breaks (cluster choice, then best-rank member choice),
//      d. SBX, then polynomial mutation of the first child,
//      e. k-means at k_bar on the N+1 candidates,
//      f. elimination tie-breaks (largest cluster, then worst-rank member).
// Tie-break draws are made only when a tie actually exists.

struct GenerationRecord {
    std::size_t generation = 0;  // 1-based
    std::size_t nfe = 0;         // archive size after the generation
    std::size_t k_star = 0;
    std::size_t k_bar = 0;

    friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

struct Snapshot {
    double fraction = 0.0;
    std::size_t generation = 0;
    std::size_t nfe = 0;
    Population population;  // cluster_id unset for generation-0 snapshots

    friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

struct RunRecord {
    Archive archive;
    Population final_population;
    std::vector<GenerationRecord> k_history;
    std::vector<Snapshot> snapshots;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct ParentSelection {
    std::size_t first = 0;  // population indices
    std::size_t second = 0;
    std::size_t first_cluster = 0;
    std::size_t second_cluster = 0;
};

struct SurvivorSelection {
    Population population;           // the N survivors, in candidate order
    std::size_t removed = 0;         // candidate index that was eliminated
    std::size_t removed_cluster = 0;
    std::vector<std::size_t> ranks;  // over the N+1 candidates
    Partition partition;             // over the N+1 candidates
};

/// Hooks for instrumentation; default implementations do nothing.
class RunObserver {
  public:
    virtual ~RunObserver() = default;
    virtual void on_parent_selection(const Population& /*population*/, const ParentSelection& /*choice*/) {}
    virtual void on_survivor_selection(const std::vector<Solution>& /*candidates*/,
                                       const SurvivorSelection& /*result*/) {}
    virtual void on_generation(const GenerationRecord& /*record*/) {}
};

/// N uniform samples within the bounds, evaluated and appended to the archive.
Population initialize(const ProblemSpec& problem, const RunConfig& config, RandomStream& rng, Archive& archive);

/// Sets rank (global non-domination rank) and cluster_id (k-means on the
/// min/max-normalized decision vectors) on every member. Returns the partition.
Partition rank_and_cluster(Population& members, std::size_t k, RandomStream& rng);

/// Picks the two smallest clusters (random among equal sizes) and, from each,
/// a member of lowest rank (random among equal ranks). Members must carry rank
/// and cluster_id with labels in [0, k_bar).
ParentSelection select_parents(const Population& population, std::size_t k_bar, RandomStream& rng);

/// Re-ranks and re-clusters the N+1 candidates into min(k_bar, N+1) clusters,
/// then removes one worst-rank member of a largest cluster.
SurvivorSelection environmental_selection(std::vector<Solution> candidates, std::size_t population_size,
                                          std::size_t k_bar, RandomStream& rng);

/// The full steady-state loop; stops when the archive holds config.nfe_max
/// entries. Throws std::runtime_error if an evaluation fails.
RunRecord run(const ProblemSpec& problem, const RunConfig& config, RunObserver* observer = nullptr);

/// `generation,k_star,k_bar`
void write_k_history(const std::filesystem::path& path, const std::vector<GenerationRecord>& history);
/// Archive-style columns plus `rank,cluster`; -1 marks an absent value.
void write_population(const std::filesystem::path& path, const Population& population);
/// snapshot_<fraction>.csv for each snapshot, e.g. snapshot_0.25.csv.
std::filesystem::path snapshot_file_name(double fraction);

}  // namespace momo
