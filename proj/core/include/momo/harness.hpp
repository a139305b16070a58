#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "momo/core.hpp"
#include "momo/engine.hpp"
#include "momo/metrics.hpp"
#include "momo/problems.hpp"

namespace momo {

/// Directory holding ps_<name>.csv / pf_<name>.csv. Order: explicit override,
/// then $MOMO_REFSET_DIR, then the data/refsets directory of the source tree.
std::filesystem::path resolve_refset_dir(const std::optional<std::filesystem::path>& override_dir = std::nullopt);

/// Loads a problem's reference set, throwing std::runtime_error naming the
/// missing file if either CSV is absent.
ReferenceSet load_reference(const std::filesystem::path& dir, const ProblemSpec& problem);

struct ExperimentPlan {
    std::vector<std::string> problems;  // empty means every problem
    std::vector<std::uint64_t> seeds;   // empty means 1..31
    RunConfig config;                   // config.seed is replaced per run
    std::filesystem::path output_dir;
    std::filesystem::path refset_dir;   // empty means resolve_refset_dir()

    /// Canonical problem names, in table order if the plan lists "all".
    std::vector<std::string> problem_names() const;
    std::vector<std::uint64_t> seed_list() const;
    void validate() const;

    /// `key = value` lines: `problems = all | name, name, ...`,
    /// `seeds = 1-31 | 3, 5, 8` plus any RunConfig key except `seed`.
    static ExperimentPlan parse(std::istream& in);
    static ExperimentPlan load(const std::filesystem::path& path);
};

inline constexpr std::size_t kDefaultSeedCount = 31;

struct MetricRecord {
    std::string problem;
    std::uint64_t seed = 0;
    MetricsReport metrics;
};

/// `problem,seed,igd,igdx,cr,psp`
void write_metrics_csv(const std::filesystem::path& path, const std::vector<MetricRecord>& records);
std::vector<MetricRecord> read_metrics_csv(const std::filesystem::path& path);

enum class Metric { igd, igdx, cr, psp };
std::string_view to_string(Metric m);
Metric parse_metric(std::string_view name);
double metric_value(const MetricsReport& r, Metric m);

struct SummaryRow {
    std::string problem;
    Metric metric = Metric::igdx;
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation, 0 for a single value
    std::vector<double> values;  // per seed, in plan order
};

double mean_of(const std::vector<double>& v);
double sample_std(const std::vector<double>& v);

/// IGD, IGDX and PSP rows per problem, problems in record order.
std::vector<SummaryRow> summarize(const std::vector<MetricRecord>& records);
/// `problem,metric,mean,std`
void write_summary_csv(const std::filesystem::path& path, const std::vector<SummaryRow>& rows);

struct RunFailure {
    std::string problem;
    std::uint64_t seed = 0;
    std::string message;
};

struct ExperimentResult {
    std::vector<MetricRecord> records;  // successful runs, plan order
    std::vector<SummaryRow> summary;
    std::vector<RunFailure> failures;
};

/// Runs every (problem, seed) pair on up to `jobs` worker threads. Each run's
/// artifacts go to <output_dir>/runs/<problem>/seed_<k>/; metrics.csv and
/// summary.csv are written once all runs finish. A failed run is reported in
/// the result and does not stop the batch. Missing reference files are an
/// error before any run starts.
ExperimentResult run_experiment(const ExperimentPlan& plan, std::size_t jobs = 1,
                                const std::function<void(const std::string&, std::uint64_t)>& on_done = {});

/// Archive, k-history and one snapshot_<fraction>.csv per snapshot.
void emit_run_data(const RunRecord& record, const std::filesystem::path& dir);
/// emit_run_data plus reference_ps.csv / reference_pf.csv.
void emit_plot_data(const RunRecord& record, const ReferenceSet& refset, const std::filesystem::path& dir);

MetricsReport score_archive(const Archive& archive, const ProblemSpec& problem, const ReferenceSet& refset);

// Statistics.

enum class Verdict { better, equivalent, worse };
enum class Sense { minimize, maximize };
std::string_view to_string(Verdict v);
Sense metric_sense(Metric m);

struct RankSumResult {
    double p_value = 1.0;
    bool exact = false;
    double mean_rank_a = 0.0;
    double mean_rank_b = 0.0;
    Verdict verdict = Verdict::equivalent;
};

/// Two-sided rank-sum test with midranks for ties. Exact null distribution
/// when n+m <= 20, tie-corrected normal approximation otherwise. The verdict
/// says how sample_a compares with sample_b: significant at alpha and a lower
/// mean rank is "better" under Sense::minimize. Each sample needs >= 2 values.
RankSumResult rank_sum_test(const std::vector<double>& sample_a, const std::vector<double>& sample_b,
                            double alpha = 0.05, Sense sense = Sense::minimize);

Verdict wilcoxon_rank_sum(const std::vector<double>& sample_a, const std::vector<double>& sample_b,
                          double alpha = 0.05, Sense sense = Sense::minimize);

inline constexpr std::size_t kExactRankSumLimit = 20;

/// problem -> seed -> value
using SeedValues = std::map<std::string, std::map<std::uint64_t, double>>;

struct WtlCounts {
    std::size_t wins = 0;
    std::size_t ties = 0;
    std::size_t losses = 0;

    friend bool operator==(const WtlCounts&, const WtlCounts&) = default;
};

/// Win/tie/loss of every algorithm against the baseline, one test per
/// problem. Throws std::invalid_argument when problem or seed sets differ.
std::map<std::string, WtlCounts> wtl_table(const std::map<std::string, SeedValues>& algorithms,
                                           const std::string& baseline, double alpha = 0.05,
                                           Sense sense = Sense::minimize);

/// Per-seed values of one metric from metric records.
SeedValues seed_values(const std::vector<MetricRecord>& records, Metric metric);

}  // namespace momo
